// Lattice points of the holomorphic Horn semigroup inside a coordinate box.

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "holocone/holomorphic.hpp"
#include "holocone/lr.hpp"
#include "holocone/weights.hpp"

namespace holocone {

// Weakly decreasing integer vectors of length n with entries in [-bound, bound],
// lexicographically increasing.
std::vector<GLWeight> dominant_box(int n, long bound);

// Flattened triple (lambda, mu, nu), length 3(p+q).
using PointVisitor = std::function<void(std::span<const long>)>;

struct EnumerationOptions {
  int jobs = 1;
  // Test hook: triples (flattened) treated as members regardless of the multiplicity.
  std::vector<std::vector<long>> forced_members;
};

struct EnumerationStats {
  std::size_t points = 0;
  std::size_t pairs = 0;
};

// Visits every (lambda, mu, nu) in the box with m(lambda, mu, nu) > 0. Points come
// in shells of increasing max |coordinate|; inside a shell the order is
// lexicographic in (lambda, mu, nu) block indices. The order does not depend on jobs.
EnumerationStats for_each_semigroup_point(const GroupShape& shape, long bound, const PointVisitor& visit,
                                          const EnumerationOptions& options = {});

std::vector<HornTriple> enumerate_semigroup(const GroupShape& shape, long bound,
                                            const EnumerationOptions& options = {});

}  // namespace holocone
