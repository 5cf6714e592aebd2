// Littlewood-Richardson coefficients and tensor products for U(n).
//
// Highest weights are weakly decreasing integer vectors and may have negative
// parts. Every query is shifted to partitions first (lambda + a.1, mu + b.1,
// nu + (a+b).1), and the shifted triple is the memo key, so shift-equivalent
// queries share one cache entry.

#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

namespace holocone {

using GLWeight = std::vector<long>;
using Partition = std::vector<long>;
using Multiplicity = std::int64_t;

bool is_gl_dominant(const GLWeight& w);
long total(const GLWeight& w);
GLWeight shifted(const GLWeight& w, long by);

// Thread-safe memo for LR coefficients keyed on shift-normalized triples.
class LrCache {
 public:
  static constexpr int kFormatVersion = 1;

  std::optional<Multiplicity> find(const std::vector<long>& key) const;
  void insert(const std::vector<long>& key, Multiplicity value);
  std::size_t size() const;
  std::uint64_t hits() const { return hits_; }
  std::uint64_t misses() const { return misses_; }
  void clear();

  // Text file: header line "holocone-lr-cache <version>", then one entry per line
  // "n | lambda | mu | nu = c". Entries are written in sorted order.
  void save(const std::filesystem::path& file) const;
  // Returns false when the file is missing or has a different version; a
  // missing or stale cache never changes results.
  bool load(const std::filesystem::path& file);

  static LrCache& global();

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<long>& k) const noexcept;
  };
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::vector<long>, Multiplicity, KeyHash> table_;
  mutable std::atomic<std::uint64_t> hits_{0};
  mutable std::atomic<std::uint64_t> misses_{0};
};

// c^nu_{lambda mu}: multiplicity of V_nu in V_lambda (x) V_mu for U(n).
Multiplicity lr_coefficient(const GLWeight& lambda, const GLWeight& mu, const GLWeight& nu);
Multiplicity lr_coefficient(const GLWeight& lambda, const GLWeight& mu, const GLWeight& nu, LrCache& cache);

// Full decomposition of V_lambda (x) V_mu.
std::map<GLWeight, Multiplicity> tensor_expand(const GLWeight& lambda, const GLWeight& mu);
std::map<GLWeight, Multiplicity> tensor_expand(const GLWeight& lambda, const GLWeight& mu, LrCache& cache);

// [V_nu : V_lambda (x) V_mu (x) V_delta] = sum_kappa c^kappa_{lambda mu} c^nu_{kappa delta}.
Multiplicity triple_multiplicity(const GLWeight& lambda, const GLWeight& mu, const GLWeight& delta,
                                 const GLWeight& nu);

// Weyl dimension formula, prod_{i<j} (l_i - l_j + j - i) / (j - i).
std::int64_t weyl_dim(const GLWeight& lambda);

// Partitions of `total` with at most `max_parts` parts, each padded with zeros to `max_parts`,
// in decreasing lexicographic order.
std::vector<Partition> partitions(long total, int max_parts);

}  // namespace holocone
