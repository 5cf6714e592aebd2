// The explicit description of Horn_hol(2,2) and the end-to-end check that rebuilds it
// from the semigroup: enumerate, hull, compare facets, certify.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "holocone/cone.hpp"
#include "holocone/ressayre.hpp"
#include "holocone/weights.hpp"

namespace holocone {

enum class RelationKind { kEquality, kInequality, kChamberWeak, kChamberStrict };

// A relation on (A, B, C) in (R^4)^3, stored as a functional f with f(A,B,C) >= 0
// (> 0 for strict chamber relations, = 0 for the equality).
struct Horn22Relation {
  std::string text;  // e.g. "a2+b2<=c2"
  RelationKind kind;
  IntVector functional;
};

// Parses "a1+a2+b1+b2<=c1+c2", ">=", "=" or ">" over the variables a1..a4, b1..b4, c1..c4.
IntVector parse_relation(const std::string& text, RelationKind* kind = nullptr);

// The literal table: one equality, the thirteen inequalities, then the chamber relations.
const std::vector<Horn22Relation>& horn22_relations();

// Equality plus inequalities (everything that must hold on every semigroup point).
std::vector<Horn22Relation> horn22_necessary_relations();

// Closed cone cut out by the table (chamber relations taken weakly).
RationalCone horn22_reference_cone();

// Strict chamber relations hold and every relation of the closed cone holds.
bool horn22_in_open_chamber(const RatVector& x);

struct Verify22Options {
  long bound = 3;
  int jobs = 1;
  int chern_sign = kChernSign;
  // Test hook: triples forced into the semigroup.
  std::vector<std::vector<long>> forced_members;
};

struct FacetMatch {
  IntVector normal;          // canonical
  std::string label;         // reference text, empty when unmatched
  bool in_reference = false;
  bool in_hull = false;
  FacetCertificate certificate;
};

struct Verify22Result {
  long bound = 0;
  std::size_t points = 0;
  std::size_t points_used = 0;
  std::size_t necessity_checks = 0;
  std::size_t violations = 0;
  std::vector<std::string> violation_samples;  // first few
  std::size_t dimension = 0;
  std::size_t chamber_facets = 0;
  bool equality_match = false;
  std::vector<IntVector> hull_equalities;
  std::vector<FacetMatch> facets;  // reference order first, then extra hull facets
  FacetCertificate equality_certificate;
  RationalCone hull;  // semigroup hull cut by the closed chamber

  std::size_t matched() const;
  std::size_t missing() const;
  std::size_t extra() const;
  std::size_t uncertified() const;
  bool facets_match() const;
  bool ok() const;
  // Deterministic text: no timings, no thread counts.
  std::string report() const;
};

Verify22Result verify22(const Verify22Options& options = {});

}  // namespace holocone
