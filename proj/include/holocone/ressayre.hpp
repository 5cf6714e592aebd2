// Ressayre data for the diagonal pair U(p,q) in U(p,q) x U(p,q) and the facet
// inequalities they induce on triples (A, B, C).

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "holocone/cone.hpp"
#include "holocone/schubert.hpp"
#include "holocone/weights.hpp"

namespace holocone {

struct RessayreCandidate {
  Weight gamma;
  WeylElement w1;
  WeylElement w2;

  friend bool operator==(const RessayreCandidate&, const RessayreCandidate&) = default;
};

// Vect(R_o cap gamma^perp) = Vect(R_o) cap gamma^perp, R_o = all roots of gl_{p+q}.
bool admissible(const Weight& gamma, const GroupShape& shape);

// dim n~^{w~ gamma > 0} + dim n^{gamma > 0} = dim k~^{gamma > 0} + dim q^{gamma > 0}.
bool relation_A(const RessayreCandidate& c, const GroupShape& shape);

// Both sides of the trace identity, exposed for reporting.
std::pair<Rational, Rational> trace_sides(const RessayreCandidate& c, const GroupShape& shape);
bool trace_condition(const RessayreCandidate& c, const GroupShape& shape);

// k with [X_gamma] . [X_{w1,gamma}] . [X_{w2,gamma}] . Eul(q^{gamma>0}) = k [pt].
std::int64_t schubert_condition(const RessayreCandidate& c, const GroupShape& shape, int chern_sign = kChernSign);

// (A, B, C) -> <A, w1 gamma> + <B, w2 gamma> - <C, w0 gamma>, as a primitive integer vector.
IntVector inequality_of(const RessayreCandidate& c, const GroupShape& shape);

struct CandidateReport {
  bool admissible = false;
  bool relation_a = false;
  bool trace = false;
  std::int64_t k = 0;

  bool passes() const { return admissible && relation_a && trace && k >= 1; }
};

CandidateReport check_candidate(const RessayreCandidate& c, const GroupShape& shape, int chern_sign = kChernSign);

struct CertifiedCandidate {
  RessayreCandidate candidate;
  std::int64_t k = 0;
};

struct FacetCertificate {
  IntVector normal;  // as given
  bool equality = false;
  std::vector<CertifiedCandidate> certificates;  // empty: UNCERTIFIED
  std::size_t candidates_tried = 0;

  bool certified() const { return !certificates.empty(); }
};

// The sum functional (1..1, 1..1, -1..-1) spanning the equality of the Horn cone.
IntVector sum_equality(const GroupShape& shape);

// For each facet normal (taken modulo the sum equality), tries every gamma read off the
// C-block and every (w1, w2) sending gamma to the A- and B-blocks.
FacetCertificate certify_facet(const IntVector& normal, const GroupShape& shape, int chern_sign = kChernSign);
FacetCertificate certify_equality(const GroupShape& shape);
std::vector<FacetCertificate> search_certificates(const GroupShape& shape, const std::vector<IntVector>& facet_normals,
                                                  int jobs = 1, int chern_sign = kChernSign);

}  // namespace holocone
