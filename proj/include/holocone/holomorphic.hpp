// Multiplicities of V_nu in V_lambda (x) V_mu (x) Sym(M_{p,q}) for K = U(p) x U(q).
//
// M_{p,q} carries the T-weights e_i - e_{p+j}. Its symmetric algebra splits by the
// Cauchy formula into sum over partitions delta (at most q parts) of
// V^{U(p)}_delta (x) V^{U(q)}_{delta^nat}, delta^nat = (-delta_q, .., -delta_1).

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "holocone/lr.hpp"
#include "holocone/weights.hpp"

namespace holocone {

struct HornTriple {
  Weight lambda;
  Weight mu;
  Weight nu;

  // "1,0;0,-1|1,0;0,-1|2,1;-1,-2"
  static HornTriple parse(std::string_view text, const GroupShape& shape);
  std::string to_string(const GroupShape& shape) const;
  // Concatenation (lambda, mu, nu), length 3(p+q).
  std::vector<Rational> flatten() const;

  friend bool operator==(const HornTriple&, const HornTriple&) = default;
};

struct CauchyComponent {
  Partition delta;    // at most q parts, padded to length q
  GLWeight up_weight; // delta padded to length p
  GLWeight uq_weight; // delta^nat
  long degree = 0;
};

// T-weights of M_{p,q}: e_i - e_{p+j}, listed row-major in (i, j).
std::vector<Weight> q_module_weights(const GroupShape& shape);

std::vector<CauchyComponent> cauchy_components(const GroupShape& shape, long degree);

// sum_{|delta| = d} dim S^delta(C^p) dim S^delta(C^q); delta runs over partitions
// with at most min(p, q) parts. Equals binom(pq + d - 1, d).
std::int64_t cauchy_dimension_sum(int p, int q, long degree);

// Integer-block form of the multiplicity, used by the enumerator.
Multiplicity holomorphic_multiplicity(const GLWeight& lambda1, const GLWeight& lambda2, const GLWeight& mu1,
                                      const GLWeight& mu2, const GLWeight& nu1, const GLWeight& nu2);

// m(lambda, mu, nu). Throws ShapeError on non-dominant or non-integral input.
Multiplicity holomorphic_multiplicity(const HornTriple& t, const GroupShape& shape);

bool horn_membership(const HornTriple& t, const GroupShape& shape);

// [V_nu : V_{lambda^1} (x) .. (x) V_{lambda^s} (x) Sym(M_{p,q})^{(x)(s-1)}], s >= 2.
// The factors are folded left to right; the Sym factors are truncated at the one
// degree compatible with nu.
Multiplicity s_fold_multiplicity(const std::vector<Weight>& lambdas, const Weight& nu, const GroupShape& shape);

}  // namespace holocone
