// Schubert calculus on products of type-A flag varieties.
//
// Every computation happens in the full-flag Borel presentation
// H*(Fl_n) = Z[x_1..x_n] / (e_1, .., e_n), one set of variables per block. The class
// sigma_w (codegree l(w)) is the Schubert polynomial S_w. With B upper triangular,
// the orbit closure of B v B/B has class sigma_{w0 v}, and x_i = -c_1(B-line of weight e_i).
// A partial flag variety K/P is handled through the pullback to K/B, which is
// injective with image spanned by sigma_u for u minimal in u W_P.

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "holocone/weights.hpp"

namespace holocone {

using Permutation = std::vector<int>;  // 0-based one-line notation

int perm_length(const Permutation& w);
Permutation perm_identity(int n);
Permutation perm_longest(int n);
Permutation perm_compose(const Permutation& a, const Permutation& b);  // a o b
Permutation perm_inverse(const Permutation& w);
std::vector<Permutation> all_permutations(int n);  // lexicographic

// One composition per unitary block, listing multiplicities of the distinct values of
// gamma in decreasing order of value.
struct FlagType {
  std::vector<std::vector<int>> blocks;

  std::vector<int> sizes() const;
  // Composition of the standard parabolic P' >= B obtained after sorting gamma increasingly.
  std::vector<int> standard_composition(std::size_t block) const;
  int dimension() const;

  friend bool operator==(const FlagType&, const FlagType&) = default;
};

FlagType full_flag(const std::vector<int>& sizes);
FlagType flag_type_of(const Weight& gamma, const GroupShape& shape);

// u is minimal in u W_P for the standard parabolic with composition `comp`.
bool is_minimal_representative(const Permutation& u, const std::vector<int>& comp);
Permutation max_representative(const Permutation& u, const std::vector<int>& comp);

struct SchubertClass {
  std::vector<Permutation> perms;  // one per block

  int codegree() const;
  friend auto operator<=>(const SchubertClass&, const SchubertClass&) = default;
};

class CohomologyElement {
 public:
  CohomologyElement() = default;

  static CohomologyElement one(const std::vector<int>& sizes);
  static CohomologyElement of(const SchubertClass& c, std::int64_t coefficient = 1);

  void add(const SchubertClass& c, std::int64_t coefficient);
  CohomologyElement& operator+=(const CohomologyElement& o);
  CohomologyElement& operator*=(std::int64_t s);

  bool is_zero() const { return terms_.empty(); }
  std::int64_t coefficient(const SchubertClass& c) const;
  const std::map<SchubertClass, std::int64_t>& terms() const { return terms_; }
  // Returns -1 for zero and for non-homogeneous elements.
  int homogeneous_codegree() const;

  friend bool operator==(const CohomologyElement&, const CohomologyElement&) = default;

 private:
  std::map<SchubertClass, std::int64_t> terms_;
};

// Cup product in H*(prod Fl_{n_b}). Both arguments must live on the block sizes of `f`.
CohomologyElement schubert_multiply(const CohomologyElement& a, const CohomologyElement& b, const FlagType& f);

// Product with a linear form sum_i c_i x^{(block)}_i (Monk's rule).
CohomologyElement multiply_linear(const CohomologyElement& a, const std::vector<std::vector<std::int64_t>>& form);

// Chern-root sign of the line bundle of weight e_i - e_{p+j}: c_1 = sign (x_i - y_j).
// Fixed at -1 by the associated-bundle convention and confirmed by the (2,2) certificates.
inline constexpr int kChernSign = -1;

// Top Chern class of K x_{P_gamma} q^{gamma>0} on F_gamma, in the full-flag indexing
// of the standard model K/P' (see gamma_cell_class).
CohomologyElement euler_class_q_positive(const Weight& gamma, const GroupShape& shape, int chern_sign = kChernSign);

// Class of the closure of B w P_gamma / P_gamma. F_gamma is identified with K/P' where
// P' = u^-1 P_gamma u is standard and u^-1 gamma is increasing in each block.
CohomologyElement gamma_cell_class(const WeylElement& w, const Weight& gamma, const GroupShape& shape);

SchubertClass point_class(const FlagType& f);
std::int64_t point_coefficient(const CohomologyElement& a, const FlagType& f);

// Sparse integer polynomials in x_0..x_{n-1}, exposed for the Borel-presentation oracles.
using Monomial = std::vector<int>;
using Polynomial = std::map<Monomial, std::int64_t>;

Polynomial schubert_polynomial(const Permutation& w);
Polynomial poly_multiply(const Polynomial& a, const Polynomial& b);
Polynomial divided_difference(const Polynomial& f, int i);
// Normal form modulo the ideal of positive-degree symmetric polynomials in n variables.
Polynomial reduce_coinvariant(const Polynomial& f, int n);
// Coefficients of f (mod the coinvariant ideal) in the Schubert basis of H*(Fl_n).
std::map<Permutation, std::int64_t> expand_schubert(const Polynomial& f, int n);

}  // namespace holocone
