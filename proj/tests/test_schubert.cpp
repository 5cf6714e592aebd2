#include "doctest.h"
#include "holocone/lr.hpp"
#include "holocone/schubert.hpp"
#include "oracles/oracles.hpp"
#include "support.hpp"

using namespace holocone;

namespace {

const GroupShape s22(2, 2);

CohomologyElement cls(std::vector<Permutation> perms) { return CohomologyElement::of(SchubertClass{std::move(perms)}); }

CohomologyElement from_map(const std::map<Permutation, long>& m) {
  CohomologyElement e;
  for (const auto& [w, c] : m) e.add(SchubertClass{{w}}, c);
  return e;
}

// Partitions inside a k x (n-k) box.
std::vector<std::vector<long>> box(int k, int n) {
  std::vector<std::vector<long>> out;
  for (const auto& l : testing_support::small_partitions(k, static_cast<long>(k * (n - k))))
    if (l.empty() || l[0] <= n - k) out.push_back(l);
  return out;
}

}  // namespace

TEST_SUITE("schubert") {
  TEST_CASE("permutation helpers") {
    CHECK(perm_length({2, 0, 1}) == 2);
    CHECK(perm_longest(3) == Permutation{2, 1, 0});
    CHECK(perm_compose({1, 0, 2}, {0, 2, 1}) == Permutation{1, 2, 0});
    for (const auto& w : all_permutations(4)) {
      CHECK(perm_compose(w, perm_inverse(w)) == perm_identity(4));
      CHECK(perm_length(w) == oracle::inversions(w));
    }
    CHECK(all_permutations(4).size() == 24);
  }

  TEST_CASE("flag types") {
    const auto f = flag_type_of(Weight::parse("1,0;0,0", s22), s22);
    CHECK(f.blocks == std::vector<std::vector<int>>{{1, 1}, {2}});
    CHECK(f.dimension() == 1);
    const auto g = flag_type_of(Weight::parse("1,1;0,0", s22), s22);
    CHECK(g.blocks == std::vector<std::vector<int>>{{2}, {2}});
    CHECK(g.dimension() == 0);
    CHECK(flag_type_of(Weight::parse("3,-1;2,7", s22), s22).dimension() == 2);
    CHECK_THROWS(flag_type_of(Weight::zero(s22), s22));
  }

  TEST_CASE("coset representatives") {
    // Minimal means increasing on each block of positions.
    CHECK(is_minimal_representative({0, 2, 1}, {2, 1}));
    CHECK_FALSE(is_minimal_representative({0, 2, 1}, {1, 2}));
    CHECK(max_representative({0, 1, 2}, {2, 1}) == Permutation{1, 0, 2});
  }

  TEST_CASE("Schubert polynomials") {
    for (int n = 2; n <= 4; ++n) {
      for (int r = 0; r + 1 < n; ++r) {
        Permutation s = perm_identity(n);
        std::swap(s[static_cast<std::size_t>(r)], s[static_cast<std::size_t>(r + 1)]);
        Polynomial want;
        for (int i = 0; i <= r; ++i) {
          Monomial m(static_cast<std::size_t>(n), 0);
          m[static_cast<std::size_t>(i)] = 1;
          want[m] = 1;
        }
        CHECK(schubert_polynomial(s) == want);
      }
      Monomial top(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) top[static_cast<std::size_t>(i)] = n - 1 - i;
      CHECK(schubert_polynomial(perm_longest(n)) == Polynomial{{top, 1}});
      // Divided differences walk down the Bruhat order.
      for (const auto& w : all_permutations(n))
        for (int i = 0; i + 1 < n; ++i) {
          Permutation ws = w;
          std::swap(ws[static_cast<std::size_t>(i)], ws[static_cast<std::size_t>(i + 1)]);
          const Polynomial d = divided_difference(schubert_polynomial(w), i);
          if (perm_length(ws) < perm_length(w))
            CHECK(d == schubert_polynomial(ws));
          else
            CHECK(d.empty());
        }
    }
  }

  TEST_CASE("Monk's rule") {
    for (int n = 2; n <= 5; ++n) {
      const FlagType f = full_flag({n});
      for (const auto& w : all_permutations(n))
        for (int r = 0; r + 1 < n; ++r) {
          Permutation s = perm_identity(n);
          std::swap(s[static_cast<std::size_t>(r)], s[static_cast<std::size_t>(r + 1)]);
          const auto want = from_map(oracle::monk(w, r));
          CHECK(schubert_multiply(cls({s}), cls({w}), f) == want);
          std::vector<std::int64_t> form(static_cast<std::size_t>(n), 0);
          for (int i = 0; i <= r; ++i) form[static_cast<std::size_t>(i)] = 1;
          CHECK(multiply_linear(cls({w}), {form}) == want);
        }
    }
  }

  TEST_CASE("Grassmannian products follow the Littlewood-Richardson rule") {
    for (int n = 2; n <= 5; ++n)
      for (int k = 1; k < n; ++k) {
        const FlagType f = full_flag({n});
        const auto parts = box(k, n);
        for (const auto& l : parts)
          for (const auto& m : parts) {
            CohomologyElement want;
            for (const auto& v : parts) {
              const long c = oracle::lr_by_characters(l, m, v);
              if (c) want.add(SchubertClass{{oracle::grassmannian_perm(v, k, n)}}, c);
            }
            const auto got = schubert_multiply(cls({oracle::grassmannian_perm(l, k, n)}),
                                               cls({oracle::grassmannian_perm(m, k, n)}), f);
            CHECK(got == want);
          }
      }
  }

  TEST_CASE("Poincare duality") {
    for (const std::vector<int>& sizes : {std::vector<int>{3}, std::vector<int>{2, 2}, std::vector<int>{3, 1}}) {
      const FlagType f = full_flag(sizes);
      std::vector<std::vector<Permutation>> classes{{}};
      for (int n : sizes) {
        std::vector<std::vector<Permutation>> next;
        for (const auto& c : classes)
          for (const auto& w : all_permutations(n)) {
            auto d = c;
            d.push_back(w);
            next.push_back(d);
          }
        classes = next;
      }
      const int top = f.dimension();
      for (const auto& u : classes)
        for (const auto& v : classes) {
          const SchubertClass a{u}, b{v};
          if (a.codegree() + b.codegree() != top) continue;
          bool dual = true;
          for (std::size_t i = 0; i < u.size(); ++i)
            dual = dual && v[i] == perm_compose(perm_longest(sizes[i]), u[i]);
          CHECK(point_coefficient(schubert_multiply(cls(u), cls(v), f), f) == (dual ? 1 : 0));
        }
      CHECK(point_coefficient(CohomologyElement::of(point_class(f)), f) == 1);
      CHECK(point_coefficient(CohomologyElement::one(sizes), f) == 0);
    }
  }

  TEST_CASE("products agree with the Borel presentation") {
    const int n = 4;
    for (const auto& u : all_permutations(n))
      for (const auto& v : all_permutations(n)) {
        if (perm_length(u) + perm_length(v) > 6) continue;
        const auto poly = poly_multiply(schubert_polynomial(u), schubert_polynomial(v));
        std::map<Permutation, long> want;
        for (const auto& [w, c] : expand_schubert(poly, n)) want[w] = c;
        CHECK(schubert_multiply(cls({u}), cls({v}), full_flag({n})) == from_map(want));
      }
  }

  TEST_CASE("Euler classes") {
    // gamma with no positive noncompact weight: empty product.
    const Weight g0 = Weight::parse("-1,-1;1,1", s22);
    CHECK(euler_class_q_positive(g0, s22) == CohomologyElement::one({2, 2}));
    const Weight g1 = Weight::parse("1,0;1,0", s22);
    const auto e1 = euler_class_q_positive(g1, s22);
    CHECK(e1.homogeneous_codegree() == 1);
    CohomologyElement want;
    want.add(SchubertClass{{{0, 1}, {1, 0}}}, 1);
    want.add(SchubertClass{{{1, 0}, {0, 1}}}, 1);
    CHECK(e1 == want);
    // Codegree equals the number of positive weights, and the opposite sign flips odd degrees.
    for (int i = 0; i < 40; ++i) {
      const Weight g = testing_support::random_integer_weight(s22, -2, 2, false);
      if (g.is_zero()) continue;
      long positive = 0;
      for (const auto& eta : RootSystem(s22).noncompact_positive)
        if (sgn(pairing(eta, g)) > 0) ++positive;
      const auto e = euler_class_q_positive(g, s22);
      auto flipped = euler_class_q_positive(g, s22, -kChernSign);
      if (positive % 2) flipped *= -1;
      CHECK(e == flipped);
      if (!e.is_zero()) CHECK(e.homogeneous_codegree() == positive);
    }
  }
}
