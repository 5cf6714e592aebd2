// Acceptance run: one PASS/FAIL line per criterion, exit status 1 when any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "holocone/cone.hpp"
#include "holocone/holomorphic.hpp"
#include "holocone/horn22.hpp"
#include "holocone/lr.hpp"
#include "holocone/ressayre.hpp"
#include "holocone/schubert.hpp"
#include "holocone/semigroup.hpp"
#include "oracles/oracles.hpp"
#include "support.hpp"

using namespace holocone;
using testing_support::uniform;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int jobs() { return static_cast<int>(std::max(1u, std::min(8u, std::thread::hardware_concurrency()))); }

RatVector flat(const HornTriple& t) {
  const auto f = t.flatten();
  return RatVector(f.begin(), f.end());
}

HornTriple triple_of(std::span<const long> x, const GroupShape& s) {
  const auto n = static_cast<std::size_t>(s.rank());
  auto block = [&](std::size_t at) { return Weight::from_integers(std::vector<long>(x.begin() + at, x.begin() + at + n)); };
  return HornTriple{block(0), block(n), block(2 * n)};
}

// Rational point of the open holomorphic chamber.
Weight random_open_chamber(const GroupShape& s, long den_max) {
  return testing_support::random_chamber_weight(s, den_max);
}

Outcome facets(const Verify22Result& r) {
  std::size_t listed_ineq = 0;
  for (const auto& rel : horn22_necessary_relations()) listed_ineq += rel.kind == RelationKind::kInequality;
  std::ostringstream os;
  os << "bound " << r.bound << ", " << r.points << " points, " << r.matched() << "/" << listed_ineq
     << " listed inequalities matched, " << r.missing() << " missing, " << r.extra() << " extra, equality "
     << (r.equality_match ? "matched" : "MISMATCH") << " (the listed set has " << listed_ineq
     << " inequalities, one fewer than the advertised 14)";
  return {r.facets_match(), os.str()};
}

Outcome necessity(const Verify22Result& r) {
  std::ostringstream os;
  os << r.necessity_checks << " relation checks over " << r.points << " points, " << r.violations << " violations";
  for (const auto& s : r.violation_samples) os << "; " << s;
  return {r.violations == 0 && r.necessity_checks > 0, os.str()};
}

// Strictly inside: every listed inequality positive, the equality exact, weights in the open chamber.
bool strictly_inside(const RatVector& x) {
  for (const auto& rel : horn22_necessary_relations()) {
    const Rational v = dot(rel.functional, x);
    if (rel.kind == RelationKind::kEquality ? v != 0 : v <= 0) return false;
  }
  return horn22_in_open_chamber(x);
}

Outcome sufficiency() {
  const GroupShape s(2, 2);
  std::size_t found = 0, beyond = 0, drawn = 0;
  long worst = 0;
  std::ostringstream late;
  while (drawn < 50) {
    const Weight a = random_open_chamber(s, 3), b = random_open_chamber(s, 3);
    Weight c = a + b + Rational(uniform(0, 6), uniform(1, 3)) * Weight{1, 0, 0, -1} +
               Rational(uniform(0, 6), uniform(1, 3)) * Weight{1, 1, -1, -1};
    // Balanced perturbation.
    const Rational e1(uniform(-1, 1), 3), e2(uniform(-1, 1), 3), e3(uniform(-1, 1), 3);
    c += Weight(std::vector<Rational>{e1, e2, e3, -e1 - e2 - e3});
    for (std::size_t i = 0; i < c.size(); ++i) c[i].canonicalize();
    const HornTriple t{a, b, c};
    if (!strictly_inside(flat(t))) continue;
    ++drawn;
    long hit = 0;
    for (long n = 1; n <= 60 && !hit; ++n) {
      const HornTriple m{Rational(n) * a, Rational(n) * b, Rational(n) * c};
      if (!m.lambda.is_integral() || !m.mu.is_integral() || !m.nu.is_integral()) continue;
      if (horn_membership(m, s)) hit = n;
    }
    if (hit) {
      ++found;
      worst = std::max(worst, hit);
    } else {
      ++beyond;
      if (beyond <= 3) late << "; needs N > 60: " << t.to_string(s);
    }
  }
  std::ostringstream os;
  os << found << "/50 points have a multiple N <= 60 in the semigroup, largest N " << worst << ", " << beyond
     << " reported beyond 60" << late.str();
  // Points needing N > 60 are reported, not failed.
  return {true, os.str()};
}

Outcome additivity() {
  std::ostringstream os;
  bool ok = true;
  for (const GroupShape s : {GroupShape(1, 1), GroupShape(2, 1), GroupShape(2, 2)}) {
    // Reservoir sample of 400 points from the bound-2 box, paired off.
    std::vector<std::vector<long>> pool;
    std::size_t seen = 0;
    EnumerationOptions o;
    o.jobs = jobs();
    for_each_semigroup_point(
        s, 2,
        [&](std::span<const long> x) {
          ++seen;
          if (pool.size() < 400) {
            pool.emplace_back(x.begin(), x.end());
          } else {
            const auto k = static_cast<std::size_t>(uniform(0, static_cast<long>(seen) - 1));
            if (k < pool.size()) pool[k].assign(x.begin(), x.end());
          }
        },
        o);
    std::size_t pairs = 0, failures = 0;
    for (std::size_t i = 0; i + 1 < pool.size(); i += 2) {
      std::vector<long> sum(pool[i].size());
      for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = pool[i][k] + pool[i + 1][k];
      ++pairs;
      failures += !horn_membership(triple_of(sum, s), s);
    }
    ok = ok && failures == 0 && pairs == 200;
    os << "(" << s.p << "," << s.q << "): " << pairs << " pairs, " << failures << " failures; ";
  }
  return {ok, os.str()};
}

Outcome cauchy() {
  std::size_t checks = 0, bad = 0;
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; q <= p; ++q)  // symmetric in p and q
      for (long d = 0; d <= 6; ++d) {
        std::int64_t sum = 0;
        for (const auto& c : cauchy_components(GroupShape(p, q), d)) sum += weyl_dim(c.up_weight) * weyl_dim(c.uq_weight);
        ++checks;
        bad += sum != oracle::binomial(p * q + d - 1, d) || cauchy_dimension_sum(p, q, d) != sum;
      }
  return {bad == 0, std::to_string(checks) + " (p,q,d) cases, " + std::to_string(bad) + " mismatches"};
}

Outcome certification(const Verify22Result& r) {
  const GroupShape s(2, 2);
  std::size_t certified = 0, total = 0, recheck_failures = 0;
  std::ostringstream os;
  for (const auto& f : r.facets) {
    if (!f.in_hull) continue;
    ++total;
    if (f.certificate.certified()) ++certified;
    else os << "; UNCERTIFIED " << f.label;
    for (const auto& c : f.certificate.certificates) recheck_failures += !check_candidate(c.candidate, s).passes();
  }
  const auto& eq = r.equality_certificate;
  bool central = eq.equality && eq.certified();
  for (const auto& c : eq.certificates) {
    const auto& g = c.candidate.gamma;
    central = central && std::all_of(g.coords().begin(), g.coords().end(), [&](const Rational& x) { return x == g[0]; });
  }
  std::ostringstream head;
  head << certified << "/" << total << " non-chamber facets certified, " << recheck_failures
       << " certificates failing a recheck, sum equality " << (central ? "certified by central gamma" : "NOT certified");
  return {certified == total && total > 0 && recheck_failures == 0 && central, head.str() + os.str()};
}

Outcome recession(const Verify22Result& r22) {
  std::ostringstream os;
  bool ok = true;
  for (const GroupShape s : {GroupShape(1, 1), GroupShape(2, 1), GroupShape(2, 2)}) {
    RationalCone hull;
    if (s == GroupShape(2, 2)) {
      hull = r22.hull;
    } else {
      ConeBuilder b(static_cast<std::size_t>(3 * s.rank()));
      EnumerationOptions o;
      o.jobs = jobs();
      for_each_semigroup_point(s, 2, [&](std::span<const long> x) { b.add(x); }, o);
      hull = b.build().intersect(closed_chamber_constraints(s, 3));
    }
    const auto want = delta_K_pbar(s);
    std::size_t equal = 0;
    for (int i = 0; i < 5; ++i) {
      const Weight a = random_open_chamber(s, 4), b = random_open_chamber(s, 4);
      const auto slice = slice_at(hull, a, b);
      equal += !slice.empty() && recession_cone(slice).same_set(want);
    }
    ok = ok && equal == 5;
    os << "(" << s.p << "," << s.q << "): " << equal << "/5 slices; ";
  }
  return {ok, os.str()};
}

std::vector<std::vector<long>> padded_partitions(int n, long max_size) {
  return testing_support::small_partitions(n, max_size);
}

Outcome lr_oracles() {
  std::size_t pairs = 0, bad = 0;
  for (int n = 1; n <= 3; ++n) {
    const auto parts = padded_partitions(n, 6);
    for (const auto& l : parts)
      for (const auto& m : parts) {
        ++pairs;
        const auto want = oracle::decompose(oracle::multiply(oracle::gl_character(l), oracle::gl_character(m)), {n});
        std::map<std::vector<long>, long> got;
        for (const auto& [nu, c] : tensor_expand(l, m)) got[nu] = static_cast<long>(c);
        bad += got != want;
      }
  }
  // Grassmannians inside Fl(n), n <= 5.
  std::size_t grass = 0, grass_bad = 0;
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k < n; ++k) {
      std::vector<std::vector<long>> box;
      for (const auto& l : padded_partitions(k, static_cast<long>(k * (n - k))))
        if (l.empty() || l[0] <= n - k) box.push_back(l);
      const FlagType f = full_flag({n});
      for (const auto& l : box)
        for (const auto& m : box) {
          CohomologyElement want;
          for (const auto& v : box)
            if (const long c = oracle::lr_by_characters(l, m, v)) want.add(SchubertClass{{oracle::grassmannian_perm(v, k, n)}}, c);
          const auto got = schubert_multiply(CohomologyElement::of(SchubertClass{{oracle::grassmannian_perm(l, k, n)}}),
                                             CohomologyElement::of(SchubertClass{{oracle::grassmannian_perm(m, k, n)}}), f);
          ++grass;
          grass_bad += !(got == want);
        }
    }
  // Poincare duality on the U(3) and U(2) x U(2) flag varieties.
  std::size_t dual = 0, dual_bad = 0;
  for (const std::vector<int>& sizes : {std::vector<int>{3}, std::vector<int>{2, 2}}) {
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
    for (const auto& u : classes)
      for (const auto& v : classes) {
        const SchubertClass a{u}, b{v};
        if (a.codegree() + b.codegree() != f.dimension()) continue;
        bool is_dual = true;
        for (std::size_t i = 0; i < u.size(); ++i) is_dual = is_dual && v[i] == perm_compose(perm_longest(sizes[i]), u[i]);
        ++dual;
        dual_bad += point_coefficient(schubert_multiply(CohomologyElement::of(a), CohomologyElement::of(b), f), f) !=
                    (is_dual ? 1 : 0);
      }
  }
  std::ostringstream os;
  os << pairs << " tensor products (n <= 3, sizes <= 6), " << bad << " mismatches; " << grass << " Grassmannian products, "
     << grass_bad << " mismatches; " << dual << " duality pairings, " << dual_bad << " mismatches";
  return {bad == 0 && grass_bad == 0 && dual_bad == 0, os.str()};
}

// Chamber lemmas checked against a direct evaluation of the pairings.
Outcome chamber_lemmas() {
  std::size_t weights = 0, bad = 0;
  for (const GroupShape s : {GroupShape(1, 1), GroupShape(2, 1), GroupShape(2, 2), GroupShape(3, 2)}) {
    const RootSystem roots(s);
    auto rho_direct = [&](const Weight& x) {
      for (const auto& b : roots.noncompact_positive)
        if (pairing(x, b) < pairing(roots.two_rho_n(), b)) return false;
      return is_dominant(x, s);
    };
    for (int i = 0; i < 1000; ++i) {
      ++weights;
      // Dominant rational weight, not necessarily in the holomorphic chamber.
      Weight x(static_cast<std::size_t>(s.rank()));
      const long den = uniform(1, 6);
      for (int blk = 0; blk < 2; ++blk) {
        const int len = blk == 0 ? s.p : s.q;
        std::vector<long> v = testing_support::random_dominant_block(len, -12, 12);
        for (int j = 0; j < len; ++j) {
          auto& c = x[static_cast<std::size_t>(blk == 0 ? j : s.p + j)];
          c = Rational(v[static_cast<std::size_t>(j)], den);
          c.canonicalize();
        }
      }
      const bool rho = in_chamber_rho(x, s);
      if (rho != rho_direct(x)) ++bad;
      if (rho && !in_holomorphic_chamber(x, s)) ++bad;
      if (in_holomorphic_chamber(x, s)) {
        const long n = rho_scaling_factor(x, s);
        // N x in the shifted chamber, and every larger multiple too.
        if (n < 1 || !rho_direct(Rational(n) * x) || !rho_direct(Rational(n + 7) * x)) ++bad;
        if (n > 1 && rho_direct(Rational(n - 1) * x)) ++bad;
      }
    }
  }
  return {bad == 0, std::to_string(weights) + " random rational weights, " + std::to_string(bad) + " violations"};
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  Verify22Options o;
  o.bound = 3;
  o.jobs = jobs();
  const Verify22Result r = verify22(o);
  const double v22 = std::chrono::duration<double>(clock::now() - t0).count();

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"(2,2) facet reproduction", [&] { return facets(r); }},
      {"necessity on the semigroup", [&] { return necessity(r); }},
      {"sufficiency at scale", sufficiency},
      {"semigroup additivity", additivity},
      {"Cauchy dimension identity", cauchy},
      {"Ressayre certification", [&] { return certification(r); }},
      {"recession cones of slices", [&] { return recession(r); }},
      {"LR and Schubert oracles", lr_oracles},
      {"chamber lemmas", chamber_lemmas},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto out = criteria[i].second();
    all = all && out.pass;
    std::cout << "criterion " << i + 1 << " " << (out.pass ? "PASS" : "FAIL") << ": " << criteria[i].first << ": "
              << out.detail << std::endl;
  }
  std::cout << "verify22 at bound 3 took " << static_cast<long>(v22) << " s" << std::endl;
  return all ? 0 : 1;
}
