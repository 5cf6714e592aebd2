#include "holocone/ressayre.hpp"

#include "holocone/holomorphic.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace holocone {

namespace {

std::size_t rank_of(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && sgn(rows[pivot][c]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (sgn(rows[r][c]) == 0) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

long count_positive(const std::vector<Weight>& roots, const Weight& x) {
  long n = 0;
  for (const auto& a : roots)
    if (sgn(pairing(a, x)) > 0) ++n;
  return n;
}

Rational positive_part_sum(const std::vector<Weight>& roots, const Weight& x) {
  Rational s = 0;
  for (const auto& a : roots) {
    const Rational v = pairing(a, x);
    if (sgn(v) > 0) s += v;
  }
  return s;
}

void require_nonzero(const Weight& gamma) {
  if (gamma.is_zero()) throw std::invalid_argument("gamma must be nonzero");
}

}  // namespace

bool admissible(const Weight& gamma, const GroupShape& shape) {
  check_length(gamma, shape);
  require_nonzero(gamma);
  const RootSystem roots(shape);
  std::vector<std::vector<Rational>> perp;
  for (const auto& a : roots.auxiliary())
    if (sgn(pairing(a, gamma)) == 0) perp.push_back(a.coords());
  const std::size_t lhs = rank_of(perp);
  // dim(Vect(R_o) cap gamma^perp) = dim Vect(R_o) - 1 unless gamma^perp contains Vect(R_o).
  std::vector<std::vector<Rational>> all;
  for (const auto& a : roots.auxiliary()) all.push_back(a.coords());
  const std::size_t span = rank_of(all);
  const bool contains_span = perp.size() == roots.auxiliary().size();
  const std::size_t rhs = contains_span ? span : span - 1;
  return lhs == rhs;
}

bool relation_A(const RessayreCandidate& c, const GroupShape& shape) {
  const RootSystem roots(shape);
  const long lhs = count_positive(roots.compact_positive, c.w1.act(c.gamma)) +
                   count_positive(roots.compact_positive, c.w2.act(c.gamma)) +
                   count_positive(roots.compact_positive, c.gamma);
  const long rhs = 2 * count_positive(roots.compact_roots, c.gamma) + count_positive(q_module_weights(shape), c.gamma);
  return lhs == rhs;
}

std::pair<Rational, Rational> trace_sides(const RessayreCandidate& c, const GroupShape& shape) {
  const RootSystem roots(shape);
  const auto w0 = WeylElement::longest(shape);
  const Rational lhs = positive_part_sum(roots.positive, c.gamma);
  const Rational rhs = positive_part_sum(roots.positive, w0.act(c.w1.act(c.gamma))) +
                       positive_part_sum(roots.positive, w0.act(c.w2.act(c.gamma)));
  return {lhs, rhs};
}

bool trace_condition(const RessayreCandidate& c, const GroupShape& shape) {
  const auto [lhs, rhs] = trace_sides(c, shape);
  return lhs == rhs;
}

std::int64_t schubert_condition(const RessayreCandidate& c, const GroupShape& shape, int chern_sign) {
  if (!admissible(c.gamma, shape)) throw std::invalid_argument("schubert_condition needs an admissible gamma");
  const FlagType f = flag_type_of(c.gamma, shape);
  auto product = gamma_cell_class(WeylElement::identity(shape), c.gamma, shape);
  product = schubert_multiply(product, gamma_cell_class(c.w1, c.gamma, shape), f);
  product = schubert_multiply(product, gamma_cell_class(c.w2, c.gamma, shape), f);
  product = schubert_multiply(product, euler_class_q_positive(c.gamma, shape, chern_sign), f);
  return point_coefficient(product, f);
}

IntVector inequality_of(const RessayreCandidate& c, const GroupShape& shape) {
  check_length(c.gamma, shape);
  const auto w0 = WeylElement::longest(shape);
  RatVector f = c.w1.act(c.gamma).coords();
  const Weight b_part = c.w2.act(c.gamma);
  const auto& b = b_part.coords();
  f.insert(f.end(), b.begin(), b.end());
  const Weight c_part = w0.act(c.gamma);
  for (const auto& x : c_part.coords()) f.push_back(-x);
  return primitive(f);
}

CandidateReport check_candidate(const RessayreCandidate& c, const GroupShape& shape, int chern_sign) {
  CandidateReport r;
  r.admissible = admissible(c.gamma, shape);
  r.relation_a = relation_A(c, shape);
  r.trace = trace_condition(c, shape);
  r.k = r.admissible ? schubert_condition(c, shape, chern_sign) : 0;
  return r;
}

IntVector sum_equality(const GroupShape& shape) {
  const auto n = static_cast<std::size_t>(shape.rank());
  IntVector e(3 * n, 1);
  for (std::size_t i = 2 * n; i < 3 * n; ++i) e[i] = -1;
  return e;
}

FacetCertificate certify_equality(const GroupShape& shape) {
  FacetCertificate out;
  out.normal = sum_equality(shape);
  out.equality = true;
  Weight gamma(static_cast<std::size_t>(shape.rank()));
  for (std::size_t i = 0; i < gamma.size(); ++i) gamma[i] = 1;
  // Both signs of the central direction give the two halves of the equality.
  for (int sign : {1, -1}) {
    RessayreCandidate c{Rational(sign) * gamma, WeylElement::identity(shape), WeylElement::identity(shape)};
    ++out.candidates_tried;
    const auto r = check_candidate(c, shape);
    if (!r.passes()) continue;
    const IntVector f = inequality_of(c, shape);
    IntVector neg = out.normal;
    for (auto& x : neg) x = -x;
    if (f == out.normal || f == neg) out.certificates.push_back({c, r.k});
  }
  return out;
}

FacetCertificate certify_facet(const IntVector& normal, const GroupShape& shape, int chern_sign) {
  const auto n = static_cast<std::size_t>(shape.rank());
  if (normal.size() != 3 * n) throw ShapeError("facet normal is not a functional on triples");
  FacetCertificate out;
  out.normal = normal;
  const std::vector<IntVector> eq{sum_equality(shape)};
  const IntVector target = project_modulo(normal, eq);
  bool all_zero = std::all_of(target.begin(), target.end(), [](const Integer& x) { return sgn(x) == 0; });
  if (all_zero) return certify_equality(shape);

  // C-block of the functional is -w0 gamma.
  Weight c_block(n);
  for (std::size_t i = 0; i < n; ++i) c_block[i] = Rational(target[2 * n + i]);
  const auto w0 = WeylElement::longest(shape);
  const Weight gamma = w0.act(-c_block);
  if (gamma.is_zero()) return out;
  Weight a_block(n), b_block(n);
  for (std::size_t i = 0; i < n; ++i) {
    a_block[i] = Rational(target[i]);
    b_block[i] = Rational(target[n + i]);
  }
  std::vector<WeylElement> first, second;
  for (const auto& w : WeylElement::all(shape)) {
    if (w.act(gamma) == a_block) first.push_back(w);
    if (w.act(gamma) == b_block) second.push_back(w);
  }
  for (const auto& w1 : first)
    for (const auto& w2 : second) {
      RessayreCandidate c{gamma, w1, w2};
      ++out.candidates_tried;
      const auto r = check_candidate(c, shape, chern_sign);
      if (!r.passes()) continue;
      if (project_modulo(inequality_of(c, shape), eq) != target) continue;
      out.certificates.push_back({c, r.k});
    }
  return out;
}

std::vector<FacetCertificate> search_certificates(const GroupShape& shape, const std::vector<IntVector>& facet_normals,
                                                  int jobs, int chern_sign) {
  std::vector<FacetCertificate> out(facet_normals.size());
  const std::size_t workers = static_cast<std::size_t>(std::max(1, jobs));
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < workers; ++t)
    threads.emplace_back([&, t] {
      for (std::size_t i = t; i < facet_normals.size(); i += workers)
        out[i] = certify_facet(facet_normals[i], shape, chern_sign);
    });
  for (auto& th : threads) th.join();
  return out;
}

}  // namespace holocone
