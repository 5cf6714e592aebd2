#include "holocone/holomorphic.hpp"

#include <algorithm>
#include <map>

namespace holocone {

namespace {

std::vector<std::string_view> split_bar(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find('|', start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

GLWeight delta_natural(const Partition& delta) {
  GLWeight out(delta.size());
  for (std::size_t i = 0; i < delta.size(); ++i) out[i] = -delta[delta.size() - 1 - i];
  return out;
}

void require_dominant(const Weight& w, const GroupShape& shape, const char* name) {
  if (!is_dominant(w, shape)) throw ShapeError(std::string(name) + " is not dominant");
  if (!w.is_integral()) throw ShapeError(std::string(name) + " is not integral");
}

using KRep = std::pair<GLWeight, GLWeight>;
using KCharacter = std::map<KRep, Multiplicity>;

KCharacter tensor(const KCharacter& a, const GLWeight& x1, const GLWeight& x2) {
  KCharacter out;
  for (const auto& [rep, m] : a) {
    const auto first = tensor_expand(rep.first, x1);
    const auto second = tensor_expand(rep.second, x2);
    for (const auto& [f, c1] : first)
      for (const auto& [s, c2] : second) out[{f, s}] += m * c1 * c2;
  }
  return out;
}

}  // namespace

HornTriple HornTriple::parse(std::string_view text, const GroupShape& shape) {
  auto parts = split_bar(text);
  if (parts.size() != 3) throw ParseError("triple needs three weights separated by '|': '" + std::string(text) + "'");
  return {Weight::parse(parts[0], shape), Weight::parse(parts[1], shape), Weight::parse(parts[2], shape)};
}

std::string HornTriple::to_string(const GroupShape& shape) const {
  return lambda.to_string(shape) + "|" + mu.to_string(shape) + "|" + nu.to_string(shape);
}

std::vector<Rational> HornTriple::flatten() const {
  std::vector<Rational> out = lambda.coords();
  out.insert(out.end(), mu.coords().begin(), mu.coords().end());
  out.insert(out.end(), nu.coords().begin(), nu.coords().end());
  return out;
}

std::vector<Weight> q_module_weights(const GroupShape& shape) {
  std::vector<Weight> out;
  for (int i = 0; i < shape.p; ++i)
    for (int j = 0; j < shape.q; ++j) {
      Weight w(static_cast<std::size_t>(shape.rank()));
      w[static_cast<std::size_t>(i)] = 1;
      w[static_cast<std::size_t>(shape.p + j)] = -1;
      out.push_back(std::move(w));
    }
  return out;
}

std::vector<CauchyComponent> cauchy_components(const GroupShape& shape, long degree) {
  if (degree < 0) throw std::invalid_argument("negative Cauchy degree");
  std::vector<CauchyComponent> out;
  for (auto& delta : partitions(degree, shape.q)) {
    CauchyComponent c;
    c.up_weight = delta;
    c.up_weight.resize(static_cast<std::size_t>(shape.p), 0);
    c.uq_weight = delta_natural(delta);
    c.delta = std::move(delta);
    c.degree = degree;
    out.push_back(std::move(c));
  }
  return out;
}

std::int64_t cauchy_dimension_sum(int p, int q, long degree) {
  const int parts = std::min(p, q);
  std::int64_t sum = 0;
  for (const auto& delta : partitions(degree, parts)) {
    GLWeight dp = delta, dq = delta;
    dp.resize(static_cast<std::size_t>(p), 0);
    dq.resize(static_cast<std::size_t>(q), 0);
    sum += weyl_dim(dp) * weyl_dim(dq);
  }
  return sum;
}

Multiplicity holomorphic_multiplicity(const GLWeight& lambda1, const GLWeight& lambda2, const GLWeight& mu1,
                                      const GLWeight& mu2, const GLWeight& nu1, const GLWeight& nu2) {
  const long d = total(nu1) - total(lambda1) - total(mu1);
  if (d < 0) return 0;
  if (total(lambda2) + total(mu2) - total(nu2) != d) return 0;
  const int p = static_cast<int>(lambda1.size());
  const int q = static_cast<int>(lambda2.size());
  Multiplicity m = 0;
  for (const auto& c : cauchy_components(GroupShape(p, q), d)) {
    const Multiplicity first = triple_multiplicity(lambda1, mu1, c.up_weight, nu1);
    if (first == 0) continue;
    m += first * triple_multiplicity(lambda2, mu2, c.uq_weight, nu2);
  }
  return m;
}

Multiplicity holomorphic_multiplicity(const HornTriple& t, const GroupShape& shape) {
  require_dominant(t.lambda, shape, "lambda");
  require_dominant(t.mu, shape, "mu");
  require_dominant(t.nu, shape, "nu");
  if (t.lambda.sum() + t.mu.sum() != t.nu.sum()) return 0;
  return holomorphic_multiplicity(t.lambda.first_block(shape), t.lambda.second_block(shape), t.mu.first_block(shape),
                                  t.mu.second_block(shape), t.nu.first_block(shape), t.nu.second_block(shape));
}

bool horn_membership(const HornTriple& t, const GroupShape& shape) { return holomorphic_multiplicity(t, shape) > 0; }

Multiplicity s_fold_multiplicity(const std::vector<Weight>& lambdas, const Weight& nu, const GroupShape& shape) {
  if (lambdas.size() < 2) throw std::invalid_argument("s-fold multiplicity needs s >= 2");
  require_dominant(nu, shape, "nu");
  long used_first = 0;
  KCharacter acc;
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    require_dominant(lambdas[i], shape, "lambda");
    const auto a = lambdas[i].first_block(shape);
    const auto b = lambdas[i].second_block(shape);
    used_first += total(a);
    if (i == 0)
      acc[{a, b}] = 1;
    else
      acc = tensor(acc, a, b);
  }
  const auto nu1 = nu.first_block(shape);
  const auto nu2 = nu.second_block(shape);
  const long degree = total(nu1) - used_first;
  if (degree < 0) return 0;
  // Sym factors: each adds (delta ; delta^nat) with |delta| = d_k, sum d_k = degree.
  const std::size_t factors = lambdas.size() - 1;
  for (std::size_t k = 0; k < factors; ++k) {
    KCharacter next;
    for (const auto& [rep, m] : acc) {
      const long spent = total(rep.first) - used_first;
      const long room = degree - spent;
      const long lo = k + 1 == factors ? room : 0;
      for (long d = lo; d <= room; ++d)
        for (const auto& c : cauchy_components(shape, d)) {
          KCharacter single{{rep, m}};
          for (const auto& [r, mm] : tensor(single, c.up_weight, c.uq_weight)) next[r] += mm;
        }
    }
    acc = std::move(next);
  }
  auto it = acc.find({nu1, nu2});
  return it == acc.end() ? 0 : it->second;
}

}  // namespace holocone
