#include "holocone/schubert.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace holocone {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("cohomology coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cohomology coefficient overflow");
  return r;
}

void accumulate(Polynomial& p, const Monomial& m, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = p.emplace(m, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) p.erase(it);
  }
}

// All monomials of degree d in variables 0..k.
void monomials_of_degree(int d, int k, int n, std::vector<Monomial>& out) {
  Monomial m(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == k) {
      m[static_cast<std::size_t>(var)] = left;
      out.push_back(m);
      m[static_cast<std::size_t>(var)] = 0;
      return;
    }
    for (int e = left; e >= 0; --e) {
      m[static_cast<std::size_t>(var)] = e;
      self(self, var + 1, left - e);
    }
    m[static_cast<std::size_t>(var)] = 0;
  };
  rec(rec, 0, d);
}

// Positions 0..n-1 split into consecutive blocks of sizes comp.
std::vector<std::pair<int, int>> position_blocks(const std::vector<int>& comp) {
  std::vector<std::pair<int, int>> out;
  int start = 0;
  for (int c : comp) {
    out.emplace_back(start, start + c);
    start += c;
  }
  return out;
}

// sigma_{s_k} sigma_w for 1-based k (Monk's rule inside S_n).
void monk(int k, const Permutation& w, std::int64_t coefficient, std::map<Permutation, std::int64_t>& out) {
  if (k <= 0) return;
  const int n = static_cast<int>(w.size());
  for (int a = 0; a < k; ++a)
    for (int b = k; b < n; ++b) {
      if (w[static_cast<std::size_t>(a)] > w[static_cast<std::size_t>(b)]) continue;
      bool cover = true;
      for (int c = a + 1; c < b && cover; ++c) {
        const int v = w[static_cast<std::size_t>(c)];
        if (v > w[static_cast<std::size_t>(a)] && v < w[static_cast<std::size_t>(b)]) cover = false;
      }
      if (!cover) continue;
      Permutation u = w;
      std::swap(u[static_cast<std::size_t>(a)], u[static_cast<std::size_t>(b)]);
      auto& slot = out[u];
      slot = checked_add(slot, coefficient);
    }
}

std::map<Permutation, std::int64_t> block_product(const Permutation& u, const Permutation& v) {
  static std::mutex mutex;
  static std::map<std::pair<Permutation, Permutation>, std::map<Permutation, std::int64_t>> cache;
  const auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const int n = static_cast<int>(u.size());
  auto result = expand_schubert(poly_multiply(schubert_polynomial(u), schubert_polynomial(v)), n);
  std::lock_guard lock(mutex);
  cache.emplace(key, result);
  return result;
}

void check_sizes(const CohomologyElement& a, const std::vector<int>& sizes) {
  for (const auto& [c, coeff] : a.terms()) {
    (void)coeff;
    if (c.perms.size() != sizes.size()) throw ShapeError("cohomology class has the wrong number of blocks");
    for (std::size_t b = 0; b < sizes.size(); ++b)
      if (static_cast<int>(c.perms[b].size()) != sizes[b]) throw ShapeError("cohomology class on a different flag type");
  }
}

// Increasing arrangement of a block of gamma: u with (u^-1 gamma)_k = gamma_{u(k)} increasing.
Permutation sorting_permutation(const std::vector<Rational>& values) {
  Permutation u(values.size());
  std::iota(u.begin(), u.end(), 0);
  std::stable_sort(u.begin(), u.end(), [&](int a, int b) {
    return values[static_cast<std::size_t>(a)] < values[static_cast<std::size_t>(b)];
  });
  return u;
}

std::vector<Rational> block_values(const Weight& gamma, const GroupShape& shape, int block) {
  const auto& c = gamma.coords();
  return block == 0 ? std::vector<Rational>(c.begin(), c.begin() + shape.p)
                    : std::vector<Rational>(c.begin() + shape.p, c.end());
}

}  // namespace

int perm_length(const Permutation& w) {
  int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

Permutation perm_identity(int n) {
  Permutation w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 0);
  return w;
}

Permutation perm_longest(int n) {
  Permutation w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - 1 - i;
  return w;
}

Permutation perm_compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw ShapeError("composing permutations of different sizes");
  Permutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
  return out;
}

Permutation perm_inverse(const Permutation& w) {
  Permutation out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[static_cast<std::size_t>(w[i])] = static_cast<int>(i);
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  Permutation w = perm_identity(n);
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<int> FlagType::sizes() const {
  std::vector<int> out;
  for (const auto& b : blocks) out.push_back(std::accumulate(b.begin(), b.end(), 0));
  return out;
}

std::vector<int> FlagType::standard_composition(std::size_t block) const {
  return std::vector<int>(blocks.at(block).rbegin(), blocks.at(block).rend());
}

int FlagType::dimension() const {
  int d = 0;
  for (const auto& b : blocks) {
    const int n = std::accumulate(b.begin(), b.end(), 0);
    d += n * (n - 1) / 2;
    for (int m : b) d -= m * (m - 1) / 2;
  }
  return d;
}

FlagType full_flag(const std::vector<int>& sizes) {
  FlagType f;
  for (int n : sizes) f.blocks.emplace_back(static_cast<std::size_t>(n), 1);
  return f;
}

FlagType flag_type_of(const Weight& gamma, const GroupShape& shape) {
  check_length(gamma, shape);
  if (gamma.is_zero()) throw std::invalid_argument("flag type of the zero vector");
  FlagType f;
  for (int block = 0; block < 2; ++block) {
    auto values = block_values(gamma, shape, block);
    std::sort(values.begin(), values.end(), std::greater<>());
    std::vector<int> comp;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i == 0 || values[i] != values[i - 1])
        comp.push_back(1);
      else
        ++comp.back();
    }
    f.blocks.push_back(std::move(comp));
  }
  return f;
}

bool is_minimal_representative(const Permutation& u, const std::vector<int>& comp) {
  for (auto [s, e] : position_blocks(comp))
    for (int i = s; i + 1 < e; ++i)
      if (u[static_cast<std::size_t>(i)] > u[static_cast<std::size_t>(i + 1)]) return false;
  return true;
}

Permutation max_representative(const Permutation& u, const std::vector<int>& comp) {
  Permutation out = u;
  for (auto [s, e] : position_blocks(comp)) std::sort(out.begin() + s, out.begin() + e, std::greater<>());
  return out;
}

int SchubertClass::codegree() const {
  int d = 0;
  for (const auto& w : perms) d += perm_length(w);
  return d;
}

CohomologyElement CohomologyElement::one(const std::vector<int>& sizes) {
  SchubertClass c;
  for (int n : sizes) c.perms.push_back(perm_identity(n));
  return of(c);
}

CohomologyElement CohomologyElement::of(const SchubertClass& c, std::int64_t coefficient) {
  CohomologyElement e;
  e.add(c, coefficient);
  return e;
}

void CohomologyElement::add(const SchubertClass& c, std::int64_t coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(c, coefficient);
  if (!inserted) {
    it->second = checked_add(it->second, coefficient);
    if (it->second == 0) terms_.erase(it);
  }
}

CohomologyElement& CohomologyElement::operator+=(const CohomologyElement& o) {
  for (const auto& [c, v] : o.terms_) add(c, v);
  return *this;
}

CohomologyElement& CohomologyElement::operator*=(std::int64_t s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [c, v] : terms_) v = checked_mul(v, s);
  return *this;
}

std::int64_t CohomologyElement::coefficient(const SchubertClass& c) const {
  auto it = terms_.find(c);
  return it == terms_.end() ? 0 : it->second;
}

int CohomologyElement::homogeneous_codegree() const {
  int d = -1;
  for (const auto& [c, v] : terms_) {
    (void)v;
    const int cd = c.codegree();
    if (d >= 0 && cd != d) return -1;
    d = cd;
  }
  return d;
}

CohomologyElement schubert_multiply(const CohomologyElement& a, const CohomologyElement& b, const FlagType& f) {
  const auto sizes = f.sizes();
  check_sizes(a, sizes);
  check_sizes(b, sizes);
  CohomologyElement out;
  for (const auto& [ca, va] : a.terms())
    for (const auto& [cb, vb] : b.terms()) {
      // Per-block expansions, then their tensor product.
      std::vector<std::pair<SchubertClass, std::int64_t>> partial{{SchubertClass{}, checked_mul(va, vb)}};
      for (std::size_t blk = 0; blk < sizes.size(); ++blk) {
        const auto prod = block_product(ca.perms[blk], cb.perms[blk]);
        std::vector<std::pair<SchubertClass, std::int64_t>> next;
        for (const auto& [cls, v] : partial)
          for (const auto& [w, c] : prod) {
            SchubertClass x = cls;
            x.perms.push_back(w);
            next.emplace_back(std::move(x), checked_mul(v, c));
          }
        partial = std::move(next);
      }
      for (const auto& [cls, v] : partial) out.add(cls, v);
    }
  return out;
}

CohomologyElement multiply_linear(const CohomologyElement& a, const std::vector<std::vector<std::int64_t>>& form) {
  CohomologyElement out;
  for (const auto& [cls, v] : a.terms()) {
    if (cls.perms.size() != form.size()) throw ShapeError("linear form has the wrong number of blocks");
    for (std::size_t blk = 0; blk < form.size(); ++blk) {
      const auto& w = cls.perms[blk];
      if (form[blk].size() != w.size()) throw ShapeError("linear form has the wrong block size");
      // x_i = sigma_{s_i} - sigma_{s_{i-1}} (1-based).
      std::map<Permutation, std::int64_t> terms;
      for (std::size_t i = 0; i < w.size(); ++i) {
        const std::int64_t c = form[blk][i];
        if (c == 0) continue;
        monk(static_cast<int>(i) + 1, w, c, terms);
        monk(static_cast<int>(i), w, -c, terms);
      }
      for (const auto& [u, c] : terms) {
        SchubertClass x = cls;
        x.perms[blk] = u;
        out.add(x, checked_mul(v, c));
      }
    }
  }
  return out;
}

CohomologyElement euler_class_q_positive(const Weight& gamma, const GroupShape& shape, int chern_sign) {
  check_length(gamma, shape);
  if (gamma.is_zero()) throw std::invalid_argument("Euler class for gamma = 0");
  const auto g1 = block_values(gamma, shape, 0);
  const auto g2 = block_values(gamma, shape, 1);
  const auto u1inv = perm_inverse(sorting_permutation(g1));
  const auto u2inv = perm_inverse(sorting_permutation(g2));
  CohomologyElement e = CohomologyElement::one({shape.p, shape.q});
  for (int i = 0; i < shape.p; ++i)
    for (int j = 0; j < shape.q; ++j) {
      if (g1[static_cast<std::size_t>(i)] - g2[static_cast<std::size_t>(j)] <= 0) continue;
      std::vector<std::vector<std::int64_t>> form{std::vector<std::int64_t>(static_cast<std::size_t>(shape.p), 0),
                                                  std::vector<std::int64_t>(static_cast<std::size_t>(shape.q), 0)};
      form[0][static_cast<std::size_t>(u1inv[static_cast<std::size_t>(i)])] = chern_sign;
      form[1][static_cast<std::size_t>(u2inv[static_cast<std::size_t>(j)])] = -chern_sign;
      e = multiply_linear(e, form);
    }
  return e;
}

CohomologyElement gamma_cell_class(const WeylElement& w, const Weight& gamma, const GroupShape& shape) {
  check_length(gamma, shape);
  const FlagType f = flag_type_of(gamma, shape);
  SchubertClass c;
  for (int block = 0; block < 2; ++block) {
    const auto u = sorting_permutation(block_values(gamma, shape, block));
    const auto& wb = block == 0 ? w.first() : w.second();
    const Permutation v = perm_compose(wb, u);
    const Permutation vmax = max_representative(v, f.standard_composition(static_cast<std::size_t>(block)));
    c.perms.push_back(perm_compose(perm_longest(static_cast<int>(v.size())), vmax));
  }
  return CohomologyElement::of(c);
}

SchubertClass point_class(const FlagType& f) {
  SchubertClass c;
  for (std::size_t b = 0; b < f.blocks.size(); ++b) {
    const int n = f.sizes()[b];
    c.perms.push_back(perm_compose(perm_longest(n), max_representative(perm_identity(n), f.standard_composition(b))));
  }
  return c;
}

std::int64_t point_coefficient(const CohomologyElement& a, const FlagType& f) {
  return a.coefficient(point_class(f));
}

Polynomial poly_multiply(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      if (ma.size() != mb.size()) throw ShapeError("multiplying polynomials in different variable counts");
      Monomial m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      accumulate(out, m, checked_mul(ca, cb));
    }
  return out;
}

Polynomial divided_difference(const Polynomial& f, int i) {
  Polynomial out;
  const auto a_idx = static_cast<std::size_t>(i);
  const auto b_idx = a_idx + 1;
  for (const auto& [m, c] : f) {
    if (b_idx >= m.size()) throw ShapeError("divided difference index out of range");
    const int a = m[a_idx], b = m[b_idx];
    if (a == b) continue;
    // (x^a y^b - x^b y^a) / (x - y)
    const int hi = std::max(a, b), lo = std::min(a, b);
    const std::int64_t sign = a > b ? 1 : -1;
    for (int k = 0; k < hi - lo; ++k) {
      Monomial t = m;
      t[a_idx] = hi - 1 - k;
      t[b_idx] = lo + k;
      accumulate(out, t, sign * c);
    }
  }
  return out;
}

Polynomial schubert_polynomial(const Permutation& w) {
  static std::mutex mutex;
  static std::map<Permutation, Polynomial> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(w);
    if (it != cache.end()) return it->second;
  }
  const int n = static_cast<int>(w.size());
  Polynomial result;
  std::size_t ascent = w.size();
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] < w[i + 1]) {
      ascent = i;
      break;
    }
  if (ascent == w.size()) {
    // w0: x_1^{n-1} x_2^{n-2} ..
    Monomial m(w.size());
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = n - 1 - i;
    result[m] = 1;
  } else {
    Permutation up = w;
    std::swap(up[ascent], up[ascent + 1]);
    result = divided_difference(schubert_polynomial(up), static_cast<int>(ascent));
  }
  std::lock_guard lock(mutex);
  cache.emplace(w, result);
  return result;
}

Polynomial reduce_coinvariant(const Polynomial& f, int n) {
  // Groebner basis h_{n-k}(x_0..x_k), k = 0..n-1, with leading terms x_k^{n-k}
  // (lex order x_{n-1} > .. > x_0); normal forms use staircase monomials.
  std::vector<std::vector<Monomial>> tails(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    std::vector<Monomial> all;
    monomials_of_degree(n - k, k, n, all);
    for (auto& m : all)
      if (m[static_cast<std::size_t>(k)] != n - k) tails[static_cast<std::size_t>(k)].push_back(std::move(m));
  }
  Polynomial done;
  Polynomial work = f;
  while (!work.empty()) {
    // Largest monomial first keeps the rewriting terminating.
    auto it = std::prev(work.end());
    Monomial m = it->first;
    const std::int64_t c = it->second;
    work.erase(it);
    if (static_cast<int>(m.size()) != n) throw ShapeError("polynomial has the wrong number of variables");
    int bad = -1;
    for (int k = n - 1; k >= 0; --k)
      if (m[static_cast<std::size_t>(k)] >= n - k) {
        bad = k;
        break;
      }
    if (bad < 0) {
      accumulate(done, m, c);
      continue;
    }
    m[static_cast<std::size_t>(bad)] -= n - bad;
    for (const auto& t : tails[static_cast<std::size_t>(bad)]) {
      Monomial r = m;
      for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] += t[static_cast<std::size_t>(i)];
      accumulate(work, r, -c);
    }
  }
  return done;
}

std::map<Permutation, std::int64_t> expand_schubert(const Polynomial& f, int n) {
  const Polynomial g = reduce_coinvariant(f, n);
  std::map<Permutation, std::int64_t> out;
  if (g.empty()) return out;
  int max_deg = 0, min_deg = n * n;
  for (const auto& [m, c] : g) {
    (void)c;
    const int d = std::accumulate(m.begin(), m.end(), 0);
    max_deg = std::max(max_deg, d);
    min_deg = std::min(min_deg, d);
  }
  // c_w = (d_w g)(0) on the span of {S_w : w in S_n}.
  for (const auto& w : all_permutations(n)) {
    const int len = perm_length(w);
    if (len < min_deg || len > max_deg) continue;
    Polynomial h = g;
    Permutation cur = w;
    while (!h.empty()) {
      std::size_t descent = cur.size();
      for (std::size_t i = 0; i + 1 < cur.size(); ++i)
        if (cur[i] > cur[i + 1]) {
          descent = i;
          break;
        }
      if (descent == cur.size()) break;
      h = divided_difference(h, static_cast<int>(descent));
      std::swap(cur[descent], cur[descent + 1]);
    }
    auto it = h.find(Monomial(static_cast<std::size_t>(n), 0));
    if (it != h.end() && it->second != 0) out[w] = it->second;
  }
  return out;
}

}  // namespace holocone
