#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace oracle {

Laurent multiply(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

namespace {

// Calls `visit` with the content vector of every SSYT of shape lambda, entries 1..n.
void for_each_ssyt(const std::vector<long>& lambda, int n, const std::function<void(const Exponents&)>& visit) {
  std::vector<std::vector<int>> t;
  for (long len : lambda) t.emplace_back(static_cast<std::size_t>(len), 0);
  Exponents content(static_cast<std::size_t>(n), 0);
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
    if (r == t.size()) {
      visit(content);
      return;
    }
    if (c == t[r].size()) {
      fill(r + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v <= n; ++v) {
      t[r][c] = v;
      ++content[static_cast<std::size_t>(v - 1)];
      fill(r, c + 1);
      --content[static_cast<std::size_t>(v - 1)];
    }
  };
  fill(0, 0);
}

}  // namespace

long ssyt_count(const std::vector<long>& lambda, int n) {
  long count = 0;
  for_each_ssyt(lambda, n, [&](const Exponents&) { ++count; });
  return count;
}

Laurent gl_character(const std::vector<long>& lambda) {
  const int n = static_cast<int>(lambda.size());
  if (n == 0) return {{Exponents{}, 1}};
  const long shift = lambda.back();
  std::vector<long> part;
  for (long x : lambda)
    if (x - shift > 0) part.push_back(x - shift);
  Laurent out;
  for_each_ssyt(part, n, [&](const Exponents& e) {
    Exponents s = e;
    for (auto& x : s) x += shift;
    out[s] += 1;
  });
  return out;
}

Laurent block_character(const std::vector<std::vector<long>>& weights) {
  Laurent out{{Exponents{}, 1}};
  for (const auto& w : weights) {
    const Laurent g = gl_character(w);
    Laurent next;
    for (const auto& [ea, ca] : out)
      for (const auto& [eb, cb] : g) {
        Exponents e = ea;
        e.insert(e.end(), eb.begin(), eb.end());
        next[e] += ca * cb;
      }
    out = std::move(next);
  }
  return out;
}

std::map<Exponents, long> decompose(Laurent f, const std::vector<int>& sizes) {
  std::map<Exponents, long> out;
  std::erase_if(f, [](const auto& kv) { return kv.second == 0; });
  while (!f.empty()) {
    const auto [top, c] = *f.rbegin();
    std::vector<std::vector<long>> blocks;
    std::size_t at = 0;
    for (int s : sizes) {
      blocks.emplace_back(top.begin() + static_cast<long>(at), top.begin() + static_cast<long>(at + s));
      at += static_cast<std::size_t>(s);
      if (!std::is_sorted(blocks.back().rbegin(), blocks.back().rend()))
        throw std::logic_error("character is not Weyl invariant");
    }
    out[top] += c;
    for (const auto& [e, m] : block_character(blocks)) {
      f[e] -= c * m;
      if (f[e] == 0) f.erase(e);
    }
  }
  return out;
}

long lr_by_characters(const std::vector<long>& lambda, const std::vector<long>& mu, const std::vector<long>& nu) {
  const auto prod = multiply(gl_character(lambda), gl_character(mu));
  const auto parts = decompose(prod, {static_cast<int>(lambda.size())});
  const auto it = parts.find(nu);
  return it == parts.end() ? 0 : it->second;
}

Laurent sym_character(int p, int q, long d) {
  Laurent out;
  Exponents e(static_cast<std::size_t>(p + q), 0);
  std::function<void(int, long)> rec = [&](int cell, long left) {
    if (left == 0) {
      out[e] += 1;
      return;
    }
    for (int c = cell; c < p * q; ++c) {
      const auto i = static_cast<std::size_t>(c / q), j = static_cast<std::size_t>(p + c % q);
      ++e[i];
      --e[j];
      rec(c, left - 1);
      --e[i];
      ++e[j];
    }
  };
  rec(0, d);
  return out;
}

std::map<Exponents, long> holomorphic_products(int p, int q, const std::vector<long>& lambda,
                                               const std::vector<long>& mu, long d) {
  auto split = [&](const std::vector<long>& w) {
    return std::vector<std::vector<long>>{{w.begin(), w.begin() + p}, {w.begin() + p, w.end()}};
  };
  const auto f = multiply(multiply(block_character(split(lambda)), block_character(split(mu))), sym_character(p, q, d));
  return decompose(f, {p, q});
}

long holomorphic_by_characters(int p, int q, const std::vector<long>& lambda, const std::vector<long>& mu,
                               const std::vector<long>& nu) {
  auto sum = [](auto b, auto e) { return std::accumulate(b, e, 0L); };
  const long d = sum(nu.begin(), nu.begin() + p) - sum(lambda.begin(), lambda.begin() + p) -
                 sum(mu.begin(), mu.begin() + p);
  if (d < 0) return 0;
  if (sum(nu.begin(), nu.end()) != sum(lambda.begin(), lambda.end()) + sum(mu.begin(), mu.end())) return 0;
  const auto parts = holomorphic_products(p, q, lambda, mu, d);
  const auto it = parts.find(nu);
  return it == parts.end() ? 0 : it->second;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int inversions(const Perm& w) {
  int n = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++n;
  return n;
}

std::map<Perm, long> monk(const Perm& w, int r) {
  std::map<Perm, long> out;
  const int n = static_cast<int>(w.size());
  const int len = inversions(w);
  for (int i = 0; i <= r; ++i)
    for (int j = r + 1; j < n; ++j) {
      Perm v = w;
      std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]);
      if (inversions(v) == len + 1) out[v] += 1;
    }
  return out;
}

Perm grassmannian_perm(const std::vector<long>& lambda, int k, int n) {
  Perm w;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (int i = 0; i < k; ++i) {
    const long part = static_cast<std::size_t>(k - 1 - i) < lambda.size() ? lambda[static_cast<std::size_t>(k - 1 - i)] : 0;
    const int v = i + static_cast<int>(part);
    w.push_back(v);
    used[static_cast<std::size_t>(v)] = true;
  }
  for (int v = 0; v < n; ++v)
    if (!used[static_cast<std::size_t>(v)]) w.push_back(v);
  return w;
}

namespace {

// Solves M c = x for the columns in `cols`; empty when dependent or inconsistent.
std::vector<mpq_class> solve(const std::vector<std::vector<mpq_class>>& pts, const std::vector<std::size_t>& cols,
                             const std::vector<mpq_class>& x) {
  const std::size_t rows = x.size(), k = cols.size();
  std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(k + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < k; ++c) a[r][c] = pts[cols[c]][r];
    a[r][k] = x[r];
  }
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) return {};
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[rank][c];
      for (std::size_t j = c; j <= k; ++j) a[r][j] -= f * a[rank][j];
    }
    pivots.push_back(c);
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r)
    if (a[r][k] != 0) return {};
  std::vector<mpq_class> sol(k);
  for (std::size_t i = 0; i < k; ++i) sol[i] = a[i][k] / a[i][i];
  return sol;
}

}  // namespace

bool in_cone_caratheodory(const std::vector<std::vector<mpq_class>>& points, const std::vector<mpq_class>& x) {
  if (std::all_of(x.begin(), x.end(), [](const mpq_class& v) { return v == 0; })) return true;
  const std::size_t m = points.size(), d = x.size();
  std::vector<std::size_t> cols;
  std::function<bool(std::size_t)> rec = [&](std::size_t from) {
    if (!cols.empty()) {
      const auto sol = solve(points, cols, x);
      if (!sol.empty() && std::all_of(sol.begin(), sol.end(), [](const mpq_class& v) { return v >= 0; })) return true;
    }
    if (cols.size() == d) return false;
    for (std::size_t i = from; i < m; ++i) {
      cols.push_back(i);
      if (rec(i + 1)) return true;
      cols.pop_back();
    }
    return false;
  };
  return rec(0);
}

}  // namespace oracle
