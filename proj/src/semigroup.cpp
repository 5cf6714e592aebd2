#include "holocone/semigroup.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <thread>

namespace holocone {

namespace {

long shell_of(const GLWeight& w) {
  long s = 0;
  for (long x : w) s = std::max(s, x < 0 ? -x : x);
  return s;
}

// For one block: for each (lambda, mu) pair of box weights, the sorted list of
// (delta id, nu index) with [V_nu : V_lambda (x) V_mu (x) V_delta] > 0.
struct BlockSupport {
  std::size_t count = 0;  // number of box weights
  std::vector<std::vector<std::pair<int, int>>> table;  // index lambda * count + mu

  const std::vector<std::pair<int, int>>& at(std::size_t l, std::size_t m) const { return table[l * count + m]; }
};

GLWeight delta_natural(const Partition& delta) {
  GLWeight out(delta.size());
  for (std::size_t i = 0; i < delta.size(); ++i) out[i] = -delta[delta.size() - 1 - i];
  return out;
}

// `first` selects the U(p) block (delta padded) over the U(q) block (delta^nat).
BlockSupport block_support(const std::vector<GLWeight>& box, const std::vector<Partition>& deltas,
                           const std::map<GLWeight, int>& box_index, int n, int q, long bound, bool first, int jobs) {
  BlockSupport s;
  s.count = box.size();
  s.table.resize(box.size() * box.size());
  // Group deltas by degree.
  std::map<long, std::vector<int>> by_degree;
  for (std::size_t i = 0; i < deltas.size(); ++i) by_degree[total(deltas[i])].push_back(static_cast<int>(i));

  auto work = [&](std::size_t l) {
    for (std::size_t m = 0; m < box.size(); ++m) {
      const auto base = tensor_expand(box[l], box[m]);
      const long lm = total(box[l]) + total(box[m]);
      // |nu| lies in [-n bound, n bound]; that pins the admissible degrees.
      const long dmin = first ? -n * bound - lm : lm - n * bound;
      const long dmax = first ? n * bound - lm : lm + n * bound;
      std::set<std::pair<int, int>> found;
      for (long d = std::max(0L, dmin); d <= dmax; ++d) {
        auto it = by_degree.find(d);
        if (it == by_degree.end()) continue;
        for (int id : it->second) {
          GLWeight dw = first ? deltas[static_cast<std::size_t>(id)] : delta_natural(deltas[static_cast<std::size_t>(id)]);
          dw.resize(static_cast<std::size_t>(n), 0);
          for (const auto& [kappa, c] : base) {
            (void)c;
            for (const auto& [nu, c2] : tensor_expand(kappa, dw)) {
              (void)c2;
              if (shell_of(nu) > bound) continue;
              auto pos = box_index.find(nu);
              if (pos != box_index.end()) found.emplace(id, pos->second);
            }
          }
        }
      }
      s.table[l * box.size() + m].assign(found.begin(), found.end());
    }
  };
  const std::size_t workers = static_cast<std::size_t>(std::max(1, jobs));
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < workers; ++t)
    threads.emplace_back([&, t] {
      for (std::size_t l = t; l < box.size(); l += workers) work(l);
    });
  for (auto& th : threads) th.join();
  (void)q;
  return s;
}

}  // namespace

std::vector<GLWeight> dominant_box(int n, long bound) {
  std::vector<GLWeight> out;
  if (n <= 0 || bound < 0) return out;
  GLWeight cur(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, std::size_t i, long cap) -> void {
    if (i == cur.size()) {
      out.push_back(cur);
      return;
    }
    for (long x = -bound; x <= cap; ++x) {
      cur[i] = x;
      self(self, i + 1, x);
    }
  };
  rec(rec, 0, bound);
  std::sort(out.begin(), out.end());
  return out;
}

EnumerationStats for_each_semigroup_point(const GroupShape& shape, long bound, const PointVisitor& visit,
                                          const EnumerationOptions& options) {
  if (bound < 0) throw std::invalid_argument("negative enumeration bound");
  const int p = shape.p, q = shape.q;
  const auto box1 = dominant_box(p, bound);
  const auto box2 = dominant_box(q, bound);
  std::map<GLWeight, int> index1, index2;
  for (std::size_t i = 0; i < box1.size(); ++i) index1[box1[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < box2.size(); ++i) index2[box2[i]] = static_cast<int>(i);

  // Degrees never exceed 3 p bound.
  std::vector<Partition> deltas;
  for (long d = 0; d <= 3L * p * bound; ++d)
    for (auto& part : partitions(d, q)) deltas.push_back(std::move(part));

  const auto sup1 = block_support(box1, deltas, index1, p, q, bound, true, options.jobs);
  const auto sup2 = block_support(box2, deltas, index2, q, q, bound, false, options.jobs);

  std::vector<long> shell1(box1.size()), shell2(box2.size());
  for (std::size_t i = 0; i < box1.size(); ++i) shell1[i] = shell_of(box1[i]);
  for (std::size_t i = 0; i < box2.size(); ++i) shell2[i] = shell_of(box2[i]);

  const std::size_t n1 = box1.size(), n2 = box2.size();
  const std::size_t nw = n1 * n2;  // full weights, index i1 * n2 + i2
  auto wshell = [&](std::size_t w) { return std::max(shell1[w / n2], shell2[w % n2]); };

  std::set<std::vector<long>> forced(options.forced_members.begin(), options.forced_members.end());
  const std::size_t dim = 3 * static_cast<std::size_t>(shape.rank());

  auto flatten = [&](std::size_t l, std::size_t m, std::size_t v, std::vector<long>& out) {
    for (std::size_t w : {l, m, v}) {
      const auto& a = box1[w / n2];
      const auto& b = box2[w % n2];
      out.insert(out.end(), a.begin(), a.end());
      out.insert(out.end(), b.begin(), b.end());
    }
  };

  // Points with lambda index l in shell s, appended flat.
  auto points_for = [&](std::size_t l, long s, std::vector<long>& out, std::size_t& pairs) {
    std::vector<char> mark(nw);
    std::vector<long> scratch;
    for (std::size_t m = 0; m < nw; ++m) {
      const long lm = std::max(wshell(l), wshell(m));
      if (lm > s) continue;
      ++pairs;
      std::fill(mark.begin(), mark.end(), 0);
      const auto& a = sup1.at(l / n2, m / n2);
      const auto& b = sup2.at(l % n2, m % n2);
      std::size_t i = 0, j = 0;
      while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) {
          ++i;
          continue;
        }
        if (b[j].first < a[i].first) {
          ++j;
          continue;
        }
        const int id = a[i].first;
        std::size_t i2 = i, j2 = j;
        while (i2 < a.size() && a[i2].first == id) ++i2;
        while (j2 < b.size() && b[j2].first == id) ++j2;
        for (std::size_t x = i; x < i2; ++x)
          for (std::size_t y = j; y < j2; ++y)
            mark[static_cast<std::size_t>(a[x].second) * n2 + static_cast<std::size_t>(b[y].second)] = 1;
        i = i2;
        j = j2;
      }
      for (std::size_t v = 0; v < nw; ++v) {
        const long vs = wshell(v);
        if (vs > s || std::max(lm, vs) != s) continue;
        bool member = mark[v] != 0;
        if (!member && !forced.empty()) {
          scratch.clear();
          flatten(l, m, v, scratch);
          member = forced.count(scratch) != 0;
        }
        if (member) flatten(l, m, v, out);
      }
    }
  };

  EnumerationStats stats;
  const std::size_t workers = static_cast<std::size_t>(std::max(1, options.jobs));
  for (long s = 0; s <= bound; ++s) {
    for (std::size_t start = 0; start < nw; start += workers) {
      const std::size_t end = std::min(nw, start + workers);
      std::vector<std::vector<long>> buffers(end - start);
      std::vector<std::size_t> pairs(end - start, 0);
      std::vector<std::thread> threads;
      for (std::size_t l = start; l < end; ++l) {
        if (wshell(l) > s) continue;
        threads.emplace_back([&, l] { points_for(l, s, buffers[l - start], pairs[l - start]); });
      }
      for (auto& th : threads) th.join();
      for (std::size_t k = 0; k < buffers.size(); ++k) {
        stats.pairs += pairs[k];
        const auto& buf = buffers[k];
        for (std::size_t off = 0; off < buf.size(); off += dim) {
          visit(std::span<const long>(buf.data() + off, dim));
          ++stats.points;
        }
      }
    }
  }
  return stats;
}

std::vector<HornTriple> enumerate_semigroup(const GroupShape& shape, long bound, const EnumerationOptions& options) {
  std::vector<HornTriple> out;
  const auto n = static_cast<std::size_t>(shape.rank());
  for_each_semigroup_point(
      shape, bound,
      [&](std::span<const long> x) {
        auto weight = [&](std::size_t k) {
          return Weight::from_integers(std::vector<long>(x.begin() + static_cast<std::ptrdiff_t>(k * n),
                                                         x.begin() + static_cast<std::ptrdiff_t>((k + 1) * n)));
        };
        out.push_back({weight(0), weight(1), weight(2)});
      },
      options);
  return out;
}

}  // namespace holocone
