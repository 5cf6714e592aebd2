#include "holocone/lr.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace holocone {

namespace {

void require_same_n(const GLWeight& a, const GLWeight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("U(n) weights of different rank");
  if (a.empty()) throw std::invalid_argument("U(n) weight with n = 0");
}

void require_dominant(const GLWeight& w) {
  if (!is_gl_dominant(w)) throw std::invalid_argument("U(n) weight is not weakly decreasing");
}

// Counts LR skew tableaux of shape nu/lambda and content mu. Rows are filled top to
// bottom and each row right to left, which is the reverse reading order, so the
// lattice-word condition can be checked cell by cell.
class LrFiller {
 public:
  LrFiller(const Partition& lambda, const Partition& mu, const Partition& nu)
      : lambda_(lambda), mu_(mu), nu_(nu), count_(mu.size() + 1, 0) {
    const std::size_t n = nu.size();
    filling_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      filling_[i].assign(static_cast<std::size_t>(nu[i]), 0);
      for (long c = nu[i] - 1; c >= lambda[i]; --c) cells_.push_back({i, static_cast<std::size_t>(c)});
    }
  }

  Multiplicity count() { return fill(0); }

 private:
  struct Cell {
    std::size_t row, col;
  };

  Multiplicity fill(std::size_t k) {
    if (k == cells_.size()) return 1;
    const auto [i, c] = cells_[k];
    int hi = static_cast<int>(std::min<std::size_t>(mu_.size(), i + 1));
    if (c + 1 < static_cast<std::size_t>(nu_[i])) hi = std::min(hi, filling_[i][c + 1]);
    int lo = 1;
    if (i > 0 && c < static_cast<std::size_t>(nu_[i - 1]) && static_cast<long>(c) >= lambda_[i - 1])
      lo = filling_[i - 1][c] + 1;
    Multiplicity total = 0;
    for (int v = lo; v <= hi; ++v) {
      const auto vi = static_cast<std::size_t>(v);
      if (count_[vi] >= mu_[vi - 1]) continue;
      if (v > 1 && count_[vi] >= count_[vi - 1]) continue;
      ++count_[vi];
      filling_[i][c] = v;
      total += fill(k + 1);
      --count_[vi];
    }
    filling_[i][c] = 0;
    return total;
  }

  const Partition& lambda_;
  const Partition& mu_;
  const Partition& nu_;
  std::vector<long> count_;
  std::vector<std::vector<int>> filling_;
  std::vector<Cell> cells_;
};

Multiplicity lr_partitions(const Partition& lambda, const Partition& mu, const Partition& nu) {
  for (std::size_t i = 0; i < nu.size(); ++i)
    if (nu[i] < lambda[i] || nu[i] < mu[i]) return 0;
  return LrFiller(lambda, mu, nu).count();
}

// Shift to partitions. Returns false when the coefficient is zero for degree or
// lowest-part reasons.
bool normalize(const GLWeight& lambda, const GLWeight& mu, const GLWeight& nu, Partition& l, Partition& m,
               Partition& v) {
  if (total(lambda) + total(mu) != total(nu)) return false;
  const long a = -lambda.back();
  const long b = -mu.back();
  if (nu.back() + a + b < 0) return false;
  l = shifted(lambda, a);
  m = shifted(mu, b);
  v = shifted(nu, a + b);
  // c is symmetric in (lambda, mu); order the pair so both queries share a key.
  if (m < l) std::swap(l, m);
  return true;
}

void enumerate_shapes(const Partition& lambda, long box_width, long remaining, std::size_t row, Partition& current,
                      std::vector<Partition>& out) {
  const std::size_t n = lambda.size();
  if (row == n) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  const long upper = row == 0 ? lambda[0] + box_width : std::min(current[row - 1], lambda[row] + box_width);
  for (long x = std::min(upper, lambda[row] + remaining); x >= lambda[row]; --x) {
    current[row] = x;
    enumerate_shapes(lambda, box_width, remaining - (x - lambda[row]), row + 1, current, out);
  }
}

}  // namespace

bool is_gl_dominant(const GLWeight& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] < w[i + 1]) return false;
  return true;
}

long total(const GLWeight& w) {
  long s = 0;
  for (long x : w) s += x;
  return s;
}

GLWeight shifted(const GLWeight& w, long by) {
  GLWeight out = w;
  for (auto& x : out) x += by;
  return out;
}

std::size_t LrCache::KeyHash::operator()(const std::vector<long>& k) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (long x : k) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::optional<Multiplicity> LrCache::find(const std::vector<long>& key) const {
  std::shared_lock lock(mutex_);
  auto it = table_.find(key);
  if (it == table_.end()) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return it->second;
}

void LrCache::insert(const std::vector<long>& key, Multiplicity value) {
  std::unique_lock lock(mutex_);
  table_.emplace(key, value);
}

std::size_t LrCache::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

void LrCache::clear() {
  std::unique_lock lock(mutex_);
  table_.clear();
  hits_ = 0;
  misses_ = 0;
}

void LrCache::save(const std::filesystem::path& file) const {
  std::vector<std::pair<std::vector<long>, Multiplicity>> entries;
  {
    std::shared_lock lock(mutex_);
    entries.assign(table_.begin(), table_.end());
  }
  std::sort(entries.begin(), entries.end());
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot write LR cache " + file.string());
  out << "holocone-lr-cache " << kFormatVersion << '\n';
  for (const auto& [key, value] : entries) {
    const std::size_t n = static_cast<std::size_t>(key[0]);
    out << n;
    for (std::size_t part = 0; part < 3; ++part) {
      out << " |";
      for (std::size_t i = 0; i < n; ++i) out << ' ' << key[1 + part * n + i];
    }
    out << " = " << value << '\n';
  }
}

bool LrCache::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) return false;
  std::string magic;
  int version = 0;
  if (!(in >> magic >> version) || magic != "holocone-lr-cache" || version != kFormatVersion) return false;
  std::string line;
  std::getline(in, line);
  std::vector<std::pair<std::vector<long>, Multiplicity>> entries;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::replace(line.begin(), line.end(), '|', ' ');
    std::replace(line.begin(), line.end(), '=', ' ');
    std::istringstream is(line);
    long n = 0;
    if (!(is >> n) || n <= 0) return false;
    std::vector<long> key{n};
    for (long i = 0; i < 3 * n; ++i) {
      long x;
      if (!(is >> x)) return false;
      key.push_back(x);
    }
    Multiplicity value;
    if (!(is >> value)) return false;
    entries.emplace_back(std::move(key), value);
  }
  std::unique_lock lock(mutex_);
  for (auto& [k, v] : entries) table_.emplace(std::move(k), v);
  return true;
}

LrCache& LrCache::global() {
  static LrCache cache;
  return cache;
}

Multiplicity lr_coefficient(const GLWeight& lambda, const GLWeight& mu, const GLWeight& nu, LrCache& cache) {
  require_same_n(lambda, mu);
  require_same_n(lambda, nu);
  require_dominant(lambda);
  require_dominant(mu);
  require_dominant(nu);
  Partition l, m, v;
  if (!normalize(lambda, mu, nu, l, m, v)) return 0;
  std::vector<long> key;
  key.reserve(1 + 3 * l.size());
  key.push_back(static_cast<long>(l.size()));
  key.insert(key.end(), l.begin(), l.end());
  key.insert(key.end(), m.begin(), m.end());
  key.insert(key.end(), v.begin(), v.end());
  if (auto hit = cache.find(key)) return *hit;
  // Fill with the smaller content; c^v_{l m} = c^v_{m l}.
  const Multiplicity c = total(l) <= total(m) ? lr_partitions(m, l, v) : lr_partitions(l, m, v);
  cache.insert(key, c);
  return c;
}

Multiplicity lr_coefficient(const GLWeight& lambda, const GLWeight& mu, const GLWeight& nu) {
  return lr_coefficient(lambda, mu, nu, LrCache::global());
}

std::map<GLWeight, Multiplicity> tensor_expand(const GLWeight& lambda, const GLWeight& mu, LrCache& cache) {
  require_same_n(lambda, mu);
  require_dominant(lambda);
  require_dominant(mu);
  const long a = -lambda.back();
  const long b = -mu.back();
  const Partition l = shifted(lambda, a);
  const Partition m = shifted(mu, b);
  std::vector<Partition> shapes;
  Partition current(l.size());
  enumerate_shapes(l, m[0], total(m), 0, current, shapes);
  std::map<GLWeight, Multiplicity> out;
  for (const auto& v : shapes) {
    const Multiplicity c = lr_coefficient(l, m, v, cache);
    if (c != 0) out.emplace(shifted(v, -(a + b)), c);
  }
  return out;
}

std::map<GLWeight, Multiplicity> tensor_expand(const GLWeight& lambda, const GLWeight& mu) {
  return tensor_expand(lambda, mu, LrCache::global());
}

Multiplicity triple_multiplicity(const GLWeight& lambda, const GLWeight& mu, const GLWeight& delta,
                                 const GLWeight& nu) {
  require_same_n(lambda, mu);
  require_same_n(lambda, delta);
  require_same_n(lambda, nu);
  require_dominant(nu);
  if (total(lambda) + total(mu) + total(delta) != total(nu)) return 0;
  Multiplicity sum = 0;
  for (const auto& [kappa, c1] : tensor_expand(lambda, mu)) sum += c1 * lr_coefficient(kappa, delta, nu);
  return sum;
}

std::int64_t weyl_dim(const GLWeight& lambda) {
  require_dominant(lambda);
  mpz_class num = 1, den = 1;
  const std::size_t n = lambda.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      num *= lambda[i] - lambda[j] + static_cast<long>(j - i);
      den *= static_cast<long>(j - i);
    }
  mpz_class q = num / den;
  if (q * den != num || !q.fits_slong_p()) throw std::overflow_error("Weyl dimension is not a machine integer");
  return q.get_si();
}

std::vector<Partition> partitions(long total_size, int max_parts) {
  std::vector<Partition> out;
  if (total_size < 0 || max_parts < 0) return out;
  Partition current(static_cast<std::size_t>(max_parts), 0);
  auto rec = [&](auto&& self, std::size_t row, long remaining, long cap) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    if (row == current.size()) return;
    for (long x = std::min(cap, remaining); x >= 1; --x) {
      current[row] = x;
      self(self, row + 1, remaining - x, x);
      current[row] = 0;
    }
  };
  rec(rec, 0, total_size, total_size);
  return out;
}

}  // namespace holocone
