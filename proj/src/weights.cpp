#include "holocone/weights.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace holocone {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

void check_permutation(const std::vector<int>& w) {
  std::vector<int> sorted = w;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i)) throw ShapeError("not a permutation");
}

std::vector<int> compose_perm(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
  return out;
}

std::vector<int> inverse_perm(const std::vector<int>& a) {
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
  return out;
}

int inversions(const std::vector<int>& a) {
  int n = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] > a[j]) ++n;
  return n;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty number");
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  for (char c : s)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
      throw ParseError("invalid number '" + std::string(text) + "'");
  Rational r;
  if (r.set_str(s, 10) != 0) throw ParseError("invalid number '" + std::string(text) + "'");
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

GroupShape::GroupShape(int p_, int q_) : p(p_), q(q_) {
  if (q < 1 || p < q) throw ShapeError("group shape requires p >= q >= 1");
}

Weight::Weight(std::initializer_list<long> values) {
  coords_.reserve(values.size());
  for (long v : values) coords_.emplace_back(v);
}

Weight Weight::from_integers(const std::vector<long>& values) {
  std::vector<Rational> c;
  c.reserve(values.size());
  for (long v : values) c.emplace_back(v);
  return Weight(std::move(c));
}

Weight Weight::parse(std::string_view text, const GroupShape& shape) {
  auto blocks = split(trim(text), ';');
  if (blocks.size() != 2) throw ParseError("weight needs exactly one ';' between the two blocks: '" + std::string(text) + "'");
  std::vector<Rational> c;
  for (std::size_t b = 0; b < 2; ++b) {
    auto parts = split(blocks[b], ',');
    const std::size_t expected = static_cast<std::size_t>(b == 0 ? shape.p : shape.q);
    if (parts.size() != expected)
      throw ShapeError("block " + std::to_string(b + 1) + " of '" + std::string(text) + "' has " +
                       std::to_string(parts.size()) + " entries, expected " + std::to_string(expected));
    for (auto part : parts) c.push_back(parse_rational(part));
  }
  return Weight(std::move(c));
}

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return sgn(r) == 0; });
}

bool Weight::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return r.get_den() == 1; });
}

Rational Weight::sum() const {
  Rational s = 0;
  for (const auto& r : coords_) s += r;
  return s;
}

Rational Weight::first_block_sum(const GroupShape& shape) const {
  check_length(*this, shape);
  Rational s = 0;
  for (int i = 0; i < shape.p; ++i) s += coords_[static_cast<std::size_t>(i)];
  return s;
}

Rational Weight::second_block_sum(const GroupShape& shape) const {
  check_length(*this, shape);
  Rational s = 0;
  for (int i = shape.p; i < shape.rank(); ++i) s += coords_[static_cast<std::size_t>(i)];
  return s;
}

std::vector<long> Weight::to_integers() const {
  std::vector<long> out;
  out.reserve(coords_.size());
  for (const auto& r : coords_) {
    if (r.get_den() != 1) throw ShapeError("weight is not integral");
    if (!r.get_num().fits_slong_p()) throw ShapeError("weight coordinate out of range");
    out.push_back(r.get_num().get_si());
  }
  return out;
}

std::vector<long> Weight::first_block(const GroupShape& shape) const {
  check_length(*this, shape);
  auto all = to_integers();
  return {all.begin(), all.begin() + shape.p};
}

std::vector<long> Weight::second_block(const GroupShape& shape) const {
  check_length(*this, shape);
  auto all = to_integers();
  return {all.begin() + shape.p, all.end()};
}

std::string Weight::to_string(const GroupShape& shape) const {
  check_length(*this, shape);
  std::ostringstream os;
  for (int i = 0; i < shape.rank(); ++i) {
    if (i == shape.p)
      os << ';';
    else if (i > 0)
      os << ',';
    os << coords_[static_cast<std::size_t>(i)].get_str();
  }
  return os.str();
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.size() != size()) throw ShapeError("weight length mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.size() != size()) throw ShapeError("weight length mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Weight& Weight::operator*=(const Rational& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

Weight Weight::operator-() const {
  Weight out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

void check_length(const Weight& x, const GroupShape& shape) {
  if (x.size() != static_cast<std::size_t>(shape.rank()))
    throw ShapeError("weight has length " + std::to_string(x.size()) + ", shape needs " +
                     std::to_string(shape.rank()));
}

Rational pairing(const Weight& x, const Weight& y) {
  if (x.size() != y.size()) throw ShapeError("pairing of weights with different lengths");
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

bool is_dominant(const Weight& x, const GroupShape& shape) {
  check_length(x, shape);
  for (int i = 0; i + 1 < shape.p; ++i)
    if (x[static_cast<std::size_t>(i)] < x[static_cast<std::size_t>(i + 1)]) return false;
  for (int i = shape.p; i + 1 < shape.rank(); ++i)
    if (x[static_cast<std::size_t>(i)] < x[static_cast<std::size_t>(i + 1)]) return false;
  return true;
}

bool in_holomorphic_chamber(const Weight& x, const GroupShape& shape) {
  if (!is_dominant(x, shape)) return false;
  return x[static_cast<std::size_t>(shape.p - 1)] > x[static_cast<std::size_t>(shape.p)];
}

bool in_chamber_rho(const Weight& x, const GroupShape& shape) {
  if (!is_dominant(x, shape)) throw ShapeError("in_chamber_rho needs a dominant weight");
  const RootSystem roots(shape);
  const Weight rho2 = roots.two_rho_n();
  for (const auto& beta : roots.noncompact_positive)
    if (pairing(x, beta) < pairing(rho2, beta)) return false;
  return true;
}

long rho_scaling_factor(const Weight& x, const GroupShape& shape) {
  if (!in_holomorphic_chamber(x, shape)) throw ShapeError("rho_scaling_factor needs a point of the holomorphic chamber");
  // The smallest pairing with a noncompact positive root is x_p - x_{p+1}.
  const Rational gap = x[static_cast<std::size_t>(shape.p - 1)] - x[static_cast<std::size_t>(shape.p)];
  const Rational ratio = Rational(shape.rank()) / gap;
  Integer n;
  mpz_cdiv_q(n.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());
  if (n < 1) n = 1;
  return n.get_si();
}

Weight star_involution(const Weight& x, const GroupShape& shape) {
  check_length(x, shape);
  Weight out(x.size());
  for (int i = 0; i < shape.p; ++i) out[static_cast<std::size_t>(i)] = -x[static_cast<std::size_t>(shape.p - 1 - i)];
  for (int i = 0; i < shape.q; ++i)
    out[static_cast<std::size_t>(shape.p + i)] = -x[static_cast<std::size_t>(shape.rank() - 1 - i)];
  return out;
}

WeylElement::WeylElement(const GroupShape& shape)
    : first_(static_cast<std::size_t>(shape.p)), second_(static_cast<std::size_t>(shape.q)) {
  std::iota(first_.begin(), first_.end(), 0);
  std::iota(second_.begin(), second_.end(), 0);
}

WeylElement::WeylElement(std::vector<int> first, std::vector<int> second)
    : first_(std::move(first)), second_(std::move(second)) {
  check_permutation(first_);
  check_permutation(second_);
}

WeylElement WeylElement::longest(const GroupShape& shape) {
  WeylElement w(shape);
  std::reverse(w.first_.begin(), w.first_.end());
  std::reverse(w.second_.begin(), w.second_.end());
  return w;
}

std::vector<WeylElement> WeylElement::all(const GroupShape& shape) {
  std::vector<WeylElement> out;
  WeylElement base(shape);
  std::vector<int> a = base.first_;
  do {
    std::vector<int> b = base.second_;
    do {
      out.emplace_back(a, b);
    } while (std::next_permutation(b.begin(), b.end()));
  } while (std::next_permutation(a.begin(), a.end()));
  return out;
}

WeylElement WeylElement::parse(std::string_view text, const GroupShape& shape) {
  auto blocks = split(trim(text), ';');
  if (blocks.size() > 2) throw ParseError("Weyl element has more than two blocks: '" + std::string(text) + "'");
  auto parse_block = [&](std::string_view s, int n) {
    s = trim(s);
    std::vector<int> w;
    if (s.find(',') != std::string_view::npos) {
      for (auto part : split(s, ',')) w.push_back(std::stoi(std::string(trim(part))) - 1);
    } else {
      for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("invalid Weyl element '" + std::string(text) + "'");
        w.push_back(c - '1');
      }
    }
    if (static_cast<int>(w.size()) != n) throw ShapeError("Weyl element block has wrong size: '" + std::string(text) + "'");
    return w;
  };
  std::vector<int> first = parse_block(blocks[0], shape.p);
  std::vector<int> second(static_cast<std::size_t>(shape.q));
  std::iota(second.begin(), second.end(), 0);
  if (blocks.size() == 2) second = parse_block(blocks[1], shape.q);
  return WeylElement(std::move(first), std::move(second));
}

Weight WeylElement::act(const Weight& x) const {
  const std::size_t p = first_.size();
  if (x.size() != p + second_.size()) throw ShapeError("Weyl element and weight sizes differ");
  Weight out(x.size());
  for (std::size_t i = 0; i < p; ++i) out[static_cast<std::size_t>(first_[i])] = x[i];
  for (std::size_t i = 0; i < second_.size(); ++i) out[p + static_cast<std::size_t>(second_[i])] = x[p + i];
  return out;
}

WeylElement WeylElement::compose(const WeylElement& o) const {
  return WeylElement(compose_perm(first_, o.first_), compose_perm(second_, o.second_));
}

WeylElement WeylElement::inverse() const { return WeylElement(inverse_perm(first_), inverse_perm(second_)); }

int WeylElement::length() const { return inversions(first_) + inversions(second_); }

std::string WeylElement::to_string() const {
  auto block = [](const std::vector<int>& w) {
    std::string s;
    const bool wide = w.size() > 9;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (wide && i > 0) s += ',';
      s += std::to_string(w[i] + 1);
    }
    return s;
  };
  return block(first_) + ";" + block(second_);
}

RootSystem::RootSystem(const GroupShape& s) : shape(s) {
  const int n = shape.rank();
  auto root = [n](int i, int j) {
    Weight r(static_cast<std::size_t>(n));
    r[static_cast<std::size_t>(i)] = 1;
    r[static_cast<std::size_t>(j)] = -1;
    return r;
  };
  for (int i = 0; i < shape.p; ++i)
    for (int j = i + 1; j < shape.p; ++j) compact_positive.push_back(root(i, j));
  for (int i = shape.p; i < n; ++i)
    for (int j = i + 1; j < n; ++j) compact_positive.push_back(root(i, j));
  for (int i = 0; i < shape.p; ++i)
    for (int j = shape.p; j < n; ++j) noncompact_positive.push_back(root(i, j));
  positive = compact_positive;
  positive.insert(positive.end(), noncompact_positive.begin(), noncompact_positive.end());
  for (const auto& r : positive) {
    all_roots.push_back(r);
    all_roots.push_back(-r);
  }
  for (const auto& r : compact_positive) {
    compact_roots.push_back(r);
    compact_roots.push_back(-r);
  }
}

Weight RootSystem::two_rho_n() const {
  Weight out(static_cast<std::size_t>(shape.rank()));
  for (const auto& beta : noncompact_positive) out += beta;
  return out;
}

}  // namespace holocone
