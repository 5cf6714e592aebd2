// Weight-lattice and chamber arithmetic for K = U(p) x U(q) inside U(p,q).
//
// Coordinates are split into a p-block and a q-block, (x_1..x_p ; x_{p+1}..x_{p+q}).
// All arithmetic is exact; the pairing is the trace form (standard dot product).

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace holocone {

using Rational = mpq_class;
using Integer = mpz_class;

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

struct GroupShape {
  int p = 1;
  int q = 1;

  GroupShape() = default;
  GroupShape(int p_, int q_);

  int rank() const { return p + q; }
  friend bool operator==(const GroupShape&, const GroupShape&) = default;
};

class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t n) : coords_(n) {}
  explicit Weight(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<long> values);

  static Weight zero(const GroupShape& shape) { return Weight(static_cast<std::size_t>(shape.rank())); }
  static Weight from_integers(const std::vector<long>& values);
  // "2,1;0,-1" -> (2,1;0,-1). The block split is checked against `shape`.
  static Weight parse(std::string_view text, const GroupShape& shape);

  std::size_t size() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_integral() const;
  Rational sum() const;
  // Coordinate sums of the two blocks.
  Rational first_block_sum(const GroupShape& shape) const;
  Rational second_block_sum(const GroupShape& shape) const;
  // Throws when a coordinate is not an integer.
  std::vector<long> to_integers() const;
  std::vector<long> first_block(const GroupShape& shape) const;
  std::vector<long> second_block(const GroupShape& shape) const;

  std::string to_string(const GroupShape& shape) const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight& operator*=(const Rational& s);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& s, Weight a) { return a *= s; }
  Weight operator-() const;

  friend bool operator==(const Weight& a, const Weight& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const Weight& a, const Weight& b) { return a.coords_ < b.coords_; }

 private:
  std::vector<Rational> coords_;
};

void check_length(const Weight& x, const GroupShape& shape);

Rational pairing(const Weight& x, const Weight& y);

bool is_dominant(const Weight& x, const GroupShape& shape);
// Dominant and x_p > x_{p+1}.
bool in_holomorphic_chamber(const Weight& x, const GroupShape& shape);
// (x, beta) >= (2 rho_n, beta) for every noncompact positive root beta; requires dominance.
bool in_chamber_rho(const Weight& x, const GroupShape& shape);
// Smallest N >= 1 with N x in the rho-shifted chamber; x must lie in the holomorphic chamber.
long rho_scaling_factor(const Weight& x, const GroupShape& shape);

// x* = -w0 x: each block reversed and negated.
Weight star_involution(const Weight& x, const GroupShape& shape);

// Weyl group of K: one permutation per block, stored 0-based in one-line notation.
// The action permutes coordinates, w.e_i = e_{w(i)}.
class WeylElement {
 public:
  WeylElement() = default;
  explicit WeylElement(const GroupShape& shape);
  WeylElement(std::vector<int> first, std::vector<int> second);

  static WeylElement identity(const GroupShape& shape) { return WeylElement(shape); }
  static WeylElement longest(const GroupShape& shape);
  // All |S_p| * |S_q| elements in lexicographic order of (first, second).
  static std::vector<WeylElement> all(const GroupShape& shape);
  // One-line notation, 1-based, blocks separated by ';': "21;12". A missing second block means identity.
  static WeylElement parse(std::string_view text, const GroupShape& shape);

  const std::vector<int>& first() const { return first_; }
  const std::vector<int>& second() const { return second_; }

  Weight act(const Weight& x) const;
  WeylElement compose(const WeylElement& o) const;  // (this o o)
  WeylElement inverse() const;
  int length() const;

  std::string to_string() const;

  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;

 private:
  std::vector<int> first_;
  std::vector<int> second_;
};

struct RootSystem {
  GroupShape shape;
  std::vector<Weight> compact_positive;     // e_i - e_j, i < j in the same block
  std::vector<Weight> noncompact_positive;  // e_i - e_{p+j}
  std::vector<Weight> positive;             // union of the two
  std::vector<Weight> all_roots;            // +/- every positive root, all roots of gl_{p+q}
  std::vector<Weight> compact_roots;        // +/- compact positive roots

  explicit RootSystem(const GroupShape& shape);

  // Nonzero T-weights of g~/g for the diagonal embedding g -> g + g; equal to all roots.
  const std::vector<Weight>& auxiliary() const { return all_roots; }
  // 2 rho_n = (q,..,q ; -p,..,-p).
  Weight two_rho_n() const;
};

}  // namespace holocone
