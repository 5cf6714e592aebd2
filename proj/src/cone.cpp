#include "holocone/cone.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace holocone {

namespace {

using Bits = std::vector<std::uint64_t>;

void set_bit(Bits& b, std::size_t k) {
  if (b.size() <= k / 64) b.resize(k / 64 + 1, 0);
  b[k / 64] |= (std::uint64_t{1} << (k % 64));
}

// a is a subset of b
bool subset(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::uint64_t bi = i < b.size() ? b[i] : 0;
    if (a[i] & ~bi) return false;
  }
  return true;
}

Bits intersection(const Bits& a, const Bits& b) {
  Bits out(std::min(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] & b[i];
  return out;
}

void make_primitive(IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g == 0 || g == 1) return;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

IntVector combine(const Integer& s, const IntVector& r, const Integer& t, const IntVector& l) {
  // s r - t l
  IntVector out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) out[i] = s * r[i] - t * l[i];
  make_primitive(out);
  return out;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) == 0; });
}

IntVector negated(IntVector v) {
  for (auto& x : v) x = -x;
  return v;
}

// Row-reduced echelon form over Q; returns nonzero rows made primitive.
std::vector<IntVector> rref(const std::vector<IntVector>& rows, std::size_t dim) {
  std::vector<RatVector> m;
  for (const auto& r : rows) {
    RatVector row(dim);
    for (std::size_t i = 0; i < dim; ++i) row[i] = r[i];
    m.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < dim && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    const Rational inv = 1 / m[rank][col];
    for (auto& x : m[rank]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || sgn(m[r][col]) == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = 0; c < dim; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  std::vector<IntVector> out;
  for (std::size_t r = 0; r < rank; ++r) out.push_back(primitive(m[r]));
  return out;
}

std::size_t rank_of(const std::vector<IntVector>& rows, std::size_t dim) { return rref(rows, dim).size(); }

}  // namespace

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::kSemigroup: return "generated-from-semigroup";
    case Provenance::kReferenceList: return "reference-list";
    case Provenance::kRessayre: return "ressayre";
    case Provenance::kGenerators: return "generators";
    case Provenance::kConstraints: return "constraints";
    case Provenance::kDerived: return "derived";
  }
  return "derived";
}

Provenance parse_provenance(std::string_view text) {
  for (auto p : {Provenance::kSemigroup, Provenance::kReferenceList, Provenance::kRessayre, Provenance::kGenerators,
                 Provenance::kConstraints, Provenance::kDerived})
    if (to_string(p) == text) return p;
  throw ParseError("unknown provenance '" + std::string(text) + "'");
}

IntVector primitive(const IntVector& v) {
  IntVector out = v;
  make_primitive(out);
  return out;
}

IntVector primitive(const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_num() * (l / v[i].get_den());
  make_primitive(out);
  return out;
}

IntVector to_int_vector(std::span<const long> v) {
  IntVector out;
  out.reserve(v.size());
  for (long x : v) out.emplace_back(x);
  return out;
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw ShapeError("dot product of vectors with different lengths");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
  return s;
}

Rational dot(const IntVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw ShapeError("dot product of vectors with different lengths");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Incremental double description. Starts from the whole space (all lines) and adds one
// homogeneous constraint at a time. Zero sets only record constraints that cut the
// cone when they were added; constraints that were already implied are never needed
// by the combinatorial adjacency test.
struct DdEngine {
  struct Generator {
    IntVector v;
    Bits zero;
  };

  std::size_t dim;
  std::vector<IntVector> lines;
  std::vector<Generator> rays;
  std::size_t recorded = 0;

  explicit DdEngine(std::size_t d) : dim(d) {
    for (std::size_t i = 0; i < d; ++i) {
      IntVector e(d, 0);
      e[i] = 1;
      lines.push_back(std::move(e));
    }
  }

  bool add(const IntVector& a, bool equality) {
    if (a.size() != dim) throw ShapeError("constraint has wrong dimension");
    if (is_zero(a)) return false;
    for (std::size_t li = 0; li < lines.size(); ++li) {
      Integer s = dot(a, lines[li]);
      if (sgn(s) == 0) continue;
      IntVector l0 = std::move(lines[li]);
      lines.erase(lines.begin() + static_cast<std::ptrdiff_t>(li));
      if (s < 0) {
        l0 = negated(std::move(l0));
        s = -s;
      }
      for (auto& l : lines) {
        const Integer t = dot(a, l);
        if (sgn(t) != 0) l = combine(s, l, t, l0);
      }
      const std::size_t k = recorded++;
      for (auto& r : rays) {
        const Integer t = dot(a, r.v);
        if (sgn(t) != 0) r.v = combine(s, r.v, t, l0);
        set_bit(r.zero, k);
      }
      if (!equality) {
        Generator g{std::move(l0), {}};
        for (std::size_t j = 0; j < k; ++j) set_bit(g.zero, j);
        rays.push_back(std::move(g));
      }
      return true;
    }

    std::vector<Integer> val(rays.size());
    bool any_neg = false, any_pos = false;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i].v);
      any_neg |= sgn(val[i]) < 0;
      any_pos |= sgn(val[i]) > 0;
    }
    if (!any_neg && (!equality || !any_pos)) return false;
    // a.x >= 0 already holds everywhere; cutting with -a keeps the face a.x = 0.
    if (equality && !any_neg)
      for (auto& v : val) v = -v;
    return cut(val, equality);
  }

  // Cuts with a.x >= 0 (or = 0), given val[i] = a.r_i and some val[i] < 0.
  bool cut(const std::vector<Integer>& val, bool equality) {
    const std::size_t k = recorded++;
    std::vector<std::size_t> pos, zero, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      const int s = sgn(val[i]);
      (s > 0 ? pos : s < 0 ? neg : zero).push_back(i);
    }
    std::vector<Generator> next;
    next.reserve(rays.size());
    for (std::size_t i : zero) {
      Generator g = rays[i];
      set_bit(g.zero, k);
      next.push_back(std::move(g));
    }
    if (!equality)
      for (std::size_t i : pos) next.push_back(rays[i]);
    for (std::size_t ip : pos)
      for (std::size_t in : neg) {
        Bits common = intersection(rays[ip].zero, rays[in].zero);
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o == ip || o == in) continue;
          if (subset(common, rays[o].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        // val[ip] > 0, val[in] < 0: val[ip] n - val[in] p lies on a.x = 0.
        Generator g{combine(val[ip], rays[in].v, val[in], rays[ip].v), std::move(common)};
        set_bit(g.zero, k);
        next.push_back(std::move(g));
      }
    rays = std::move(next);
    return true;
  }
};

DoubleDescription double_description(std::size_t dim, const std::vector<IntVector>& inequalities,
                                     const std::vector<IntVector>& equalities) {
  DdEngine dd(dim);
  for (const auto& e : equalities) dd.add(e, true);
  for (const auto& a : inequalities) dd.add(a, false);
  DoubleDescription out;
  out.lines = std::move(dd.lines);
  for (auto& g : dd.rays) out.rays.push_back(std::move(g.v));
  std::sort(out.rays.begin(), out.rays.end());
  return out;
}

namespace {

// H-description from generators: the polar cone's lines are equalities and its
// extreme rays are the facets.
void h_from_v(std::size_t dim, const std::vector<IntVector>& rays, const std::vector<IntVector>& lines,
              std::vector<IntVector>& ineq, std::vector<IntVector>& eq) {
  auto polar = double_description(dim, rays, lines);
  eq = rref(polar.lines, dim);
  ineq.clear();
  for (auto& r : polar.rays) ineq.push_back(primitive(r));
  std::sort(ineq.begin(), ineq.end());
}

void v_from_h(std::size_t dim, const std::vector<IntVector>& ineq, const std::vector<IntVector>& eq,
              std::vector<IntVector>& rays, std::vector<IntVector>& lines) {
  auto dd = double_description(dim, ineq, eq);
  lines = rref(dd.lines, dim);
  rays.clear();
  // Rays are only determined modulo lineality; reduce them to a canonical representative.
  for (auto& r : dd.rays) rays.push_back(project_modulo(r, lines));
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
}

}  // namespace

RationalCone RationalCone::from_generators(std::size_t dim, const std::vector<IntVector>& rays,
                                           const std::vector<IntVector>& lines, Provenance provenance) {
  for (const auto& r : rays)
    if (r.size() != dim) throw ShapeError("generator has wrong dimension");
  for (const auto& r : lines)
    if (r.size() != dim) throw ShapeError("generator has wrong dimension");
  RationalCone c;
  c.dim_ = dim;
  c.provenance_ = provenance;
  h_from_v(dim, rays, lines, c.inequalities_, c.equalities_);
  v_from_h(dim, c.inequalities_, c.equalities_, c.rays_, c.lines_);
  return c;
}

RationalCone RationalCone::from_constraints(std::size_t dim, const std::vector<IntVector>& inequalities,
                                            const std::vector<IntVector>& equalities, Provenance provenance) {
  for (const auto& r : inequalities)
    if (r.size() != dim) throw ShapeError("constraint has wrong dimension");
  for (const auto& r : equalities)
    if (r.size() != dim) throw ShapeError("constraint has wrong dimension");
  RationalCone c;
  c.dim_ = dim;
  c.provenance_ = provenance;
  v_from_h(dim, inequalities, equalities, c.rays_, c.lines_);
  h_from_v(dim, c.rays_, c.lines_, c.inequalities_, c.equalities_);
  return c;
}

std::size_t RationalCone::dimension() const {
  std::vector<IntVector> all = rays_;
  all.insert(all.end(), lines_.begin(), lines_.end());
  return rank_of(all, dim_);
}

bool RationalCone::contains(const RatVector& x) const {
  if (x.size() != dim_) throw ShapeError("point has wrong dimension");
  for (const auto& e : equalities_)
    if (sgn(dot(e, x)) != 0) return false;
  for (const auto& a : inequalities_)
    if (sgn(dot(a, x)) < 0) return false;
  return true;
}

bool RationalCone::contains(const IntVector& x) const {
  if (x.size() != dim_) throw ShapeError("point has wrong dimension");
  for (const auto& e : equalities_)
    if (sgn(dot(e, x)) != 0) return false;
  for (const auto& a : inequalities_)
    if (sgn(dot(a, x)) < 0) return false;
  return true;
}

RationalCone RationalCone::intersect(const std::vector<IntVector>& inequalities,
                                     const std::vector<IntVector>& equalities) const {
  std::vector<IntVector> ineq = inequalities_;
  ineq.insert(ineq.end(), inequalities.begin(), inequalities.end());
  std::vector<IntVector> eq = equalities_;
  eq.insert(eq.end(), equalities.begin(), equalities.end());
  return from_constraints(dim_, ineq, eq, provenance_);
}

std::vector<IntVector> RationalCone::canonical_facets() const {
  std::vector<IntVector> out;
  for (const auto& a : inequalities_) out.push_back(project_modulo(a, equalities_));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<IntVector> RationalCone::canonical_equalities() const { return rref(equalities_, dim_); }

std::vector<IntVector> RationalCone::canonical_lines() const { return rref(lines_, dim_); }

bool RationalCone::same_set(const RationalCone& other) const {
  if (dim_ != other.dim_) return false;
  auto inside = [](const RationalCone& a, const RationalCone& b) {
    for (const auto& r : a.rays_)
      if (!b.contains(r)) return false;
    for (const auto& l : a.lines_)
      if (!b.contains(l) || !b.contains(negated(l))) return false;
    return true;
  };
  return inside(*this, other) && inside(other, *this);
}

bool RationalCone::consistent() const {
  for (const auto& r : rays_)
    if (!contains(r)) return false;
  for (const auto& l : lines_)
    if (!contains(l) || !contains(negated(l))) return false;
  return true;
}

IntVector project_modulo(const IntVector& normal, const std::vector<IntVector>& equalities) {
  const std::size_t dim = normal.size();
  // Gram-Schmidt basis of the equality span.
  std::vector<RatVector> basis;
  for (const auto& e : equalities) {
    RatVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = e[i];
    for (const auto& b : basis) {
      Rational num = 0, den = 0;
      for (std::size_t i = 0; i < dim; ++i) {
        num += v[i] * b[i];
        den += b[i] * b[i];
      }
      const Rational f = num / den;
      for (std::size_t i = 0; i < dim; ++i) v[i] -= f * b[i];
    }
    if (std::any_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) != 0; })) basis.push_back(std::move(v));
  }
  RatVector n(dim);
  for (std::size_t i = 0; i < dim; ++i) n[i] = normal[i];
  for (const auto& b : basis) {
    Rational num = 0, den = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      num += n[i] * b[i];
      den += b[i] * b[i];
    }
    const Rational f = num / den;
    for (std::size_t i = 0; i < dim; ++i) n[i] -= f * b[i];
  }
  return primitive(n);
}

ConeBuilder::ConeBuilder(std::size_t dim) : dim_(dim) {
  for (std::size_t i = 0; i < dim; ++i) {
    IntVector e(dim, 0);
    e[i] = 1;
    dual_lines_.push_back(std::move(e));
  }
  refresh_fast();
}

void ConeBuilder::refresh_fast() {
  constexpr long kLimit = std::numeric_limits<std::int32_t>::max();
  fast_ok_ = true;
  fast_lines_.clear();
  fast_rays_.clear();
  auto push = [&](const IntVector& v, std::vector<std::int64_t>& out) {
    for (const auto& x : v) {
      if (!x.fits_slong_p() || x.get_si() > kLimit || x.get_si() < -kLimit) {
        fast_ok_ = false;
        return;
      }
      out.push_back(x.get_si());
    }
  };
  for (const auto& l : dual_lines_) push(l, fast_lines_);
  for (const auto& r : dual_rays_) push(r.v, fast_rays_);
}

bool ConeBuilder::inside_fast(std::span<const long> point) const {
  constexpr long kPointLimit = 1L << 24;
  if (!fast_ok_ || dim_ > 256) return false;
  for (long x : point)
    if (x > kPointLimit || x < -kPointLimit) return false;
  for (std::size_t off = 0; off < fast_lines_.size(); off += dim_) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < dim_; ++i) s += fast_lines_[off + i] * point[i];
    if (s != 0) return false;
  }
  for (std::size_t off = 0; off < fast_rays_.size(); off += dim_) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < dim_; ++i) s += fast_rays_[off + i] * point[i];
    if (s < 0) return false;
  }
  return true;
}

bool ConeBuilder::add(std::span<const long> point) {
  if (point.size() != dim_) throw ShapeError("point has wrong dimension");
  ++seen_;
  if (std::all_of(point.begin(), point.end(), [](long x) { return x == 0; })) return false;
  if (inside_fast(point)) return false;
  return add(to_int_vector(point));
}

bool ConeBuilder::add(const IntVector& point) {
  if (point.size() != dim_) throw ShapeError("point has wrong dimension");
  DdEngine dd(0);
  dd.dim = dim_;
  dd.lines = std::move(dual_lines_);
  dd.rays.reserve(dual_rays_.size());
  for (auto& g : dual_rays_) dd.rays.push_back({std::move(g.v), std::move(g.zero)});
  dd.recorded = constraints_;
  const bool changed = dd.add(point, false);
  dual_lines_ = std::move(dd.lines);
  dual_rays_.clear();
  for (auto& g : dd.rays) dual_rays_.push_back({std::move(g.v), std::move(g.zero)});
  constraints_ = dd.recorded;
  if (changed) {
    ++used_;
    empty_ = false;
    refresh_fast();
  }
  return changed;
}

RationalCone ConeBuilder::build(Provenance provenance) const {
  RationalCone c;
  c.dim_ = dim_;
  c.provenance_ = provenance;
  c.equalities_ = rref(dual_lines_, dim_);
  for (const auto& g : dual_rays_) c.inequalities_.push_back(primitive(g.v));
  std::sort(c.inequalities_.begin(), c.inequalities_.end());
  v_from_h(dim_, c.inequalities_, c.equalities_, c.rays_, c.lines_);
  return c;
}

RationalCone cone_from_points(const std::vector<IntVector>& points, Provenance provenance) {
  if (points.empty()) throw std::invalid_argument("cone_from_points needs at least one point");
  ConeBuilder b(points.front().size());
  for (const auto& p : points) b.add(p);
  return b.build(provenance);
}

RationalCone cone_from_points(const std::vector<RatVector>& points, Provenance provenance) {
  std::vector<IntVector> ints;
  for (const auto& p : points) ints.push_back(primitive(p));
  return cone_from_points(ints, provenance);
}

bool cone_member(const RationalCone& c, const RatVector& x) { return c.contains(x); }

Polyhedron::Polyhedron(std::size_t dim, std::vector<RatVector> normals, RatVector offsets,
                       std::vector<RatVector> eq_normals, RatVector eq_offsets)
    : dim_(dim),
      normals_(std::move(normals)),
      offsets_(std::move(offsets)),
      eq_normals_(std::move(eq_normals)),
      eq_offsets_(std::move(eq_offsets)) {
  if (normals_.size() != offsets_.size() || eq_normals_.size() != eq_offsets_.size())
    throw ShapeError("polyhedron normals and offsets differ in count");
  for (const auto& n : normals_)
    if (n.size() != dim_) throw ShapeError("polyhedron normal has wrong dimension");
  for (const auto& n : eq_normals_)
    if (n.size() != dim_) throw ShapeError("polyhedron normal has wrong dimension");
}

bool Polyhedron::contains(const RatVector& x) const {
  if (x.size() != dim_) throw ShapeError("point has wrong dimension");
  auto value = [&](const RatVector& n) {
    Rational s = 0;
    for (std::size_t i = 0; i < dim_; ++i) s += n[i] * x[i];
    return s;
  };
  for (std::size_t i = 0; i < normals_.size(); ++i)
    if (value(normals_[i]) < offsets_[i]) return false;
  for (std::size_t i = 0; i < eq_normals_.size(); ++i)
    if (value(eq_normals_[i]) != eq_offsets_[i]) return false;
  return true;
}

DoubleDescription Polyhedron::homogenized() const {
  auto row = [&](const RatVector& n, const Rational& b) {
    RatVector r(n);
    r.push_back(-b);
    return primitive(r);
  };
  std::vector<IntVector> ineq, eq;
  for (std::size_t i = 0; i < normals_.size(); ++i) ineq.push_back(row(normals_[i], offsets_[i]));
  for (std::size_t i = 0; i < eq_normals_.size(); ++i) eq.push_back(row(eq_normals_[i], eq_offsets_[i]));
  IntVector t(dim_ + 1, 0);
  t[dim_] = 1;
  ineq.push_back(t);
  return double_description(dim_ + 1, ineq, eq);
}

bool Polyhedron::empty() const {
  auto dd = homogenized();
  return std::none_of(dd.rays.begin(), dd.rays.end(), [&](const IntVector& r) { return sgn(r[dim_]) > 0; });
}

std::vector<RatVector> Polyhedron::vertices() const {
  auto dd = homogenized();
  std::vector<RatVector> out;
  for (const auto& r : dd.rays) {
    if (sgn(r[dim_]) <= 0) continue;
    RatVector v(dim_);
    for (std::size_t i = 0; i < dim_; ++i) v[i] = Rational(r[i], r[dim_]);
    for (auto& x : v) x.canonicalize();
    out.push_back(std::move(v));
  }
  return out;
}

Polyhedron slice_at(const RationalCone& c, const RatVector& fixed_prefix) {
  const std::size_t k = fixed_prefix.size();
  if (k > c.ambient_dim()) throw ShapeError("slice prefix longer than the cone dimension");
  const std::size_t free_dim = c.ambient_dim() - k;
  auto split = [&](const IntVector& a, RatVector& normal, Rational& offset) {
    normal.assign(free_dim, 0);
    Rational fixed = 0;
    for (std::size_t i = 0; i < k; ++i) fixed += a[i] * fixed_prefix[i];
    for (std::size_t i = 0; i < free_dim; ++i) normal[i] = a[k + i];
    offset = -fixed;
  };
  std::vector<RatVector> normals, eq_normals;
  RatVector offsets, eq_offsets;
  for (const auto& a : c.inequalities()) {
    RatVector n;
    Rational b;
    split(a, n, b);
    normals.push_back(std::move(n));
    offsets.push_back(std::move(b));
  }
  for (const auto& a : c.equalities()) {
    RatVector n;
    Rational b;
    split(a, n, b);
    eq_normals.push_back(std::move(n));
    eq_offsets.push_back(std::move(b));
  }
  return Polyhedron(free_dim, std::move(normals), std::move(offsets), std::move(eq_normals), std::move(eq_offsets));
}

Polyhedron slice_at(const RationalCone& c, const Weight& fixed_a, const Weight& fixed_b) {
  if (fixed_a.size() != fixed_b.size() || 3 * fixed_a.size() != c.ambient_dim())
    throw ShapeError("slice weights do not match a cone over triples");
  RatVector prefix = fixed_a.coords();
  prefix.insert(prefix.end(), fixed_b.coords().begin(), fixed_b.coords().end());
  return slice_at(c, prefix);
}

RationalCone recession_cone(const Polyhedron& p) {
  if (p.empty()) throw std::invalid_argument("recession cone of an empty polyhedron");
  std::vector<IntVector> ineq, eq;
  for (const auto& n : p.normals()) ineq.push_back(primitive(n));
  for (const auto& n : p.eq_normals()) eq.push_back(primitive(n));
  return RationalCone::from_constraints(p.ambient_dim(), ineq, eq, Provenance::kDerived);
}

RationalCone delta_K_pbar(const GroupShape& shape) {
  const auto dim = static_cast<std::size_t>(shape.rank());
  std::vector<IntVector> rays;
  for (int k = 1; k <= shape.q; ++k) {
    IntVector r(dim, 0);
    for (int i = 0; i < k; ++i) r[static_cast<std::size_t>(i)] = 1;
    for (int i = 0; i < k; ++i) r[static_cast<std::size_t>(shape.rank() - 1 - i)] = -1;
    rays.push_back(std::move(r));
  }
  return RationalCone::from_generators(dim, rays, {}, Provenance::kDerived);
}

namespace {

std::vector<IntVector> chamber_rows(const GroupShape& shape, int weights, bool include_boundary) {
  const auto n = static_cast<std::size_t>(shape.rank());
  const std::size_t dim = n * static_cast<std::size_t>(weights);
  std::vector<IntVector> out;
  for (int w = 0; w < weights; ++w) {
    const std::size_t off = n * static_cast<std::size_t>(w);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (!include_boundary && i + 1 == static_cast<std::size_t>(shape.p)) continue;
      IntVector row(dim, 0);
      row[off + i] = 1;
      row[off + i + 1] = -1;
      out.push_back(std::move(row));
    }
  }
  return out;
}

}  // namespace

std::vector<IntVector> closed_chamber_constraints(const GroupShape& shape, int weights) {
  return chamber_rows(shape, weights, true);
}

std::vector<IntVector> dominance_constraints(const GroupShape& shape, int weights) {
  return chamber_rows(shape, weights, false);
}

}  // namespace holocone
