// Exact rational polyhedral cones and polyhedra.
//
// A RationalCone always carries both descriptions:
//   V: lines (a lineality basis) and rays (extreme rays modulo lineality),
//   H: equalities a.x = 0 and irredundant inequalities a.x >= 0.
// Conversions use the double description method over GMP integers. Vectors are
// kept primitive (coprime integer entries), which is also the canonical scaling
// used for comparisons.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "holocone/weights.hpp"

namespace holocone {

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

enum class Provenance { kSemigroup, kReferenceList, kRessayre, kGenerators, kConstraints, kDerived };

std::string to_string(Provenance p);
Provenance parse_provenance(std::string_view text);

// Scales to coprime integers, keeping the direction.
IntVector primitive(const IntVector& v);
IntVector primitive(const RatVector& v);
IntVector to_int_vector(std::span<const long> v);
Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const IntVector& a, const RatVector& b);

// Vertex/lineality description of {x : A x >= 0, E x = 0}.
struct DoubleDescription {
  std::vector<IntVector> lines;
  std::vector<IntVector> rays;
};

DoubleDescription double_description(std::size_t dim, const std::vector<IntVector>& inequalities,
                                     const std::vector<IntVector>& equalities);

class RationalCone {
 public:
  RationalCone() = default;

  static RationalCone from_generators(std::size_t dim, const std::vector<IntVector>& rays,
                                      const std::vector<IntVector>& lines = {},
                                      Provenance provenance = Provenance::kGenerators);
  static RationalCone from_constraints(std::size_t dim, const std::vector<IntVector>& inequalities,
                                       const std::vector<IntVector>& equalities = {},
                                       Provenance provenance = Provenance::kConstraints);

  std::size_t ambient_dim() const { return dim_; }
  const std::vector<IntVector>& rays() const { return rays_; }
  const std::vector<IntVector>& lines() const { return lines_; }
  const std::vector<IntVector>& inequalities() const { return inequalities_; }
  const std::vector<IntVector>& equalities() const { return equalities_; }
  Provenance provenance() const { return provenance_; }
  void set_provenance(Provenance p) { provenance_ = p; }

  // Dimension of the linear span.
  std::size_t dimension() const;

  bool contains(const RatVector& x) const;
  bool contains(const IntVector& x) const;

  // Intersection with extra constraints.
  RationalCone intersect(const std::vector<IntVector>& inequalities, const std::vector<IntVector>& equalities = {}) const;

  // Inequality normals projected onto the orthogonal complement of the equality
  // space, made primitive and sorted. Two cones with the same span are equal iff
  // their canonical facets and equality spaces agree.
  std::vector<IntVector> canonical_facets() const;
  // Reduced echelon basis of the equality space, rows primitive.
  std::vector<IntVector> canonical_equalities() const;
  std::vector<IntVector> canonical_lines() const;

  // Set equality via double inclusion of generators.
  bool same_set(const RationalCone& other) const;
  // Checks that every ray and line satisfies every constraint.
  bool consistent() const;

 private:
  std::size_t dim_ = 0;
  std::vector<IntVector> rays_;
  std::vector<IntVector> lines_;
  std::vector<IntVector> inequalities_;
  std::vector<IntVector> equalities_;
  Provenance provenance_ = Provenance::kDerived;

  friend class ConeBuilder;
};

// Projection of `normal` onto the orthogonal complement of span(equalities), primitive.
IntVector project_modulo(const IntVector& normal, const std::vector<IntVector>& equalities);

// Incremental cone(points) builder. Points inside the current cone are rejected by
// an int64 prefilter against the current facets; the rest go through an exact
// double-description step in the dual space.
class ConeBuilder {
 public:
  explicit ConeBuilder(std::size_t dim);

  // Returns true when the point enlarged the cone.
  bool add(std::span<const long> point);
  bool add(const IntVector& point);

  std::size_t points_seen() const { return seen_; }
  std::size_t points_used() const { return used_; }
  std::size_t dim() const { return dim_; }

  RationalCone build(Provenance provenance = Provenance::kSemigroup) const;

 private:
  void refresh_fast();
  bool inside_fast(std::span<const long> point) const;

  std::size_t dim_;
  std::size_t seen_ = 0;
  std::size_t used_ = 0;
  bool empty_ = true;
  // Dual-space state: lines are equality normals, rays are facet normals.
  struct Generator {
    IntVector v;
    std::vector<std::uint64_t> zero;
  };
  std::vector<IntVector> dual_lines_;
  std::vector<Generator> dual_rays_;
  std::size_t constraints_ = 0;
  bool fast_ok_ = false;
  std::vector<std::int64_t> fast_lines_;
  std::vector<std::int64_t> fast_rays_;

  friend struct DdEngine;
};

RationalCone cone_from_points(const std::vector<IntVector>& points, Provenance provenance = Provenance::kSemigroup);
RationalCone cone_from_points(const std::vector<RatVector>& points, Provenance provenance = Provenance::kSemigroup);

bool cone_member(const RationalCone& c, const RatVector& x);

// {x : A x >= b, E x = f}.
class Polyhedron {
 public:
  Polyhedron(std::size_t dim, std::vector<RatVector> normals, RatVector offsets, std::vector<RatVector> eq_normals,
             RatVector eq_offsets);

  std::size_t ambient_dim() const { return dim_; }
  const std::vector<RatVector>& normals() const { return normals_; }
  const RatVector& offsets() const { return offsets_; }
  const std::vector<RatVector>& eq_normals() const { return eq_normals_; }
  const RatVector& eq_offsets() const { return eq_offsets_; }

  bool contains(const RatVector& x) const;
  bool empty() const;
  // Points of the polyhedron: a finite set of vertices (possibly empty for a cone) and the
  // recession cone together generate it.
  std::vector<RatVector> vertices() const;

 private:
  // {(x, t) : A x - b t >= 0, E x - f t = 0, t >= 0}
  DoubleDescription homogenized() const;

  std::size_t dim_;
  std::vector<RatVector> normals_;
  RatVector offsets_;
  std::vector<RatVector> eq_normals_;
  RatVector eq_offsets_;
};

// {C : (fixed..., C) in c}: the last `free_dim` coordinates stay free, the leading ones are fixed.
Polyhedron slice_at(const RationalCone& c, const RatVector& fixed_prefix);
Polyhedron slice_at(const RationalCone& c, const Weight& fixed_a, const Weight& fixed_b);

RationalCone recession_cone(const Polyhedron& p);

// Rays (1^k, 0..0 ; 0..0, -1^k), k = 1..q.
RationalCone delta_K_pbar(const GroupShape& shape);

// Closed chamber constraints for s weights of `shape` laid end to end: within-block
// dominance plus x_p >= x_{p+1}.
std::vector<IntVector> closed_chamber_constraints(const GroupShape& shape, int weights);
// Only the within-block dominance constraints.
std::vector<IntVector> dominance_constraints(const GroupShape& shape, int weights);

}  // namespace holocone
