#include "holocone/horn22.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "holocone/semigroup.hpp"

namespace holocone {

namespace {

constexpr std::size_t kDim = 12;
constexpr std::size_t kMaxSamples = 5;

const GroupShape& shape22() {
  static const GroupShape s(2, 2);
  return s;
}

// Coefficients of one side, e.g. "a2+a4+b1".
IntVector parse_side(const std::string& side, const std::string& whole) {
  IntVector out(kDim, 0);
  std::size_t i = 0;
  while (i < side.size()) {
    if (i + 1 >= side.size()) throw ParseError("bad relation '" + whole + "'");
    const char block = side[i];
    const char digit = side[i + 1];
    if (block < 'a' || block > 'c' || digit < '1' || digit > '4') throw ParseError("bad relation '" + whole + "'");
    out[static_cast<std::size_t>(block - 'a') * 4 + static_cast<std::size_t>(digit - '1')] += 1;
    i += 2;
    if (i < side.size()) {
      if (side[i] != '+') throw ParseError("bad relation '" + whole + "'");
      ++i;
      if (i == side.size()) throw ParseError("bad relation '" + whole + "'");
    }
  }
  if (side.empty()) throw ParseError("bad relation '" + whole + "'");
  return out;
}

IntVector minus(const IntVector& a, const IntVector& b) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

std::string flat_to_string(std::span<const long> x) {
  std::ostringstream os;
  for (std::size_t w = 0; w < 3; ++w) {
    if (w) os << '|';
    for (std::size_t i = 0; i < 4; ++i) os << (i == 0 ? "" : i == 2 ? ";" : ",") << x[4 * w + i];
  }
  return os.str();
}

std::string vec_to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

}  // namespace

IntVector parse_relation(const std::string& raw, RelationKind* kind) {
  std::string text;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
  struct Op {
    const char* token;
    RelationKind kind;
    bool flip;  // functional is rhs - lhs
  };
  static const Op ops[] = {{"<=", RelationKind::kInequality, true},
                           {">=", RelationKind::kInequality, false},
                           {">", RelationKind::kChamberStrict, false},
                           {"=", RelationKind::kEquality, false}};
  for (const auto& op : ops) {
    const auto pos = text.find(op.token);
    if (pos == std::string::npos) continue;
    const std::string lhs = text.substr(0, pos);
    const std::string rhs = text.substr(pos + std::char_traits<char>::length(op.token));
    if (rhs.find_first_of("<>=") != std::string::npos) throw ParseError("bad relation '" + raw + "'");
    const IntVector l = parse_side(lhs, raw), r = parse_side(rhs, raw);
    if (kind) *kind = op.kind;
    return op.flip ? minus(r, l) : minus(l, r);
  }
  throw ParseError("relation '" + raw + "' has no comparison");
}

const std::vector<Horn22Relation>& horn22_relations() {
  static const std::vector<Horn22Relation> table = [] {
    struct Row {
      const char* text;
      RelationKind kind;
    };
    const Row rows[] = {
        {"a1+a2+a3+a4+b1+b2+b3+b4=c1+c2+c3+c4", RelationKind::kEquality},
        {"a1+a2+b1+b2<=c1+c2", RelationKind::kInequality},
        {"a2+b2<=c2", RelationKind::kInequality},
        {"a2+b1<=c1", RelationKind::kInequality},
        {"a1+b2<=c1", RelationKind::kInequality},
        {"a3+b3>=c3", RelationKind::kInequality},
        {"a3+b4>=c4", RelationKind::kInequality},
        {"a4+b3>=c4", RelationKind::kInequality},
        {"a2+a4+b2+b4<=c1+c4", RelationKind::kInequality},
        {"a2+a4+b2+b4<=c2+c3", RelationKind::kInequality},
        {"a2+a4+b1+b4<=c1+c3", RelationKind::kInequality},
        {"a1+a4+b2+b4<=c1+c3", RelationKind::kInequality},
        {"a2+a4+b2+b3<=c1+c3", RelationKind::kInequality},
        {"a2+a3+b2+b4<=c1+c3", RelationKind::kInequality},
        {"a1>=a2", RelationKind::kChamberWeak},
        {"a2>a3", RelationKind::kChamberStrict},
        {"a3>=a4", RelationKind::kChamberWeak},
        {"b1>=b2", RelationKind::kChamberWeak},
        {"b2>b3", RelationKind::kChamberStrict},
        {"b3>=b4", RelationKind::kChamberWeak},
        {"c1>=c2", RelationKind::kChamberWeak},
        {"c2>c3", RelationKind::kChamberStrict},
        {"c3>=c4", RelationKind::kChamberWeak},
    };
    std::vector<Horn22Relation> out;
    for (const auto& r : rows) out.push_back({r.text, r.kind, parse_relation(r.text)});
    return out;
  }();
  return table;
}

std::vector<Horn22Relation> horn22_necessary_relations() {
  std::vector<Horn22Relation> out;
  for (const auto& r : horn22_relations())
    if (r.kind == RelationKind::kEquality || r.kind == RelationKind::kInequality) out.push_back(r);
  return out;
}

RationalCone horn22_reference_cone() {
  std::vector<IntVector> ineq, eq;
  for (const auto& r : horn22_relations())
    (r.kind == RelationKind::kEquality ? eq : ineq).push_back(r.functional);
  return RationalCone::from_constraints(kDim, ineq, eq, Provenance::kReferenceList);
}

bool horn22_in_open_chamber(const RatVector& x) {
  if (x.size() != kDim) throw ShapeError("expected a triple of (2,2) weights");
  for (const auto& r : horn22_relations()) {
    const int s = sgn(dot(r.functional, x));
    if (r.kind == RelationKind::kEquality ? s != 0 : r.kind == RelationKind::kChamberStrict ? s <= 0 : s < 0)
      return false;
  }
  return true;
}

std::size_t Verify22Result::matched() const {
  return static_cast<std::size_t>(std::count_if(facets.begin(), facets.end(),
                                                [](const FacetMatch& f) { return f.in_reference && f.in_hull; }));
}

std::size_t Verify22Result::missing() const {
  return static_cast<std::size_t>(
      std::count_if(facets.begin(), facets.end(), [](const FacetMatch& f) { return f.in_reference && !f.in_hull; }));
}

std::size_t Verify22Result::extra() const {
  return static_cast<std::size_t>(
      std::count_if(facets.begin(), facets.end(), [](const FacetMatch& f) { return !f.in_reference && f.in_hull; }));
}

std::size_t Verify22Result::uncertified() const {
  std::size_t n = 0;
  for (const auto& f : facets)
    if (f.in_hull && !f.certificate.certified()) ++n;
  if (equality_match && !equality_certificate.certified()) ++n;
  return n;
}

bool Verify22Result::facets_match() const { return equality_match && missing() == 0 && extra() == 0; }

bool Verify22Result::ok() const { return facets_match() && violations == 0 && uncertified() == 0; }

std::string Verify22Result::report() const {
  std::ostringstream os;
  const auto& shape = shape22();
  os << "verify22: holomorphic Horn cone for U(2,2)\n";
  os << "semigroup: bound " << bound << ", " << points << " points, " << points_used << " enlarged the hull\n";
  os << "necessity: " << necessity_checks << " relation checks, " << violations << " violations\n";
  for (const auto& s : violation_samples) os << "  violation " << s << '\n';
  os << "hull within the closed chamber: dimension " << dimension << ", " << hull_equalities.size()
     << " equalities, " << chamber_facets << " chamber facets\n";
  os << "equality " << horn22_relations().front().text << ": " << (equality_match ? "matched" : "MISMATCH");
  if (!equality_match)
    for (const auto& e : hull_equalities) os << " hull has " << vec_to_string(e);
  os << '\n';
  if (equality_match) {
    os << "  certificate: ";
    if (equality_certificate.certified()) {
      const auto& c = equality_certificate.certificates.front();
      os << "gamma=" << c.candidate.gamma.to_string(shape) << " w1=" << c.candidate.w1.to_string()
         << " w2=" << c.candidate.w2.to_string() << " k=" << c.k << '\n';
    } else {
      os << "UNCERTIFIED (" << equality_certificate.candidates_tried << " candidates)\n";
    }
  }
  std::size_t expected = 0;
  for (const auto& f : facets) expected += f.in_reference ? 1 : 0;
  os << "inequalities: " << expected << " listed, " << matched() << " matched, " << missing() << " missing, "
     << extra() << " extra\n";
  for (const auto& f : facets) {
    os << "  " << (f.in_reference ? (f.in_hull ? "matched " : "MISSING ") : "EXTRA   ");
    os << (f.label.empty() ? vec_to_string(f.normal) : f.label);
    if (f.in_hull) {
      if (f.certificate.certified()) {
        const auto& c = f.certificate.certificates.front();
        os << "  gamma=" << c.candidate.gamma.to_string(shape) << " w1=" << c.candidate.w1.to_string()
           << " w2=" << c.candidate.w2.to_string() << " k=" << c.k << " (" << f.certificate.certificates.size()
           << " of " << f.certificate.candidates_tried << " candidates pass)";
      } else {
        os << "  UNCERTIFIED (" << f.certificate.candidates_tried << " candidates exhausted)";
      }
    }
    os << '\n';
  }
  os << "certification: " << uncertified() << " uncertified\n";
  os << "result: " << (ok() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

Verify22Result verify22(const Verify22Options& options) {
  const auto& shape = shape22();
  Verify22Result res;
  res.bound = options.bound;

  const auto necessary = horn22_necessary_relations();
  std::vector<std::vector<long>> fast;
  for (const auto& r : necessary) {
    std::vector<long> row;
    for (const auto& x : r.functional) row.push_back(x.get_si());
    fast.push_back(std::move(row));
  }

  ConeBuilder builder(kDim);
  EnumerationOptions eo;
  eo.jobs = options.jobs;
  eo.forced_members = options.forced_members;
  const auto stats = for_each_semigroup_point(
      shape, options.bound,
      [&](std::span<const long> x) {
        for (std::size_t k = 0; k < fast.size(); ++k) {
          long v = 0;
          for (std::size_t i = 0; i < kDim; ++i) v += fast[k][i] * x[i];
          ++res.necessity_checks;
          const bool bad = necessary[k].kind == RelationKind::kEquality ? v != 0 : v < 0;
          if (!bad) continue;
          ++res.violations;
          if (res.violation_samples.size() < kMaxSamples)
            res.violation_samples.push_back(flat_to_string(x) + " breaks " + necessary[k].text);
        }
        builder.add(x);
      },
      eo);
  res.points = stats.points;
  res.points_used = builder.points_used();

  const auto chamber = closed_chamber_constraints(shape, 3);
  res.hull = builder.build().intersect(chamber);
  res.dimension = res.hull.dimension();
  res.hull_equalities = res.hull.canonical_equalities();

  const IntVector sum = sum_equality(shape);
  const auto reference_eq = RationalCone::from_constraints(kDim, {}, {sum}).canonical_equalities();
  res.equality_match = res.hull_equalities == reference_eq;

  // Facets are compared modulo the reference equality.
  const std::vector<IntVector> eqs{sum};
  std::vector<IntVector> chamber_canon;
  for (const auto& r : chamber) chamber_canon.push_back(project_modulo(r, eqs));
  std::vector<IntVector> found;
  for (const auto& f : res.hull.canonical_facets()) {
    IntVector g = project_modulo(f, eqs);
    // A hull without the equality can have the sum functional itself as a facet.
    if (std::all_of(g.begin(), g.end(), [](const Integer& x) { return sgn(x) == 0; })) g = f;
    if (std::find(chamber_canon.begin(), chamber_canon.end(), g) != chamber_canon.end()) {
      ++res.chamber_facets;
      continue;
    }
    found.push_back(g);
  }
  std::vector<bool> used(found.size(), false);
  for (const auto& r : necessary) {
    if (r.kind != RelationKind::kInequality) continue;
    FacetMatch m;
    m.normal = project_modulo(r.functional, eqs);
    m.label = r.text;
    m.in_reference = true;
    for (std::size_t i = 0; i < found.size(); ++i)
      if (!used[i] && found[i] == m.normal) {
        used[i] = true;
        m.in_hull = true;
      }
    res.facets.push_back(std::move(m));
  }
  for (std::size_t i = 0; i < found.size(); ++i)
    if (!used[i]) {
      FacetMatch m;
      m.normal = found[i];
      m.in_hull = true;
      res.facets.push_back(std::move(m));
    }

  std::vector<IntVector> to_certify;
  std::vector<std::size_t> where;
  for (std::size_t i = 0; i < res.facets.size(); ++i)
    if (res.facets[i].in_hull) {
      to_certify.push_back(res.facets[i].normal);
      where.push_back(i);
    }
  const auto certs = search_certificates(shape, to_certify, options.jobs, options.chern_sign);
  for (std::size_t i = 0; i < certs.size(); ++i) res.facets[where[i]].certificate = certs[i];
  if (res.equality_match) res.equality_certificate = certify_equality(shape);
  return res;
}

}  // namespace holocone
