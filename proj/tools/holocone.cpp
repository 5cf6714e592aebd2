// Command-line front end. Exit codes: 0 success/true, 1 false/mismatch, 2 usage or parse error.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "holocone/cone.hpp"
#include "holocone/cone_io.hpp"
#include "holocone/holomorphic.hpp"
#include "holocone/horn22.hpp"
#include "holocone/lr.hpp"
#include "holocone/ressayre.hpp"
#include "holocone/semigroup.hpp"
#include "holocone/weights.hpp"

namespace fs = std::filesystem;
using namespace holocone;

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

fs::path cache_file() {
  if (const char* d = std::getenv("HOLOCONE_CACHE_DIR"); d && *d) return fs::path(d) / "lr-cache-v1.txt";
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return fs::path(x) / "holocone" / "lr-cache-v1.txt";
  if (const char* h = std::getenv("HOME"); h && *h) return fs::path(h) / ".cache" / "holocone" / "lr-cache-v1.txt";
  return {};
}

// The cache only saves work; any failure to read or write it is ignored.
void load_cache() {
  const auto f = cache_file();
  if (f.empty()) return;
  try {
    LrCache::global().load(f);
  } catch (const std::exception&) {
    LrCache::global().clear();
  }
}

void save_cache() {
  const auto f = cache_file();
  if (f.empty() || LrCache::global().misses() == 0) return;
  try {
    std::error_code ec;
    fs::create_directories(f.parent_path(), ec);
    const fs::path tmp = f.string() + ".tmp";
    LrCache::global().save(tmp);
    fs::rename(tmp, f, ec);
  } catch (const std::exception&) {
  }
}

GLWeight parse_gl(const std::string& text, int n, const char* what) {
  GLWeight out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const Rational r = parse_rational(tok);
    if (r.get_den() != 1 || !r.get_num().fits_slong_p()) throw ParseError(std::string(what) + ": entries must be integers");
    out.push_back(r.get_num().get_si());
  }
  if (static_cast<int>(out.size()) != n) throw ShapeError(std::string(what) + " must have " + std::to_string(n) + " entries");
  if (!is_gl_dominant(out)) throw ShapeError(std::string(what) + " must be weakly decreasing");
  return out;
}

RatVector parse_point(const std::string& text) {
  RatVector out;
  std::string cleaned;
  for (char ch : text) cleaned += (ch == ';' || ch == '|') ? ',' : ch;
  std::stringstream ss(cleaned);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_rational(tok));
  return out;
}

std::string vec_str(const IntVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].get_str();
  return s;
}

std::string shape_str(const GroupShape& s) { return std::to_string(s.p) + "," + std::to_string(s.q); }

void emit_manifest(const fs::path& out, RunManifest m, std::chrono::steady_clock::time_point start) {
  m.outputs.push_back(out.filename().string());
  m.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  m.cache_entries = LrCache::global().size();
  m.cache_hits = LrCache::global().hits();
  m.cache_misses = LrCache::global().misses();
  write_manifest(manifest_path_for(out), m);
}

void print_cone(std::ostream& os, const RationalCone& c) {
  os << "dimension " << c.dimension() << '\n';
  os << "rays " << c.rays().size() << '\n';
  for (const auto& r : c.rays()) os << "  " << vec_str(r) << '\n';
  os << "lines " << c.lines().size() << '\n';
  for (const auto& r : c.canonical_lines()) os << "  " << vec_str(r) << '\n';
  os << "inequalities " << c.inequalities().size() << '\n';
  for (const auto& r : c.canonical_facets()) os << "  " << vec_str(r) << '\n';
  os << "equalities " << c.equalities().size() << '\n';
  for (const auto& r : c.canonical_equalities()) os << "  " << vec_str(r) << '\n';
}

// Facet normals of `c` that are not closed chamber constraints, modulo its equalities.
std::vector<IntVector> non_chamber_facets(const RationalCone& c, const GroupShape& shape) {
  std::vector<IntVector> chamber;
  for (const auto& r : closed_chamber_constraints(shape, 3)) chamber.push_back(project_modulo(r, c.equalities()));
  std::vector<IntVector> out;
  for (const auto& f : c.canonical_facets())
    if (std::find(chamber.begin(), chamber.end(), f) == chamber.end()) out.push_back(f);
  return out;
}

void write_certificate(std::ostream& os, const FacetCertificate& f, const GroupShape& shape) {
  os << (f.equality ? "equality " : "facet ") << vec_str(f.normal) << '\n';
  if (!f.certified()) {
    os << "  UNCERTIFIED searched " << f.candidates_tried << '\n';
    return;
  }
  for (const auto& c : f.certificates)
    os << "  gamma " << c.candidate.gamma.to_string(shape) << " w1 " << c.candidate.w1.to_string() << " w2 "
       << c.candidate.w2.to_string() << " k " << c.k << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"holocone: holomorphic Horn cones for U(p,q)"};
  app.require_subcommand(1);

  int p = 2, q = 2, n = 0, jobs = 1;
  long bound = 2;
  std::string lam, mu, nu, triple, in, out, gamma, w1, w2, point;
  bool chamber = false, inject = false;

  auto shape_opts = [&](CLI::App* sub) {
    sub->add_option("--p", p, "size of the first block")->check(CLI::PositiveNumber);
    sub->add_option("--q", q, "size of the second block")->check(CLI::PositiveNumber);
  };

  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient c^nu_{lam,mu} for U(n)");
  lr->add_option("--n", n, "rank")->required()->check(CLI::PositiveNumber);
  lr->add_option("--lam", lam)->required();
  lr->add_option("--mu", mu)->required();
  lr->add_option("--nu", nu)->required();

  auto* mult = app.add_subcommand("mult", "holomorphic multiplicity m(lam, mu, nu)");
  shape_opts(mult);
  mult->add_option("--triple", triple, "\"lam|mu|nu\"")->required();

  auto* member = app.add_subcommand("member", "semigroup membership; exit 0 member, 1 not");
  shape_opts(member);
  member->add_option("--triple", triple)->required();

  auto* enumerate = app.add_subcommand("enumerate", "write the semigroup points of a coordinate box");
  shape_opts(enumerate);
  enumerate->add_option("--bound", bound)->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("--out", out)->required();
  enumerate->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  auto* hull = app.add_subcommand("hull", "exact hull of a cone file");
  shape_opts(hull);
  hull->add_option("--in", in)->required();
  hull->add_option("--out", out);
  hull->add_flag("--chamber", chamber, "cut by the closed chamber of each weight");

  auto* cmember = app.add_subcommand("cone-member", "point in cone; exit 0 yes, 1 no");
  shape_opts(cmember);
  cmember->add_option("--in", in)->required();
  auto* tri_opt = cmember->add_option("--triple", triple);
  cmember->add_option("--point", point, "comma separated coordinates")->excludes(tri_opt);

  auto* slice = app.add_subcommand("slice", "C-slice of a triple cone at fixed A and B");
  shape_opts(slice);
  slice->add_option("--in", in)->required();
  slice->add_option("--lam", lam, "A")->required();
  slice->add_option("--mu", mu, "B")->required();

  auto* recession = app.add_subcommand("recession", "recession cone of the C-slice");
  shape_opts(recession);
  recession->add_option("--in", in)->required();
  recession->add_option("--lam", lam, "A")->required();
  recession->add_option("--mu", mu, "B")->required();
  recession->add_option("--out", out);

  auto* ressayre = app.add_subcommand("ressayre", "Ressayre data");
  ressayre->require_subcommand(1);
  auto* rverify = ressayre->add_subcommand("verify", "check one candidate; exit 0 iff all conditions hold");
  shape_opts(rverify);
  rverify->add_option("--gamma", gamma)->required();
  rverify->add_option("--w1", w1)->required();
  rverify->add_option("--w2", w2)->required();
  auto* rsearch = ressayre->add_subcommand("search", "certify the facets of a cone file");
  shape_opts(rsearch);
  rsearch->add_option("--in", in)->required();
  rsearch->add_option("--out", out);
  rsearch->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  auto* v22 = app.add_subcommand("verify22", "rebuild Horn_hol(2,2) and compare with the reference facet list");
  v22->add_option("--bound", bound, "coordinate bound")->default_val(3)->check(CLI::PositiveNumber);
  v22->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  v22->add_option("--out", out, "also write the report here");
  v22->add_flag("--inject-fault", inject, "treat 0|0|(1,0;0,0) as a member");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  load_cache();
  int rc = kOk;
  try {
    const auto shape = [&] {
      if (q > p) throw UsageError("expected p >= q");
      return GroupShape(p, q);
    };
    if (*lr) {
      const auto a = parse_gl(lam, n, "--lam"), b = parse_gl(mu, n, "--mu"), c = parse_gl(nu, n, "--nu");
      std::cout << lr_coefficient(a, b, c) << '\n';
    } else if (*mult) {
      const auto s = shape();
      std::cout << holomorphic_multiplicity(HornTriple::parse(triple, s), s) << '\n';
    } else if (*member) {
      const auto s = shape();
      const bool yes = horn_membership(HornTriple::parse(triple, s), s);
      std::cout << (yes ? "true" : "false") << '\n';
      rc = yes ? kOk : kFalse;
    } else if (*enumerate) {
      const auto s = shape();
      const fs::path o(out);
      PointFileWriter w(o, 3 * static_cast<std::size_t>(s.rank()), Provenance::kSemigroup,
                        manifest_path_for(o).filename().string());
      EnumerationOptions eo;
      eo.jobs = jobs;
      for_each_semigroup_point(s, bound, [&](std::span<const long> x) { w.add(x); }, eo);
      w.finish();
      emit_manifest(o, {"enumerate", shape_str(s), bound, {}, {}}, start);
      std::cout << "points " << w.count() << '\n';
    } else if (*hull) {
      std::size_t gens = 0;
      RationalCone c = load_cone(in, &gens);
      if (chamber) {
        const auto s = shape();
        if (c.ambient_dim() != 3 * static_cast<std::size_t>(s.rank())) throw ShapeError("cone is not on triples of this shape");
        c = c.intersect(closed_chamber_constraints(s, 3));
      }
      c.set_provenance(Provenance::kSemigroup);
      if (!out.empty()) {
        const fs::path o(out);
        write_cone_file(o, ConeFile::from_cone(c, manifest_path_for(o).filename().string()));
        RunManifest m{"hull", chamber ? shape_str(shape()) : "", std::nullopt, {fs::path(in).filename().string()}, {}};
        emit_manifest(o, m, start);
      }
      print_cone(std::cout, c);
    } else if (*cmember) {
      const RationalCone c = load_cone(in);
      RatVector x;
      if (!triple.empty()) {
        x = HornTriple::parse(triple, shape()).flatten();
      } else if (!point.empty()) {
        x = parse_point(point);
      } else {
        throw UsageError("give --triple or --point");
      }
      if (x.size() != c.ambient_dim()) throw ShapeError("point has the wrong dimension");
      const bool yes = cone_member(c, x);
      std::cout << (yes ? "true" : "false") << '\n';
      rc = yes ? kOk : kFalse;
    } else if (*slice || *recession) {
      const auto s = shape();
      const RationalCone c = load_cone(in);
      if (c.ambient_dim() != 3 * static_cast<std::size_t>(s.rank())) throw ShapeError("cone is not on triples of this shape");
      const Polyhedron poly = slice_at(c, Weight::parse(lam, s), Weight::parse(mu, s));
      if (*slice) {
        if (poly.empty()) {
          std::cout << "empty\n";
          rc = kFalse;
        } else {
          const auto verts = poly.vertices();
          std::cout << "vertices " << verts.size() << '\n';
          for (const auto& v : verts) std::cout << "  " << Weight(v).to_string(s) << '\n';
          std::cout << "recession\n";
          print_cone(std::cout, recession_cone(poly));
        }
      } else {
        const RationalCone r = recession_cone(poly);
        print_cone(std::cout, r);
        const bool same = r.same_set(delta_K_pbar(s));
        std::cout << "equals cone of (1^k,0;0,-1^k): " << (same ? "yes" : "no") << '\n';
        if (!out.empty()) {
          const fs::path o(out);
          write_cone_file(o, ConeFile::from_cone(r, manifest_path_for(o).filename().string()));
          emit_manifest(o, {"recession", shape_str(s), std::nullopt, {fs::path(in).filename().string()}, {}}, start);
        }
        rc = same ? kOk : kFalse;
      }
    } else if (*rverify) {
      const auto s = shape();
      const RessayreCandidate c{Weight::parse(gamma, s), WeylElement::parse(w1, s), WeylElement::parse(w2, s)};
      const auto r = check_candidate(c, s);
      const auto [lhs, rhs] = trace_sides(c, s);
      std::cout << "admissible " << (r.admissible ? "pass" : "fail") << '\n';
      std::cout << "relation_A " << (r.relation_a ? "pass" : "fail") << '\n';
      std::cout << "trace " << (r.trace ? "pass" : "fail") << " (" << to_string(lhs) << " vs " << to_string(rhs) << ")\n";
      if (r.admissible)
        std::cout << "schubert " << (r.k >= 1 ? "pass" : "fail") << " (k = " << r.k << ")\n";
      else
        std::cout << "schubert fail (gamma not admissible)\n";
      std::cout << "inequality " << vec_str(inequality_of(c, s)) << '\n';
      rc = r.passes() ? kOk : kFalse;
    } else if (*rsearch) {
      const auto s = shape();
      const RationalCone c = load_cone(in);
      if (c.ambient_dim() != 3 * static_cast<std::size_t>(s.rank())) throw ShapeError("cone is not on triples of this shape");
      const auto normals = non_chamber_facets(c, s);
      auto certs = search_certificates(s, normals, jobs);
      for (const auto& e : c.canonical_equalities()) {
        const IntVector sum = sum_equality(s);
        IntVector neg = sum;
        for (auto& x : neg) x = -x;
        if (e == sum || e == neg) certs.push_back(certify_equality(s));
        else certs.push_back({e, true, {}, 0});
      }
      std::ostringstream os;
      os << "holocone-certificates 1\nshape " << shape_str(s) << '\n';
      std::size_t bad = 0;
      for (const auto& f : certs) {
        write_certificate(os, f, s);
        bad += f.certified() ? 0 : 1;
      }
      os << "uncertified " << bad << '\n';
      if (!out.empty()) {
        std::ofstream f(out);
        if (!f) throw std::runtime_error("cannot write " + out);
        f << os.str();
      }
      std::cout << os.str();
      rc = bad == 0 ? kOk : kFalse;
    } else if (*v22) {
      Verify22Options o;
      o.bound = bound;
      o.jobs = jobs;
      if (inject) o.forced_members.push_back({0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0});
      const auto r = verify22(o);
      const std::string text = r.report();
      std::cout << text;
      if (!out.empty()) {
        const fs::path op(out);
        std::ofstream f(op);
        if (!f) throw std::runtime_error("cannot write " + out);
        f << "manifest " << manifest_path_for(op).filename().string() << '\n' << text;
        f.close();
        emit_manifest(op, {"verify22", "2,2", bound, {}, {}}, start);
      }
      rc = r.ok() ? kOk : kFalse;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    rc = kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    rc = kUsage;
  }
  save_cache();
  return rc;
}
