#include "holocone/cone_io.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace holocone {

namespace {

void write_block(std::ostream& out, const char* name, const std::vector<IntVector>& rows) {
  out << name << ' ' << rows.size() << '\n';
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? " " : "") << r[i].get_str();
    out << '\n';
  }
}

std::string expect_key(std::istream& in, const char* key) {
  std::string word;
  if (!(in >> word) || word != key) throw ParseError(std::string("cone file: expected '") + key + "'");
  std::string value;
  if (!(in >> value)) throw ParseError(std::string("cone file: missing value for '") + key + "'");
  return value;
}

std::size_t to_count(const std::string& s) {
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(s, &pos);
    if (pos != s.size()) throw ParseError("cone file: bad count '" + s + "'");
    return static_cast<std::size_t>(v);
  } catch (const std::logic_error&) {
    throw ParseError("cone file: bad count '" + s + "'");
  }
}

std::vector<IntVector> read_block(std::istream& in, const char* key, std::size_t dim) {
  const std::size_t n = to_count(expect_key(in, key));
  std::vector<IntVector> rows(n, IntVector(dim));
  for (auto& r : rows)
    for (auto& x : r) {
      std::string tok;
      if (!(in >> tok)) throw ParseError(std::string("cone file: truncated block '") + key + "'");
      if (tok.find('/') != std::string::npos) throw ParseError("cone file: use integer rows, got '" + tok + "'");
      if (x.set_str(tok, 10) != 0) throw ParseError("cone file: bad integer '" + tok + "'");
    }
  return rows;
}

}  // namespace

ConeFile ConeFile::from_cone(const RationalCone& c, std::string manifest) {
  ConeFile f;
  f.ambient_dim = c.ambient_dim();
  f.provenance = c.provenance();
  f.manifest = std::move(manifest);
  f.hrep = true;
  f.rays = c.rays();
  f.lines = c.lines();
  f.inequalities = c.inequalities();
  f.equalities = c.equalities();
  return f;
}

RationalCone ConeFile::to_cone() const {
  RationalCone c;
  if (hrep) {
    c = RationalCone::from_constraints(ambient_dim, inequalities, equalities, provenance);
  } else {
    if (rays.empty() && lines.empty()) throw std::invalid_argument("cone file has no generators");
    ConeBuilder b(ambient_dim);
    for (const auto& r : rays) b.add(r);
    for (const auto& l : lines) {
      b.add(l);
      IntVector neg = l;
      for (auto& x : neg) x = -x;
      b.add(neg);
    }
    c = b.build(provenance);
  }
  return c;
}

void write_cone_file(std::ostream& out, const ConeFile& f) {
  out << "holocone-cone " << kConeFormatVersion << '\n';
  out << "manifest " << (f.manifest.empty() ? "-" : f.manifest) << '\n';
  out << "ambient_dim " << f.ambient_dim << '\n';
  out << "provenance " << to_string(f.provenance) << '\n';
  out << "hrep " << (f.hrep ? 1 : 0) << '\n';
  write_block(out, "rays", f.rays);
  write_block(out, "lines", f.lines);
  write_block(out, "inequalities", f.inequalities);
  write_block(out, "equalities", f.equalities);
  out << "end\n";
}

void write_cone_file(const std::filesystem::path& path, const ConeFile& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_cone_file(out, f);
  if (!out) throw std::runtime_error("error writing " + path.string());
}

ConeFile read_cone_file(std::istream& in) {
  std::string magic;
  int version = 0;
  if (!(in >> magic >> version) || magic != "holocone-cone")
    throw ParseError("not a holocone cone file");
  if (version != kConeFormatVersion) throw ParseError("unsupported cone file version " + std::to_string(version));
  ConeFile f;
  f.manifest = expect_key(in, "manifest");
  f.ambient_dim = to_count(expect_key(in, "ambient_dim"));
  f.provenance = parse_provenance(expect_key(in, "provenance"));
  const std::string h = expect_key(in, "hrep");
  if (h != "0" && h != "1") throw ParseError("cone file: hrep must be 0 or 1");
  f.hrep = h == "1";
  f.rays = read_block(in, "rays", f.ambient_dim);
  f.lines = read_block(in, "lines", f.ambient_dim);
  f.inequalities = read_block(in, "inequalities", f.ambient_dim);
  f.equalities = read_block(in, "equalities", f.ambient_dim);
  std::string end;
  if (!(in >> end) || end != "end") throw ParseError("cone file: missing 'end'");
  return f;
}

ConeFile read_cone_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  return read_cone_file(in);
}

RationalCone load_cone(const std::filesystem::path& path, std::size_t* generators) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::string magic;
  int version = 0;
  if (!(in >> magic >> version) || magic != "holocone-cone") throw ParseError("not a holocone cone file");
  if (version != kConeFormatVersion) throw ParseError("unsupported cone file version " + std::to_string(version));
  expect_key(in, "manifest");
  const std::size_t dim = to_count(expect_key(in, "ambient_dim"));
  const Provenance prov = parse_provenance(expect_key(in, "provenance"));
  const std::string h = expect_key(in, "hrep");
  if (h == "1") {
    in.seekg(0);
    return read_cone_file(in).to_cone();
  }
  if (h != "0") throw ParseError("cone file: hrep must be 0 or 1");
  const std::size_t n = to_count(expect_key(in, "rays"));
  ConeBuilder b(dim);
  std::vector<long> row(dim);
  for (std::size_t k = 0; k < n; ++k) {
    for (auto& x : row)
      if (!(in >> x)) throw ParseError("cone file: bad or truncated point row");
    b.add(std::span<const long>(row));
  }
  if (generators) *generators = n;
  for (const auto& l : read_block(in, "lines", dim)) {
    b.add(l);
    IntVector neg = l;
    for (auto& x : neg) x = -x;
    b.add(neg);
  }
  read_block(in, "inequalities", dim);
  read_block(in, "equalities", dim);
  std::string end;
  if (!(in >> end) || end != "end") throw ParseError("cone file: missing 'end'");
  if (n == 0 && b.points_used() == 0) throw std::invalid_argument("cone file has no generators");
  return b.build(prov);
}

PointFileWriter::PointFileWriter(const std::filesystem::path& path, std::size_t ambient_dim, Provenance provenance,
                                 std::string manifest)
    : path_(path),
      body_(path.string() + ".part"),
      dim_(ambient_dim),
      provenance_(provenance),
      manifest_(std::move(manifest)),
      out_(std::make_unique<std::ofstream>(body_)) {
  if (!*out_) throw std::runtime_error("cannot write " + body_.string());
}

void PointFileWriter::add(std::span<const long> point) {
  if (point.size() != dim_) throw ShapeError("point has wrong dimension");
  auto& out = *out_;
  for (std::size_t i = 0; i < point.size(); ++i) out << (i ? " " : "") << point[i];
  out << '\n';
  ++count_;
}

void PointFileWriter::finish() {
  out_->close();
  std::ofstream out(path_);
  if (!out) throw std::runtime_error("cannot write " + path_.string());
  out << "holocone-cone " << kConeFormatVersion << '\n'
      << "manifest " << manifest_ << '\n'
      << "ambient_dim " << dim_ << '\n'
      << "provenance " << to_string(provenance_) << '\n'
      << "hrep 0\n"
      << "rays " << count_ << '\n';
  if (count_ > 0) {
    std::ifstream body(body_);
    out << body.rdbuf();
  }
  out << "lines 0\ninequalities 0\nequalities 0\nend\n";
  std::filesystem::remove(body_);
}

std::filesystem::path manifest_path_for(const std::filesystem::path& output) {
  return std::filesystem::path(output.string() + ".manifest.json");
}

void write_manifest(const std::filesystem::path& path, const RunManifest& m) {
  nlohmann::ordered_json j;
  j["engine_version"] = kEngineVersion;
  j["command"] = m.command;
  j["shape"] = m.shape;
  if (m.bound) j["bound"] = *m.bound;
  j["inputs"] = m.inputs;
  j["outputs"] = m.outputs;
  j["seconds"] = m.seconds;
  j["lr_cache"] = {{"entries", m.cache_entries}, {"hits", m.cache_hits}, {"misses", m.cache_misses}};
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace holocone
