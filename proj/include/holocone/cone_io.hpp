// Versioned text interchange for cones and point sets, plus run manifests.
//
//   holocone-cone 1
//   manifest <file name or ->
//   ambient_dim 12
//   provenance generated-from-semigroup
//   hrep 1
//   rays 2
//   1 0 -1 ...
//   ...
//   lines 0
//   inequalities ..
//   equalities ..
//   end
//
// With "hrep 0" the file only carries generators (for instance raw semigroup points);
// readers rebuild the cone from them.

#pragma once

#include <filesystem>
#include <fstream>
#include <memory>
#include <span>
#include <optional>
#include <string>
#include <vector>

#include "holocone/cone.hpp"

namespace holocone {

inline constexpr int kConeFormatVersion = 1;
inline constexpr const char* kEngineVersion = "holocone 1.0.0";

struct ConeFile {
  std::size_t ambient_dim = 0;
  Provenance provenance = Provenance::kDerived;
  std::string manifest = "-";
  bool hrep = false;
  std::vector<IntVector> rays;
  std::vector<IntVector> lines;
  std::vector<IntVector> inequalities;
  std::vector<IntVector> equalities;

  static ConeFile from_cone(const RationalCone& c, std::string manifest = "-");
  // Builds the cone, from the H-description when present.
  RationalCone to_cone() const;
};

void write_cone_file(std::ostream& out, const ConeFile& f);
void write_cone_file(const std::filesystem::path& path, const ConeFile& f);
ConeFile read_cone_file(std::istream& in);
ConeFile read_cone_file(const std::filesystem::path& path);

// Reads any cone file into a cone. Generator-only files are streamed through
// ConeBuilder, so large point files never sit in memory. `generators` receives the
// number of rays read from such a file.
RationalCone load_cone(const std::filesystem::path& path, std::size_t* generators = nullptr);

// Streaming writer for generator-only files whose ray count is unknown up front.
class PointFileWriter {
 public:
  PointFileWriter(const std::filesystem::path& path, std::size_t ambient_dim, Provenance provenance,
                  std::string manifest);
  void add(std::span<const long> point);
  // Patches the ray count and closes the file.
  void finish();
  std::size_t count() const { return count_; }

 private:
  std::filesystem::path path_;
  std::filesystem::path body_;
  std::size_t dim_;
  Provenance provenance_;
  std::string manifest_;
  std::size_t count_ = 0;
  std::unique_ptr<std::ofstream> out_;
};

struct RunManifest {
  std::string command;
  std::string shape;  // "p,q" or empty
  std::optional<long> bound;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  double seconds = 0.0;
  std::size_t cache_entries = 0;
  std::size_t cache_hits = 0;
  std::size_t cache_misses = 0;
};

std::filesystem::path manifest_path_for(const std::filesystem::path& output);
void write_manifest(const std::filesystem::path& path, const RunManifest& m);

}  // namespace holocone
