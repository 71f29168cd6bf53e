#pragma once
// Text file formats.
//
// .srf  line 1: "surface <E>"; then one line per vertex "v: d0 d1 d2 ..."
//       listing darts counterclockwise (decimal, in [0, 2E)); darts d and
//       d XOR 1 are opposite.  Optional pairing lines "p: d1 d3" (one per
//       4-regular vertex) name one transverse pair for curve systems.
//       Comments start with '#'.
// .wlk  whitespace-separated dart list.
// .mop  lines "contract <edge>" / "delete <edge>".
// .trace one line per smoothing: "<vertex lineage> <choice A|B> <provenance>".

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "curvekit/surface.hpp"

namespace ck {

struct SurfaceFile {
  Surface surface;
  // One entry per vertex in file order when pairing lines are present.
  std::vector<std::pair<Dart, Dart>> pairings;
  bool has_pairings = false;
};

SurfaceFile parse_surface_text(const std::string& text);
SurfaceFile load_surface(const std::string& path);
std::string surface_to_text(const Surface& s,
                            const std::vector<std::pair<Dart, Dart>>* pairings = nullptr);
void save_surface(const std::string& path, const Surface& s,
                  const std::vector<std::pair<Dart, Dart>>* pairings = nullptr);

std::vector<Dart> parse_walk_text(const std::string& text);
std::vector<Dart> load_walk(const std::string& path);
std::string walk_to_text(const std::vector<Dart>& walk);

enum class MinorOpKind { Contract, Delete };
struct MinorOp {
  MinorOpKind kind;
  int edge;  // edge id in the original graph
};
std::vector<MinorOp> parse_minor_ops_text(const std::string& text);
std::vector<MinorOp> load_minor_ops(const std::string& path);
std::string minor_ops_to_text(const std::vector<MinorOp>& ops);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace ck
