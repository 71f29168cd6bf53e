#include "curvekit/io.hpp"

#include <fstream>
#include <sstream>

namespace ck {

namespace {

// Strips a trailing '#' comment and surrounding whitespace.
std::string strip(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

[[noreturn]] void fail(int line_no, const std::string& msg) {
  throw SurfaceError("line " + std::to_string(line_no) + ": " + msg);
}

std::vector<long long> parse_ints(const std::string& s, int line_no) {
  std::istringstream in(s);
  std::vector<long long> out;
  std::string tok;
  while (in >> tok) {
    size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      fail(line_no, "expected integer, got '" + tok + "'");
    }
    if (used != tok.size()) fail(line_no, "expected integer, got '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

SurfaceFile parse_surface_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  long long edge_count = -1;
  std::vector<std::vector<Dart>> rotations;
  std::vector<std::pair<Dart, Dart>> pairings;
  std::vector<int> pairing_line;  // for error reporting

  while (std::getline(in, line)) {
    ++line_no;
    std::string s = strip(line);
    if (s.empty()) continue;
    if (edge_count < 0) {
      std::istringstream hdr(s);
      std::string kw;
      hdr >> kw;
      if (kw != "surface") fail(line_no, "expected 'surface <edge count>' header");
      std::string rest;
      std::getline(hdr, rest);
      auto vals = parse_ints(rest, line_no);
      if (vals.size() != 1 || vals[0] < 1)
        fail(line_no, "expected 'surface <edge count>' header");
      edge_count = vals[0];
      continue;
    }
    if (s.rfind("v:", 0) == 0) {
      auto vals = parse_ints(s.substr(2), line_no);
      if (vals.empty()) fail(line_no, "vertex line has no darts");
      std::vector<Dart> rot;
      for (long long v : vals) {
        if (v < 0 || v >= 2 * edge_count)
          fail(line_no, "dart " + std::to_string(v) + " out of range [0, " +
                            std::to_string(2 * edge_count) + ")");
        rot.push_back(static_cast<Dart>(v));
      }
      rotations.push_back(std::move(rot));
    } else if (s.rfind("p:", 0) == 0) {
      auto vals = parse_ints(s.substr(2), line_no);
      if (vals.size() != 2) fail(line_no, "pairing line needs exactly two darts");
      for (long long v : vals)
        if (v < 0 || v >= 2 * edge_count)
          fail(line_no, "dart " + std::to_string(v) + " out of range");
      pairings.emplace_back(static_cast<Dart>(vals[0]), static_cast<Dart>(vals[1]));
      pairing_line.push_back(line_no);
    } else {
      fail(line_no, "unrecognized line '" + s + "'");
    }
  }
  if (edge_count < 0) throw SurfaceError("empty surface file");
  if (rotations.empty()) throw SurfaceError("surface file has no vertex lines");

  SurfaceFile out{Surface::from_rotations(rotations, static_cast<int>(edge_count)),
                  std::move(pairings), false};
  if (!out.pairings.empty()) {
    if (out.pairings.size() != rotations.size())
      throw SurfaceError("expected one pairing line per vertex, got " +
                         std::to_string(out.pairings.size()) + " for " +
                         std::to_string(rotations.size()) + " vertices");
    for (size_t i = 0; i < out.pairings.size(); ++i) {
      auto [a, b] = out.pairings[i];
      if (out.surface.vertex_of(a) != static_cast<int>(i) ||
          out.surface.vertex_of(b) != static_cast<int>(i))
        fail(pairing_line[i], "paired darts not both at vertex " + std::to_string(i));
    }
    out.has_pairings = true;
  }
  return out;
}

std::string surface_to_text(const Surface& s,
                            const std::vector<std::pair<Dart, Dart>>* pairings) {
  std::ostringstream out;
  out << "surface " << s.edge_count() << "\n";
  for (int v = 0; v < s.vertex_count(); ++v) {
    out << "v:";
    for (Dart d : s.rotation(v)) out << ' ' << d;
    out << "\n";
  }
  if (pairings)
    for (auto [a, b] : *pairings) out << "p: " << a << ' ' << b << "\n";
  return out.str();
}

std::vector<Dart> parse_walk_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Dart> walk;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    for (long long v : parse_ints(strip(line), line_no)) {
      if (v < 0) fail(line_no, "negative dart " + std::to_string(v));
      walk.push_back(static_cast<Dart>(v));
    }
  }
  return walk;
}

std::string walk_to_text(const std::vector<Dart>& walk) {
  std::ostringstream out;
  for (size_t i = 0; i < walk.size(); ++i) out << (i ? " " : "") << walk[i];
  out << "\n";
  return out.str();
}

std::vector<MinorOp> parse_minor_ops_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<MinorOp> ops;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string s = strip(line);
    if (s.empty()) continue;
    std::istringstream ls(s);
    std::string kw;
    ls >> kw;
    MinorOpKind kind;
    if (kw == "contract")
      kind = MinorOpKind::Contract;
    else if (kw == "delete")
      kind = MinorOpKind::Delete;
    else
      fail(line_no, "expected 'contract <edge>' or 'delete <edge>'");
    std::string rest;
    std::getline(ls, rest);
    auto vals = parse_ints(rest, line_no);
    if (vals.size() != 1 || vals[0] < 0) fail(line_no, "expected one edge id");
    ops.push_back({kind, static_cast<int>(vals[0])});
  }
  return ops;
}

std::string minor_ops_to_text(const std::vector<MinorOp>& ops) {
  std::ostringstream out;
  for (const auto& op : ops)
    out << (op.kind == MinorOpKind::Contract ? "contract " : "delete ") << op.edge
        << "\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SurfaceError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SurfaceError("cannot write file: " + path);
  out << content;
}

SurfaceFile load_surface(const std::string& path) {
  return parse_surface_text(read_file(path));
}

void save_surface(const std::string& path, const Surface& s,
                  const std::vector<std::pair<Dart, Dart>>* pairings) {
  write_file(path, surface_to_text(s, pairings));
}

std::vector<Dart> load_walk(const std::string& path) {
  return parse_walk_text(read_file(path));
}

std::vector<MinorOp> load_minor_ops(const std::string& path) {
  return parse_minor_ops_text(read_file(path));
}

}  // namespace ck
