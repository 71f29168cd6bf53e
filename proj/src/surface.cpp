#include "curvekit/surface.hpp"

#include <algorithm>
#include <cassert>

namespace ck {

Surface Surface::from_rotations(const std::vector<std::vector<Dart>>& rotations,
                                int edge_count) {
  Surface s;
  s.E_ = edge_count;
  s.V_ = static_cast<int>(rotations.size());
  const int n_darts = 2 * edge_count;
  s.sigma_.assign(n_darts, -1);
  s.sigma_inv_.assign(n_darts, -1);
  s.vertex_of_.assign(n_darts, -1);
  s.rotations_ = rotations;

  for (int v = 0; v < s.V_; ++v) {
    const auto& rot = rotations[v];
    if (rot.empty()) throw SurfaceError("vertex " + std::to_string(v) + " has no darts");
    for (size_t i = 0; i < rot.size(); ++i) {
      Dart d = rot[i];
      if (d < 0 || d >= n_darts)
        throw SurfaceError("dart " + std::to_string(d) + " out of range");
      if (s.vertex_of_[d] != -1)
        throw SurfaceError("dart reused: " + std::to_string(d));
      s.vertex_of_[d] = v;
      Dart next = rot[(i + 1) % rot.size()];
      s.sigma_[d] = next;
    }
  }
  for (Dart d = 0; d < n_darts; ++d) {
    if (s.vertex_of_[d] == -1)
      throw SurfaceError("dart missing: " + std::to_string(d));
    s.sigma_inv_[s.sigma_[d]] = d;
  }

  // Connectivity: all darts reachable from dart 0 via sigma and opposite.
  if (n_darts > 0) {
    std::vector<char> seen(n_darts, 0);
    std::vector<Dart> stack = {0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      Dart d = stack.back();
      stack.pop_back();
      for (Dart e : {s.sigma_[d], opposite(d)}) {
        if (!seen[e]) {
          seen[e] = 1;
          ++reached;
          stack.push_back(e);
        }
      }
    }
    if (reached != n_darts) throw SurfaceError("graph is disconnected");
  }

  // Faces: orbits of phi = sigma o opposite.
  s.face_of_.assign(n_darts, -1);
  for (Dart d = 0; d < n_darts; ++d) {
    if (s.face_of_[d] != -1) continue;
    int f = s.F_++;
    s.face_dart_.push_back(d);
    int deg = 0;
    Dart e = d;
    do {
      s.face_of_[e] = f;
      ++deg;
      e = s.sigma_[opposite(e)];
    } while (e != d);
    s.face_degree_.push_back(deg);
  }

  const int chi = s.V_ - s.E_ + s.F_;
  if (chi > 2 || (2 - chi) % 2 != 0)
    throw SurfaceError("Euler characteristic " + std::to_string(chi) +
                       " is not that of a closed oriented surface");
  s.genus_ = (2 - chi) / 2;
  return s;
}

std::vector<Dart> Surface::face_walk(int f) const {
  std::vector<Dart> walk;
  walk.reserve(face_degree_[f]);
  Dart d = face_dart_[f];
  do {
    walk.push_back(d);
    d = phi(d);
  } while (d != face_dart_[f]);
  return walk;
}

bool Surface::is_regular(int deg) const {
  for (int v = 0; v < V_; ++v)
    if (degree(v) != deg) return false;
  return true;
}

Surface Surface::dual() const {
  // Dual rotation: around a face, darts follow the face permutation.
  std::vector<std::vector<Dart>> rot(F_);
  for (int f = 0; f < F_; ++f) rot[f] = face_walk(f);
  return from_rotations(rot, E_);
}

Medial medial(const Surface& g) {
  // Medial edge x (one per dart x of G) joins the midpoints of edge(x) and
  // edge(phi(x)); its darts are 2x (at midpoint of edge(x)) and 2x+1.
  const int nd = g.dart_count();
  std::vector<std::vector<Dart>> rot(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    Dart d = 2 * e, db = 2 * e + 1;
    rot[e] = {2 * d, 2 * g.phi_inv(d) + 1, 2 * db, 2 * g.phi_inv(db) + 1};
  }
  Medial m{Surface::from_rotations(rot, nd), {}, {}, {}};
  const Surface& ms = m.surface;
  if (ms.face_count() != g.vertex_count() + g.face_count())
    throw SurfaceError("medial face count mismatch");
  if (ms.genus() != g.genus()) throw SurfaceError("medial genus mismatch");

  m.is_vertex_face.assign(ms.face_count(), false);
  m.g_vertex_of_face.assign(ms.face_count(), -1);
  m.g_face_of_face.assign(ms.face_count(), -1);
  for (int f = 0; f < ms.face_count(); ++f) {
    auto walk = ms.face_walk(f);
    // Even medial darts orbit as x -> opposite(phi(x)) (conjugate to sigma),
    // tracing a vertex of G; odd ones orbit as phi^-1, tracing a face of G.
    bool dir = walk.front() & 1;
    for (Dart md : walk)
      if ((md & 1) != dir) throw SurfaceError("medial face mixes directions");
    if (dir == 1) {
      int gf = g.face_of(walk.front() >> 1);
      for (Dart md : walk)
        if (g.face_of(md >> 1) != gf)
          throw SurfaceError("medial face-face not inside one face of G");
      m.g_face_of_face[f] = gf;
    } else {
      m.is_vertex_face[f] = true;
      int gv = g.head_of(walk.front() >> 1);
      for (Dart md : walk)
        if (g.head_of(md >> 1) != gv)
          throw SurfaceError("medial vertex-face not around one vertex of G");
      m.g_vertex_of_face[f] = gv;
    }
  }
  if (!face_two_coloring_is_proper(ms, m.is_vertex_face))
    throw SurfaceError("medial face coloring is not proper");
  return m;
}

bool face_two_coloring_is_proper(const Surface& s,
                                 const std::vector<bool>& color) {
  for (Dart d = 0; d < s.dart_count(); d += 2)
    if (color[s.face_of(d)] == color[s.face_of(opposite(d))]) return false;
  return true;
}

}  // namespace ck
