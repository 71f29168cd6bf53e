#pragma once
// Combinatorial surfaces: graphs cellularly embedded on closed oriented
// surfaces, encoded by a rotation system on darts.  Edge i owns darts 2i and
// 2i+1; opposite(d) flips the lowest bit.  Faces, vertex orbits and the genus
// are computed eagerly at construction and cached; instances are immutable.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ck {

using Dart = int32_t;

inline Dart opposite(Dart d) { return d ^ 1; }

// Thrown on malformed input files or structurally invalid surfaces.
struct SurfaceError : std::runtime_error {
  explicit SurfaceError(const std::string& msg) : std::runtime_error(msg) {}
};

class Surface {
 public:
  // Default-constructed surfaces are empty placeholders; assign before use.
  Surface() = default;

  // Builds a surface from per-vertex counterclockwise dart lists.
  // Every dart in [0, 2*edge_count) must appear exactly once.
  static Surface from_rotations(const std::vector<std::vector<Dart>>& rotations,
                                int edge_count);

  int edge_count() const { return E_; }
  int dart_count() const { return 2 * E_; }
  int vertex_count() const { return V_; }
  int face_count() const { return F_; }
  int genus() const { return genus_; }

  // Next dart counterclockwise around the tail vertex.
  Dart sigma(Dart d) const { return sigma_[d]; }
  Dart sigma_inv(Dart d) const { return sigma_inv_[d]; }
  // Face permutation: next dart along the facial walk containing d.
  Dart phi(Dart d) const { return sigma_[opposite(d)]; }
  Dart phi_inv(Dart d) const { return opposite(sigma_inv_[d]); }

  int vertex_of(Dart d) const { return vertex_of_[d]; }
  int head_of(Dart d) const { return vertex_of_[opposite(d)]; }
  int face_of(Dart d) const { return face_of_[d]; }

  int degree(int v) const { return static_cast<int>(rotations_[v].size()); }
  int face_degree(int f) const { return face_degree_[f]; }
  const std::vector<Dart>& rotation(int v) const { return rotations_[v]; }

  // One representative dart per vertex / face orbit.
  Dart vertex_dart(int v) const { return rotations_[v].front(); }
  Dart face_dart(int f) const { return face_dart_[f]; }

  // The full facial walk of face f (each dart once, phi order).
  std::vector<Dart> face_walk(int f) const;

  bool is_regular(int deg) const;

  // Vertices and faces exchanged; dual(dual(S)) is S up to relabeling.
  Surface dual() const;

 private:
  int E_ = 0;
  int V_ = 0;
  int F_ = 0;
  int genus_ = 0;
  std::vector<Dart> sigma_;
  std::vector<Dart> sigma_inv_;
  std::vector<int> vertex_of_;
  std::vector<int> face_of_;
  std::vector<int> face_degree_;
  std::vector<Dart> face_dart_;
  std::vector<std::vector<Dart>> rotations_;
};

// The medial graph M(G): one vertex per edge of G, 4-regular, with a proper
// 2-coloring of its faces into vertex-faces and face-faces of G.
struct Medial {
  Surface surface;
  // For each face of the medial: true when it surrounds a vertex of G.
  std::vector<bool> is_vertex_face;
  // For each vertex-face, the G vertex it surrounds; for others -1.
  std::vector<int> g_vertex_of_face;
  // For each face-face, the G face it lies in; for others -1.
  std::vector<int> g_face_of_face;
  // Medial vertex index == G edge index by construction.
};

Medial medial(const Surface& g);

// Checks that no two faces sharing an edge have the same color.
bool face_two_coloring_is_proper(const Surface& s,
                                 const std::vector<bool>& color);

}  // namespace ck
