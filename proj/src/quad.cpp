#include "curvekit/quad.hpp"

namespace ck {

QuadSystem::QuadSystem(const Surface& g) {
  genus_ = g.genus();
  if (genus_ < 2) throw SurfaceError("quad system requires genus >= 2");
  tc_ = tree_cotree(g);
  reduced_ = reduce(g, tc_);
  const int deg = 4 * genus_;
  const auto& fw = reduced_.facial_walk;
  const auto& wp = reduced_.walk_pos;
  if (static_cast<int>(fw.size()) != deg)
    throw SurfaceError("quad system: facial walk length is not 4g");

  // Rotation at the reduced vertex: one cone dart per gap between consecutive
  // loop darts of the merged rotation; the gap after loop dart m is corner
  // walk_pos(opposite(m)) + 1.
  const auto& merged = reduced_.merged_rotation;
  std::vector<Dart> rot_v;
  rot_v.reserve(deg);
  for (Dart m : merged) {
    if (!tc_.in_leftover(m)) continue;
    int corner = (wp[opposite(m)] + 1) % deg;
    rot_v.push_back(2 * corner);
  }
  // Facial walks run clockwise (face on the right of each dart), so polygon
  // corners appear in decreasing index order counterclockwise around the
  // center vertex.
  std::vector<Dart> rot_w(deg);
  for (int t = 0; t < deg; ++t) rot_w[t] = 2 * ((deg - t) % deg) + 1;
  q_ = Surface::from_rotations({rot_v, rot_w}, deg);

  if (q_.genus() != genus_) throw SurfaceError("quad system: genus mismatch");
  if (q_.face_count() != 2 * genus_)
    throw SurfaceError("quad system: face count is not 2g");
  for (int f = 0; f < q_.face_count(); ++f)
    if (q_.face_degree(f) != 4)
      throw SurfaceError("quad system: non-quadrilateral face");

  pos_.assign(q_.dart_count(), -1);
  for (int v = 0; v < 2; ++v) {
    const auto& rot = q_.rotation(v);
    for (int i = 0; i < deg; ++i) pos_[rot[i]] = i;
  }

  // Corners of the input darts.  Loop darts use their own tile; cotree darts
  // are chords of the polygon attached at the corner of the rotation gap that
  // contains them.
  tail_corner_.assign(g.dart_count(), -1);
  head_corner_.assign(g.dart_count(), -1);
  const int m_count = static_cast<int>(merged.size());
  int first_loop = -1;
  for (int i = 0; i < m_count && first_loop < 0; ++i)
    if (tc_.in_leftover(merged[i])) first_loop = i;
  int cur = -1;
  for (int i = 0; i < m_count; ++i) {
    Dart d = merged[(first_loop + i) % m_count];
    if (tc_.in_leftover(d)) {
      tail_corner_[d] = wp[d];
      head_corner_[d] = (wp[d] + 1) % deg;
      cur = (wp[opposite(d)] + 1) % deg;
    } else {
      tail_corner_[d] = cur;
    }
  }
  for (Dart d = 0; d < g.dart_count(); ++d)
    if (tc_.in_cotree(d)) head_corner_[d] = tail_corner_[opposite(d)];
}

void QuadSystem::append_image(Dart d, std::vector<Dart>& out) const {
  if (trivial_image(d)) return;
  out.push_back(image_up(d));
  out.push_back(image_down(d));
}

std::vector<Dart> QuadSystem::q_walk(const std::vector<Dart>& g_walk) const {
  std::vector<Dart> out;
  out.reserve(2 * g_walk.size());
  for (Dart d : g_walk) append_image(d, out);
  return out;
}

int QuadSystem::normalize_turn(int t) const {
  const int deg = 4 * genus_;
  t %= deg;
  if (t < 0) t += deg;
  if (t > 2 * genus_) t -= deg;
  return t;
}

int QuadSystem::turn(Dart q1, Dart q2) const {
  if (q_.head_of(q1) != q_.vertex_of(q2))
    throw SurfaceError("turn: darts are not consecutive");
  return normalize_turn(pos_[q2] - pos_[opposite(q1)]);
}

Dart QuadSystem::next_dart(Dart d, int t) const {
  const int deg = 4 * genus_;
  int p = pos_[opposite(d)] + t;
  p %= deg;
  if (p < 0) p += deg;
  return q_.rotation(q_.head_of(d))[p];
}

Dart QuadSystem::prev_dart(Dart d, int t) const {
  const int deg = 4 * genus_;
  int p = pos_[d] - t;
  p %= deg;
  if (p < 0) p += deg;
  return opposite(q_.rotation(q_.vertex_of(d))[p]);
}

Dart QuadSystem::shift_end(Dart d, int delta) const {
  return opposite(next_dart(d, delta));
}

Dart QuadSystem::shift_start(Dart d, int delta) const {
  const int deg = 4 * genus_;
  int p = pos_[d] + delta;
  p %= deg;
  if (p < 0) p += deg;
  return q_.rotation(q_.vertex_of(d))[p];
}

}  // namespace ck
