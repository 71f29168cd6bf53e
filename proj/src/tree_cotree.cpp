#include "curvekit/tree_cotree.hpp"

#include <algorithm>
#include <queue>

namespace ck {

TreeCotree tree_cotree(const Surface& s) {
  TreeCotree tc;
  tc.edge_class.assign(s.edge_count(), EdgeClass::Cotree);

  // Spanning tree by BFS from vertex 0, examining darts in increasing index.
  std::vector<char> v_seen(s.vertex_count(), 0);
  std::queue<int> vq;
  v_seen[0] = 1;
  vq.push(0);
  while (!vq.empty()) {
    int u = vq.front();
    vq.pop();
    std::vector<Dart> out = s.rotation(u);
    std::sort(out.begin(), out.end());
    for (Dart d : out) {
      int h = s.head_of(d);
      if (!v_seen[h]) {
        v_seen[h] = 1;
        tc.edge_class[d >> 1] = EdgeClass::Tree;
        vq.push(h);
      }
    }
  }

  // Dual spanning tree by BFS from face 0 through non-tree edges.
  std::vector<char> f_seen(s.face_count(), 0);
  tc.face_parent_edge.assign(s.face_count(), -1);
  std::queue<int> fq;
  f_seen[0] = 1;
  fq.push(0);
  while (!fq.empty()) {
    int f = fq.front();
    fq.pop();
    tc.face_order.push_back(f);
    std::vector<Dart> walk = s.face_walk(f);
    std::sort(walk.begin(), walk.end());
    for (Dart d : walk) {
      if (tc.edge_class[d >> 1] != EdgeClass::Cotree) continue;
      int fo = s.face_of(opposite(d));
      if (!f_seen[fo]) {
        f_seen[fo] = 1;
        tc.face_parent_edge[fo] = d >> 1;
        fq.push(fo);
      }
    }
  }

  // Edges whose dual is not in the dual tree are leftover.
  std::vector<char> in_dual_tree(s.edge_count(), 0);
  for (int f = 0; f < s.face_count(); ++f)
    if (tc.face_parent_edge[f] >= 0) in_dual_tree[tc.face_parent_edge[f]] = 1;
  for (int e = 0; e < s.edge_count(); ++e) {
    switch (tc.edge_class[e]) {
      case EdgeClass::Tree:
        tc.tree_edges.push_back(e);
        break;
      case EdgeClass::Cotree:
        if (in_dual_tree[e]) {
          tc.cotree_edges.push_back(e);
        } else {
          tc.edge_class[e] = EdgeClass::Leftover;
          tc.leftover_edges.push_back(e);
        }
        break;
      case EdgeClass::Leftover:
        break;
    }
  }
  if (static_cast<int>(tc.leftover_edges.size()) != 2 * s.genus())
    throw SurfaceError("tree-cotree: leftover edge count is not 2g");
  return tc;
}

ReducedGraph reduce(const Surface& s, const TreeCotree& tc) {
  ReducedGraph r;
  const int nd = s.dart_count();
  r.merged_pos.assign(nd, -1);
  r.walk_pos.assign(nd, -1);

  // Walk around a neighborhood of the tree: from a non-tree dart d, the next
  // non-tree dart in the merged rotation is found by taking sigma(d) and
  // sliding along tree edges until a non-tree dart appears.
  Dart start = -1;
  for (Dart d = 0; d < nd && start < 0; ++d)
    if (!tc.in_tree(d)) start = d;
  if (start < 0) throw SurfaceError("reduce: graph is a tree (genus 0 sphere)");
  Dart d = start;
  do {
    r.merged_pos[d] = static_cast<int>(r.merged_rotation.size());
    r.merged_rotation.push_back(d);
    Dart e = s.sigma(d);
    while (tc.in_tree(e)) e = s.sigma(opposite(e));
    d = e;
  } while (d != start);
  const int expected = nd - 2 * static_cast<int>(tc.tree_edges.size());
  if (static_cast<int>(r.merged_rotation.size()) != expected)
    throw SurfaceError("reduce: merged rotation does not cover all non-tree darts");

  // Facial walk of the leftover loops: successor of f is the next leftover
  // dart after opposite(f) in the merged rotation.
  const int g2 = static_cast<int>(tc.leftover_edges.size());  // == 2g
  const int m = static_cast<int>(r.merged_rotation.size());
  auto next_leftover = [&](Dart x) {
    int p = r.merged_pos[x];
    for (int i = 1; i <= m; ++i) {
      Dart y = r.merged_rotation[(p + i) % m];
      if (tc.in_leftover(y)) return y;
    }
    throw SurfaceError("reduce: no leftover dart found");
  };
  Dart f0 = 2 * tc.leftover_edges.front();
  Dart f = f0;
  do {
    r.walk_pos[f] = static_cast<int>(r.facial_walk.size());
    r.facial_walk.push_back(f);
    // sigma_L(opposite(f)): first leftover dart at or after the successor of
    // opposite(f); opposite(f) itself is leftover, so scan starts past it.
    f = next_leftover(opposite(f));
  } while (f != f0);
  if (static_cast<int>(r.facial_walk.size()) != 2 * g2)
    throw SurfaceError("reduce: leftover graph does not have a single face");

  // Build the loop graph with edges renumbered 0..2g-1 in sorted original order.
  r.loop_edge_of = tc.leftover_edges;
  std::vector<int> loop_index(s.edge_count(), -1);
  for (int i = 0; i < g2; ++i) loop_index[tc.leftover_edges[i]] = i;
  r.loop_dart_of.assign(nd, -1);
  std::vector<Dart> rot;
  for (Dart x : r.merged_rotation) {
    if (!tc.in_leftover(x)) continue;
    Dart lx = 2 * loop_index[x >> 1] + (x & 1);
    r.loop_dart_of[x] = lx;
    rot.push_back(lx);
  }
  r.loop_graph = Surface::from_rotations({rot}, g2);
  if (r.loop_graph.face_count() != 1)
    throw SurfaceError("reduce: loop graph face count mismatch");
  return r;
}

}  // namespace ck
