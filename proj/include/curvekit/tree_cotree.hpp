#pragma once
// Tree-cotree decompositions: a spanning tree T of the graph, a set C of edges
// whose duals span the dual graph, and the 2g leftover edges L.  Contracting T
// merges all vertices into one; deleting C on top of that leaves a one-vertex,
// one-face graph with 2g loops whose facial walk is the boundary of a 4g-gon.

#include <vector>

#include "curvekit/surface.hpp"

namespace ck {

enum class EdgeClass { Tree, Cotree, Leftover };

struct TreeCotree {
  std::vector<EdgeClass> edge_class;  // indexed by edge
  std::vector<int> tree_edges;
  std::vector<int> cotree_edges;
  std::vector<int> leftover_edges;

  // Dual spanning tree rooted at face 0: the crossed edge on the path toward
  // the root (-1 for face 0), and faces in breadth-first discovery order.
  std::vector<int> face_parent_edge;
  std::vector<int> face_order;

  bool in_tree(Dart d) const { return edge_class[d >> 1] == EdgeClass::Tree; }
  bool in_cotree(Dart d) const { return edge_class[d >> 1] == EdgeClass::Cotree; }
  bool in_leftover(Dart d) const {
    return edge_class[d >> 1] == EdgeClass::Leftover;
  }
};

// Deterministic: breadth-first searches from vertex 0 / face 0 with dart-index
// tie-breaking.  Guarantees |leftover_edges| == 2g.
TreeCotree tree_cotree(const Surface& s);

struct ReducedGraph {
  // Rotation of G/T around its single vertex: every non-tree dart once, in the
  // cyclic order induced by walking around a neighborhood of the tree.
  std::vector<Dart> merged_rotation;
  std::vector<int> merged_pos;  // dart -> index in merged_rotation, -1 on T

  // Facial walk f_0 .. f_{4g-1} of the one-face graph on the leftover edges;
  // f_{t+1} follows f_t around the unique face.
  std::vector<Dart> facial_walk;
  std::vector<int> walk_pos;  // dart -> index in facial_walk, -1 otherwise

  // The leftover graph itself (1 vertex, 2g loops, 1 face), with its edge ids
  // mapped back to the original graph.
  Surface loop_graph;
  std::vector<int> loop_edge_of;   // loop_graph edge -> original edge
  std::vector<Dart> loop_dart_of;  // original leftover dart -> loop_graph dart
};

ReducedGraph reduce(const Surface& s, const TreeCotree& tc);

}  // namespace ck
