#pragma once
// The system of quads Q of a genus-g >= 2 surface: a 2-vertex, 4g-edge,
// 2g-quad bipartite quadrangulation built from a tree-cotree decomposition,
// together with the projection q mapping each dart of the input graph to a
// walk of length 0 (tree darts) or 2 (all others) in Q.
//
// Construction: contracting the tree and deleting the cotree leaves 2g loops
// whose unique face is a 4g-gon with facial walk f_0 .. f_{4g-1}.  Corner t of
// the polygon sits at the lift of the reduced vertex between darts
// opposite(f_{t-1}) and f_t.  Q keeps the reduced vertex, adds a center vertex
// in the polygon, joins it to every corner by a cone edge, and drops the loop
// edges.  Cone edge t owns darts 2t (reduced vertex -> center) and 2t+1.
//
// The image q(d) of a non-tree dart d climbs the cone edge at d's tail corner
// and descends the one at its head corner; for a loop dart f_t the corners are
// t and t+1, taken in the same polygon tile.

#include <vector>

#include "curvekit/surface.hpp"
#include "curvekit/tree_cotree.hpp"

namespace ck {

class QuadSystem {
 public:
  explicit QuadSystem(const Surface& g);

  const Surface& q() const { return q_; }
  int genus() const { return genus_; }
  int degree() const { return 4 * genus_; }  // both Q vertices have this degree
  const TreeCotree& decomposition() const { return tc_; }
  const ReducedGraph& reduced() const { return reduced_; }

  // Position of a Q dart in the rotation at its tail vertex.
  int pos(Dart qd) const { return pos_[qd]; }

  // q image of a dart of the input graph.
  bool trivial_image(Dart d) const { return tail_corner_[d] < 0; }
  int tail_corner(Dart d) const { return tail_corner_[d]; }
  int head_corner(Dart d) const { return head_corner_[d]; }
  Dart image_up(Dart d) const { return 2 * tail_corner_[d]; }
  Dart image_down(Dart d) const { return 2 * head_corner_[d] + 1; }
  // Appends q(d) (0 or 2 darts) to out.
  void append_image(Dart d, std::vector<Dart>& out) const;
  std::vector<Dart> q_walk(const std::vector<Dart>& g_walk) const;

  // Turn from q1 to q2 around their common vertex, normalized into
  // (-2g, 2g]; 0 exactly when q2 == opposite(q1) (a spur).
  int turn(Dart q1, Dart q2) const;
  int normalize_turn(int t) const;

  // Dart following d when turning by t at the head of d.
  Dart next_dart(Dart d, int t) const;
  // Inverse of next_dart: the dart e with next_dart(e, t) == d.
  Dart prev_dart(Dart d, int t) const;
  // Dart with the same head as d whose turn relations are shifted by delta
  // (i.e. pos(opposite(result)) = pos(opposite(d)) + delta).
  Dart shift_end(Dart d, int delta) const;
  // Dart with the same tail as d, delta steps counterclockwise.
  Dart shift_start(Dart d, int delta) const;

 private:
  Surface q_;
  int genus_ = 0;
  TreeCotree tc_;
  ReducedGraph reduced_;
  std::vector<int> pos_;
  std::vector<int> tail_corner_;
  std::vector<int> head_corner_;
};

}  // namespace ck
