#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "curvekit/tree_cotree.hpp"
#include "test_util.hpp"

using namespace ck;
using testutil::canonical_surface;

namespace {

void check_decomposition(const Surface& s) {
  TreeCotree tc = tree_cotree(s);
  CHECK(static_cast<int>(tc.tree_edges.size()) == s.vertex_count() - 1);
  CHECK(static_cast<int>(tc.cotree_edges.size()) == s.face_count() - 1);
  CHECK(static_cast<int>(tc.leftover_edges.size()) == 2 * s.genus());
  CHECK(static_cast<int>(tc.tree_edges.size() + tc.cotree_edges.size() +
                         tc.leftover_edges.size()) == s.edge_count());

  // T spans: contracting it merges everything into one vertex.
  ReducedGraph r = reduce(s, tc);
  CHECK(static_cast<int>(r.merged_rotation.size()) ==
        s.dart_count() - 2 * static_cast<int>(tc.tree_edges.size()));
  // The dual tree reaches every face.
  CHECK(static_cast<int>(tc.face_order.size()) == s.face_count());
  for (int f = 1; f < s.face_count(); ++f)
    if (f != tc.face_order.front()) CHECK(tc.face_parent_edge[f] >= 0);

  // The leftover graph is a one-vertex, one-face bouquet of 2g loops.
  CHECK(r.loop_graph.vertex_count() == 1);
  CHECK(r.loop_graph.face_count() == 1);
  CHECK(r.loop_graph.edge_count() == 2 * s.genus());
  CHECK(r.loop_graph.genus() == s.genus());
  CHECK(static_cast<int>(r.facial_walk.size()) == 4 * s.genus());

  // The facial walk lists every leftover dart exactly once and follows the
  // face permutation of the merged graph restricted to leftover darts.
  std::vector<int> seen(s.dart_count(), 0);
  for (Dart d : r.facial_walk) {
    CHECK(tc.in_leftover(d));
    ++seen[d];
  }
  for (Dart d = 0; d < s.dart_count(); ++d)
    if (tc.in_leftover(d)) CHECK(seen[d] == 1);
}

}  // namespace

TEST_CASE("decomposition of one-vertex graphs has an empty tree") {
  for (int g : {2, 3, 4}) {
    Surface s = canonical_surface(g);
    TreeCotree tc = tree_cotree(s);
    CHECK(tc.tree_edges.empty());
    CHECK(tc.cotree_edges.empty());
    CHECK(static_cast<int>(tc.leftover_edges.size()) == 2 * g);
    check_decomposition(s);
  }
}

TEST_CASE("decomposition of medial graphs") {
  for (int g : {2, 3}) {
    Surface m = medial(canonical_surface(g)).surface;
    check_decomposition(m);
    // And once more on the iterated medial (larger, several faces).
    check_decomposition(medial(m).surface);
  }
}

TEST_CASE("reduction of an already-reduced graph is the identity") {
  Surface s = canonical_surface(2);
  TreeCotree tc = tree_cotree(s);
  ReducedGraph r = reduce(s, tc);
  CHECK(r.merged_rotation == s.rotation(0));
  for (Dart d = 0; d < s.dart_count(); ++d) CHECK(r.loop_dart_of[d] == d);
}
