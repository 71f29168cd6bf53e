#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvekit/io.hpp"
#include "curvekit/surface.hpp"
#include "test_util.hpp"

using namespace ck;
using testutil::canonical_surface;

// ===== Construction and Euler data =====

TEST_CASE("one-vertex four-loop graph has genus 2") {
  Surface s = canonical_surface(2);
  CHECK(s.vertex_count() == 1);
  CHECK(s.edge_count() == 4);
  CHECK(s.face_count() == 1);
  CHECK(s.genus() == 2);
  CHECK(s.is_regular(8));
  CHECK(s.face_degree(0) == 8);
}

TEST_CASE("one-vertex two-loop graph is a torus") {
  Surface s = canonical_surface(1);
  CHECK(s.genus() == 1);
  CHECK(s.face_count() == 1);
}

TEST_CASE("sigma and phi are inverse-consistent") {
  Surface s = canonical_surface(3);
  for (Dart d = 0; d < s.dart_count(); ++d) {
    CHECK(s.sigma_inv(s.sigma(d)) == d);
    CHECK(s.phi_inv(s.phi(d)) == d);
    CHECK(s.vertex_of(s.sigma(d)) == s.vertex_of(d));
    CHECK(s.face_of(s.phi(d)) == s.face_of(d));
  }
}

TEST_CASE("face walks partition the darts") {
  Surface s = canonical_surface(2);
  std::vector<int> seen(s.dart_count(), 0);
  for (int f = 0; f < s.face_count(); ++f)
    for (Dart d : s.face_walk(f)) ++seen[d];
  for (int c : seen) CHECK(c == 1);
}

TEST_CASE("invalid rotation systems are rejected") {
  CHECK_THROWS_AS(Surface::from_rotations({{0, 1, 0, 1}}, 2), SurfaceError);
  CHECK_THROWS_AS(Surface::from_rotations({{0, 1}}, 2), SurfaceError);
  CHECK_THROWS_AS(Surface::from_rotations({{0, 1, 4, 5}}, 2), SurfaceError);
  // Two vertices with one self-loop each: disconnected.
  CHECK_THROWS_AS(Surface::from_rotations({{0, 1}, {2, 3}}, 2), SurfaceError);
}

// ===== Dual =====

TEST_CASE("dual exchanges vertices and faces and preserves genus") {
  Surface s = canonical_surface(2);
  Surface d = s.dual();
  CHECK(d.vertex_count() == s.face_count());
  CHECK(d.face_count() == s.vertex_count());
  CHECK(d.edge_count() == s.edge_count());
  CHECK(d.genus() == s.genus());
}

TEST_CASE("dual of dual is the identity on darts") {
  for (int g : {2, 3}) {
    Surface s = canonical_surface(g);
    Surface dd = s.dual().dual();
    REQUIRE(dd.dart_count() == s.dart_count());
    for (Dart d = 0; d < s.dart_count(); ++d) CHECK(dd.sigma(d) == s.sigma(d));
  }
  Surface m = medial(canonical_surface(2)).surface;
  Surface mdd = m.dual().dual();
  for (Dart d = 0; d < m.dart_count(); ++d) CHECK(mdd.sigma(d) == m.sigma(d));
}

// ===== Medial =====

TEST_CASE("medial of the genus-2 one-vertex graph") {
  Surface s = canonical_surface(2);
  Medial m = medial(s);
  CHECK(m.surface.vertex_count() == 4);   // one per edge of G
  CHECK(m.surface.edge_count() == 8);     // one per dart of G
  CHECK(m.surface.face_count() == 2);     // V(G) + F(G)
  CHECK(m.surface.genus() == 2);
  CHECK(m.surface.is_regular(4));
  int vertex_faces = 0;
  for (bool b : m.is_vertex_face) vertex_faces += b;
  CHECK(vertex_faces == 1);
}

TEST_CASE("medial face counts and coloring on larger graphs") {
  for (int g : {2, 3}) {
    Surface s = canonical_surface(g);
    Medial m1 = medial(s);
    CHECK(m1.surface.face_count() == s.vertex_count() + s.face_count());
    CHECK(face_two_coloring_is_proper(m1.surface, m1.is_vertex_face));
    // Iterate: medial of the medial is 4-regular again with n=2n' vertices.
    Medial m2 = medial(m1.surface);
    CHECK(m2.surface.vertex_count() == m1.surface.edge_count());
    CHECK(m2.surface.edge_count() == 2 * m1.surface.edge_count());
    CHECK(m2.surface.genus() == g);
    CHECK(m2.surface.is_regular(4));
    for (int f = 0; f < m2.surface.face_count(); ++f) {
      if (m2.is_vertex_face[f])
        CHECK(m2.surface.face_degree(f) == 4);  // medial vertices have degree 4
    }
  }
}

// ===== File format =====

TEST_CASE("surface file round trip") {
  Surface s = canonical_surface(2);
  std::string text = surface_to_text(s);
  SurfaceFile f = parse_surface_text(text);
  CHECK(f.surface.genus() == 2);
  CHECK(surface_to_text(f.surface) == text);
  CHECK(!f.has_pairings);
}

TEST_CASE("surface file with comments and pairings") {
  std::string text =
      "# genus-2 bouquet\n"
      "surface 4\n"
      "v: 0 2 1 3 4 6 5 7  # one vertex\n";
  SurfaceFile f = parse_surface_text(text);
  CHECK(f.surface.genus() == 2);

  Medial m = medial(f.surface);
  std::vector<std::pair<Dart, Dart>> pairs;
  for (int v = 0; v < m.surface.vertex_count(); ++v) {
    const auto& rot = m.surface.rotation(v);
    pairs.emplace_back(rot[0], rot[2]);
  }
  std::string ct = surface_to_text(m.surface, &pairs);
  SurfaceFile mf = parse_surface_text(ct);
  CHECK(mf.has_pairings);
  CHECK(mf.pairings.size() == 4);
}

TEST_CASE("parse errors carry line numbers") {
  auto msg_of = [](const std::string& text) {
    try {
      parse_surface_text(text);
    } catch (const SurfaceError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(msg_of("hello\n").find("line 1") == 0);
  CHECK(msg_of("surface 2\nv: 0 1 9 3\n").find("line 2") == 0);
  CHECK(msg_of("surface 2\nv: 0 1 x 3\n").find("line 2") == 0);
  CHECK(msg_of("surface 2\n\n# c\nw: 0\n").find("line 4") == 0);
}

TEST_CASE("walk and minor-op files round trip") {
  std::vector<Dart> w = {0, 3, 5, 2};
  CHECK(parse_walk_text(walk_to_text(w)) == w);
  CHECK(parse_walk_text("0 3\n# comment\n5 2\n") == w);

  std::vector<MinorOp> ops = {{MinorOpKind::Contract, 3}, {MinorOpKind::Delete, 0}};
  auto back = parse_minor_ops_text(minor_ops_to_text(ops));
  REQUIRE(back.size() == 2);
  CHECK(back[0].kind == MinorOpKind::Contract);
  CHECK(back[0].edge == 3);
  CHECK(back[1].kind == MinorOpKind::Delete);
  CHECK(back[1].edge == 0);
}
