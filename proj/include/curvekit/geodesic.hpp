#pragma once
// Geodesic walks in a system of quads, maintained as run-length-encoded turn
// sequences with O(1) amortized extension at either end.
//
// A walk is geodesic exactly when its turn sequence contains no 0 (a spur)
// and no bracket (1, 2^k, 1) or (-1, (-2)^k, -1).  Extending a geodesic by
// one dart creates at most one spur or one bracket; both are repaired
// locally:
//   spur              (a, 0, b)            ->  (a + b), two darts removed
//   bracket, either   (x, 1, 2^k, 1, y)    ->  (x-1, (-2)^k, y-1)
//   chirality         (x, -1, (-2)^k, -1, y) -> (x+1, 2^k, y+1)
// with the walk two darts shorter in either bracket case and the edge darts
// rotated by one step when the bracket touches an end of the walk.

#include <deque>
#include <vector>

#include "curvekit/quad.hpp"

namespace ck {

struct TurnRun {
  int turn;
  long long count;
};

class GeodesicForm {
 public:
  explicit GeodesicForm(const QuadSystem& qs) : qs_(&qs) {}

  int length() const { return len_; }
  bool empty() const { return len_ == 0; }
  Dart first_dart() const { return first_; }
  Dart last_dart() const { return last_; }
  // Endpoints in Q; -1 when empty (the form then sits at an unspecified
  // basepoint and both endpoints coincide).
  int start_vertex() const;
  int end_vertex() const;
  const std::deque<TurnRun>& runs() const { return runs_; }

  void push_back(Dart qd);
  void push_front(Dart qd);
  // Removes the last / first dart without any homotopy meaning (used for
  // spur cancellation and cyclic rotation).
  void drop_back();
  void drop_front();

  // Appends q(d) for a dart d of the underlying graph, or prepends the
  // reverse walk q(d)^-1.
  void append_image(Dart g_dart);
  void prepend_inverse_image(Dart g_dart);

  // Reconstructs the dart sequence / the expanded turn sequence.
  std::vector<Dart> darts() const;
  std::vector<int> turns() const;

  // True when the stored turns contain no spur or bracket and the dart
  // bookkeeping is consistent; used by tests after every operation.
  bool geodesic_invariant_holds() const;

 private:
  void reduce_back(Dart qd, int t);
  void reduce_front(Dart qd, int t);
  void rpush_back(int t, long long c);
  void rpush_front(int t, long long c);
  int rpop_back();
  int rpop_front();

  const QuadSystem* qs_;
  int len_ = 0;
  Dart first_ = -1;
  Dart last_ = -1;
  std::deque<TurnRun> runs_;
};

// Tightens a walk in Q to a homotopic geodesic with the same endpoints.
GeodesicForm tighten(const QuadSystem& qs, const std::vector<Dart>& q_walk);

// Cyclic reduction of a closed geodesic: removes spurs and brackets that
// wrap around the seam.  The form afterwards is empty exactly when the
// closed walk was contractible.
void cyclic_reduce(const QuadSystem& qs, GeodesicForm& form);

// Contractibility of a closed walk given by darts of Q / of the input graph.
bool is_contractible_in_q(const QuadSystem& qs, const std::vector<Dart>& q_walk);
bool is_contractible(const QuadSystem& qs, const std::vector<Dart>& g_walk);

// Canonical cyclic geodesic representative of the free homotopy class of a
// closed walk in Q: cyclically reduced and with every +1 turn pushed across
// its quad ((x,1,y) -> (x-1,-1,y-1), length-preserving).  Returns the dart
// sequence; empty for contractible walks.
std::vector<Dart> canonical_cyclic_geodesic(const QuadSystem& qs,
                                            std::vector<Dart> q_walk);

// Booth's least cyclic rotation.
std::vector<Dart> least_cyclic_rotation(const std::vector<Dart>& word);

// Canonical word of the free homotopy class of a closed walk of the input
// graph, up to orientation: the lexicographically smaller of the minimal
// rotations of the canonical representatives of q(c) and q(c)^-1.
std::vector<Dart> canonical_curve_word(const QuadSystem& qs,
                                       const std::vector<Dart>& g_walk);

// Multiset equality of canonical words of two curve systems, compared with a
// prefix tree whose counters are incremented by the first system and
// decremented by the second.
bool systems_homotopic_up_to_orientation(
    const QuadSystem& qs, const std::vector<std::vector<Dart>>& system_a,
    const std::vector<std::vector<Dart>>& system_b);

}  // namespace ck
