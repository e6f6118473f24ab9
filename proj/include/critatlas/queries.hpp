// Cycle, distance and separation queries used for pruning and filters.
#ifndef CRITATLAS_QUERIES_HPP
#define CRITATLAS_QUERIES_HPP

#include <vector>

#include "critatlas/marked_graph.hpp"

namespace critatlas {

// Every cycle of length 3..max_len, each reported once as the vertex
// sequence in cyclic order.  Intended for max_len <= 6.
std::vector<std::vector<int>> short_cycles(const PlaneGraph& g, int max_len);

// True iff every cycle of length <= 4 is a marked face.
bool girth_ok(const MarkedPlaneGraph& mg);

// Shortest-path distance between two vertex sets; 0 iff they intersect.
int set_distance(const PlaneGraph& g, const std::vector<int>& s1,
                 const std::vector<int>& s2);
int mark_distance(const MarkedPlaneGraph& mg);  // between the two marks

// t-chords of the single marked cycle B: paths q0..qt with distinct ends
// on B and interior off B.  A shortcut has t smaller than the distance of
// its endpoints along B.  Chords (t = 1) are included.
bool has_shortcut(const MarkedPlaneGraph& mg, int t_max);

bool two_connected(const PlaneGraph& g);
bool two_edge_connected(const PlaneGraph& g);
bool has_adjacent_degree2(const PlaneGraph& g);

// Longest face other than the marked face (disk graphs).
int max_internal_face(const MarkedPlaneGraph& mg);

// Does the cycle (given as vertices in cyclic order) separate marks a and
// b of mg?  Uses the face-side 2-coloring induced by cutting the sphere
// along the cycle.  A mark lying on the cycle itself counts as touching
// both sides only through its own face, which is what the gluing lemmas
// need.
bool cycle_separates_marks(const MarkedPlaneGraph& mg, const std::vector<int>& cycle);

// Internal (<= 4)-cycles distinct from the marks.
std::vector<std::vector<int>> internal_short_cycles(const MarkedPlaneGraph& mg);

}  // namespace critatlas

#endif
