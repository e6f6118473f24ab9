// Rotation-system rewrites: subdivision, suppression, vertex splitting,
// boundary-path identification, face pasting and path cutting.
#ifndef CRITATLAS_SURGERY_HPP
#define CRITATLAS_SURGERY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "critatlas/marked_graph.hpp"

namespace critatlas {

PlaneGraph subdivide(const PlaneGraph& g, int u, int v);

std::optional<PlaneGraph> try_suppress_degree2(const PlaneGraph& g, int v,
                                               GraphFault* fault = nullptr);

// Split v into two vertices: v keeps the rotation arc that starts right
// after position cut_a and ends at position cut_b (inclusive); the new
// vertex (id = old order) takes the complementary arc.  No edge joins the
// two copies.
std::optional<PlaneGraph> split_vertex(const PlaneGraph& g, int v, int cut_a, int cut_b,
                                       GraphFault* fault = nullptr);

// Reverse every rotation (the mirror embedding).  Face marks keep
// denoting the same face: their darts are reversed.
PlaneGraph mirror_graph(const PlaneGraph& g);
MarkedPlaneGraph mirror_marked(const MarkedPlaneGraph& mg);

// A seam: vertices to identify pairwise with another seam, plus for each
// vertex the gap in its rotation the splice happens at, given as the pair
// (walk-in neighbor, walk-out neighbor) of the face the seam runs
// through.
struct GlueSeq {
  std::vector<int> verts;
  std::vector<std::pair<int, int>> gap;
};

// Seam of `len` edges on face walk `w`, starting at dart index `start`,
// traversed forward or backward along the walk.
GlueSeq walk_segment(const FaceWalk& w, int start, int len, bool forward);

// Identify a.verts[j] with b.verts[j].  `cyclic` identifies two closed
// walks (face pasting); otherwise two open paths.  Doubled seam edges are
// suppressed; any other doubled edge or a loop rejects the candidate.
// vertex_map (old id -> new id) covers both sides when requested.
std::optional<PlaneGraph> identify_seqs(const std::vector<std::vector<int>>& rot,
                                        const GlueSeq& a, const GlueSeq& b, bool cyclic,
                                        GraphFault* fault = nullptr,
                                        std::vector<int>* vertex_map = nullptr);

// Rotation table of the disjoint union; vertices of h are shifted by
// g.order().
std::vector<std::vector<int>> disjoint_union(const PlaneGraph& g, const PlaneGraph& h);

// Draw a new edge u-v inside the given face (u and v each appear exactly
// once on its walk and must not be adjacent yet).  The face splits in
// two.
std::optional<PlaneGraph> add_edge_in_face(const PlaneGraph& g, int face_index, int u, int v,
                                           GraphFault* fault = nullptr);

// Place a fresh degree-1 vertex inside the face, attached to u.
std::optional<PlaneGraph> add_leaf_in_face(const PlaneGraph& g, int face_index, int u,
                                           GraphFault* fault = nullptr);

// Cut a cylinder graph along a path between its two marks (t = 0 allowed:
// a single vertex common to both marks).  Interior path vertices must not
// lie on a mark.  Returns the disk graph whose outer face has length
// l(C1) + l(C2) + 2t.
MarkedPlaneGraph cut_along_path(const MarkedPlaneGraph& mg, const std::vector<int>& path);

// Shortest path between the two marks whose interior avoids both marks.
std::vector<int> shortest_mark_path(const MarkedPlaneGraph& mg);

}  // namespace critatlas

#endif
