// PlaneGraph plus designated boundary marks (precolored faces or a vertex).
#ifndef CRITATLAS_MARKED_GRAPH_HPP
#define CRITATLAS_MARKED_GRAPH_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "critatlas/plane_graph.hpp"

namespace critatlas {

// Role of a mark within a record.  Disk graphs carry a single B mark;
// cylinder graphs carry C1 and C2.  A degenerate boundary is a single
// vertex (arises when inverting the triangle-attachment construction).
enum class MarkKind : uint8_t { face, vertex };

struct Mark {
  MarkKind kind = MarkKind::face;
  Dart dart;       // a dart on the face walk (kind == face)
  int vertex = -1; // kind == vertex

  static Mark face_mark(Dart d) { return Mark{MarkKind::face, d, -1}; }
  static Mark vertex_mark(int v) { return Mark{MarkKind::vertex, Dart{}, v}; }
};

class MarkedPlaneGraph {
 public:
  MarkedPlaneGraph(PlaneGraph g, std::vector<Mark> marks);
  static std::optional<MarkedPlaneGraph> try_create(PlaneGraph g, std::vector<Mark> marks,
                                                    GraphFault* fault = nullptr);

  const PlaneGraph& graph() const { return g_; }
  int mark_count() const { return static_cast<int>(marks_.size()); }
  const Mark& mark(int i) const { return marks_[i]; }

  // Length of mark i: face length, or 0 for a vertex mark.
  int mark_length(int i) const;
  // Face walk vertices of mark i in trace order (single vertex for a
  // vertex mark).
  const std::vector<int>& mark_cycle(int i) const { return cycles_[i]; }
  int mark_face_index(int i) const { return face_idx_[i]; }

  // All vertices covered by marks, sorted ascending.
  std::vector<int> marked_vertices() const;
  // Edges belonging to the marked subgraph (cycle edges), tail < head.
  std::vector<std::pair<int, int>> marked_edges() const;
  bool in_some_mark(int v) const;

 private:
  MarkedPlaneGraph() = default;
  PlaneGraph g_{std::vector<std::vector<int>>{{1}, {0}}};
  std::vector<Mark> marks_;
  std::vector<std::vector<int>> cycles_;
  std::vector<int> face_idx_;  // -1 for vertex marks
};

// Disk: one marked face of length >= 5.  Cylinder: two marks.
MarkedPlaneGraph make_disk(PlaneGraph g, Dart boundary);
MarkedPlaneGraph make_cylinder(PlaneGraph g, Mark c1, Mark c2);

// "rotg v1" record text, one graph per record:
//   n m
//   v: w1 w2 ... wk        (one line per vertex, rotation order)
//   mark B: u v            (or C1/C2; or "mark C2: vertex u")
// '#' starts a comment, blank lines separate records.
std::string to_rotg(const MarkedPlaneGraph& mg, const std::string& comment = "");
std::vector<MarkedPlaneGraph> parse_rotg(std::istream& in);
std::vector<MarkedPlaneGraph> parse_rotg_string(const std::string& text);

}  // namespace critatlas

#endif
