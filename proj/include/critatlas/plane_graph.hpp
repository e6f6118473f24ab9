// Sphere-embedded simple graphs given as rotation systems, with face tracing.
#ifndef CRITATLAS_PLANE_GRAPH_HPP
#define CRITATLAS_PLANE_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace critatlas {

enum class GraphFault {
  none,
  not_simple,
  not_symmetric,
  not_connected,
  euler_violation,
  would_create_loop,
  would_create_parallel,
  embedding_broken,
  girth_violation,
  degenerate_boundary,
  bad_mark,
};

const char* fault_name(GraphFault f);

struct GraphError : std::runtime_error {
  GraphFault fault;
  explicit GraphError(GraphFault f, const std::string& what)
      : std::runtime_error(what), fault(f) {}
};

// A directed edge (tail -> head).  In a simple graph the vertex pair
// identifies the dart uniquely.
struct Dart {
  int tail = -1;
  int head = -1;
  friend bool operator==(const Dart&, const Dart&) = default;
};

// One closed boundary walk of a face: the darts in trace order.  Each dart
// of the graph lies on exactly one walk.  A walk may repeat vertices (and
// traverse a bridge from both sides); marked faces are required to be
// simple cycles elsewhere.
struct FaceWalk {
  std::vector<Dart> darts;
  int length() const { return static_cast<int>(darts.size()); }
  std::vector<int> vertices() const;
  bool is_cycle() const;  // no repeated vertex
  bool contains(const Dart& d) const;
};

// Immutable connected simple graph with a sphere embedding.  Faces are
// traced once at construction; V - E + F = 2 is enforced.
class PlaneGraph {
 public:
  // Throws GraphError on invalid input.
  explicit PlaneGraph(std::vector<std::vector<int>> rotations);

  // Non-throwing variant used by generators; returns nullopt and sets
  // *fault when the rotation table is not a valid sphere embedding.
  static std::optional<PlaneGraph> try_create(std::vector<std::vector<int>> rotations,
                                              GraphFault* fault = nullptr);

  int order() const { return static_cast<int>(rot_.size()); }
  int size() const { return m_; }
  const std::vector<int>& rotation(int v) const { return rot_[v]; }
  const std::vector<std::vector<int>>& rotations() const { return rot_; }
  int degree(int v) const { return static_cast<int>(rot_[v].size()); }
  bool adjacent(int u, int v) const;

  // Position of u within rotation(v); -1 when not adjacent.
  int rot_index(int v, int u) const;
  int next_neighbor(int v, int u) const;  // cyclic successor of u around v
  int prev_neighbor(int v, int u) const;

  // Face structure.  Walk order and dart order inside each walk are
  // determined by the successor rule: the dart after (u -> v) is
  // (v -> next_neighbor(v, u)).
  const std::vector<FaceWalk>& faces() const { return faces_; }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int face_of(const Dart& d) const;  // index into faces()
  const FaceWalk& face_walk(const Dart& d) const { return faces_[face_of(d)]; }

  std::vector<std::pair<int, int>> edges() const;  // tail < head

 private:
  PlaneGraph() = default;
  static GraphFault validate(const std::vector<std::vector<int>>& rot);
  void build_faces();

  std::vector<std::vector<int>> rot_;
  int m_ = 0;
  std::vector<FaceWalk> faces_;
  std::vector<int> dart_face_;   // indexed by dart id
  std::vector<int> dart_off_;    // per-vertex offset into dart ids
};

// Face tracing for a raw rotation table (used by validation and tests).
// Returns walks as dart sequences; does not require connectivity.
std::vector<FaceWalk> trace_faces(const std::vector<std::vector<int>>& rot);

// Convenience builders.
PlaneGraph cycle_graph(int n);
std::vector<std::vector<int>> rotations_from_edges(
    int n, const std::vector<std::vector<int>>& neighbor_lists);

}  // namespace critatlas

#endif
