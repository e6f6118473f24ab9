// 3-coloring extension: precoloring enumeration, extension decision,
// criticality tests and non-extending counts.
#ifndef CRITATLAS_COLOR_HPP
#define CRITATLAS_COLOR_HPP

#include <cstdint>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "critatlas/marked_graph.hpp"

namespace critatlas {

// Assignment of colors {0,1,2} to the marked-subgraph vertices, proper on
// the marked subgraph's own edges.
struct Precoloring {
  std::vector<int> vertices;
  std::vector<int8_t> colors;
};

// The marked subgraph S: vertex order is mark 0's cycle followed by the
// unseen vertices of mark 1's; edges are the mark-cycle edges (indices
// into verts).
struct MarkSubgraph {
  std::vector<int> verts;
  std::vector<std::pair<int, int>> edges;
};
MarkSubgraph mark_subgraph(const MarkedPlaneGraph& mg);

// Backtracking extension decision with forward checking on 3-value
// domains; variable order is smallest remaining domain, ties by lowest
// vertex id.
class ColoringSolver {
 public:
  explicit ColoringSolver(const PlaneGraph& g, std::pair<int, int> drop_edge = {-1, -1});
  // fixed[v] in {-1,0,1,2}; returns whether a proper 3-coloring of the
  // whole graph extends the fixed assignment.
  bool extendable(const int8_t* fixed);

 private:
  bool propagate();
  bool dfs(int depth);
  int n_;
  std::vector<int> adj_, off_;
  std::vector<uint8_t> dom_;
  std::vector<int> queue_;
  std::vector<uint8_t> saves_;  // one domain snapshot per search depth
};

std::vector<Precoloring> enumerate_precolorings(const MarkedPlaneGraph& mg);
uint64_t count_precolorings(const MarkedPlaneGraph& mg);
bool extends(const MarkedPlaneGraph& mg, const Precoloring& psi);

// Non-extending precolorings as packed codes (sum of colors[i]*3^i over
// the MarkSubgraph vertex order).  When S contains an edge the listing is
// reduced by color symmetry: verts[0] = 0 and the first neighbour of
// verts[0] in S gets color 1.
struct ExtensionSummary {
  std::vector<uint32_t> non_extending;
  uint64_t proper_count = 0;   // precolorings enumerated (after reduction)
  bool reduced = false;        // whether the /6 reduction applied
};
ExtensionSummary extension_summary(const MarkedPlaneGraph& mg,
                                   std::pair<int, int> drop_edge = {-1, -1});

bool is_critical(const MarkedPlaneGraph& mg);
bool is_strongly_critical(const MarkedPlaneGraph& mg);

// Criticality memoized by canonical key (shared across workers).
class CriticalityCache {
 public:
  bool get(const std::string& key, bool* value) const;
  void put(const std::string& key, bool value);
  size_t size() const;

 private:
  mutable std::mutex mu_;
  std::unordered_map<std::string, bool> map_;
};
bool is_critical_cached(const MarkedPlaneGraph& mg, const std::string& key,
                        CriticalityCache* cache);

// Number of proper colorings phi of mark f2 such that psi (on mark f1)
// together with phi does not extend; a phi that disagrees with psi on a
// shared vertex counts as non-extending.
int count_nonextending(const MarkedPlaneGraph& mg, int f1, const Precoloring& psi, int f2);
// Maximum of count_nonextending over all proper psi of mark f1.
int c_max(const MarkedPlaneGraph& mg, int f1, int f2);

}  // namespace critatlas

#endif
