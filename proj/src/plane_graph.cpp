#include "critatlas/plane_graph.hpp"

#include <algorithm>
#include <numeric>

namespace critatlas {

const char* fault_name(GraphFault f) {
  switch (f) {
    case GraphFault::none: return "none";
    case GraphFault::not_simple: return "NotSimple";
    case GraphFault::not_symmetric: return "NotSymmetric";
    case GraphFault::not_connected: return "NotConnected";
    case GraphFault::euler_violation: return "EulerViolation";
    case GraphFault::would_create_loop: return "WouldCreateLoop";
    case GraphFault::would_create_parallel: return "WouldCreateParallel";
    case GraphFault::embedding_broken: return "EmbeddingBroken";
    case GraphFault::girth_violation: return "GirthViolation";
    case GraphFault::degenerate_boundary: return "DegenerateBoundary";
    case GraphFault::bad_mark: return "BadMark";
  }
  return "?";
}

std::vector<int> FaceWalk::vertices() const {
  std::vector<int> out;
  out.reserve(darts.size());
  for (const Dart& d : darts) out.push_back(d.tail);
  return out;
}

bool FaceWalk::is_cycle() const {
  std::vector<int> vs = vertices();
  std::sort(vs.begin(), vs.end());
  return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

bool FaceWalk::contains(const Dart& d) const {
  return std::find(darts.begin(), darts.end(), d) != darts.end();
}

GraphFault PlaneGraph::validate(const std::vector<std::vector<int>>& rot) {
  const int n = static_cast<int>(rot.size());
  if (n == 0) return GraphFault::not_connected;
  for (int v = 0; v < n; ++v) {
    std::vector<int> nb = rot[v];
    for (int u : nb)
      if (u < 0 || u >= n || u == v) return GraphFault::not_simple;
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      return GraphFault::not_simple;
  }
  for (int v = 0; v < n; ++v)
    for (int u : rot[v])
      if (std::find(rot[u].begin(), rot[u].end(), v) == rot[u].end())
        return GraphFault::not_symmetric;
  // connectivity
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : rot[v])
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
  }
  if (reached != n) return GraphFault::not_connected;
  return GraphFault::none;
}

std::vector<FaceWalk> trace_faces(const std::vector<std::vector<int>>& rot) {
  const int n = static_cast<int>(rot.size());
  std::vector<int> off(n + 1, 0);
  for (int v = 0; v < n; ++v) off[v + 1] = off[v] + static_cast<int>(rot[v].size());
  const int darts = off[n];
  auto dart_id = [&](int tail, int head) {
    const std::vector<int>& r = rot[tail];
    for (int i = 0; i < static_cast<int>(r.size()); ++i)
      if (r[i] == head) return off[tail] + i;
    return -1;
  };
  std::vector<char> used(darts, 0);
  std::vector<FaceWalk> walks;
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < static_cast<int>(rot[v].size()); ++i) {
      if (used[off[v] + i]) continue;
      FaceWalk walk;
      int t = v, h = rot[v][i];
      while (true) {
        int id = dart_id(t, h);
        if (used[id]) break;
        used[id] = 1;
        walk.darts.push_back({t, h});
        // successor: dart after (t -> h) is (h -> next_neighbor(h, t))
        const std::vector<int>& rh = rot[h];
        int pos = 0;
        while (rh[pos] != t) ++pos;
        int nxt = rh[(pos + 1) % rh.size()];
        t = h;
        h = nxt;
      }
      walks.push_back(std::move(walk));
    }
  }
  return walks;
}

std::optional<PlaneGraph> PlaneGraph::try_create(std::vector<std::vector<int>> rotations,
                                                 GraphFault* fault) {
  GraphFault f = validate(rotations);
  if (f != GraphFault::none) {
    if (fault) *fault = f;
    return std::nullopt;
  }
  PlaneGraph g;
  g.rot_ = std::move(rotations);
  g.build_faces();
  int twice_edges = 0;
  for (const auto& r : g.rot_) twice_edges += static_cast<int>(r.size());
  g.m_ = twice_edges / 2;
  if (g.order() - g.m_ + g.face_count() != 2) {
    if (fault) *fault = GraphFault::euler_violation;
    return std::nullopt;
  }
  if (fault) *fault = GraphFault::none;
  return g;
}

PlaneGraph::PlaneGraph(std::vector<std::vector<int>> rotations) {
  GraphFault f = GraphFault::none;
  std::optional<PlaneGraph> g = try_create(std::move(rotations), &f);
  if (!g) throw GraphError(f, std::string("PlaneGraph: ") + fault_name(f));
  *this = std::move(*g);
}

void PlaneGraph::build_faces() {
  const int n = order();
  dart_off_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v)
    dart_off_[v + 1] = dart_off_[v] + static_cast<int>(rot_[v].size());
  faces_ = trace_faces(rot_);
  dart_face_.assign(dart_off_[n], -1);
  for (int fi = 0; fi < static_cast<int>(faces_.size()); ++fi)
    for (const Dart& d : faces_[fi].darts)
      dart_face_[dart_off_[d.tail] + rot_index(d.tail, d.head)] = fi;
}

bool PlaneGraph::adjacent(int u, int v) const { return rot_index(u, v) >= 0; }

int PlaneGraph::rot_index(int v, int u) const {
  const std::vector<int>& r = rot_[v];
  for (int i = 0; i < static_cast<int>(r.size()); ++i)
    if (r[i] == u) return i;
  return -1;
}

int PlaneGraph::next_neighbor(int v, int u) const {
  int i = rot_index(v, u);
  return rot_[v][(i + 1) % rot_[v].size()];
}

int PlaneGraph::prev_neighbor(int v, int u) const {
  int i = rot_index(v, u);
  return rot_[v][(i + rot_[v].size() - 1) % rot_[v].size()];
}

int PlaneGraph::face_of(const Dart& d) const {
  int i = rot_index(d.tail, d.head);
  if (i < 0) throw GraphError(GraphFault::bad_mark, "face_of: no such dart");
  return dart_face_[dart_off_[d.tail] + i];
}

std::vector<std::pair<int, int>> PlaneGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int v = 0; v < order(); ++v)
    for (int u : rot_[v])
      if (v < u) out.emplace_back(v, u);
  return out;
}

PlaneGraph cycle_graph(int n) {
  std::vector<std::vector<int>> rot(n);
  for (int v = 0; v < n; ++v) rot[v] = {(v + n - 1) % n, (v + 1) % n};
  return PlaneGraph(std::move(rot));
}

std::vector<std::vector<int>> rotations_from_edges(
    int n, const std::vector<std::vector<int>>& neighbor_lists) {
  std::vector<std::vector<int>> rot(n);
  for (int v = 0; v < n && v < static_cast<int>(neighbor_lists.size()); ++v)
    rot[v] = neighbor_lists[v];
  return rot;
}

}  // namespace critatlas
