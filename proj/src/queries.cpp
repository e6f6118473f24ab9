#include "critatlas/queries.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace critatlas {

std::vector<std::vector<int>> short_cycles(const PlaneGraph& g, int max_len) {
  std::vector<std::vector<int>> found;
  const int n = g.order();
  std::vector<char> on_path(n, 0);
  std::vector<int> path;

  // Each cycle is reported with its minimum vertex first; the tie between
  // the two traversal directions is broken by path[1] < path.back().
  std::function<void(int, int)> extend = [&](int start, int v) {
    for (int u : g.rotation(v)) {
      if (u == start && path.size() >= 3) {
        if (path[1] < path.back()) found.push_back(path);
        continue;
      }
      if (u <= start || on_path[u]) continue;
      if (static_cast<int>(path.size()) >= max_len) continue;
      on_path[u] = 1;
      path.push_back(u);
      extend(start, u);
      path.pop_back();
      on_path[u] = 0;
    }
  };

  for (int s = 0; s < n; ++s) {
    path.assign(1, s);
    on_path.assign(n, 0);
    on_path[s] = 1;
    extend(s, s);
  }
  return found;
}

namespace {

// A cycle (vertex sequence) equals a marked face: same length, same vertex
// set, same edge set.
bool cycle_equals_mark(const MarkedPlaneGraph& mg, int mark, const std::vector<int>& cyc) {
  if (mg.mark(mark).kind != MarkKind::face) return false;
  const std::vector<int>& fc = mg.mark_cycle(mark);
  if (fc.size() != cyc.size()) return false;
  std::vector<int> a = fc, b = cyc;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return false;
  auto edge_set = [](const std::vector<int>& c) {
    std::vector<std::pair<int, int>> es;
    for (size_t i = 0; i < c.size(); ++i) {
      int x = c[i], y = c[(i + 1) % c.size()];
      es.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(es.begin(), es.end());
    return es;
  };
  return edge_set(fc) == edge_set(cyc);
}

}  // namespace

bool girth_ok(const MarkedPlaneGraph& mg) {
  for (const auto& cyc : short_cycles(mg.graph(), 4)) {
    bool marked = false;
    for (int i = 0; i < mg.mark_count() && !marked; ++i)
      marked = cycle_equals_mark(mg, i, cyc);
    if (!marked) return false;
  }
  return true;
}

std::vector<std::vector<int>> internal_short_cycles(const MarkedPlaneGraph& mg) {
  std::vector<std::vector<int>> out;
  for (const auto& cyc : short_cycles(mg.graph(), 4)) {
    bool marked = false;
    for (int i = 0; i < mg.mark_count() && !marked; ++i)
      marked = cycle_equals_mark(mg, i, cyc);
    if (!marked) out.push_back(cyc);
  }
  return out;
}

int set_distance(const PlaneGraph& g, const std::vector<int>& s1,
                 const std::vector<int>& s2) {
  const int n = g.order();
  std::vector<int> dist(n, -1);
  std::deque<int> q;
  for (int v : s1) {
    if (dist[v] != 0) {
      dist[v] = 0;
      q.push_back(v);
    }
  }
  std::vector<char> target(n, 0);
  for (int v : s2) {
    target[v] = 1;
    if (dist[v] == 0) return 0;
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int u : g.rotation(v)) {
      if (dist[u] >= 0) continue;
      dist[u] = dist[v] + 1;
      if (target[u]) return dist[u];
      q.push_back(u);
    }
  }
  return -1;  // unreachable; graphs are connected
}

int mark_distance(const MarkedPlaneGraph& mg) {
  return set_distance(mg.graph(), mg.mark_cycle(0), mg.mark_cycle(1));
}

bool has_shortcut(const MarkedPlaneGraph& mg, int t_max) {
  const PlaneGraph& g = mg.graph();
  const std::vector<int>& b = mg.mark_cycle(0);
  const int blen = static_cast<int>(b.size());
  std::vector<int> pos(g.order(), -1);
  for (int i = 0; i < blen; ++i) pos[b[i]] = i;
  auto b_dist = [&](int u, int w) {
    int d = std::abs(pos[u] - pos[w]);
    return std::min(d, blen - d);
  };
  auto is_b_edge = [&](int u, int w) {
    int d = std::abs(pos[u] - pos[w]);
    return d == 1 || d == blen - 1;
  };

  std::vector<char> on_path(g.order(), 0);
  bool shortcut = false;
  std::function<void(int, int, int)> dfs = [&](int start, int v, int len) {
    if (shortcut) return;
    for (int u : g.rotation(v)) {
      if (pos[u] >= 0) {
        if (u == start) continue;
        if (len == 0 && is_b_edge(start, u)) continue;  // an edge of B itself
        if (len + 1 < b_dist(start, u)) {
          shortcut = true;
          return;
        }
        continue;
      }
      if (len + 1 >= t_max || on_path[u]) continue;
      on_path[u] = 1;
      dfs(start, u, len + 1);
      on_path[u] = 0;
    }
  };

  for (int i = 0; i < blen && !shortcut; ++i) dfs(b[i], b[i], 0);
  return shortcut;
}

namespace {

struct ArtState {
  const PlaneGraph* g;
  std::vector<int> disc, low;
  int timer = 0;
  bool has_cut = false;
  bool has_bridge = false;

  void dfs(int v, int parent) {
    disc[v] = low[v] = ++timer;
    int children = 0;
    bool skipped_parent_edge = false;
    for (int u : g->rotation(v)) {
      if (u == parent && !skipped_parent_edge) {
        skipped_parent_edge = true;  // parallel edges never occur here
        continue;
      }
      if (disc[u]) {
        low[v] = std::min(low[v], disc[u]);
        continue;
      }
      ++children;
      dfs(u, v);
      low[v] = std::min(low[v], low[u]);
      if (parent != -1 && low[u] >= disc[v]) has_cut = true;
      if (low[u] > disc[v]) has_bridge = true;
    }
    if (parent == -1 && children > 1) has_cut = true;
  }
};

}  // namespace

bool two_connected(const PlaneGraph& g) {
  if (g.order() < 3) return false;
  ArtState st;
  st.g = &g;
  st.disc.assign(g.order(), 0);
  st.low.assign(g.order(), 0);
  st.dfs(0, -1);
  return !st.has_cut;
}

bool two_edge_connected(const PlaneGraph& g) {
  ArtState st;
  st.g = &g;
  st.disc.assign(g.order(), 0);
  st.low.assign(g.order(), 0);
  st.dfs(0, -1);
  return !st.has_bridge;
}

bool has_adjacent_degree2(const PlaneGraph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) continue;
    for (int u : g.rotation(v))
      if (g.degree(u) == 2) return true;
  }
  return false;
}

int max_internal_face(const MarkedPlaneGraph& mg) {
  int skip = mg.mark_face_index(0);
  int best = 0;
  const auto& faces = mg.graph().faces();
  for (int i = 0; i < static_cast<int>(faces.size()); ++i)
    if (i != skip) best = std::max(best, faces[i].length());
  return best;
}

bool cycle_separates_marks(const MarkedPlaneGraph& mg, const std::vector<int>& cycle) {
  const PlaneGraph& g = mg.graph();
  auto cyc_edge = [&](int u, int w) {
    const size_t k = cycle.size();
    for (size_t i = 0; i < k; ++i) {
      int a = cycle[i], b = cycle[(i + 1) % k];
      if ((a == u && b == w) || (a == w && b == u)) return true;
    }
    return false;
  };
  // Union faces across every edge not on the cycle.
  const int nf = g.face_count();
  std::vector<int> comp(nf, -1);
  int ncomp = 0;
  for (int f0 = 0; f0 < nf; ++f0) {
    if (comp[f0] >= 0) continue;
    comp[f0] = ncomp;
    std::vector<int> stack{f0};
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      for (const Dart& d : g.faces()[f].darts) {
        if (cyc_edge(d.tail, d.head)) continue;
        int f2 = g.face_of({d.head, d.tail});
        if (comp[f2] < 0) {
          comp[f2] = ncomp;
          stack.push_back(f2);
        }
      }
    }
    ++ncomp;
  }
  if (ncomp != 2) return false;  // not a separating simple cycle
  auto mark_comps = [&](int i) {
    std::vector<int> cs;
    if (mg.mark(i).kind == MarkKind::face) {
      cs.push_back(comp[mg.mark_face_index(i)]);
    } else {
      int v = mg.mark(i).vertex;
      for (int u : g.rotation(v)) cs.push_back(comp[g.face_of({v, u})]);
      std::sort(cs.begin(), cs.end());
      cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    }
    return cs;
  };
  std::vector<int> c1 = mark_comps(0), c2 = mark_comps(1);
  for (int a : c1)
    for (int b : c2)
      if (a == b) return false;
  return true;
}

}  // namespace critatlas
