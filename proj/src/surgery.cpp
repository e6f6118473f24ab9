#include "critatlas/surgery.hpp"

#include <algorithm>
#include <deque>

namespace critatlas {

PlaneGraph subdivide(const PlaneGraph& g, int u, int v) {
  if (!g.adjacent(u, v)) throw GraphError(GraphFault::bad_mark, "subdivide: not an edge");
  std::vector<std::vector<int>> rot = g.rotations();
  const int w = g.order();
  rot.push_back({u, v});
  rot[u][g.rot_index(u, v)] = w;
  rot[v][g.rot_index(v, u)] = w;
  return PlaneGraph(std::move(rot));
}

std::optional<PlaneGraph> try_suppress_degree2(const PlaneGraph& g, int v, GraphFault* fault) {
  auto fail = [&](GraphFault f) {
    if (fault) *fault = f;
    return std::nullopt;
  };
  if (g.degree(v) != 2) return fail(GraphFault::embedding_broken);
  int u = g.rotation(v)[0], w = g.rotation(v)[1];
  if (u == w) return fail(GraphFault::would_create_loop);
  if (g.adjacent(u, w)) return fail(GraphFault::would_create_parallel);
  std::vector<std::vector<int>> rot = g.rotations();
  rot[u][g.rot_index(u, v)] = w;
  rot[w][g.rot_index(w, v)] = u;
  rot.erase(rot.begin() + v);
  for (auto& r : rot)
    for (int& x : r)
      if (x > v) --x;
  return PlaneGraph::try_create(std::move(rot), fault);
}

std::optional<PlaneGraph> split_vertex(const PlaneGraph& g, int v, int cut_a, int cut_b,
                                       GraphFault* fault) {
  const std::vector<int>& r = g.rotation(v);
  const int k = static_cast<int>(r.size());
  if (cut_a == cut_b || cut_a < 0 || cut_b < 0 || cut_a >= k || cut_b >= k) {
    if (fault) *fault = GraphFault::embedding_broken;
    return std::nullopt;
  }
  std::vector<int> keep, moved;
  for (int i = (cut_a + 1) % k; ; i = (i + 1) % k) {
    keep.push_back(r[i]);
    if (i == cut_b) break;
  }
  for (int i = (cut_b + 1) % k; ; i = (i + 1) % k) {
    moved.push_back(r[i]);
    if (i == cut_a) break;
  }
  std::vector<std::vector<int>> rot = g.rotations();
  const int w = g.order();
  rot[v] = keep;
  rot.push_back(moved);
  for (int u : moved) rot[u][g.rot_index(u, v)] = w;
  return PlaneGraph::try_create(std::move(rot), fault);
}

PlaneGraph mirror_graph(const PlaneGraph& g) {
  std::vector<std::vector<int>> rot = g.rotations();
  for (auto& r : rot) std::reverse(r.begin(), r.end());
  return PlaneGraph(std::move(rot));
}

MarkedPlaneGraph mirror_marked(const MarkedPlaneGraph& mg) {
  PlaneGraph m = mirror_graph(mg.graph());
  std::vector<Mark> marks;
  for (int i = 0; i < mg.mark_count(); ++i) {
    Mark mk = mg.mark(i);
    if (mk.kind == MarkKind::face) std::swap(mk.dart.tail, mk.dart.head);
    marks.push_back(mk);
  }
  return MarkedPlaneGraph(std::move(m), std::move(marks));
}

GlueSeq walk_segment(const FaceWalk& w, int start, int len, bool forward) {
  const int L = w.length();
  GlueSeq s;
  for (int j = 0; j <= len; ++j) {
    int p = forward ? (start + j) % L : ((start - j) % L + L) % L;
    s.verts.push_back(w.darts[p].tail);
    int w_in = w.darts[(p + L - 1) % L].tail;
    int w_out = w.darts[p].head;
    s.gap.emplace_back(w_in, w_out);
  }
  return s;
}

std::vector<std::vector<int>> disjoint_union(const PlaneGraph& g, const PlaneGraph& h) {
  std::vector<std::vector<int>> rot = g.rotations();
  const int off = g.order();
  for (int v = 0; v < h.order(); ++v) {
    std::vector<int> r = h.rotation(v);
    for (int& x : r) x += off;
    rot.push_back(std::move(r));
  }
  return rot;
}

namespace {

// position of v's gap on the walk of face fi: the index i such that the
// walk enters v via darts[i-1] and leaves via darts[i]
int face_gap_insert_pos(const PlaneGraph& g, int fi, int v) {
  const FaceWalk& w = g.faces()[fi];
  for (int p = 0; p < w.length(); ++p) {
    if (w.darts[p].tail != v) continue;
    int w_in = w.darts[(p + w.length() - 1) % w.length()].tail;
    // insert right after w_in in rotation(v)
    return g.rot_index(v, w_in);
  }
  return -1;
}

}  // namespace

std::optional<PlaneGraph> add_edge_in_face(const PlaneGraph& g, int face_index, int u, int v,
                                           GraphFault* fault) {
  auto fail = [&](GraphFault f) {
    if (fault) *fault = f;
    return std::nullopt;
  };
  if (u == v) return fail(GraphFault::would_create_loop);
  if (g.adjacent(u, v)) return fail(GraphFault::would_create_parallel);
  int pu = face_gap_insert_pos(g, face_index, u);
  int pv = face_gap_insert_pos(g, face_index, v);
  if (pu < 0 || pv < 0) return fail(GraphFault::embedding_broken);
  std::vector<std::vector<int>> rot = g.rotations();
  rot[u].insert(rot[u].begin() + pu + 1, v);
  rot[v].insert(rot[v].begin() + pv + 1, u);
  return PlaneGraph::try_create(std::move(rot), fault);
}

std::optional<PlaneGraph> add_leaf_in_face(const PlaneGraph& g, int face_index, int u,
                                           GraphFault* fault) {
  int pu = face_gap_insert_pos(g, face_index, u);
  if (pu < 0) {
    if (fault) *fault = GraphFault::embedding_broken;
    return std::nullopt;
  }
  std::vector<std::vector<int>> rot = g.rotations();
  const int w = g.order();
  rot[u].insert(rot[u].begin() + pu + 1, w);
  rot.push_back({u});
  return PlaneGraph::try_create(std::move(rot), fault);
}

namespace {

// rotation opened at the gap: linear list starting at w_out and ending at
// w_in.  Fails when w_out does not immediately follow w_in.
bool open_at_gap(const std::vector<int>& r, int w_in, int w_out, std::vector<int>& out) {
  const int k = static_cast<int>(r.size());
  int pi = -1;
  for (int i = 0; i < k; ++i)
    if (r[i] == w_in && r[(i + 1) % k] == w_out) {
      pi = i;
      break;
    }
  if (pi < 0) return false;
  out.clear();
  for (int j = 0; j < k; ++j) out.push_back(r[(pi + 1 + j) % k]);
  return true;
}

}  // namespace

std::optional<PlaneGraph> identify_seqs(const std::vector<std::vector<int>>& rot,
                                        const GlueSeq& a, const GlueSeq& b, bool cyclic,
                                        GraphFault* fault, std::vector<int>* vertex_map) {
  auto fail = [&](GraphFault f) {
    if (fault) *fault = f;
    return std::nullopt;
  };
  const int n = static_cast<int>(rot.size());
  const int t = static_cast<int>(a.verts.size()) - (cyclic ? 0 : 1);
  if (a.verts.size() != b.verts.size() || a.verts.empty())
    return fail(GraphFault::embedding_broken);

  // direct edge between partners would become a loop
  for (size_t j = 0; j < a.verts.size(); ++j) {
    int x = a.verts[j], y = b.verts[j];
    if (x == y) return fail(GraphFault::would_create_loop);
    for (int u : rot[x])
      if (u == y) return fail(GraphFault::would_create_loop);
  }

  std::vector<int> target(n);
  for (int v = 0; v < n; ++v) target[v] = v;
  for (size_t j = 0; j < a.verts.size(); ++j) target[b.verts[j]] = a.verts[j];

  std::vector<std::vector<int>> out(n);
  std::vector<char> dead(n, 0);
  for (int y : b.verts) dead[y] = 1;

  std::vector<int> open_a, open_b;
  const int npair = static_cast<int>(a.verts.size());
  for (int j = 0; j < npair; ++j) {
    int x = a.verts[j], y = b.verts[j];
    if (!open_at_gap(rot[x], a.gap[j].first, a.gap[j].second, open_a))
      return fail(GraphFault::embedding_broken);
    if (!open_at_gap(rot[y], b.gap[j].first, b.gap[j].second, open_b))
      return fail(GraphFault::embedding_broken);
    // drop the partner copies of the seam edges from the b side
    bool drop_next = cyclic || j < t;          // partner b.verts[j+1]
    bool drop_prev = cyclic || j > 0;          // partner b.verts[j-1]
    if (drop_next) {
      int p = b.verts[(j + 1) % npair];
      if (!open_b.empty() && open_b.front() == p)
        open_b.erase(open_b.begin());
      else if (!open_b.empty() && open_b.back() == p)
        open_b.pop_back();
      else
        return fail(GraphFault::embedding_broken);
    }
    if (drop_prev) {
      int p = b.verts[(j + npair - 1) % npair];
      if (!open_b.empty() && open_b.front() == p)
        open_b.erase(open_b.begin());
      else if (!open_b.empty() && open_b.back() == p)
        open_b.pop_back();
      else
        return fail(GraphFault::embedding_broken);
    }
    std::vector<int> merged = open_a;
    merged.insert(merged.end(), open_b.begin(), open_b.end());
    out[x] = std::move(merged);
  }
  for (int v = 0; v < n; ++v) {
    if (dead[v]) continue;
    if (out[v].empty()) out[v] = rot[v];
  }

  // remap, compact, and check simplicity
  std::vector<int> compact(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v)
    if (!dead[v]) compact[v] = next++;
  std::vector<std::vector<int>> final_rot(next);
  for (int v = 0; v < n; ++v) {
    if (dead[v]) continue;
    std::vector<int>& r = final_rot[compact[v]];
    r.reserve(out[v].size());
    for (int u : out[v]) r.push_back(compact[target[u]]);
    std::vector<int> sorted = r;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      return fail(GraphFault::would_create_parallel);
    for (int u : r)
      if (u == compact[v]) return fail(GraphFault::would_create_loop);
  }
  if (vertex_map) {
    vertex_map->assign(n, -1);
    for (int v = 0; v < n; ++v) (*vertex_map)[v] = compact[target[v]];
  }
  return PlaneGraph::try_create(std::move(final_rot), fault);
}

std::vector<int> shortest_mark_path(const MarkedPlaneGraph& mg) {
  const PlaneGraph& g = mg.graph();
  const std::vector<int>& s1 = mg.mark_cycle(0);
  const std::vector<int>& s2 = mg.mark_cycle(1);
  std::vector<char> in1(g.order(), 0), in2(g.order(), 0), blocked(g.order(), 0);
  for (int v : s1) in1[v] = 1;
  for (int v : s2) in2[v] = 1;
  for (int v : s1) blocked[v] = 1;
  for (int v : s2) blocked[v] = 1;
  for (int v : s1)
    if (in2[v]) return {v};
  // BFS from mark 1; interior vertices must avoid both marks
  std::vector<int> parent(g.order(), -2);
  std::deque<int> q;
  for (int v : s1) {
    parent[v] = -1;
    q.push_back(v);
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int u : g.rotation(v)) {
      if (parent[u] != -2) continue;
      if (in2[u]) {
        std::vector<int> path{u};
        for (int w = v; w != -1; w = parent[w]) path.push_back(w);
        std::reverse(path.begin(), path.end());
        return path;
      }
      if (blocked[u]) continue;
      parent[u] = v;
      q.push_back(u);
    }
  }
  return {};
}

MarkedPlaneGraph cut_along_path(const MarkedPlaneGraph& mg, const std::vector<int>& path) {
  const PlaneGraph& g = mg.graph();
  const int n = g.order();
  const int t = static_cast<int>(path.size()) - 1;
  if (t < 0) throw GraphError(GraphFault::bad_mark, "cut_along_path: empty path");

  auto mark_gap = [&](int mi, int v) -> std::pair<int, int> {
    if (mg.mark(mi).kind == MarkKind::vertex)
      throw GraphError(GraphFault::bad_mark, "cut_along_path: vertex mark has no gap");
    const FaceWalk& w = g.faces()[mg.mark_face_index(mi)];
    for (int p = 0; p < w.length(); ++p)
      if (w.darts[p].tail == v)
        return {w.darts[(p + w.length() - 1) % w.length()].tail, w.darts[p].head};
    throw GraphError(GraphFault::bad_mark, "cut_along_path: endpoint not on mark");
  };

  // Sentinels -1 / -2 stand for the virtual continuation of the seam into
  // the two marked faces; they make every path vertex an interior case.
  std::vector<std::vector<int>> rot = g.rotations();
  auto insert_sentinel = [&](int v, std::pair<int, int> gapv, int sentinel) {
    std::vector<int>& r = rot[v];
    const int k = static_cast<int>(r.size());
    for (int i = 0; i < k; ++i)
      if (r[i] == gapv.first && r[(i + 1) % k] == gapv.second) {
        r.insert(r.begin() + i + 1, sentinel);
        return;
      }
    throw GraphError(GraphFault::embedding_broken, "cut_along_path: gap not found");
  };
  insert_sentinel(path.front(), mark_gap(0, path.front()), -1);
  insert_sentinel(path.back(), mark_gap(1, path.back()), -2);

  auto prev_of = [&](int i) { return i == 0 ? -1 : path[i - 1]; };
  auto next_of = [&](int i) { return i == t ? -2 : path[i + 1]; };

  std::vector<std::vector<int>> side_a(t + 1), side_b(t + 1);
  for (int i = 0; i <= t; ++i) {
    const std::vector<int>& r = rot[path[i]];
    const int k = static_cast<int>(r.size());
    int pn = -1, pp = -1;
    for (int j = 0; j < k; ++j) {
      if (r[j] == next_of(i)) pn = j;
      if (r[j] == prev_of(i)) pp = j;
    }
    if (pn < 0 || pp < 0)
      throw GraphError(GraphFault::embedding_broken, "cut_along_path: path edge missing");
    for (int j = pn; ; j = (j + 1) % k) {
      side_a[i].push_back(r[j]);
      if (j == pp) break;
    }
    for (int j = pp; ; j = (j + 1) % k) {
      side_b[i].push_back(r[j]);
      if (j == pn) break;
    }
  }

  // copy ids: side a keeps path[i], side b becomes n + i
  std::vector<int> copy_b(t + 1);
  for (int i = 0; i <= t; ++i) copy_b[i] = n + i;
  std::vector<int> path_index(n, -1);
  for (int i = 0; i <= t; ++i) path_index[path[i]] = i;

  std::vector<std::vector<int>> out = rot;
  out.resize(n + t + 1);
  for (int i = 0; i <= t; ++i) {
    auto remap = [&](const std::vector<int>& arc, bool b_side) {
      std::vector<int> r2;
      for (int u : arc) {
        if (u == -1 || u == -2) continue;  // sentinel: seam end, no edge
        int pi = u >= 0 && u < n ? path_index[u] : -1;
        if (pi >= 0)
          r2.push_back(b_side ? copy_b[pi] : u);
        else
          r2.push_back(u);
      }
      return r2;
    };
    out[path[i]] = remap(side_a[i], false);
    out[copy_b[i]] = remap(side_b[i], true);
  }
  // non-path neighbours on side b repoint to the copy
  for (int i = 0; i <= t; ++i) {
    for (int u : out[copy_b[i]]) {
      if (u >= n) continue;  // another copy; already consistent
      for (int& x : out[u])
        if (x == path[i]) x = copy_b[i];
    }
  }

  PlaneGraph cut(std::move(out));
  // The new outer face is the unique face containing both copies of the
  // first path vertex.
  int b_face = -1;
  for (int fi = 0; fi < cut.face_count(); ++fi) {
    bool has_a = false, has_b = false;
    for (const Dart& d : cut.faces()[fi].darts) {
      if (d.tail == path.front()) has_a = true;
      if (d.tail == copy_b[0]) has_b = true;
    }
    if (has_a && has_b) {
      b_face = fi;
      break;
    }
  }
  if (b_face < 0)
    throw GraphError(GraphFault::embedding_broken, "cut_along_path: no boundary face");
  const int expect =
      mg.mark_length(0) + mg.mark_length(1) + 2 * t;
  if (cut.faces()[b_face].length() != expect)
    throw GraphError(GraphFault::embedding_broken, "cut_along_path: wrong boundary length");
  return make_disk(std::move(cut), cut.faces()[b_face].darts[0]);
}

}  // namespace critatlas
