#include "critatlas/color.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace critatlas {

MarkSubgraph mark_subgraph(const MarkedPlaneGraph& mg) {
  MarkSubgraph s;
  std::vector<int> pos(mg.graph().order(), -1);
  for (int i = 0; i < mg.mark_count(); ++i) {
    const std::vector<int>& c = mg.mark_cycle(i);
    for (int v : c)
      if (pos[v] < 0) {
        pos[v] = static_cast<int>(s.verts.size());
        s.verts.push_back(v);
      }
    if (mg.mark(i).kind == MarkKind::face) {
      for (size_t j = 0; j < c.size(); ++j) {
        int a = pos[c[j]], b = pos[c[(j + 1) % c.size()]];
        s.edges.emplace_back(std::min(a, b), std::max(a, b));
      }
    }
  }
  std::sort(s.edges.begin(), s.edges.end());
  s.edges.erase(std::unique(s.edges.begin(), s.edges.end()), s.edges.end());
  return s;
}

ColoringSolver::ColoringSolver(const PlaneGraph& g, std::pair<int, int> drop_edge) {
  n_ = g.order();
  off_.assign(n_ + 1, 0);
  for (int v = 0; v < n_; ++v) {
    int d = g.degree(v);
    if (drop_edge.first == v || drop_edge.second == v) --d;
    off_[v + 1] = off_[v] + d;
  }
  adj_.resize(off_[n_]);
  std::vector<int> fill(n_, 0);
  for (int v = 0; v < n_; ++v)
    for (int u : g.rotation(v)) {
      if ((v == drop_edge.first && u == drop_edge.second) ||
          (v == drop_edge.second && u == drop_edge.first))
        continue;
      adj_[off_[v] + fill[v]++] = u;
    }
  dom_.resize(n_);
  saves_.resize(static_cast<size_t>(n_ + 1) * n_);
  queue_.reserve(n_);
}

bool ColoringSolver::propagate() {
  while (!queue_.empty()) {
    int v = queue_.back();
    queue_.pop_back();
    uint8_t bit = dom_[v];
    for (int i = off_[v]; i < off_[v + 1]; ++i) {
      int u = adj_[i];
      if (!(dom_[u] & bit)) continue;
      uint8_t nd = dom_[u] & ~bit;
      if (nd == 0) {
        queue_.clear();
        return false;
      }
      dom_[u] = nd;
      if (std::popcount(nd) == 1) queue_.push_back(u);
    }
  }
  return true;
}

bool ColoringSolver::dfs(int depth) {
  // smallest remaining domain, ties by lowest vertex id
  int best = -1, best_size = 4;
  for (int v = 0; v < n_; ++v) {
    int s = std::popcount(dom_[v]);
    if (s > 1 && s < best_size) {
      best = v;
      best_size = s;
      if (s == 2) break;
    }
  }
  if (best < 0) return true;  // all singletons and consistent
  uint8_t* save = saves_.data() + static_cast<size_t>(depth) * n_;
  std::copy(dom_.begin(), dom_.end(), save);
  uint8_t options = dom_[best];
  for (uint8_t bit = 1; bit < 8; bit <<= 1) {
    if (!(options & bit)) continue;
    dom_[best] = bit;
    queue_.clear();
    queue_.push_back(best);
    if (propagate() && dfs(depth + 1)) return true;
    std::copy(save, save + n_, dom_.begin());
  }
  return false;
}

bool ColoringSolver::extendable(const int8_t* fixed) {
  queue_.clear();
  for (int v = 0; v < n_; ++v) {
    if (fixed[v] >= 0) {
      dom_[v] = uint8_t(1u << fixed[v]);
      queue_.push_back(v);
    } else {
      dom_[v] = 7;
    }
  }
  if (!propagate()) return false;
  return dfs(0);
}

std::vector<Precoloring> enumerate_precolorings(const MarkedPlaneGraph& mg) {
  MarkSubgraph s = mark_subgraph(mg);
  const int k = static_cast<int>(s.verts.size());
  std::vector<std::vector<int>> earlier(k);
  for (auto [a, b] : s.edges) earlier[b].push_back(a);
  std::vector<Precoloring> out;
  std::vector<int8_t> col(k, -1);
  std::function<void(int)> rec = [&](int i) {
    if (i == k) {
      out.push_back({s.verts, col});
      return;
    }
    for (int8_t c = 0; c < 3; ++c) {
      bool ok = true;
      for (int a : earlier[i])
        if (col[a] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      col[i] = c;
      rec(i + 1);
    }
    col[i] = -1;
  };
  rec(0);
  return out;
}

uint64_t count_precolorings(const MarkedPlaneGraph& mg) {
  MarkSubgraph s = mark_subgraph(mg);
  const int k = static_cast<int>(s.verts.size());
  std::vector<std::vector<int>> earlier(k);
  for (auto [a, b] : s.edges) earlier[b].push_back(a);
  uint64_t count = 0;
  std::vector<int8_t> col(k, -1);
  std::function<void(int)> rec = [&](int i) {
    if (i == k) {
      ++count;
      return;
    }
    for (int8_t c = 0; c < 3; ++c) {
      bool ok = true;
      for (int a : earlier[i])
        if (col[a] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      col[i] = c;
      rec(i + 1);
    }
    col[i] = -1;
  };
  rec(0);
  return count;
}

bool extends(const MarkedPlaneGraph& mg, const Precoloring& psi) {
  const PlaneGraph& g = mg.graph();
  std::vector<int8_t> fixed(g.order(), -1);
  for (size_t i = 0; i < psi.vertices.size(); ++i) fixed[psi.vertices[i]] = psi.colors[i];
  ColoringSolver solver(g);
  return solver.extendable(fixed.data());
}

ExtensionSummary extension_summary(const MarkedPlaneGraph& mg, std::pair<int, int> drop_edge) {
  const PlaneGraph& g = mg.graph();
  MarkSubgraph s = mark_subgraph(mg);
  const int k = static_cast<int>(s.verts.size());
  std::vector<std::vector<int>> earlier(k);
  for (auto [a, b] : s.edges) earlier[b].push_back(a);

  ExtensionSummary out;
  // color-symmetry anchor: verts[0] -> 0 and its first S-neighbour -> 1
  int anchor2 = -1;
  for (auto [a, b] : s.edges)
    if (a == 0) {
      anchor2 = b;
      break;
    }
  out.reduced = anchor2 >= 0;

  ColoringSolver solver(g, drop_edge);
  std::vector<int8_t> fixed(g.order(), -1);
  std::vector<int8_t> col(k, -1);
  std::function<void(int)> rec = [&](int i) {
    if (i == k) {
      ++out.proper_count;
      bool ok = solver.extendable(fixed.data());
      if (!ok) {
        uint32_t code = 0;
        for (int j = k - 1; j >= 0; --j) code = code * 3 + uint32_t(col[j]);
        out.non_extending.push_back(code);
      }
      return;
    }
    int8_t lo = 0, hi = 2;
    if (i == 0) lo = hi = 0;
    if (i == anchor2) lo = hi = 1;
    for (int8_t c = lo; c <= hi; ++c) {
      bool proper = true;
      for (int a : earlier[i])
        if (col[a] == c) {
          proper = false;
          break;
        }
      if (!proper) continue;
      col[i] = c;
      fixed[s.verts[i]] = c;
      rec(i + 1);
      col[i] = -1;
      fixed[s.verts[i]] = -1;
    }
  };
  rec(0);
  return out;
}

namespace {

std::vector<int8_t> decode(uint32_t code, int k) {
  std::vector<int8_t> col(k);
  for (int i = 0; i < k; ++i) {
    col[i] = int8_t(code % 3);
    code /= 3;
  }
  return col;
}

}  // namespace

bool is_critical(const MarkedPlaneGraph& mg) {
  const PlaneGraph& g = mg.graph();
  MarkSubgraph s = mark_subgraph(mg);
  std::vector<char> in_s(g.order(), 0);
  for (int v : s.verts) in_s[v] = 1;
  // a non-precolored vertex of degree <= 2 can always be recolored
  for (int v = 0; v < g.order(); ++v)
    if (!in_s[v] && g.degree(v) <= 2) return false;

  std::vector<std::pair<int, int>> s_edges;
  for (auto [a, b] : s.edges) {
    int u = s.verts[a], v = s.verts[b];
    s_edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(s_edges.begin(), s_edges.end());
  std::vector<std::pair<int, int>> test_edges;
  for (auto e : g.edges())
    if (!std::binary_search(s_edges.begin(), s_edges.end(), e)) test_edges.push_back(e);
  if (test_edges.empty()) return true;  // G = S, vacuously critical

  ExtensionSummary base = extension_summary(mg);
  if (base.non_extending.empty()) return false;

  const int k = static_cast<int>(s.verts.size());
  std::vector<int8_t> fixed(g.order(), -1);
  for (auto e : test_edges) {
    ColoringSolver solver(g, e);
    bool witness = false;
    for (uint32_t code : base.non_extending) {
      std::vector<int8_t> col = decode(code, k);
      for (int i = 0; i < k; ++i) fixed[s.verts[i]] = col[i];
      if (solver.extendable(fixed.data())) {
        witness = true;
        break;
      }
    }
    for (int v : s.verts) fixed[v] = -1;
    if (!witness) return false;
  }
  return true;
}

bool is_strongly_critical(const MarkedPlaneGraph& mg) {
  const PlaneGraph& g = mg.graph();
  MarkSubgraph s = mark_subgraph(mg);
  std::vector<char> in_s(g.order(), 0);
  for (int v : s.verts) in_s[v] = 1;
  for (int v = 0; v < g.order(); ++v)
    if (!in_s[v] && g.degree(v) <= 2) return false;

  std::vector<std::pair<int, int>> s_edges;
  for (auto [a, b] : s.edges) {
    int u = s.verts[a], v = s.verts[b];
    s_edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(s_edges.begin(), s_edges.end());
  std::vector<std::pair<int, int>> test_edges;
  for (auto e : g.edges())
    if (!std::binary_search(s_edges.begin(), s_edges.end(), e)) test_edges.push_back(e);
  if (test_edges.empty()) return true;

  ExtensionSummary base = extension_summary(mg);
  const int k = static_cast<int>(s.verts.size());
  std::vector<int8_t> fixed(g.order(), -1);
  for (uint32_t code : base.non_extending) {
    std::vector<int8_t> col = decode(code, k);
    for (int i = 0; i < k; ++i) fixed[s.verts[i]] = col[i];
    bool all = true;
    for (auto e : test_edges) {
      ColoringSolver solver(g, e);
      if (!solver.extendable(fixed.data())) {
        all = false;
        break;
      }
    }
    for (int v : s.verts) fixed[v] = -1;
    if (all) return true;
  }
  return false;
}

bool CriticalityCache::get(const std::string& key, bool* value) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = map_.find(key);
  if (it == map_.end()) return false;
  *value = it->second;
  return true;
}

void CriticalityCache::put(const std::string& key, bool value) {
  std::lock_guard<std::mutex> lock(mu_);
  map_.emplace(key, value);
}

size_t CriticalityCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return map_.size();
}

bool is_critical_cached(const MarkedPlaneGraph& mg, const std::string& key,
                        CriticalityCache* cache) {
  bool v = false;
  if (cache && cache->get(key, &v)) return v;
  v = is_critical(mg);
  if (cache) cache->put(key, v);
  return v;
}

namespace {

// proper colorings of a single mark's subgraph (cycle or vertex)
std::vector<std::vector<int8_t>> mark_colorings(const MarkedPlaneGraph& mg, int mi) {
  const std::vector<int>& cyc = mg.mark_cycle(mi);
  const int k = static_cast<int>(cyc.size());
  std::vector<std::vector<int8_t>> out;
  std::vector<int8_t> col(k, -1);
  const bool is_cycle = mg.mark(mi).kind == MarkKind::face;
  std::function<void(int)> rec = [&](int i) {
    if (i == k) {
      out.push_back(col);
      return;
    }
    for (int8_t c = 0; c < 3; ++c) {
      if (is_cycle && i > 0 && col[i - 1] == c) continue;
      if (is_cycle && i == k - 1 && col[0] == c) continue;
      col[i] = c;
      rec(i + 1);
    }
    col[i] = -1;
  };
  rec(0);
  return out;
}

}  // namespace

int count_nonextending(const MarkedPlaneGraph& mg, int f1, const Precoloring& psi, int f2) {
  const PlaneGraph& g = mg.graph();
  std::vector<int8_t> psi_color(g.order(), -1);
  for (size_t i = 0; i < psi.vertices.size(); ++i) psi_color[psi.vertices[i]] = psi.colors[i];

  const std::vector<int>& c2 = mg.mark_cycle(f2);
  ColoringSolver solver(g);
  std::vector<int8_t> fixed(g.order(), -1);
  int count = 0;
  for (const auto& phi : mark_colorings(mg, f2)) {
    bool conflict = false;
    for (size_t i = 0; i < c2.size(); ++i)
      if (psi_color[c2[i]] >= 0 && psi_color[c2[i]] != phi[i]) conflict = true;
    if (conflict) {
      ++count;
      continue;
    }
    std::fill(fixed.begin(), fixed.end(), -1);
    for (size_t i = 0; i < psi.vertices.size(); ++i) fixed[psi.vertices[i]] = psi.colors[i];
    for (size_t i = 0; i < c2.size(); ++i) fixed[c2[i]] = phi[i];
    if (!solver.extendable(fixed.data())) ++count;
  }
  return count;
}

int c_max(const MarkedPlaneGraph& mg, int f1, int f2) {
  const std::vector<int>& c1 = mg.mark_cycle(f1);
  int best = 0;
  for (const auto& psi : mark_colorings(mg, f1)) {
    Precoloring p{c1, psi};
    best = std::max(best, count_nonextending(mg, f1, p, f2));
  }
  return best;
}

}  // namespace critatlas
