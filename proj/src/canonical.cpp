#include "critatlas/canonical.hpp"

#include <algorithm>
#include <cstring>

#include "critatlas/sha256.hpp"

namespace critatlas {

namespace {

struct Scratch {
  std::vector<int> label, order, entry;
  std::vector<int32_t> code;
};

// Traversal code rooted at dart (a -> b) with rotation direction dir.
// The labeling is rigid: a gets 0, b gets 1, and each vertex lists its
// neighbors starting from the neighbor it was discovered from, following
// the rotation in direction dir.
void traversal_code(const PlaneGraph& g, int a, int b, int dir, Scratch& s) {
  const int n = g.order();
  s.label.assign(n, -1);
  s.order.clear();
  s.entry.assign(n, -1);
  s.code.clear();
  s.label[a] = 0;
  s.order.push_back(a);
  s.entry[a] = b;
  int next = 1;
  for (size_t pos = 0; pos < s.order.size(); ++pos) {
    int v = s.order[pos];
    const std::vector<int>& r = g.rotation(v);
    const int k = static_cast<int>(r.size());
    int i0 = g.rot_index(v, s.entry[v]);
    for (int j = 0; j < k; ++j) {
      int u = r[((i0 + dir * j) % k + k) % k];
      if (s.label[u] < 0) {
        s.label[u] = next++;
        s.order.push_back(u);
        s.entry[u] = v;
      }
      s.code.push_back(s.label[u]);
    }
    s.code.push_back(-1);
  }
}

std::vector<int32_t> mark_code(const MarkedPlaneGraph& mg, int mi,
                               const std::vector<int>& label, int dir) {
  const Mark& m = mg.mark(mi);
  if (m.kind == MarkKind::vertex) return {1, 1, label[m.vertex]};
  const FaceWalk& w = mg.graph().faces()[mg.mark_face_index(mi)];
  std::vector<int32_t> seq;
  seq.reserve(w.darts.size());
  for (const Dart& d : w.darts) seq.push_back(label[d.tail]);
  if (dir < 0) std::reverse(seq.begin(), seq.end());
  // least cyclic rotation
  const int L = static_cast<int>(seq.size());
  std::vector<int32_t> best, cur;
  for (int r = 0; r < L; ++r) {
    cur.clear();
    for (int j = 0; j < L; ++j) cur.push_back(seq[(r + j) % L]);
    if (best.empty() || cur < best) best = cur;
  }
  std::vector<int32_t> out{0, L};
  out.insert(out.end(), best.begin(), best.end());
  return out;
}

struct Candidate {
  std::vector<int32_t> full;
  std::vector<int> label;
  int dir = 1;
};

}  // namespace

MarkedPlaneGraph canonical_form(const MarkedPlaneGraph& mg, IsoGroup group) {
  const PlaneGraph& g = mg.graph();
  std::vector<std::pair<Dart, int>> roots;  // dart, dir
  for (int i = 0; i < mg.mark_count(); ++i) {
    const Mark& m = mg.mark(i);
    if (m.kind == MarkKind::vertex) {
      for (int u : g.rotation(m.vertex)) {
        roots.push_back({{m.vertex, u}, 1});
        if (group == IsoGroup::with_reflection) roots.push_back({{m.vertex, u}, -1});
      }
    } else {
      const FaceWalk& w = g.faces()[mg.mark_face_index(i)];
      for (const Dart& d : w.darts) {
        roots.push_back({d, 1});
        if (group == IsoGroup::with_reflection) roots.push_back({{d.head, d.tail}, -1});
      }
    }
  }

  Scratch s;
  Candidate best;
  for (const auto& [root, dir] : roots) {
    traversal_code(g, root.tail, root.head, dir, s);
    std::vector<int32_t> full = s.code;
    full.push_back(-3);
    std::vector<std::vector<int32_t>> mcodes;
    for (int i = 0; i < mg.mark_count(); ++i) mcodes.push_back(mark_code(mg, i, s.label, dir));
    std::sort(mcodes.begin(), mcodes.end());
    for (auto& mc : mcodes) {
      full.insert(full.end(), mc.begin(), mc.end());
      full.push_back(-2);
    }
    if (best.full.empty() || full < best.full) {
      best.full = std::move(full);
      best.label = s.label;
      best.dir = dir;
    }
  }

  // Rebuild the relabeled graph.
  const int n = g.order();
  std::vector<std::vector<int>> rot2(n);
  for (int v = 0; v < n; ++v) {
    const std::vector<int>& r = g.rotation(v);
    const int k = static_cast<int>(r.size());
    std::vector<int>& out = rot2[best.label[v]];
    out.resize(k);
    for (int j = 0; j < k; ++j)
      out[j] = best.label[r[((best.dir * j) % k + k) % k]];
    // normalize the cyclic representation to start at the least neighbor
    int mi = static_cast<int>(std::min_element(out.begin(), out.end()) - out.begin());
    std::rotate(out.begin(), out.begin() + mi, out.end());
  }
  std::vector<Mark> marks2;
  for (int i = 0; i < mg.mark_count(); ++i) {
    const Mark& m = mg.mark(i);
    if (m.kind == MarkKind::vertex) {
      marks2.push_back(Mark::vertex_mark(best.label[m.vertex]));
      continue;
    }
    const FaceWalk& w = g.faces()[mg.mark_face_index(i)];
    Dart bd{-1, -1};
    for (const Dart& d : w.darts) {
      Dart cand = best.dir > 0 ? Dart{best.label[d.tail], best.label[d.head]}
                               : Dart{best.label[d.head], best.label[d.tail]};
      if (bd.tail < 0 || std::make_pair(cand.tail, cand.head) < std::make_pair(bd.tail, bd.head))
        bd = cand;
    }
    marks2.push_back(Mark::face_mark(bd));
  }
  // Cylinder mark pair is unordered: order marks by their codes.
  if (marks2.size() == 2) {
    std::vector<int32_t> c0 = mark_code(mg, 0, best.label, best.dir);
    std::vector<int32_t> c1 = mark_code(mg, 1, best.label, best.dir);
    if (c1 < c0) std::swap(marks2[0], marks2[1]);
  }
  return MarkedPlaneGraph(PlaneGraph(std::move(rot2)), std::move(marks2));
}

std::string canonical_key(const MarkedPlaneGraph& mg, IsoGroup group) {
  return to_rotg(canonical_form(mg, group));
}

std::string key_digest(const std::string& key) {
  return sha256_hex(key).substr(0, 16);
}

}  // namespace critatlas
