#include "critatlas/marked_graph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace critatlas {

std::optional<MarkedPlaneGraph> MarkedPlaneGraph::try_create(PlaneGraph g,
                                                             std::vector<Mark> marks,
                                                             GraphFault* fault) {
  auto fail = [&](GraphFault f) {
    if (fault) *fault = f;
    return std::nullopt;
  };
  if (marks.empty() || marks.size() > 2) return fail(GraphFault::bad_mark);
  MarkedPlaneGraph mg;
  mg.marks_ = std::move(marks);
  for (Mark& m : mg.marks_) {
    if (m.kind == MarkKind::vertex) {
      if (m.vertex < 0 || m.vertex >= g.order()) return fail(GraphFault::bad_mark);
      mg.cycles_.push_back({m.vertex});
      mg.face_idx_.push_back(-1);
    } else {
      if (g.rot_index(m.dart.tail, m.dart.head) < 0) return fail(GraphFault::bad_mark);
      int fi = g.face_of(m.dart);
      const FaceWalk& w = g.faces()[fi];
      if (!w.is_cycle()) return fail(GraphFault::degenerate_boundary);
      mg.cycles_.push_back(w.vertices());
      mg.face_idx_.push_back(fi);
    }
  }
  if (mg.marks_.size() == 2 && mg.face_idx_[0] >= 0 && mg.face_idx_[0] == mg.face_idx_[1])
    return fail(GraphFault::bad_mark);
  if (mg.marks_.size() == 2 && mg.marks_[0].kind == MarkKind::vertex &&
      mg.marks_[1].kind == MarkKind::vertex && mg.marks_[0].vertex == mg.marks_[1].vertex)
    return fail(GraphFault::bad_mark);
  mg.g_ = std::move(g);
  if (fault) *fault = GraphFault::none;
  return mg;
}

MarkedPlaneGraph::MarkedPlaneGraph(PlaneGraph g, std::vector<Mark> marks) {
  GraphFault f = GraphFault::none;
  auto mg = try_create(std::move(g), std::move(marks), &f);
  if (!mg) throw GraphError(f, std::string("MarkedPlaneGraph: ") + fault_name(f));
  *this = std::move(*mg);
}

int MarkedPlaneGraph::mark_length(int i) const {
  return marks_[i].kind == MarkKind::face ? static_cast<int>(cycles_[i].size()) : 0;
}

std::vector<int> MarkedPlaneGraph::marked_vertices() const {
  std::vector<int> out;
  for (const auto& c : cycles_) out.insert(out.end(), c.begin(), c.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::pair<int, int>> MarkedPlaneGraph::marked_edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < mark_count(); ++i) {
    if (marks_[i].kind != MarkKind::face) continue;
    const std::vector<int>& c = cycles_[i];
    for (size_t j = 0; j < c.size(); ++j) {
      int a = c[j], b = c[(j + 1) % c.size()];
      out.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool MarkedPlaneGraph::in_some_mark(int v) const {
  for (const auto& c : cycles_)
    if (std::find(c.begin(), c.end(), v) != c.end()) return true;
  return false;
}

MarkedPlaneGraph make_disk(PlaneGraph g, Dart boundary) {
  return MarkedPlaneGraph(std::move(g), {Mark::face_mark(boundary)});
}

MarkedPlaneGraph make_cylinder(PlaneGraph g, Mark c1, Mark c2) {
  return MarkedPlaneGraph(std::move(g), {c1, c2});
}

std::string to_rotg(const MarkedPlaneGraph& mg, const std::string& comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << "\n";
  const PlaneGraph& g = mg.graph();
  out << g.order() << " " << g.size() << "\n";
  for (int v = 0; v < g.order(); ++v) {
    out << v << ":";
    for (int u : g.rotation(v)) out << " " << u;
    out << "\n";
  }
  for (int i = 0; i < mg.mark_count(); ++i) {
    const Mark& m = mg.mark(i);
    const char* name = mg.mark_count() == 1 ? "B" : (i == 0 ? "C1" : "C2");
    if (m.kind == MarkKind::vertex)
      out << "mark " << name << ": vertex " << m.vertex << "\n";
    else
      out << "mark " << name << ": " << m.dart.tail << " " << m.dart.head << "\n";
  }
  return out.str();
}

namespace {

std::string strip_comment(const std::string& line) {
  size_t h = line.find('#');
  std::string s = h == std::string::npos ? line : line.substr(0, h);
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

std::vector<MarkedPlaneGraph> parse_rotg(std::istream& in) {
  std::vector<MarkedPlaneGraph> out;
  std::string line;
  int n = -1, m = -1;
  std::vector<std::vector<int>> rot;
  std::vector<Mark> marks;
  int rows = 0;

  auto flush = [&]() {
    if (n < 0) return;
    if (rows != n || marks.empty())
      throw GraphError(GraphFault::bad_mark, "rotg: truncated record");
    PlaneGraph g(rot);
    if (g.size() != m) throw GraphError(GraphFault::bad_mark, "rotg: edge count mismatch");
    out.emplace_back(std::move(g), marks);
    n = m = -1;
    rot.clear();
    marks.clear();
    rows = 0;
  };

  while (std::getline(in, line)) {
    std::string s = strip_comment(line);
    if (s.empty()) continue;
    if (s.rfind("mark", 0) == 0) {
      std::istringstream ss(s.substr(4));
      std::string name, tok;
      ss >> name;  // "B:", "C1:", "C2:" (colon may stick to the name)
      ss >> tok;
      if (tok == "vertex") {
        int v;
        ss >> v;
        marks.push_back(Mark::vertex_mark(v));
      } else {
        int u = std::stoi(tok), v;
        ss >> v;
        marks.push_back(Mark::face_mark({u, v}));
      }
      continue;
    }
    std::istringstream ss(s);
    if (s.find(':') == std::string::npos) {
      // header line starts a new record
      flush();
      ss >> n >> m;
      if (!ss || n <= 0) throw GraphError(GraphFault::bad_mark, "rotg: bad header");
      rot.assign(n, {});
      continue;
    }
    int v;
    char colon;
    ss >> v >> colon;
    if (!ss || colon != ':' || v < 0 || v >= n)
      throw GraphError(GraphFault::bad_mark, "rotg: bad rotation line");
    int u;
    while (ss >> u) rot[v].push_back(u);
    ++rows;
  }
  flush();
  return out;
}

std::vector<MarkedPlaneGraph> parse_rotg_string(const std::string& text) {
  std::istringstream in(text);
  return parse_rotg(in);
}

}  // namespace critatlas
