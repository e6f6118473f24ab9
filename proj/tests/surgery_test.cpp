#include "critatlas/surgery.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "critatlas/canonical.hpp"
#include "critatlas/queries.hpp"
#include "test_support.hpp"

using namespace critatlas;

namespace {

std::vector<int> face_lengths(const PlaneGraph& g) {
  std::vector<int> ls;
  for (const auto& w : g.faces()) ls.push_back(w.length());
  std::sort(ls.begin(), ls.end());
  return ls;
}

TEST(Surgery, SubdividePentagonEdge) {
  PlaneGraph g = cycle_graph(5);
  PlaneGraph h = subdivide(g, 0, 1);
  EXPECT_EQ(h.order(), 6);
  EXPECT_EQ(face_lengths(h), (std::vector<int>{6, 6}));
  std::string hex = canonical_key(make_disk(h, {2, 3}), IsoGroup::with_reflection);
  std::string c6 = canonical_key(make_disk(cycle_graph(6), {0, 1}), IsoGroup::with_reflection);
  EXPECT_EQ(hex, c6);
}

TEST(Surgery, SuppressDegreeTwo) {
  PlaneGraph h = subdivide(cycle_graph(5), 0, 1);
  auto back = try_suppress_degree2(h, 5);
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(back->order(), 5);
  // suppressing in a triangle would double an edge
  GraphFault f;
  EXPECT_FALSE(try_suppress_degree2(cycle_graph(3), 0, &f).has_value());
  EXPECT_EQ(f, GraphFault::would_create_parallel);
}

TEST(Surgery, SplitVertexBookkeeping) {
  // splitting a degree-4 vertex into two degree-2 halves
  std::vector<std::vector<int>> rot(9);
  for (int v = 0; v < 9; ++v) rot[v] = {(v + 8) % 9, (v + 1) % 9};
  rot[0] = {8, 4, 1};
  rot[4] = {3, 0, 7, 5};
  rot[7] = {6, 4, 8};
  PlaneGraph g(rot);
  // rotation of 4 is {3,0,7,5}: cut after position 1 and after position 3
  auto split = split_vertex(g, 4, 1, 3, nullptr);
  ASSERT_TRUE(split.has_value());
  EXPECT_EQ(split->order(), 10);
  EXPECT_EQ(split->degree(4), 2);
  EXPECT_EQ(split->degree(9), 2);
  int total = 0;
  for (int v = 0; v < split->order(); ++v) total += split->degree(v);
  EXPECT_EQ(total, 2 * g.size());
}

GlueSeq shifted(GlueSeq s, int off) {
  for (int& v : s.verts) v += off;
  for (auto& g : s.gap) {
    g.first += off;
    g.second += off;
  }
  return s;
}

TEST(Surgery, IdentifyTwoPentagonsAlongAnEdge) {
  PlaneGraph c5 = cycle_graph(5);
  std::vector<std::vector<int>> uni = disjoint_union(c5, c5);
  const FaceWalk& w1 = c5.face_walk({0, 1});
  GlueSeq a = walk_segment(w1, 0, 1, true);
  bool glued = false;
  for (int start = 0; start < 5 && !glued; ++start) {
    for (bool fwd : {true, false}) {
      GlueSeq b = shifted(walk_segment(w1, start, 1, fwd), 5);
      GraphFault fault;
      auto res = identify_seqs(uni, a, b, false, &fault, nullptr);
      if (!res) continue;
      glued = true;
      EXPECT_EQ(res->order(), 8);
      EXPECT_EQ(res->size(), 9);
      EXPECT_EQ(face_lengths(*res), (std::vector<int>{5, 5, 8}));
      break;
    }
  }
  EXPECT_TRUE(glued);
}

TEST(Surgery, IdentifiedDoublePentagonMatchesHandBuilt) {
  PlaneGraph c5 = cycle_graph(5);
  std::vector<std::vector<int>> uni = disjoint_union(c5, c5);
  const FaceWalk& w1 = c5.face_walk({0, 1});
  std::string want =
      canonical_key(fixtures::double_pentagon_disk(), IsoGroup::with_reflection);
  bool matched = false;
  for (int start = 0; start < 5; ++start) {
    for (bool fwd : {true, false}) {
      GlueSeq a = walk_segment(w1, 0, 1, true);
      GlueSeq b = shifted(walk_segment(w1, start, 1, fwd), 5);
      auto res = identify_seqs(uni, a, b, false, nullptr, nullptr);
      if (!res) continue;
      // outer face: the 8-face
      for (const FaceWalk& w : res->faces()) {
        if (w.length() != 8) continue;
        std::string got =
            canonical_key(make_disk(*res, w.darts[0]), IsoGroup::with_reflection);
        EXPECT_EQ(got, want);
        matched = true;
      }
    }
  }
  EXPECT_TRUE(matched);
}

TEST(Surgery, MirrorKeepsFaceMultiset) {
  PlaneGraph g = fixtures::t1_graph();
  PlaneGraph m = mirror_graph(g);
  EXPECT_EQ(face_lengths(g), face_lengths(m));
}

TEST(Surgery, CutT1AlongShortestPathGivesLengthTwelveDisk) {
  MarkedPlaneGraph t1 = fixtures::t1_marked();
  std::vector<int> p = shortest_mark_path(t1);
  ASSERT_EQ(p.size(), 3u);  // distance two
  MarkedPlaneGraph disk = cut_along_path(t1, p);
  EXPECT_EQ(disk.mark_length(0), 4 + 4 + 2 * 2);
  EXPECT_EQ(disk.graph().order(), t1.graph().order() + 3);
  EXPECT_EQ(disk.graph().size(), t1.graph().size() + 2);
  EXPECT_TRUE(girth_ok(disk));
}

TEST(Surgery, CutZ1AtSharedVertexNeedsNoEdges) {
  // Z2-style: two squares sharing one vertex, cut at it
  std::vector<std::vector<int>> rot(7);
  // squares 0-1-2-3 and 0-4-5-6 sharing 0
  rot[0] = {1, 3, 4, 6};
  rot[1] = {0, 2};
  rot[2] = {1, 3};
  rot[3] = {2, 0};
  rot[4] = {0, 5};
  rot[5] = {4, 6};
  rot[6] = {5, 0};
  PlaneGraph g(rot);
  Dart c1 = fixtures::find_cycle_face_dart(g, {0, 1, 2, 3});
  Dart c2 = fixtures::find_cycle_face_dart(g, {0, 4, 5, 6});
  MarkedPlaneGraph z2 = make_cylinder(std::move(g), Mark::face_mark(c1), Mark::face_mark(c2));
  std::vector<int> p = shortest_mark_path(z2);
  ASSERT_EQ(p.size(), 1u);
  MarkedPlaneGraph disk = cut_along_path(z2, p);
  EXPECT_EQ(disk.mark_length(0), 8);
  std::string got = canonical_key(disk, IsoGroup::with_reflection);
  std::string want =
      canonical_key(make_disk(cycle_graph(8), {0, 1}), IsoGroup::with_reflection);
  EXPECT_EQ(got, want);
}

}  // namespace
