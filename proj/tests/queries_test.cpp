#include "critatlas/queries.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace critatlas;

namespace {

TEST(ShortCycles, CycleGraphs) {
  EXPECT_TRUE(short_cycles(cycle_graph(5), 4).empty());
  auto c4 = short_cycles(cycle_graph(4), 4);
  ASSERT_EQ(c4.size(), 1u);
  EXPECT_EQ(c4[0].size(), 4u);
  EXPECT_EQ(short_cycles(cycle_graph(3), 6).size(), 1u);
}

TEST(ShortCycles, Z1FindsExactlyTheTwoMarkedSquares) {
  MarkedPlaneGraph z1 = fixtures::z1_marked();
  auto cycles = short_cycles(z1.graph(), 4);
  EXPECT_EQ(cycles.size(), 2u);
  EXPECT_TRUE(girth_ok(z1));
}

TEST(ShortCycles, DoublePentagonCountsPentagons) {
  auto cycles = short_cycles(fixtures::double_pentagon(), 6);
  // two 5-cycles and the 6-cycle? no: faces are 5,5,8; cycles of length <= 6
  // are exactly the two pentagons.
  EXPECT_EQ(cycles.size(), 2u);
  for (const auto& c : cycles) EXPECT_EQ(c.size(), 5u);
}

TEST(Distance, BasicsAndMarks) {
  PlaneGraph g = cycle_graph(8);
  EXPECT_EQ(set_distance(g, {0}, {0}), 0);
  EXPECT_EQ(set_distance(g, {0}, {1}), 1);
  EXPECT_EQ(set_distance(g, {0}, {4}), 4);
  EXPECT_EQ(set_distance(g, {0, 1}, {4, 5}), 3);

  MarkedPlaneGraph t1 = fixtures::t1_marked();
  EXPECT_EQ(mark_distance(t1), 2);
  EXPECT_EQ(mark_distance(fixtures::z1_marked()), 0);
}

TEST(Distance, SymmetryAndTriangleInequality) {
  PlaneGraph g = fixtures::t1_graph();
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < g.order(); ++v) {
      int duv = set_distance(g, {u}, {v});
      EXPECT_EQ(duv, set_distance(g, {v}, {u}));
      for (int w = 0; w < g.order(); ++w)
        EXPECT_LE(duv, set_distance(g, {u}, {w}) + set_distance(g, {w}, {v}));
    }
}

TEST(Shortcut, BareCycleHasNone) {
  MarkedPlaneGraph mg = make_disk(cycle_graph(9), {0, 1});
  EXPECT_FALSE(has_shortcut(mg, 4));
}

TEST(Shortcut, ChordIsAOneShortcut) {
  // 8-cycle with the antipodal chord 0-4 (the double pentagon's outer face)
  MarkedPlaneGraph mg = fixtures::double_pentagon_disk();
  EXPECT_TRUE(has_shortcut(mg, 1));
  EXPECT_TRUE(has_shortcut(mg, 4));
}

TEST(Shortcut, LongChordPathRespectsLengthCap) {
  // 10-cycle, plus a path of length 3 between antipodal vertices 0 and 5.
  std::vector<std::vector<int>> rot(12);
  for (int v = 0; v < 10; ++v) rot[v] = {(v + 9) % 10, (v + 1) % 10};
  rot[0] = {9, 10, 1};
  rot[5] = {4, 11, 6};
  rot[10] = {0, 11};
  rot[11] = {10, 5};
  PlaneGraph g(rot);
  Dart outer = fixtures::find_cycle_face_dart(g, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  MarkedPlaneGraph mg = make_disk(std::move(g), outer);
  ASSERT_EQ(mg.mark_length(0), 10);
  EXPECT_FALSE(has_shortcut(mg, 2));
  EXPECT_TRUE(has_shortcut(mg, 3));  // 3 < distance 5 along the cycle
  EXPECT_TRUE(has_shortcut(mg, 4));
}

TEST(Connectivity, Predicates) {
  EXPECT_TRUE(two_connected(cycle_graph(5)));
  EXPECT_TRUE(two_edge_connected(cycle_graph(5)));
  PlaneGraph path({{1}, {0, 2}, {1}});
  EXPECT_FALSE(two_connected(path));
  EXPECT_FALSE(two_edge_connected(path));
  // two triangles joined by a bridge
  PlaneGraph dumbbell({{1, 2, 3}, {2, 0}, {0, 1}, {4, 5, 0}, {5, 3}, {3, 4}});
  EXPECT_FALSE(two_connected(dumbbell));
  EXPECT_FALSE(two_edge_connected(dumbbell));
  EXPECT_TRUE(two_connected(fixtures::double_pentagon()));
}

TEST(Connectivity, AdjacentDegreeTwo) {
  EXPECT_TRUE(has_adjacent_degree2(cycle_graph(4)));
  EXPECT_FALSE(has_adjacent_degree2(fixtures::t1_graph()));
}

TEST(Faces, MaxInternalFace) {
  MarkedPlaneGraph dp = fixtures::double_pentagon_disk();
  EXPECT_EQ(max_internal_face(dp), 5);
  MarkedPlaneGraph c7 = make_disk(cycle_graph(7), {0, 1});
  EXPECT_EQ(max_internal_face(c7), 7);
}

TEST(Separation, T1HasNoShortSeparator) {
  MarkedPlaneGraph t1 = fixtures::t1_marked();
  EXPECT_TRUE(internal_short_cycles(t1).empty());
}

TEST(Separation, SideAssignment) {
  MarkedPlaneGraph t1 = fixtures::t1_marked();
  // the 5-cycle through t1 t2 t3 and both linkers walls T off from B
  EXPECT_TRUE(cycle_separates_marks(t1, {8, 9, 6, 5, 4}));
  // the 8-cycle around the two left 5-faces leaves B and T on one side
  EXPECT_FALSE(cycle_separates_marks(t1, {0, 8, 4, 7, 6, 9, 2, 3}));
}

}  // namespace
