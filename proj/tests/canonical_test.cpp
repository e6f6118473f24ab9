#include "critatlas/canonical.hpp"

#include <gtest/gtest.h>

#include "critatlas/surgery.hpp"
#include "test_support.hpp"

using namespace critatlas;

namespace {

MarkedPlaneGraph relabeled_pentagon(const std::vector<int>& perm) {
  // 5-cycle with vertices renamed by perm
  std::vector<std::vector<int>> rot(5);
  for (int v = 0; v < 5; ++v)
    rot[perm[v]] = {perm[(v + 4) % 5], perm[(v + 1) % 5]};
  PlaneGraph g(rot);
  return make_disk(std::move(g), {perm[0], perm[1]});
}

TEST(Canonical, LabelingInvariance) {
  std::string a = canonical_key(relabeled_pentagon({0, 1, 2, 3, 4}), IsoGroup::with_reflection);
  std::string b = canonical_key(relabeled_pentagon({3, 1, 4, 0, 2}), IsoGroup::with_reflection);
  EXPECT_EQ(a, b);
  std::string c = canonical_key(relabeled_pentagon({2, 0, 4, 1, 3}), IsoGroup::orientation_only);
  std::string d = canonical_key(relabeled_pentagon({4, 3, 2, 1, 0}), IsoGroup::orientation_only);
  EXPECT_EQ(c, d);
}

TEST(Canonical, MirrorImagesMatchUnderReflectionGroup) {
  MarkedPlaneGraph t1 = fixtures::t1_marked();
  MarkedPlaneGraph mir = mirror_marked(t1);
  EXPECT_EQ(canonical_key(t1, IsoGroup::with_reflection),
            canonical_key(mir, IsoGroup::with_reflection));
  MarkedPlaneGraph dp = fixtures::double_pentagon_disk();
  EXPECT_EQ(canonical_key(dp, IsoGroup::with_reflection),
            canonical_key(mirror_marked(dp), IsoGroup::with_reflection));
}

TEST(Canonical, CylinderMarkPairIsUnordered) {
  MarkedPlaneGraph a = fixtures::t1_marked();
  MarkedPlaneGraph b(a.graph(), {a.mark(1), a.mark(0)});
  EXPECT_EQ(canonical_key(a, IsoGroup::with_reflection),
            canonical_key(b, IsoGroup::with_reflection));
}

TEST(Canonical, DistinguishesMarkPlacement) {
  // 9-cycle plus a chord from 0 to 4 gives faces of lengths 5, 6, 9;
  // marking the 5-face vs the 6-face must differ.
  std::vector<std::vector<int>> rot(9);
  for (int v = 0; v < 9; ++v) rot[v] = {(v + 8) % 9, (v + 1) % 9};
  rot[0] = {8, 4, 1};
  rot[4] = {3, 0, 5};
  PlaneGraph g(rot);
  Dart five = fixtures::find_cycle_face_dart(g, {0, 1, 2, 3, 4});
  Dart six = fixtures::find_cycle_face_dart(g, {0, 4, 5, 6, 7, 8});
  std::string k5 = canonical_key(make_disk(g, five), IsoGroup::with_reflection);
  std::string k6 = canonical_key(make_disk(g, six), IsoGroup::with_reflection);
  EXPECT_NE(k5, k6);
}

TEST(Canonical, FormIsIdempotent) {
  MarkedPlaneGraph t1 = fixtures::t1_marked();
  MarkedPlaneGraph f1 = canonical_form(t1, IsoGroup::with_reflection);
  MarkedPlaneGraph f2 = canonical_form(f1, IsoGroup::with_reflection);
  EXPECT_EQ(to_rotg(f1), to_rotg(f2));
}

TEST(Canonical, ChiralGraphSplitsUnderOrientationOnlyGroup) {
  // 9-cycle with chords 0-4 and 4-7 admits no reflective automorphism, so
  // the mirror pair collides only under the reflective group.
  std::vector<std::vector<int>> rot(9);
  for (int v = 0; v < 9; ++v) rot[v] = {(v + 8) % 9, (v + 1) % 9};
  rot[0] = {8, 4, 1};
  rot[4] = {3, 0, 7, 5};
  rot[7] = {6, 4, 8};
  PlaneGraph g(rot);
  MarkedPlaneGraph mg = make_disk(g, fixtures::find_cycle_face_dart(g, {0, 1, 2, 3, 4}));
  MarkedPlaneGraph mir = mirror_marked(mg);
  EXPECT_EQ(canonical_key(mg, IsoGroup::with_reflection),
            canonical_key(mir, IsoGroup::with_reflection));
  EXPECT_NE(canonical_key(mg, IsoGroup::orientation_only),
            canonical_key(mir, IsoGroup::orientation_only));
}

}  // namespace
