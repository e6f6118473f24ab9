// Generation of the disk catalogs: all critical plane graphs of girth 5
// with a marked boundary cycle of a given length, built bottom-up by
// boundary merging, subdivision, path covering and vertex splitting with
// face fillings, closed under the path-cover operator.
#ifndef CRITATLAS_DISKGEN_HPP
#define CRITATLAS_DISKGEN_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "critatlas/canonical.hpp"
#include "critatlas/color.hpp"
#include "critatlas/marked_graph.hpp"

namespace critatlas {

struct DiskMember {
  MarkedPlaneGraph mg;  // canonical form
  std::string key;      // canonical record (rotg text)
  bool nontrivial = false;
};

struct DiskCatalog {
  int boundary = 0;
  std::vector<DiskMember> members;  // sorted by key
  int size() const { return static_cast<int>(members.size()); }
  int nontrivial_count() const;
};

using DiskCatalogs = std::map<int, DiskCatalog>;

struct GenStats {
  uint64_t produced = 0;
  uint64_t invalid = 0;        // construction rejected (loops, parallels, euler)
  uint64_t girth_rejected = 0;
  uint64_t pruned = 0;         // structural prefilters
  uint64_t duplicates = 0;
  uint64_t tested = 0;         // criticality runs
  uint64_t kept = 0;
  std::string to_string() const;
};

struct BuildOptions {
  IsoGroup group = IsoGroup::with_reflection;
  int threads = 0;  // 0: use worker_count()
  bool log = false;
};

// --- single-candidate operations (boundary positions index the mark walk) ---

// Merge g1 and g2 by identifying boundary paths of length t; p2 may run
// forward or backward along g2's walk, and g2 may be mirrored first.  The
// merged boundary has length l1 + l2 - 2t.
std::optional<MarkedPlaneGraph> merge_on_boundary_paths(const MarkedPlaneGraph& g1, int p1,
                                                        const MarkedPlaneGraph& g2, int p2,
                                                        bool p2_forward, int t,
                                                        GraphFault* fault = nullptr);

// Subdivide the boundary edge at walk position p; boundary grows by one.
MarkedPlaneGraph subdivide_boundary_edge(const MarkedPlaneGraph& g, int p);

// Cover the boundary 4-path starting at walk position p with a new
// 4-path strutted to the old midpoint; boundary length is preserved and
// two 5-faces appear.
std::optional<MarkedPlaneGraph> cover_boundary_path(const MarkedPlaneGraph& g, int p,
                                                    GraphFault* fault = nullptr);

// Split the middle vertex of the boundary 5-path at walk position p
// between fan positions (fan_index counts the split edge among the
// midpoint's neighbors from the path, 2..degree) and cover with a path of
// 4 + extra vertices (extra in {0,1}); boundary grows by extra + 1.
std::optional<MarkedPlaneGraph> split_and_cover(const MarkedPlaneGraph& g, int p,
                                                int fan_index, int extra,
                                                GraphFault* fault = nullptr);

// All graphs obtained by filling every internal face of g (of length >=
// 8) with catalog members of matching boundary, in every rotation and
// both orientations; girth-filtered, deduplicated.  g itself (all faces
// left empty) is included.
std::vector<MarkedPlaneGraph> face_fillings(const MarkedPlaneGraph& g,
                                            const DiskCatalogs& catalogs,
                                            const BuildOptions& opt);

// K_5, K_6, K_7: only the bare cycles (no nontrivial member exists below
// boundary length 8).
DiskCatalogs base_catalogs(const BuildOptions& opt);

// Build the catalog for one boundary length from all lower ones.
DiskCatalog build_catalog(int boundary, const DiskCatalogs& lower, const BuildOptions& opt,
                          CriticalityCache* cache = nullptr, GenStats* stats = nullptr);

// Base plus build_catalog for 8..max_boundary.
DiskCatalogs build_disk_catalogs(int max_boundary, const BuildOptions& opt,
                                 GenStats* stats = nullptr);

// --- surveys over built catalogs ---

struct DiskSurveyRow {
  int boundary = 0;
  int total = 0;
  int nontrivial = 0;
  int filtered = 0;        // nontrivial, no shortcut <= 2, no adjacent degree-2
  int no_shortcut4 = 0;    // nontrivial, no shortcut <= 4
};
std::vector<DiskSurveyRow> survey_catalogs(const DiskCatalogs& catalogs);

}  // namespace critatlas

#endif
