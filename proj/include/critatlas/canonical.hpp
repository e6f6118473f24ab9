// Canonical forms of marked plane graphs under embedding isomorphism.
#ifndef CRITATLAS_CANONICAL_HPP
#define CRITATLAS_CANONICAL_HPP

#include <string>

#include "critatlas/marked_graph.hpp"

namespace critatlas {

// Whether reflections (reversing every rotation) are part of the
// isomorphism group.  The published catalog counts decide which variant a
// run should use; both are kept selectable.
enum class IsoGroup { with_reflection, orientation_only };

// Relabeled representative: two marked graphs are isomorphic (marks to
// marks, cylinder pair unordered) iff their canonical forms serialize
// identically.  The traversal is rooted at every dart of every marked
// face (reversed darts for the mirrored orientation) and the

// lexicographically least code wins.
MarkedPlaneGraph canonical_form(const MarkedPlaneGraph& mg, IsoGroup group);

// Serialized canonical form; used as the dedup key and as the stored
// record body.
std::string canonical_key(const MarkedPlaneGraph& mg, IsoGroup group);

// Short printable id for tables: hex digest prefix of the key.
std::string key_digest(const std::string& key);

}  // namespace critatlas

#endif
