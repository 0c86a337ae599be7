#pragma once

// Facet colorings.  For a face of the Minkowski sum, the coloring matrix
// records which cells of the partition touch the corresponding face of each
// member.  Compatibility makes every such matrix permanent-zero, and the
// combinatorics of the admissible color sets (the column sets J with enough
// all-zero rows) drive both the certificate and the degree computation.

#include <optional>
#include <vector>

#include "reskit/partition.hpp"

namespace reskit {

using Mat01 = std::vector<std::vector<int>>;

// Entry (i,j) is 1 when cell (i,j) meets the face of member i selected by
// the witness direction of `face` (a face of the Minkowski sum).
Mat01 coloring_matrix(const std::vector<LatticePolytope>& family, const PartitionMatrix& m,
                      const FaceRef& face);

// Exact permanent; matrices beyond 8x8 are refused (InvalidInput), this
// library never needs them.
Int permanent(const Mat01& m);

// An r x s all-zero submatrix with r + s = size + 1, which certifies a zero
// permanent.  Row/column index sets are the lex-first choice produced by a
// maximum-matching argument.
struct ZeroBlock {
    std::vector<int> rows;
    std::vector<int> cols;
};
std::optional<ZeroBlock> fk_zero_submatrix(const Mat01& m);

// A color set J (nonempty, proper subset of columns) is admissible when at
// least (size + 1) - |J| rows vanish identically on J.
bool is_admissible(const Mat01& m, const std::vector<int>& J);
std::vector<std::vector<int>> admissible_colorings(const Mat01& m);

// Union of the minimal admissible sets / intersection of the maximal ones.
// Throws PreconditionViolated when no admissible set exists at all.  The
// results are themselves admissible (with min ⊆ max) whenever no row of the
// matrix is all zero — always the case for coloring matrices of actual
// partitions, where every member face meets some cell.  On arbitrary 0/1
// matrices with an all-zero row the maximal admissible sets can be disjoint
// and the returned sets carry no guarantee.
std::vector<int> canonical_min_coloring(const Mat01& m);
std::vector<int> canonical_max_coloring(const Mat01& m);

enum class ColoringFlavor { Min, Max };

// Color assignment on every proper face of the Minkowski sum.
struct FaceColoring {
    LatticePolytope sum;
    std::vector<FaceRef> faces;           // == sum.proper_faces()
    std::vector<std::vector<int>> colors; // sorted color set per face
    ColoringFlavor flavor = ColoringFlavor::Max;

    const std::vector<int>* colors_of(const FaceRef& f) const;
};

FaceColoring face_coloring(const std::vector<LatticePolytope>& family, const PartitionMatrix& m,
                           ColoringFlavor flavor);

// True when along every complete flag of the sum the union of the colors of
// the flag's faces stays a proper subset of {0..n}; checking complete flags
// suffices because color unions only grow along chains.
bool is_simplicial(const FaceColoring& fc);

} // namespace reskit
