#pragma once

// Combinatorial degree of a facet coloring.  The coloring induces a
// simplicial map from the boundary of the Minkowski sum to the boundary of
// the standard simplex: each chain of faces goes to the barycenter of the
// simplex face whose coordinates are the union of the chain's colors.  The
// degree of that map is computed exactly on the second barycentric
// subdivision by counting signed preimages of a generic point, and is the
// integer certificate the library produces.

#include <cstdint>
#include <vector>

#include "reskit/coloring.hpp"

namespace reskit {

struct DegreeOptions {
    std::uint64_t seed = 20240915;
    // Barycentric anchors are the default; the alternative scheme weights
    // the simplex vertices 1,2,3,... and exists to cross-check invariance.
    bool weighted_anchor = false;
    // Draw the k-th deterministic generic sample point (k >= 0).
    int sample_index = 0;
};

// Degree of the coloring map.  Requires a simplicial coloring on the
// boundary of a full-dimensional sum; throws DegeneracyError if no generic
// sample survives the retry budget.
int pl_degree(const FaceColoring& fc, const DegreeOptions& opts = {});

// Signed count of complete flags whose dim-(k-1) face is colored exactly
// {eps(k), ..., eps(n)} for k = 1..n.  Requires the coloring to reverse the
// face order (a face's colors contain the colors of every face above it).
int signed_flag_count(const FaceColoring& fc, const std::vector<int>& eps);

// Number of chains-of-chains whose color unions march through
// {eps(n)}, {eps(n-1), eps(n)}, ...; the anchor simplices of the degree
// count for the permutation eps.
long unique_colored_flag_check(const FaceColoring& fc, const std::vector<int>& eps);

// The certificate degree of a partition: pl_degree of the maximal canonical
// coloring, cross-checked against the minimal coloring and a second sample
// point before it is returned.
int cdeg(const std::vector<LatticePolytope>& family, const PartitionMatrix& m,
         const DegreeOptions& opts = {});

} // namespace reskit
