#pragma once

// Construction strategies: produce a compatible induced partition for an
// essential family, then assemble the full residue certificate (matrix,
// determinant, colorings, degree).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "reskit/coloring.hpp"
#include "reskit/degree.hpp"
#include "reskit/laurent.hpp"
#include "reskit/partition.hpp"

namespace reskit {

// A complete flag of the Minkowski sum together with, for every member, the
// chain of member faces it decomposes into.  Acceptance requires every
// member chain to have dims exactly 0..n-1.
struct SharedFlag {
    std::vector<FaceRef> sum_flag;                 // faces of the sum, dims 0..n-1
    std::vector<std::vector<FaceRef>> member_flags; // member_flags[i][k] ⊂ member i
};

std::optional<SharedFlag> find_shared_flag(const std::vector<LatticePolytope>& family,
                                           const LatticePolytope& sum);

// Partition from a shared flag: class j of member i collects the lattice
// points of the dim-j flag face that are not already in the dim-(j-1) face.
PartitionMatrix locally_unmixed_partition(const std::vector<LatticePolytope>& family,
                                          const SharedFlag& flag);

// Planar classification: which construction the edge-label window selected.
enum class Dim2Case {
    LocallyUnmixed,     // one edge carries all three members
    PartiallyUnmixed2a, // window [{i,j},{k}]
    PartiallyUnmixed2b, // window [{i,j},{j,k}]
    GenericallyMixed,   // window of length >= 3
    Exceptional,        // no useful element exists
};

struct Dim2Report {
    Dim2Case kind = Dim2Case::Exceptional;
    // ccw edges of the sum as (label set, primitive inner normal), starting
    // at the edge leaving the lex-smallest vertex.
    std::vector<std::pair<std::vector<int>, VecZ>> edge_labels;
    std::vector<int> window; // indices into edge_labels
    std::string note;        // which sub-rule fired (useful in logs)
};

// The planar construction.  Throws ExceptionalFamily on exceptional input
// and NoPartitionFound if even the bounded search fallback comes up empty.
PartitionMatrix dim2_partition(const std::vector<LatticePolytope>& family, Dim2Report* report = nullptr);

// A planar family is exceptional when two members are non-parallel segments
// and the third member's normal fan has exactly the rays of the fan of the
// sum of those segments.
bool is_exceptional(const std::vector<LatticePolytope>& family);

struct SearchOptions {
    int max_total_vertices = 14; // ResourceLimit beyond this
    bool exhaust_all = false;    // enumerate everything instead of stopping at the first hit
    std::uint64_t seed = 20240915;
};

struct SearchResult {
    std::optional<PartitionMatrix> first; // first compatible matrix with |cdeg| = 1
    // With exhaust_all: every compatible induced matrix, paired with its
    // determinant (supports the everything-vanishes check on exceptional
    // families).
    std::vector<std::pair<PartitionMatrix, LaurentPoly>> all_compatible;
    long partitions_tried = 0;
};

SearchResult exhaustive_search(const std::vector<LatticePolytope>& family,
                               const SearchOptions& opts = {});

enum class Strategy { Auto, LocallyUnmixed, Dim2, Search };

struct ConstructOptions {
    Strategy strategy = Strategy::Auto;
    SearchOptions search;
    DegreeOptions degree;
};

struct ResidueCertificate {
    PartitionMatrix partition;
    std::vector<std::vector<LaurentPoly>> matrix;
    LaurentPoly determinant;
    int degree = 0;
    bool determinant_interior = false;
    FaceColoring max_coloring;
    FaceColoring min_coloring;
    std::string strategy_used;
    std::optional<Dim2Report> dim2;
    ValidationReport validation;
};

// End-to-end construction for an essential family.  Throws NonEssential,
// ExceptionalFamily or NoPartitionFound as appropriate.  A degree of zero is
// reported, not thrown: the element exists but certifies nothing useful.
ResidueCertificate residue_element(const std::vector<LatticePolytope>& family,
                                   const ConstructOptions& opts = {});

// Same pipeline but with a caller-supplied partition (validated first).
ResidueCertificate certificate_for_partition(const std::vector<LatticePolytope>& family,
                                             const PartitionMatrix& m,
                                             const ConstructOptions& opts = {});

} // namespace reskit
