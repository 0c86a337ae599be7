#pragma once

// Coefficient partitions: each member polytope's lattice points are split
// into classes 0..n, one class per member of the family.  A partition is
// *induced* when every non-vertex point sits in a class that also contains a
// vertex of its minimal face, and *compatible* when no transversal choice of
// points from distinct classes can land its sum on the boundary of the
// Minkowski sum.

#include <optional>
#include <string>
#include <vector>

#include "reskit/polytope.hpp"

namespace reskit {

// Class index (0..n) for each vertex of one member, aligned with
// LatticePolytope::vertices() order.
struct VertexPartition {
    std::vector<int> cls;
};

// cells[i][j] = lattice points of member i assigned to class j, colex
// sorted.  Rows must partition the member's lattice points.
struct PartitionMatrix {
    std::vector<std::vector<std::vector<VecZ>>> cells;

    int members() const { return static_cast<int>(cells.size()); }
    int classes() const { return cells.empty() ? 0 : static_cast<int>(cells[0].size()); }
};

// Classes that an induced partition may give a non-vertex point: the classes
// of the vertices of its minimal face.
std::vector<int> allowed_classes(const LatticePolytope& p, const VertexPartition& vp,
                                 const VecZ& point);

// Extend a vertex partition to all lattice points of one member.  Non-vertex
// points take the class of the colex-smallest vertex of their minimal face.
std::vector<std::vector<VecZ>> induce_row(const LatticePolytope& p, const VertexPartition& vp,
                                          int num_classes);

PartitionMatrix induce(const std::vector<LatticePolytope>& family,
                       const std::vector<VertexPartition>& vps);

// Read the vertex classes back off a partition matrix row.
VertexPartition vertex_classes_of_row(const LatticePolytope& p,
                                      const std::vector<std::vector<VecZ>>& row);

struct CompatibilityWitness {
    std::vector<int> permutation;   // class assigned to each member
    std::vector<VecZ> choices;      // chosen point per member
    VecZ sum;                       // their (non-interior) sum
    std::vector<int> face_vertex_set; // for the face-based check: offending face of the sum
};

struct CompatibilityResult {
    bool compatible = false;
    std::optional<CompatibilityWitness> witness;
};

// Definition-level check: every transversal sum must be interior to the
// Minkowski sum.  Exponential but exact; the reference the fast check is
// measured against.
CompatibilityResult compatibility_bruteforce(const std::vector<LatticePolytope>& family,
                                             const PartitionMatrix& m,
                                             const LatticePolytope& sum);

// Face-based check: for every proper face of the Minkowski sum the 0/1
// incidence matrix of cells against member faces must have permanent zero.
CompatibilityResult compatibility_by_faces(const std::vector<LatticePolytope>& family,
                                           const PartitionMatrix& m,
                                           const LatticePolytope& sum);

struct ValidationCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ValidationReport {
    bool ok = false;
    std::vector<ValidationCheck> checks;
};

// Full validation: shape, row partitions, induced condition, compatibility.
ValidationReport validate(const std::vector<LatticePolytope>& family, const PartitionMatrix& m);

} // namespace reskit
