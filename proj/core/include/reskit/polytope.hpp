#pragma once

// Lattice polytopes in Z^n with exact facet/face machinery.  Geometry is
// intentionally naive: every affinely independent subset of the right size
// proposes a supporting hyperplane, and candidates are filtered by checking
// all points.  That is O(V^dim) hyperplane proposals, which is perfectly
// fine at the scale this library targets (ambient dimension <= 4, a few
// dozen vertices) and keeps the code auditable.

#include <string>
#include <vector>

#include "reskit/vec.hpp"

namespace reskit {

// Inner facet inequality <u, normal> + offset >= 0, tight on the facet.
// `normal` is primitive and lies in the direction space of the polytope, so
// lower-dimensional polytopes get canonical facet data inside their span.
struct Facet {
    VecZ normal;
    Int offset;
};

// Affine-span equation <u, normal> + offset == 0 satisfied by every point.
struct SpanEquation {
    VecZ normal;
    Int offset;
};

// A face, identified by the sorted list of vertex indices it contains.
// `witness` is an integer direction whose minimizing face is exactly this
// face (sum of the primitive inner normals of the containing facets); the
// whole-polytope marker uses the zero witness and `whole == true`.
struct FaceRef {
    std::vector<int> vertex_set;
    int dim = -1;
    VecZ witness;
    bool whole = false;

    friend bool operator==(const FaceRef& a, const FaceRef& b) {
        return a.whole == b.whole && a.vertex_set == b.vertex_set;
    }
};

class LatticePolytope {
public:
    // Convex hull of a finite point set.  Throws InvalidInput on an empty
    // set or inconsistent coordinate sizes.
    static LatticePolytope hull(std::vector<VecZ> points, int ambient_dim);

    int ambient_dim() const { return ambient_dim_; }
    int dim() const { return dim_; }

    // Vertices in colex order.
    const std::vector<VecZ>& vertices() const { return vertices_; }
    const std::vector<Facet>& facets() const { return facets_; }
    const std::vector<SpanEquation>& span_equations() const { return span_; }

    bool contains(const VecZ& u) const;

    // Strict interior relative to the ambient space; always false when
    // dim() < ambient_dim().
    bool interior_contains(const VecZ& u) const;

    // All lattice points, in colex order.
    std::vector<VecZ> lattice_points() const;

    // The face minimized by an integer direction.
    FaceRef face_of(const VecZ& direction) const;

    // Smallest face containing u (u must lie in the polytope); returns the
    // whole-polytope marker when u is in the relative interior.
    FaceRef minimal_face(const VecZ& u) const;

    // Proper faces of every dimension 0..dim()-1 in canonical order
    // (dimension, then colex on barycenters, then vertex set).
    const std::vector<FaceRef>& proper_faces() const;

    // Complete flags: chains of proper faces with dims exactly 0..dim()-1,
    // listed in lex order of their face indices.
    std::vector<std::vector<FaceRef>> complete_flags() const;

    VecQ barycenter() const;
    VecQ face_barycenter(const FaceRef& f) const;

    // Whole-polytope marker as a FaceRef.
    FaceRef whole_face() const;

    // Orientation sign of a complete flag of a full-dimensional polytope:
    // determinant of the edge vectors from the flag vertex to the
    // barycenters of the flag faces of dims 1..dim-1 and finally to the
    // barycenter of the whole polytope.
    int flag_sign(const std::vector<FaceRef>& flag) const;

private:
    int ambient_dim_ = 0;
    int dim_ = 0;
    std::vector<VecZ> vertices_;
    std::vector<Facet> facets_;
    std::vector<SpanEquation> span_;
    mutable std::vector<FaceRef> faces_cache_;
    mutable bool faces_built_ = false;
};

LatticePolytope minkowski(const LatticePolytope& a, const LatticePolytope& b);
LatticePolytope minkowski_sum(const std::vector<LatticePolytope>& members);

struct EssentialReport {
    bool essential = false;
    // First violating index subset (size-major, then lex) when not
    // essential; empty otherwise.
    std::vector<int> witness_subset;
};

// A family of n+1 polytopes in Z^n is essential when every nonempty subset
// I of at most n members spans a Minkowski sum of dimension >= |I|.
EssentialReport is_essential(const std::vector<LatticePolytope>& family);

// Vertices of a 2-dimensional polytope in counterclockwise cycle order,
// starting at the lexicographically smallest vertex (plain lex).  Returns
// indices into vertices().
std::vector<int> ccw_vertex_cycle(const LatticePolytope& p);

std::string to_string(const VecZ& v);
std::string to_string(const FaceRef& f, const LatticePolytope& p);

} // namespace reskit
