#include <doctest.h>

#include <random>
#include <functional>
#include <set>

#include "reskit/polytope.hpp"

using namespace reskit;

namespace {

VecZ zv(std::initializer_list<long> xs) {
    VecZ v;
    for (long x : xs) v.push_back(Int(x));
    return v;
}

LatticePolytope hull2(std::initializer_list<std::initializer_list<long>> pts) {
    std::vector<VecZ> v;
    for (auto p : pts) v.push_back(zv(p));
    return LatticePolytope::hull(v, static_cast<int>(v.begin()->size()));
}

// Independent containment oracle via Caratheodory: u is in the hull iff some
// affinely independent (d+1)-subset of the points carries it with
// nonnegative barycentric coordinates.  Only uses the linear solver.
bool contains_oracle(const std::vector<VecZ>& pts, const VecQ& u) {
    const std::size_t n = u.size();
    const std::size_t k = n + 1;
    if (pts.size() < k) {
        // Low-dimensional input: pad the subset size down to what exists.
    }
    std::vector<std::size_t> idx(std::min(k, pts.size()));
    // enumerate subsets of size up to k
    std::vector<int> sel;
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t need) {
        if (need == 0) {
            MatQ a(n + 1, VecQ(sel.size()));
            for (std::size_t c = 0; c < sel.size(); ++c) {
                for (std::size_t r = 0; r < n; ++r) a[r][c] = Rat(pts[sel[c]][r]);
                a[n][c] = 1;
            }
            VecQ b = u;
            b.push_back(Rat(1));
            LinSolve s = solve(a, b);
            if (s.status != SolveStatus::Unique) return false;
            for (const Rat& lam : s.x) {
                if (lam < 0) return false;
            }
            return true;
        }
        for (std::size_t i = start; i + need <= pts.size() + 1 && i < pts.size(); ++i) {
            sel.push_back(static_cast<int>(i));
            if (rec(i + 1, need - 1)) return true;
            sel.pop_back();
        }
        return false;
    };
    for (std::size_t size = 1; size <= std::min(k, pts.size()); ++size) {
        sel.clear();
        if (rec(0, size)) return true;
    }
    return false;
}

VecQ qpoint(const VecZ& u) {
    VecQ q;
    for (const Int& c : u) q.push_back(Rat(c));
    return q;
}

} // namespace

TEST_CASE("hull of the unit square") {
    LatticePolytope sq = hull2({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    CHECK(sq.dim() == 2);
    CHECK(sq.vertices().size() == 4);
    CHECK(sq.facets().size() == 4);
    CHECK(sq.lattice_points().size() == 4);
    CHECK(sq.span_equations().empty());
    CHECK(sq.contains(zv({0, 1})));
    CHECK_FALSE(sq.contains(zv({2, 0})));
    CHECK_FALSE(sq.interior_contains(zv({0, 0})));
}

TEST_CASE("hull drops interior and duplicate points") {
    LatticePolytope big = hull2({{0, 0}, {2, 0}, {0, 2}, {1, 1}, {0, 0}, {1, 0}});
    CHECK(big.vertices().size() == 3);
    CHECK(big.lattice_points().size() == 6);
    CHECK(big.interior_contains(zv({0, 0})) == false);
}

TEST_CASE("lattice points come out in colex order") {
    LatticePolytope t2 = hull2({{0, 0}, {2, 0}, {0, 2}});
    std::vector<VecZ> expect{zv({0, 0}), zv({1, 0}), zv({2, 0}),
                             zv({0, 1}), zv({1, 1}), zv({0, 2})};
    CHECK(t2.lattice_points() == expect);
}

TEST_CASE("1-dimensional polytopes have endpoint facets") {
    LatticePolytope seg = LatticePolytope::hull({zv({0}), zv({3})}, 1);
    CHECK(seg.dim() == 1);
    CHECK(seg.facets().size() == 2);
    CHECK(seg.lattice_points().size() == 4);
    CHECK(seg.interior_contains(zv({1})));
    CHECK_FALSE(seg.interior_contains(zv({0})));
    CHECK_FALSE(seg.interior_contains(zv({3})));
}

TEST_CASE("a segment in the plane is not full-dimensional") {
    LatticePolytope seg = hull2({{0, 0}, {2, 2}});
    CHECK(seg.dim() == 1);
    CHECK(seg.span_equations().size() == 1);
    CHECK(seg.lattice_points() == std::vector<VecZ>{zv({0, 0}), zv({1, 1}), zv({2, 2})});
    // interior relative to the ambient space is empty for lower-dim bodies
    CHECK_FALSE(seg.interior_contains(zv({1, 1})));
    CHECK(seg.contains(zv({1, 1})));
    CHECK_FALSE(seg.contains(zv({1, 0})));
}

TEST_CASE("containment agrees with the Caratheodory oracle on random hulls") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> coord(0, 4);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + trial % 2;
        std::vector<VecZ> pts;
        for (int i = 0; i < n + 2; ++i) {
            VecZ p;
            for (int c = 0; c < n; ++c) p.push_back(Int(coord(rng)));
            pts.push_back(p);
        }
        LatticePolytope P = [&]() {
            try {
                return LatticePolytope::hull(pts, n);
            } catch (const InvalidInput&) {
                return LatticePolytope::hull({pts[0]}, n); // duplicate-only corner case
            }
        }();
        for (int probe = 0; probe < 20; ++probe) {
            VecZ u;
            for (int c = 0; c < n; ++c) u.push_back(Int(coord(rng)));
            CHECK(P.contains(u) == contains_oracle(P.vertices(), qpoint(u)));
        }
    }
}

TEST_CASE("face_of returns the exact minimizing face") {
    LatticePolytope hexsum = hull2({{0, 0}, {2, 0}, {3, 1}, {2, 2}, {1, 2}, {0, 1}});
    FaceRef bottom = hexsum.face_of(zv({0, 1}));
    CHECK(bottom.dim == 1);
    REQUIRE(bottom.vertex_set.size() == 2);
    CHECK(hexsum.vertices()[bottom.vertex_set[0]] == zv({0, 0}));
    CHECK(hexsum.vertices()[bottom.vertex_set[1]] == zv({2, 0}));

    FaceRef corner = hexsum.face_of(zv({1, 1}));
    CHECK(corner.dim == 0);
    CHECK(hexsum.vertices()[corner.vertex_set[0]] == zv({0, 0}));

    FaceRef whole = hexsum.face_of(zv({0, 0}));
    CHECK(whole.whole);
}

TEST_CASE("minimal_face finds the smallest face containing a point") {
    LatticePolytope t2 = hull2({{0, 0}, {2, 0}, {0, 2}});
    CHECK(t2.minimal_face(zv({1, 0})).dim == 1);
    CHECK(t2.minimal_face(zv({0, 0})).dim == 0);
    CHECK(t2.minimal_face(zv({1, 1})).dim == 1); // hypotenuse midpoint
    FaceRef inside = t2.minimal_face(zv({1, 1}));
    // on the hypotenuse from (2,0) to (0,2)
    std::set<VecZ> vs;
    for (int vi : inside.vertex_set) vs.insert(t2.vertices()[vi]);
    CHECK(vs == std::set<VecZ>{zv({2, 0}), zv({0, 2})});
}

TEST_CASE("proper_faces of the hexagon: six vertices then six edges") {
    LatticePolytope hexsum = hull2({{0, 0}, {2, 0}, {3, 1}, {2, 2}, {1, 2}, {0, 1}});
    const auto& faces = hexsum.proper_faces();
    REQUIRE(faces.size() == 12);
    for (int i = 0; i < 6; ++i) CHECK(faces[i].dim == 0);
    for (int i = 6; i < 12; ++i) CHECK(faces[i].dim == 1);
    // Each face's witness direction must actually cut out that face.
    for (const FaceRef& f : faces) {
        FaceRef again = hexsum.face_of(f.witness);
        CHECK(again.vertex_set == f.vertex_set);
    }
}

TEST_CASE("complete flags of the square") {
    LatticePolytope sq = hull2({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    auto flags = sq.complete_flags();
    CHECK(flags.size() == 8); // 4 vertices x 2 incident edges
    for (const auto& flag : flags) {
        REQUIRE(flag.size() == 2);
        CHECK(flag[0].dim == 0);
        CHECK(flag[1].dim == 1);
        CHECK(std::includes(flag[1].vertex_set.begin(), flag[1].vertex_set.end(),
                            flag[0].vertex_set.begin(), flag[0].vertex_set.end()));
    }
}

TEST_CASE("flag_sign is the orientation of the flag frame") {
    LatticePolytope sq = hull2({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    int plus = 0, minus = 0;
    for (const auto& flag : sq.complete_flags()) {
        int s = sq.flag_sign(flag);
        CHECK((s == 1 || s == -1));
        (s == 1 ? plus : minus)++;
    }
    CHECK(plus == 4); // mirror flags cancel pairwise
    CHECK(minus == 4);
}

TEST_CASE("minkowski sum agrees with the all-pairs oracle") {
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<int> coord(0, 3);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<VecZ> a, b;
        for (int i = 0; i < 3; ++i) a.push_back(zv({coord(rng), coord(rng)}));
        for (int i = 0; i < 3; ++i) b.push_back(zv({coord(rng), coord(rng)}));
        LatticePolytope A = LatticePolytope::hull(a, 2), B = LatticePolytope::hull(b, 2);
        LatticePolytope S = minkowski(A, B);
        // oracle: hull of all lattice-point pairwise sums
        std::vector<VecZ> sums;
        for (const VecZ& u : A.lattice_points()) {
            for (const VecZ& v : B.lattice_points()) sums.push_back(vadd(u, v));
        }
        LatticePolytope S2 = LatticePolytope::hull(sums, 2);
        CHECK(S.vertices() == S2.vertices());
    }
}

TEST_CASE("essential families and their witnesses") {
    LatticePolytope seg_x = hull2({{0, 0}, {1, 0}});
    LatticePolytope seg_y = hull2({{0, 0}, {0, 1}});
    LatticePolytope tri = hull2({{0, 0}, {1, 0}, {0, 1}});

    CHECK(is_essential({seg_x, seg_y, tri}).essential);
    CHECK(is_essential({tri, tri, tri}).essential);

    EssentialReport bad = is_essential({seg_x, seg_x, tri});
    CHECK_FALSE(bad.essential);
    CHECK(bad.witness_subset == std::vector<int>{0, 1});
}

TEST_CASE("ccw cycle starts at the lex-smallest vertex and turns left") {
    LatticePolytope hexsum = hull2({{0, 0}, {2, 0}, {3, 1}, {2, 2}, {1, 2}, {0, 1}});
    std::vector<int> cyc = ccw_vertex_cycle(hexsum);
    REQUIRE(cyc.size() == 6);
    CHECK(hexsum.vertices()[cyc[0]] == zv({0, 0}));
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        const VecZ& a = hexsum.vertices()[cyc[i]];
        const VecZ& b = hexsum.vertices()[cyc[(i + 1) % cyc.size()]];
        const VecZ& c = hexsum.vertices()[cyc[(i + 2) % cyc.size()]];
        VecZ ab = vsub(b, a), bc = vsub(c, b);
        CHECK(ab[0] * bc[1] - ab[1] * bc[0] > 0); // strict left turns
    }
}

TEST_CASE("3-dimensional simplex basics") {
    LatticePolytope simplex = LatticePolytope::hull(
        {zv({0, 0, 0}), zv({2, 0, 0}), zv({0, 2, 0}), zv({0, 0, 2})}, 3);
    CHECK(simplex.dim() == 3);
    CHECK(simplex.facets().size() == 4);
    CHECK(simplex.lattice_points().size() == 10);
    CHECK(simplex.complete_flags().size() == 24); // 4 * 3 * 2 chains
    CHECK(simplex.interior_contains(zv({1, 1, 1})) == false); // x+y+z = 3 > 2
    LatticePolytope fat = LatticePolytope::hull(
        {zv({0, 0, 0}), zv({4, 0, 0}), zv({0, 4, 0}), zv({0, 0, 4})}, 3);
    CHECK(fat.interior_contains(zv({1, 1, 1})));
    CHECK(fat.interior_contains(zv({1, 1, 2})) == false); // x+y+z = 4, on a facet
}

TEST_CASE("face witnesses select their faces in 3d") {
    LatticePolytope cube = LatticePolytope::hull(
        {zv({0, 0, 0}), zv({1, 0, 0}), zv({0, 1, 0}), zv({0, 0, 1}),
         zv({1, 1, 0}), zv({1, 0, 1}), zv({0, 1, 1}), zv({1, 1, 1})},
        3);
    CHECK(cube.facets().size() == 6);
    const auto& faces = cube.proper_faces();
    CHECK(faces.size() == 8 + 12 + 6);
    for (const FaceRef& f : faces) {
        CHECK(cube.face_of(f.witness).vertex_set == f.vertex_set);
    }
}
