#include <doctest.h>

#include <random>
#include <set>

#include "reskit/partition.hpp"

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

// The hexagon family: x-segment, unit triangle, diagonal segment.
std::vector<LatticePolytope> hex_family() {
    return {hull2({{0, 0}, {1, 0}}), hull2({{0, 0}, {1, 0}, {0, 1}}),
            hull2({{0, 0}, {1, 1}})};
}

PartitionMatrix hex_partition() {
    PartitionMatrix m;
    m.cells = {
        {{zv({0, 0})}, {zv({1, 0})}, {}},
        {{zv({0, 0})}, {zv({1, 0})}, {zv({0, 1})}},
        {{zv({0, 0})}, {}, {zv({1, 1})}},
    };
    return m;
}

// Check that a reported witness really demonstrates incompatibility.
void check_witness(const std::vector<LatticePolytope>& family, const PartitionMatrix& m,
                   const LatticePolytope& sum, const CompatibilityWitness& w) {
    const int k = static_cast<int>(family.size());
    REQUIRE(static_cast<int>(w.permutation.size()) == k);
    REQUIRE(static_cast<int>(w.choices.size()) == k);
    std::set<int> classes(w.permutation.begin(), w.permutation.end());
    CHECK(static_cast<int>(classes.size()) == k); // a genuine transversal
    VecZ total(sum.ambient_dim(), Int(0));
    for (int i = 0; i < k; ++i) {
        const auto& cell = m.cells[i][w.permutation[i]];
        CHECK(std::find(cell.begin(), cell.end(), w.choices[i]) != cell.end());
        total = vadd(total, w.choices[i]);
    }
    CHECK(total == w.sum);
    CHECK_FALSE(sum.interior_contains(total));
}

} // namespace

TEST_CASE("allowed classes of a vertex are its own class") {
    LatticePolytope tri = hull2({{0, 0}, {2, 0}, {0, 2}});
    VertexPartition vp{{0, 1, 2}}; // vertices in colex order: (0,0),(2,0),(0,2)
    CHECK(allowed_classes(tri, vp, zv({0, 0})) == std::vector<int>{0});
    CHECK(allowed_classes(tri, vp, zv({2, 0})) == std::vector<int>{1});
    // (1,0) lies on the bottom edge spanned by classes 0 and 1
    CHECK(allowed_classes(tri, vp, zv({1, 0})) == std::vector<int>{0, 1});
    // (1,1) is on the hypotenuse between classes 1 and 2
    CHECK(allowed_classes(tri, vp, zv({1, 1})) == std::vector<int>{1, 2});
}

TEST_CASE("induce assigns non-vertex points to the colex-smallest vertex class") {
    LatticePolytope tri = hull2({{0, 0}, {2, 0}, {0, 2}});
    VertexPartition vp{{0, 1, 2}};
    auto row = induce_row(tri, vp, 3);
    // (1,0) joins class 0 (vertex (0,0) is the colex-smallest of its edge)
    CHECK(std::find(row[0].begin(), row[0].end(), zv({1, 0})) != row[0].end());
    // (1,1) joins class 1 (vertex (2,0) beats (0,2) in colex order)
    CHECK(std::find(row[1].begin(), row[1].end(), zv({1, 1})) != row[1].end());
    CHECK(row[0].size() + row[1].size() + row[2].size() == tri.lattice_points().size());

    VertexPartition back = vertex_classes_of_row(tri, row);
    CHECK(back.cls == vp.cls);
}

TEST_CASE("the hexagon partition is compatible under both checks") {
    auto family = hex_family();
    auto m = hex_partition();
    LatticePolytope sum = minkowski_sum(family);
    CompatibilityResult brute = compatibility_bruteforce(family, m, sum);
    CompatibilityResult faces = compatibility_by_faces(family, m, sum);
    CHECK(brute.compatible);
    CHECK(faces.compatible);
}

TEST_CASE("an incompatible assignment is caught with a usable witness") {
    auto family = hex_family();
    // Put both segment endpoints of member 0 into distinct classes but move
    // the triangle's (0,1) into class 1: sums can reach the boundary.
    PartitionMatrix m;
    m.cells = {
        {{zv({0, 0})}, {zv({1, 0})}, {}},
        {{zv({0, 0})}, {zv({0, 1})}, {zv({1, 0})}},
        {{zv({0, 0})}, {}, {zv({1, 1})}},
    };
    LatticePolytope sum = minkowski_sum(family);
    CompatibilityResult brute = compatibility_bruteforce(family, m, sum);
    CompatibilityResult faces = compatibility_by_faces(family, m, sum);
    CHECK_FALSE(brute.compatible);
    CHECK_FALSE(faces.compatible);
    REQUIRE(brute.witness.has_value());
    REQUIRE(faces.witness.has_value());
    check_witness(family, m, sum, *brute.witness);
    check_witness(family, m, sum, *faces.witness);
}

TEST_CASE("face check equals brute force on randomized induced partitions") {
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<int> cls(0, 2);
    auto family = hex_family();
    LatticePolytope sum = minkowski_sum(family);
    int incompatible_seen = 0;
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<VertexPartition> vps;
        for (const auto& p : family) {
            VertexPartition vp;
            for (std::size_t v = 0; v < p.vertices().size(); ++v) vp.cls.push_back(cls(rng));
            vps.push_back(vp);
        }
        PartitionMatrix m = induce(family, vps);
        CompatibilityResult brute = compatibility_bruteforce(family, m, sum);
        CompatibilityResult faces = compatibility_by_faces(family, m, sum);
        CHECK(brute.compatible == faces.compatible);
        if (!brute.compatible) {
            ++incompatible_seen;
            check_witness(family, m, sum, *brute.witness);
            check_witness(family, m, sum, *faces.witness);
        }
    }
    CHECK(incompatible_seen > 0);
}

TEST_CASE("validate accepts the hexagon partition") {
    ValidationReport rep = validate(hex_family(), hex_partition());
    CHECK(rep.ok);
    REQUIRE(rep.checks.size() == 4);
    for (const auto& c : rep.checks) CHECK(c.passed);
}

TEST_CASE("validate rejects structural defects") {
    auto family = hex_family();

    SUBCASE("wrong grid shape") {
        PartitionMatrix m = hex_partition();
        m.cells[1].pop_back();
        ValidationReport rep = validate(family, m);
        CHECK_FALSE(rep.ok);
        CHECK(rep.checks[0].name == "grid-shape");
        CHECK_FALSE(rep.checks[0].passed);
    }
    SUBCASE("missing lattice point") {
        PartitionMatrix m = hex_partition();
        m.cells[1][2].clear(); // drop (0,1)
        ValidationReport rep = validate(family, m);
        CHECK_FALSE(rep.ok);
        CHECK_FALSE(rep.checks[1].passed);
    }
    SUBCASE("duplicated lattice point") {
        PartitionMatrix m = hex_partition();
        m.cells[1][2].push_back(zv({1, 0})); // (1,0) already sits in class 1
        ValidationReport rep = validate(family, m);
        CHECK_FALSE(rep.ok);
        CHECK_FALSE(rep.checks[1].passed);
    }
    SUBCASE("foreign point") {
        PartitionMatrix m = hex_partition();
        m.cells[0][2].push_back(zv({5, 5}));
        ValidationReport rep = validate(family, m);
        CHECK_FALSE(rep.ok);
    }
    SUBCASE("non-induced interior assignment") {
        // Member 1 = big triangle so it has a non-vertex point to misplace.
        std::vector<LatticePolytope> fam{hull2({{0, 0}, {1, 0}}),
                                         hull2({{0, 0}, {2, 0}, {0, 2}}),
                                         hull2({{0, 0}, {1, 1}})};
        std::vector<VertexPartition> vps{{{0, 1}}, {{0, 1, 2}}, {{0, 2}}};
        PartitionMatrix m = induce(fam, vps);
        // (1,0) currently lives with a bottom-edge vertex; move it to class 2
        auto& row = m.cells[1];
        for (auto& cell : row) cell.erase(std::remove(cell.begin(), cell.end(), zv({1, 0})), cell.end());
        row[2].push_back(zv({1, 0}));
        std::sort(row[2].begin(), row[2].end(), colex_less);
        ValidationReport rep = validate(fam, m);
        CHECK_FALSE(rep.ok);
        bool induced_failed = false;
        for (const auto& c : rep.checks) {
            if (c.name == "induced-from-vertex-partition" && !c.passed) induced_failed = true;
        }
        CHECK(induced_failed);
    }
}

TEST_CASE("compatibility in one dimension") {
    LatticePolytope a = LatticePolytope::hull({zv({0}), zv({1})}, 1);
    LatticePolytope b = LatticePolytope::hull({zv({0}), zv({2})}, 1);
    std::vector<LatticePolytope> family{a, b};
    LatticePolytope sum = minkowski_sum(family);

    PartitionMatrix good;
    good.cells = {{{zv({0})}, {zv({1})}},
                  {{zv({0})}, {zv({1}), zv({2})}}};
    CHECK(compatibility_bruteforce(family, good, sum).compatible);
    CHECK(compatibility_by_faces(family, good, sum).compatible);

    PartitionMatrix bad; // both right endpoints in class 1, both lefts in 0
    bad.cells = {{{zv({1})}, {zv({0})}},
                 {{zv({0}), zv({1})}, {zv({2})}}};
    CompatibilityResult r1 = compatibility_bruteforce(family, bad, sum);
    CompatibilityResult r2 = compatibility_by_faces(family, bad, sum);
    CHECK_FALSE(r1.compatible);
    CHECK_FALSE(r2.compatible);
    check_witness(family, bad, sum, *r1.witness);
    check_witness(family, bad, sum, *r2.witness);
}
