#include <doctest.h>

#include <cstdlib>

#include "reskit/construct.hpp"

using namespace reskit;

namespace {

VecZ zv(std::initializer_list<long> xs) {
    VecZ v;
    for (long x : xs) v.push_back(Int(x));
    return v;
}

LatticePolytope hullN(std::initializer_list<std::initializer_list<long>> pts) {
    std::vector<VecZ> v;
    for (auto p : pts) v.push_back(zv(p));
    return LatticePolytope::hull(v, static_cast<int>(v.begin()->size()));
}

std::vector<VecZ> cell(std::initializer_list<std::initializer_list<long>> pts) {
    std::vector<VecZ> v;
    for (auto p : pts) v.push_back(zv(p));
    return v;
}

std::vector<LatticePolytope> ex1_family() {
    return {hullN({{1, 0}, {1, 1}, {0, 2}}), hullN({{0, 0}, {1, 0}, {2, 0}, {1, 1}}),
            hullN({{0, 0}, {0, 1}, {1, 2}})};
}

std::vector<LatticePolytope> ex2_family() {
    return {hullN({{0, 0}, {1, 0}}), hullN({{0, 0}, {1, 0}, {0, 1}}), hullN({{0, 0}, {1, 1}})};
}

std::vector<LatticePolytope> ex3_family() {
    return {hullN({{0, 0}, {1, 0}}), hullN({{0, 0}, {1, 0}, {0, 1}, {1, 1}}),
            hullN({{0, 0}, {0, 1}})};
}

std::vector<LatticePolytope> fig6_family() {
    return {hullN({{0, 0}, {3, 0}, {3, 1}}), hullN({{0, 0}, {1, 0}, {2, 1}}),
            hullN({{0, 2}, {3, 5}, {0, 3}})};
}

std::vector<LatticePolytope> tri3_family() {
    LatticePolytope t = hullN({{0, 0}, {1, 0}, {0, 1}});
    return {t, t, t};
}

// window data of a planar report: (label set, primitive inner normal) pairs
std::vector<std::pair<std::vector<int>, VecZ>> window_edges(const Dim2Report& rep) {
    std::vector<std::pair<std::vector<int>, VecZ>> out;
    for (int idx : rep.window) out.push_back(rep.edge_labels[idx]);
    return out;
}

} // namespace

TEST_CASE("shared flags are found exactly when present") {
    {
        auto fam = tri3_family();
        LatticePolytope sum = minkowski_sum(fam);
        auto flag = find_shared_flag(fam, sum);
        REQUIRE(flag.has_value());
        REQUIRE(flag->member_flags.size() == 3);
        for (const auto& chain : flag->member_flags) {
            REQUIRE(chain.size() == 2);
            CHECK(chain[0].dim == 0);
            CHECK(chain[1].dim == 1);
        }
        PartitionMatrix m = locally_unmixed_partition(fam, *flag);
        auto row = std::vector<std::vector<VecZ>>{cell({{0, 0}}), cell({{1, 0}}),
                                                  cell({{0, 1}})};
        CHECK(m.cells == std::vector<std::vector<std::vector<VecZ>>>{row, row, row});
        CHECK(validate(fam, m).ok);
        CHECK(cdeg(fam, m) == 1);
    }
    {
        LatticePolytope t = hullN({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
        std::vector<LatticePolytope> fam{t, t, t, t};
        auto flag = find_shared_flag(fam, minkowski_sum(fam));
        REQUIRE(flag.has_value());
        PartitionMatrix m = locally_unmixed_partition(fam, *flag);
        CHECK(validate(fam, m).ok);
        CHECK(cdeg(fam, m) == 1);
    }
    {
        auto fam = ex1_family();
        CHECK_FALSE(find_shared_flag(fam, minkowski_sum(fam)).has_value());
    }
    {
        auto fam = ex2_family();
        CHECK_FALSE(find_shared_flag(fam, minkowski_sum(fam)).has_value());
    }
}

TEST_CASE("planar construction: one edge carrying all members") {
    auto fam = tri3_family();
    Dim2Report rep;
    PartitionMatrix m = dim2_partition(fam, &rep);
    CHECK(rep.kind == Dim2Case::LocallyUnmixed);
    CHECK(rep.note == "single shared edge");
    REQUIRE(rep.window.size() == 1);
    CHECK(rep.edge_labels[rep.window[0]].first == std::vector<int>{0, 1, 2});
    CHECK(validate(fam, m).ok);
    CHECK(cdeg(fam, m) == 1);
}

TEST_CASE("planar construction: pair edge with a detached vertex") {
    auto fam = ex2_family();
    Dim2Report rep;
    PartitionMatrix m = dim2_partition(fam, &rep);
    CHECK(rep.kind == Dim2Case::PartiallyUnmixed2a);
    CHECK(rep.note == "pair edge with detached vertex");
    auto win = window_edges(rep);
    REQUIRE(win.size() == 2);
    CHECK(win[0].first == std::vector<int>{0, 1});
    CHECK(win[1].first == std::vector<int>{2});

    PartitionMatrix expect;
    expect.cells = {
        {cell({{0, 0}}), cell({{1, 0}}), {}},
        {cell({{0, 0}}), cell({{1, 0}}), cell({{0, 1}})},
        {cell({{0, 0}}), {}, cell({{1, 1}})},
    };
    CHECK(m.cells == expect.cells);
    CHECK(validate(fam, m).ok);
    CHECK(cdeg(fam, m) == 1);
}

TEST_CASE("planar construction: overlapping pair edges walk the attempt ladder") {
    auto fam = fig6_family();
    Dim2Report rep;
    PartitionMatrix m = dim2_partition(fam, &rep);
    CHECK(rep.kind == Dim2Case::PartiallyUnmixed2b);
    CHECK(rep.note == "double flag on first edge");
    auto win = window_edges(rep);
    REQUIRE(win.size() == 2);
    CHECK(win[0].first == std::vector<int>{0, 1});
    CHECK(win[0].second == zv({0, 1}));
    CHECK(win[1].first == std::vector<int>{1, 2});
    CHECK(win[1].second == zv({-1, 1}));

    PartitionMatrix expect;
    expect.cells = {
        {cell({{0, 0}}), cell({{1, 0}, {2, 0}, {3, 0}}), cell({{3, 1}})},
        {cell({{0, 0}}), cell({{1, 0}}), cell({{2, 1}})},
        {{}, cell({{0, 2}}), cell({{0, 3}, {1, 3}, {2, 4}, {3, 5}})},
    };
    CHECK(m.cells == expect.cells);
    CHECK(validate(fam, m).ok);
    CHECK(cdeg(fam, m) == 1);

    // steeper first member: the plain first-edge flags already work
    std::vector<LatticePolytope> steep{hullN({{0, 0}, {3, 0}, {4, 3}}), fam[1], fam[2]};
    Dim2Report rep1;
    PartitionMatrix m1 = dim2_partition(steep, &rep1);
    CHECK(rep1.kind == Dim2Case::PartiallyUnmixed2b);
    CHECK(rep1.note == "first-edge flags");
    CHECK(validate(steep, m1).ok);
    CHECK(std::abs(cdeg(steep, m1)) == 1);

    // taller third member: the second-edge flags fire instead
    std::vector<LatticePolytope> tall{fam[0], fam[1], hullN({{0, 2}, {3, 5}, {0, 5}})};
    Dim2Report rep2;
    PartitionMatrix m2 = dim2_partition(tall, &rep2);
    CHECK(rep2.kind == Dim2Case::PartiallyUnmixed2b);
    CHECK(rep2.note == "second-edge flags");
    CHECK(validate(tall, m2).ok);
    CHECK(std::abs(cdeg(tall, m2)) == 1);
}

TEST_CASE("planar construction: staircase window") {
    auto fam = ex1_family();
    Dim2Report rep;
    PartitionMatrix m = dim2_partition(fam, &rep);
    CHECK(rep.kind == Dim2Case::GenericallyMixed);
    CHECK(rep.note == "staircase window");
    auto win = window_edges(rep);
    REQUIRE(win.size() == 3);
    CHECK(win[0].first == std::vector<int>{0});
    CHECK(win[0].second == zv({2, 1}));
    CHECK(win[1].first == std::vector<int>{1});
    CHECK(win[1].second == zv({0, 1}));
    CHECK(win[2].first == std::vector<int>{2});
    CHECK(win[2].second == zv({-2, 1}));

    PartitionMatrix expect;
    expect.cells = {
        {{}, cell({{1, 0}}), cell({{1, 1}, {0, 2}})},
        {cell({{0, 0}}), cell({{1, 0}, {2, 0}}), cell({{1, 1}})},
        {cell({{0, 0}}), {}, cell({{0, 1}, {1, 2}})},
    };
    CHECK(m.cells == expect.cells);
    CHECK(validate(fam, m).ok);
    CHECK(cdeg(fam, m) == 1);
}

TEST_CASE("exceptional families are recognized and refused") {
    CHECK(is_exceptional(ex3_family()));
    CHECK_FALSE(is_exceptional(tri3_family()));
    CHECK_FALSE(is_exceptional(ex2_family()));
    // third member's rays do not match the segment parallelogram
    CHECK_FALSE(is_exceptional({hullN({{0, 0}, {1, 0}}), hullN({{0, 0}, {0, 1}}),
                                hullN({{0, 0}, {1, 0}, {0, 1}})}));
    // parallel segments never qualify
    CHECK_FALSE(is_exceptional({hullN({{0, 0}, {1, 0}}), hullN({{0, 0}, {2, 0}}),
                                hullN({{0, 0}, {1, 0}, {0, 1}, {1, 1}})}));

    CHECK_THROWS_AS(dim2_partition(ex3_family()), ExceptionalFamily);
    CHECK_THROWS_AS(residue_element(ex3_family()), ExceptionalFamily);
}

TEST_CASE("bounded search finds certificates and honors its limits") {
    {
        SearchResult res = exhaustive_search(fig6_family());
        REQUIRE(res.first.has_value());
        CHECK(validate(fig6_family(), *res.first).ok);
        CHECK(std::abs(cdeg(fig6_family(), *res.first)) == 1);
        CHECK(res.partitions_tried > 0);
    }
    {
        LatticePolytope hex =
            hullN({{0, 0}, {2, 0}, {3, 1}, {2, 2}, {1, 2}, {0, 1}});
        CHECK_THROWS_AS(exhaustive_search({hex, hex, hex}), ResourceLimit);
    }
    {
        SearchOptions opts;
        opts.exhaust_all = true;
        SearchResult res = exhaustive_search(ex3_family(), opts);
        REQUIRE(!res.all_compatible.empty());
        for (const auto& [m, det] : res.all_compatible) {
            CHECK(det.is_zero());
        }
    }
}

TEST_CASE("strategy dispatch and the essential gate") {
    {
        ResidueCertificate cert = residue_element(tri3_family());
        CHECK(cert.strategy_used == "locally-unmixed");
        CHECK(cert.degree == 1);
        CHECK(cert.determinant_interior);
        CHECK_FALSE(cert.dim2.has_value());
    }
    {
        ResidueCertificate cert = residue_element(ex2_family());
        CHECK(cert.strategy_used == "dim2");
        REQUIRE(cert.dim2.has_value());
        CHECK(cert.dim2->kind == Dim2Case::PartiallyUnmixed2a);
        CHECK(cert.degree == 1);
    }
    {
        ConstructOptions opts;
        opts.strategy = Strategy::Search;
        ResidueCertificate cert = residue_element(ex2_family(), opts);
        CHECK(cert.strategy_used == "search");
        CHECK(std::abs(cert.degree) == 1);
        CHECK(cert.validation.ok);
    }
    {
        ConstructOptions opts;
        opts.strategy = Strategy::LocallyUnmixed;
        CHECK_THROWS_AS(residue_element(ex1_family(), opts), NoPartitionFound);
    }
    {
        ConstructOptions opts;
        opts.strategy = Strategy::Dim2;
        LatticePolytope t = hullN({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
        CHECK_THROWS_AS(residue_element({t, t, t, t}, opts), InvalidInput);
    }
    {
        LatticePolytope seg = hullN({{0, 0}, {1, 0}});
        LatticePolytope tri = hullN({{0, 0}, {1, 0}, {0, 1}});
        CHECK_THROWS_AS(residue_element({seg, seg, tri}), NonEssential);
    }
}

TEST_CASE("caller partitions are canonicalized and certified") {
    auto fam = fig6_family();
    PartitionMatrix scrambled;
    scrambled.cells = {
        {cell({{0, 0}}), cell({{3, 0}, {2, 0}, {1, 0}}), cell({{3, 1}})},
        {cell({{0, 0}}), cell({{1, 0}}), cell({{2, 1}})},
        {{}, cell({{0, 2}}), cell({{3, 5}, {2, 4}, {1, 3}, {0, 3}})},
    };
    ResidueCertificate cert = certificate_for_partition(fam, scrambled);
    CHECK(cert.validation.ok);
    CHECK(cert.degree == 1);
    CHECK(cert.determinant_interior);
    CHECK(cert.partition.cells[0][1] == cell({{1, 0}, {2, 0}, {3, 0}}));
    CHECK(cert.partition.cells[2][2] == cell({{0, 3}, {1, 3}, {2, 4}, {3, 5}}));

    ResidueCertificate direct = residue_element(fam);
    CHECK(cert.determinant == direct.determinant);

    // a broken partition is reported, not certified
    PartitionMatrix broken = cert.partition;
    broken.cells[0][2].push_back(zv({0, 0})); // now lives in two cells
    ResidueCertificate bad = certificate_for_partition(fam, broken);
    CHECK_FALSE(bad.validation.ok);
}
