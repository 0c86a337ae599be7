#include "reskit/construct.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace reskit {

namespace {

// Lattice points of p on the face minimized by `normal`.
std::vector<VecZ> face_points(const LatticePolytope& p, const VecZ& normal) {
    Int lo = dot(normal, p.vertices()[0]);
    for (const VecZ& v : p.vertices()) lo = std::min(lo, dot(normal, v));
    std::vector<VecZ> out;
    for (const VecZ& u : p.lattice_points()) {
        if (dot(normal, u) == lo) out.push_back(u);
    }
    return out;
}

std::vector<VecZ> face_vertices(const LatticePolytope& p, const VecZ& normal) {
    FaceRef f = p.face_of(normal);
    std::vector<VecZ> out;
    for (int vi : f.vertex_set) out.push_back(p.vertices()[vi]);
    return out;
}

} // namespace

std::optional<SharedFlag> find_shared_flag(const std::vector<LatticePolytope>& family,
                                           const LatticePolytope& sum) {
    const int n = sum.ambient_dim();
    for (const std::vector<FaceRef>& flag : sum.complete_flags()) {
        SharedFlag sf;
        sf.sum_flag = flag;
        sf.member_flags.assign(family.size(), {});
        bool ok = true;
        for (std::size_t i = 0; i < family.size() && ok; ++i) {
            for (int k = 0; k < n && ok; ++k) {
                FaceRef mf = family[i].face_of(flag[k].witness);
                ok = !mf.whole && mf.dim == k;
                sf.member_flags[i].push_back(std::move(mf));
            }
        }
        if (ok) return sf;
    }
    return std::nullopt;
}

PartitionMatrix locally_unmixed_partition(const std::vector<LatticePolytope>& family,
                                          const SharedFlag& flag) {
    const int k = static_cast<int>(family.size());
    const int n = k - 1;
    PartitionMatrix m;
    m.cells.assign(k, std::vector<std::vector<VecZ>>(k));
    for (int i = 0; i < k; ++i) {
        std::set<VecZ> taken;
        for (int j = 0; j < n; ++j) {
            for (const VecZ& u : face_points(family[i], flag.member_flags[i][j].witness)) {
                if (taken.insert(u).second) m.cells[i][j].push_back(u);
            }
        }
        for (const VecZ& u : family[i].lattice_points()) {
            if (!taken.count(u)) m.cells[i][n].push_back(u);
        }
        for (std::vector<VecZ>& cell : m.cells[i]) std::sort(cell.begin(), cell.end(), colex_less);
    }
    return m;
}

bool is_exceptional(const std::vector<LatticePolytope>& family) {
    if (family.size() != 3 || family[0].ambient_dim() != 2)
        throw InvalidInput("is_exceptional: need three planar members");

    // Primitive ray set of the normal fan.
    auto rays = [](const LatticePolytope& p) -> std::set<VecZ> {
        std::set<VecZ> out;
        if (p.dim() == 2) {
            for (const Facet& f : p.facets()) out.insert(f.normal);
        } else if (p.dim() == 1) {
            // Both normals of the carrier line.
            VecZ dir = primitive(vsub(p.vertices()[1], p.vertices()[0]));
            out.insert(VecZ{-dir[1], dir[0]});
            out.insert(VecZ{dir[1], -dir[0]});
        }
        return out;
    };

    for (int x = 0; x < 3; ++x) {
        for (int y = x + 1; y < 3; ++y) {
            if (family[x].dim() != 1 || family[y].dim() != 1) continue;
            VecZ dx = primitive(vsub(family[x].vertices()[1], family[x].vertices()[0]));
            VecZ dy = primitive(vsub(family[y].vertices()[1], family[y].vertices()[0]));
            VecZ neg_dy{-dy[0], -dy[1]};
            if (dx == dy || dx == neg_dy) continue; // parallel segments
            int third = 3 - x - y;
            if (rays(family[third]) == rays(minkowski(family[x], family[y]))) return true;
        }
    }
    return false;
}

namespace {

struct SumEdge {
    VecZ a, b;              // ccw endpoints
    VecZ dir;               // b - a
    VecZ normal;            // primitive inner normal
    std::vector<int> label; // members whose face at `normal` is an edge
};

std::vector<SumEdge> ccw_sum_edges(const std::vector<LatticePolytope>& family,
                                   const LatticePolytope& sum) {
    std::vector<int> cyc = ccw_vertex_cycle(sum);
    std::vector<SumEdge> edges;
    const std::vector<VecZ>& vs = sum.vertices();
    for (std::size_t k = 0; k < cyc.size(); ++k) {
        SumEdge e;
        e.a = vs[cyc[k]];
        e.b = vs[cyc[(k + 1) % cyc.size()]];
        e.dir = vsub(e.b, e.a);
        e.normal = primitive(VecZ{-e.dir[1], e.dir[0]});
        for (std::size_t i = 0; i < family.size(); ++i) {
            if (family[i].face_of(e.normal).dim == 1) e.label.push_back(static_cast<int>(i));
        }
        edges.push_back(std::move(e));
    }
    return edges;
}

// Endpoint of the member's edge at `normal` that comes first walking in the
// ccw direction `dir` of the corresponding sum edge.
VecZ ccw_edge_start(const LatticePolytope& p, const VecZ& normal, const VecZ& dir) {
    std::vector<VecZ> fv = face_vertices(p, normal);
    if (fv.size() != 2) throw InternalError("ccw_edge_start: member face is not an edge");
    return dot(dir, vsub(fv[1], fv[0])) > 0 ? fv[0] : fv[1];
}

VecZ ccw_edge_end(const LatticePolytope& p, const VecZ& normal, const VecZ& dir) {
    std::vector<VecZ> fv = face_vertices(p, normal);
    if (fv.size() != 2) throw InternalError("ccw_edge_end: member face is not an edge");
    return dot(dir, vsub(fv[1], fv[0])) > 0 ? fv[1] : fv[0];
}

// The member's unique vertex at `normal`; InternalError if the face is not
// zero-dimensional.
VecZ single_vertex_at(const LatticePolytope& p, const VecZ& normal) {
    std::vector<VecZ> fv = face_vertices(p, normal);
    if (fv.size() != 1) throw InternalError("single_vertex_at: supporting face is not a vertex");
    return fv[0];
}

using Row = std::vector<std::vector<VecZ>>;

Row empty_row() { return Row(3); }

void fill_rest(const LatticePolytope& p, Row& row) {
    std::set<VecZ> taken;
    for (int j = 0; j < 2; ++j) taken.insert(row[j].begin(), row[j].end());
    for (const VecZ& u : p.lattice_points()) {
        if (!taken.count(u)) row[2].push_back(u);
    }
    for (std::vector<VecZ>& cell : row) std::sort(cell.begin(), cell.end(), colex_less);
}

// Standard flag row along one edge: the chosen endpoint alone in class 0,
// the rest of the edge's lattice points in class 1, everything else class 2.
Row flag_row(const LatticePolytope& p, const VecZ& normal, const VecZ& flag_vertex) {
    Row row = empty_row();
    row[0].push_back(flag_vertex);
    for (const VecZ& u : face_points(p, normal)) {
        if (u != flag_vertex) row[1].push_back(u);
    }
    fill_rest(p, row);
    return row;
}

// Row for a member whose face at `normal` is a single vertex: that vertex in
// class `cls`, the rest in class 2.
Row vertex_row(const LatticePolytope& p, const VecZ& normal, int cls) {
    Row row = empty_row();
    row[cls].push_back(single_vertex_at(p, normal));
    fill_rest(p, row);
    return row;
}

PartitionMatrix assemble(const Row& r0, const Row& r1, const Row& r2) {
    PartitionMatrix m;
    m.cells = {r0, r1, r2};
    return m;
}

// Validation-plus-degree filter for a planar construction.
bool accept_dim2(const std::vector<LatticePolytope>& family, const PartitionMatrix& m) {
    ValidationReport rep = validate(family, m);
    if (!rep.ok) return false;
    int d = cdeg(family, m);
    return d == 1 || d == -1;
}

} // namespace

PartitionMatrix dim2_partition(const std::vector<LatticePolytope>& family, Dim2Report* report) {
    if (family.size() != 3 || family[0].ambient_dim() != 2)
        throw InvalidInput("dim2_partition: need three planar members");
    EssentialReport ess = is_essential(family);
    if (!ess.essential) throw NonEssential("dim2_partition: family is not essential");

    Dim2Report rep;
    if (is_exceptional(family)) {
        rep.kind = Dim2Case::Exceptional;
        if (report) *report = rep;
        throw ExceptionalFamily("dim2_partition: exceptional family, every compatible choice vanishes");
    }

    LatticePolytope sum = minkowski_sum(family);
    std::vector<SumEdge> edges = ccw_sum_edges(family, sum);
    for (const SumEdge& e : edges) rep.edge_labels.emplace_back(e.label, e.normal);

    // Walk ccw from the edge leaving the lex-smallest vertex until every
    // member has contributed an edge, then shrink from the left while all
    // three are still present.
    std::set<int> seen;
    int end = -1;
    for (std::size_t k = 0; k < edges.size(); ++k) {
        seen.insert(edges[k].label.begin(), edges[k].label.end());
        if (seen.size() == 3) {
            end = static_cast<int>(k);
            break;
        }
    }
    if (end < 0) throw InternalError("dim2_partition: edge labels never cover all members");
    int begin = 0;
    auto window_complete = [&](int from) {
        std::set<int> s;
        for (int k = from; k <= end; ++k) s.insert(edges[k].label.begin(), edges[k].label.end());
        return s.size() == 3;
    };
    while (begin < end && window_complete(begin + 1)) ++begin;
    for (int k = begin; k <= end; ++k) rep.window.push_back(k);

    const int len = end - begin + 1;
    PartitionMatrix result;
    bool built = false;

    if (len == 1) {
        // All three members share the window edge: flag partitions along it.
        rep.kind = Dim2Case::LocallyUnmixed;
        const SumEdge& e = edges[begin];
        Row rows[3];
        for (int i = 0; i < 3; ++i) {
            rows[i] = flag_row(family[i], e.normal, ccw_edge_start(family[i], e.normal, e.dir));
        }
        result = assemble(rows[0], rows[1], rows[2]);
        rep.note = "single shared edge";
        if (!accept_dim2(family, result))
            throw InternalError("dim2_partition: shared-edge construction failed validation");
        built = true;
    } else if (len == 2) {
        const SumEdge& e1 = edges[begin];
        const SumEdge& e2 = edges[begin + 1];
        std::vector<int> common;
        std::set_intersection(e1.label.begin(), e1.label.end(), e2.label.begin(), e2.label.end(),
                              std::back_inserter(common));
        if (common.empty()) {
            // Disjoint labels: one edge carries a pair of members, the other a
            // single member.  Flag the pair along the pair edge; the loner
            // keeps its vertex on that edge in class 0.
            rep.kind = Dim2Case::PartiallyUnmixed2a;
            const bool pair_first = e1.label.size() == 2;
            const SumEdge& pe = pair_first ? e1 : e2;
            const SumEdge& se = pair_first ? e2 : e1;
            if (pe.label.size() != 2 || se.label.size() != 1)
                throw InternalError("dim2_partition: unexpected labels in the two-edge window");
            Row rows[3];
            for (int i : pe.label) {
                VecZ fv = pair_first ? ccw_edge_start(family[i], pe.normal, pe.dir)
                                     : ccw_edge_end(family[i], pe.normal, pe.dir);
                rows[i] = flag_row(family[i], pe.normal, fv);
            }
            rows[se.label[0]] = vertex_row(family[se.label[0]], pe.normal, 0);
            result = assemble(rows[0], rows[1], rows[2]);
            rep.note = "pair edge with detached vertex";
            if (!accept_dim2(family, result))
                throw InternalError("dim2_partition: two-edge disjoint construction failed validation");
            built = true;
        } else {
            // Overlapping labels {A,B},{B,C}: a ladder of deterministic
            // attempts, validated in order.
            rep.kind = Dim2Case::PartiallyUnmixed2b;
            if (common.size() != 1 || e1.label.size() != 2 || e2.label.size() != 2)
                throw InternalError("dim2_partition: unexpected labels in the overlapping window");
            const int B = common[0];
            const int A = e1.label[0] == B ? e1.label[1] : e1.label[0];
            const int C = e2.label[0] == B ? e2.label[1] : e2.label[0];

            auto attempt_first_edge = [&]() {
                // Flag A and B along e1; B additionally pushes its e2-edge
                // points into class 1; C's vertex on e1 goes to class 0.
                Row ra = flag_row(family[A], e1.normal, ccw_edge_start(family[A], e1.normal, e1.dir));
                Row rb = flag_row(family[B], e1.normal, ccw_edge_start(family[B], e1.normal, e1.dir));
                for (const VecZ& u : face_points(family[B], e2.normal)) {
                    if (std::find(rb[0].begin(), rb[0].end(), u) != rb[0].end()) continue;
                    if (std::find(rb[1].begin(), rb[1].end(), u) != rb[1].end()) continue;
                    rb[1].push_back(u);
                    rb[2].erase(std::remove(rb[2].begin(), rb[2].end(), u), rb[2].end());
                }
                std::sort(rb[1].begin(), rb[1].end(), colex_less);
                Row rc = vertex_row(family[C], e1.normal, 0);
                Row rows[3];
                rows[A] = ra;
                rows[B] = rb;
                rows[C] = rc;
                return assemble(rows[0], rows[1], rows[2]);
            };
            auto attempt_second_edge = [&]() {
                // Mirror image: flag C and B along e2 anchored at the ccw
                // ends; B pushes its e1-edge points into class 1; A's vertex
                // on e2 goes to class 0.
                Row rc = flag_row(family[C], e2.normal, ccw_edge_end(family[C], e2.normal, e2.dir));
                Row rb = flag_row(family[B], e2.normal, ccw_edge_end(family[B], e2.normal, e2.dir));
                for (const VecZ& u : face_points(family[B], e1.normal)) {
                    if (std::find(rb[0].begin(), rb[0].end(), u) != rb[0].end()) continue;
                    if (std::find(rb[1].begin(), rb[1].end(), u) != rb[1].end()) continue;
                    rb[1].push_back(u);
                    rb[2].erase(std::remove(rb[2].begin(), rb[2].end(), u), rb[2].end());
                }
                std::sort(rb[1].begin(), rb[1].end(), colex_less);
                Row ra = vertex_row(family[A], e2.normal, 0);
                Row rows[3];
                rows[A] = ra;
                rows[B] = rb;
                rows[C] = rc;
                return assemble(rows[0], rows[1], rows[2]);
            };
            auto attempt_double_flag_e1 = [&]() {
                // Double flag along e1 with the far outer member's vertex
                // demoted to class 1.
                Row ra = flag_row(family[A], e1.normal, ccw_edge_start(family[A], e1.normal, e1.dir));
                Row rb = flag_row(family[B], e1.normal, ccw_edge_start(family[B], e1.normal, e1.dir));
                Row rc = vertex_row(family[C], e1.normal, 1);
                Row rows[3];
                rows[A] = ra;
                rows[B] = rb;
                rows[C] = rc;
                return assemble(rows[0], rows[1], rows[2]);
            };
            auto attempt_double_flag_e2 = [&]() {
                Row rc = flag_row(family[C], e2.normal, ccw_edge_end(family[C], e2.normal, e2.dir));
                Row rb = flag_row(family[B], e2.normal, ccw_edge_end(family[B], e2.normal, e2.dir));
                Row ra = vertex_row(family[A], e2.normal, 1);
                Row rows[3];
                rows[A] = ra;
                rows[B] = rb;
                rows[C] = rc;
                return assemble(rows[0], rows[1], rows[2]);
            };

            // The double-flag fallback anchors at a 2-dimensional outer
            // member; when both outers qualify the smaller index wins.
            bool prefer_e1 = true;
            if (family[A].dim() == 2 && family[C].dim() == 2) {
                prefer_e1 = A < C;
            } else if (family[C].dim() == 2) {
                prefer_e1 = false;
            }
            std::vector<std::pair<std::string, PartitionMatrix>> ladder;
            ladder.emplace_back("first-edge flags", attempt_first_edge());
            ladder.emplace_back("second-edge flags", attempt_second_edge());
            if (prefer_e1) {
                ladder.emplace_back("double flag on first edge", attempt_double_flag_e1());
                ladder.emplace_back("double flag on second edge", attempt_double_flag_e2());
            } else {
                ladder.emplace_back("double flag on second edge", attempt_double_flag_e2());
                ladder.emplace_back("double flag on first edge", attempt_double_flag_e1());
            }
            for (auto& [note, cand] : ladder) {
                if (accept_dim2(family, cand)) {
                    rep.note = note;
                    result = std::move(cand);
                    built = true;
                    break;
                }
            }
        }
    } else {
        // Long window: the middle edges all belong to one member, the two
        // ends each introduce one of the others.
        rep.kind = Dim2Case::GenericallyMixed;
        const SumEdge& first = edges[begin];
        const SumEdge& last = edges[end];
        std::set<int> rest_union, prefix_union;
        for (int k = begin + 1; k <= end; ++k)
            rest_union.insert(edges[k].label.begin(), edges[k].label.end());
        for (int k = begin; k < end; ++k)
            prefix_union.insert(edges[k].label.begin(), edges[k].label.end());
        std::vector<int> i_only, k_only;
        for (int i : first.label) {
            if (!rest_union.count(i)) i_only.push_back(i);
        }
        for (int i : last.label) {
            if (!prefix_union.count(i)) k_only.push_back(i);
        }
        if (i_only.size() != 1 || k_only.size() != 1)
            throw InternalError("dim2_partition: ambiguous outer members in a long window");
        const int I = i_only[0];
        const int K = k_only[0];
        const int J = 3 - I - K;
        for (int k = begin + 1; k < end; ++k) {
            if (edges[k].label != std::vector<int>{J})
                throw InternalError("dim2_partition: long window with mixed middle labels");
        }

        // Middle member: first-edge face points in class 0, the points of
        // the remaining window faces in class 1, rest class 2.
        Row rj = empty_row();
        std::set<VecZ> taken;
        for (const VecZ& u : face_points(family[J], first.normal)) {
            rj[0].push_back(u);
            taken.insert(u);
        }
        for (int k = begin + 1; k <= end; ++k) {
            for (const VecZ& u : face_points(family[J], edges[k].normal)) {
                if (taken.insert(u).second) rj[1].push_back(u);
            }
        }
        fill_rest(family[J], rj);

        // The outer members stay on a single vertex across their stretch of
        // the window; sanity-check that before using it.
        VecZ vk = single_vertex_at(family[K], first.normal);
        for (int k = begin + 1; k < end; ++k) {
            if (vk != single_vertex_at(family[K], edges[k].normal))
                throw InternalError("dim2_partition: far member moves inside the window");
        }
        VecZ vi = single_vertex_at(family[I], edges[begin + 1].normal);
        for (int k = begin + 2; k <= end; ++k) {
            std::vector<VecZ> fv = face_vertices(family[I], edges[k].normal);
            if (fv.size() != 1 || fv[0] != vi)
                throw InternalError("dim2_partition: near member moves inside the window");
        }
        Row rk = empty_row();
        rk[0].push_back(vk);
        fill_rest(family[K], rk);
        Row ri = empty_row();
        ri[1].push_back(vi);
        fill_rest(family[I], ri);

        Row rows[3];
        rows[I] = ri;
        rows[J] = rj;
        rows[K] = rk;
        result = assemble(rows[0], rows[1], rows[2]);
        rep.note = "staircase window";
        if (!accept_dim2(family, result))
            throw InternalError("dim2_partition: long-window construction failed validation");
        built = true;
    }

    if (!built) {
        // Deterministic ladder exhausted; fall back to bounded search.
        SearchOptions sopts;
        SearchResult sr = exhaustive_search(family, sopts);
        if (sr.first) {
            rep.note = "bounded search fallback";
            result = std::move(*sr.first);
            built = true;
        }
    }
    if (report) *report = rep;
    if (!built)
        throw NoPartitionFound("dim2_partition: no compatible partition found for this window");
    return result;
}

SearchResult exhaustive_search(const std::vector<LatticePolytope>& family,
                               const SearchOptions& opts) {
    const int k = static_cast<int>(family.size());
    if (k < 2) throw InvalidInput("exhaustive_search: need at least two members");
    const int n = family[0].ambient_dim();
    if (k != n + 1) throw InvalidInput("exhaustive_search: need ambient_dim + 1 members");

    long total_vertices = 0;
    for (const LatticePolytope& p : family) total_vertices += static_cast<long>(p.vertices().size());
    if (total_vertices > opts.max_total_vertices)
        throw ResourceLimit("exhaustive_search: " + std::to_string(total_vertices) +
                            " vertices exceed the bound of " + std::to_string(opts.max_total_vertices));

    LatticePolytope sum = minkowski_sum(family);
    std::vector<std::vector<VecZ>> lattice(k);
    std::vector<std::vector<VecZ>> nonvertex(k);
    for (int i = 0; i < k; ++i) {
        lattice[i] = family[i].lattice_points();
        for (const VecZ& u : lattice[i]) {
            const std::vector<VecZ>& vs = family[i].vertices();
            if (!std::binary_search(vs.begin(), vs.end(), u, colex_less)) nonvertex[i].push_back(u);
        }
    }

    SearchResult result;
    std::vector<std::vector<int>> vcls(k);
    for (int i = 0; i < k; ++i) vcls[i].assign(family[i].vertices().size(), 0);

    std::vector<std::vector<VecZ>> supports = lattice; // full supports for determinants
    const long budget = 5'000'000;

    // Vertex-level compatibility is equivalent to the full condition for
    // induced partitions: any boundary transversal forces a boundary
    // transversal of vertices from the same classes.
    auto vertex_compatible = [&]() {
        std::vector<std::vector<std::vector<const VecZ*>>> cls_pts(k);
        for (int i = 0; i < k; ++i) {
            cls_pts[i].assign(k, {});
            for (std::size_t v = 0; v < vcls[i].size(); ++v) {
                cls_pts[i][vcls[i][v]].push_back(&family[i].vertices()[v]);
            }
        }
        std::vector<int> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            bool any_empty = false;
            for (int i = 0; i < k; ++i) {
                if (cls_pts[i][perm[i]].empty()) any_empty = true;
            }
            if (any_empty) continue;
            std::vector<std::size_t> pos(k, 0);
            while (true) {
                VecZ s(n, Int(0));
                for (int i = 0; i < k; ++i) s = vadd(s, *cls_pts[i][perm[i]][pos[i]]);
                if (!sum.interior_contains(s)) return false;
                int i = 0;
                while (i < k && pos[i] + 1 == cls_pts[i][perm[i]].size()) {
                    pos[i] = 0;
                    ++i;
                }
                if (i == k) break;
                ++pos[i];
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        return true;
    };

    // Enumerate induced extensions of the current vertex partition in lex
    // order of the per-point class choices.
    auto emit_extensions = [&](auto&& done) -> bool {
        std::vector<std::vector<std::vector<int>>> options(k);
        for (int i = 0; i < k; ++i) {
            VertexPartition vp{vcls[i]};
            for (const VecZ& u : nonvertex[i]) options[i].push_back(allowed_classes(family[i], vp, u));
        }
        std::vector<std::vector<std::size_t>> pick(k);
        for (int i = 0; i < k; ++i) pick[i].assign(nonvertex[i].size(), 0);
        while (true) {
            PartitionMatrix m;
            m.cells.assign(k, std::vector<std::vector<VecZ>>(k));
            for (int i = 0; i < k; ++i) {
                for (std::size_t v = 0; v < vcls[i].size(); ++v) {
                    m.cells[i][vcls[i][v]].push_back(family[i].vertices()[v]);
                }
                for (std::size_t t = 0; t < nonvertex[i].size(); ++t) {
                    m.cells[i][options[i][t][pick[i][t]]].push_back(nonvertex[i][t]);
                }
                for (std::vector<VecZ>& cell : m.cells[i]) std::sort(cell.begin(), cell.end(), colex_less);
            }
            if (done(std::move(m))) return true;

            // Odometer over extension choices, last point fastest.
            int i = k - 1;
            std::ptrdiff_t t = i >= 0 ? static_cast<std::ptrdiff_t>(pick[i].size()) - 1 : -1;
            while (i >= 0) {
                if (t < 0) {
                    --i;
                    t = i >= 0 ? static_cast<std::ptrdiff_t>(pick[i].size()) - 1 : -1;
                    continue;
                }
                if (pick[i][t] + 1 < options[i][t].size()) {
                    ++pick[i][t];
                    for (int i2 = i; i2 < k; ++i2) {
                        for (std::size_t t2 = (i2 == i ? t + 1 : 0); t2 < pick[i2].size(); ++t2)
                            pick[i2][t2] = 0;
                    }
                    break;
                }
                --t;
            }
            if (i < 0) return false;
        }
    };

    // Lex odometer over vertex partitions, member 0's first vertex most
    // significant.
    auto enumerate = [&](auto&& self, int member) -> bool {
        if (member == k) {
            ++result.partitions_tried;
            if (result.partitions_tried > budget)
                throw ResourceLimit("exhaustive_search: partition budget exhausted");
            if (!vertex_compatible()) return false;
            return emit_extensions([&](PartitionMatrix m) {
                if (opts.exhaust_all) {
                    LaurentPoly d = poly_det(residue_matrix(family, m, supports));
                    result.all_compatible.emplace_back(std::move(m), std::move(d));
                    return false;
                }
                int d = cdeg(family, m);
                if (d != 1 && d != -1) return false;
                ValidationReport rep = validate(family, m);
                if (!rep.ok)
                    throw InternalError("exhaustive_search: compatible candidate failed validation");
                result.first = std::move(m);
                return true;
            });
        }
        std::vector<int>& cls = vcls[member];
        std::fill(cls.begin(), cls.end(), 0);
        while (true) {
            if (self(self, member + 1)) return true;
            std::ptrdiff_t v = static_cast<std::ptrdiff_t>(cls.size()) - 1;
            while (v >= 0 && cls[v] == k - 1) {
                cls[v] = 0;
                --v;
            }
            if (v < 0) return false;
            ++cls[v];
        }
    };
    enumerate(enumerate, 0);
    return result;
}

namespace {

PartitionMatrix canonicalized(const PartitionMatrix& m) {
    PartitionMatrix out = m;
    for (auto& row : out.cells) {
        for (auto& cell : row) std::sort(cell.begin(), cell.end(), colex_less);
    }
    return out;
}

} // namespace

ResidueCertificate certificate_for_partition(const std::vector<LatticePolytope>& family,
                                             const PartitionMatrix& m,
                                             const ConstructOptions& opts) {
    ResidueCertificate cert;
    cert.partition = canonicalized(m);
    cert.validation = validate(family, cert.partition);

    std::vector<std::vector<VecZ>> supports;
    supports.reserve(family.size());
    for (const LatticePolytope& p : family) supports.push_back(p.lattice_points());
    cert.matrix = residue_matrix(family, cert.partition, supports);
    cert.determinant = poly_det(cert.matrix);

    LatticePolytope sum = minkowski_sum(family);
    cert.determinant_interior = !cert.determinant.is_zero() && support_interior(cert.determinant, sum);

    if (cert.validation.ok) {
        cert.max_coloring = face_coloring(family, cert.partition, ColoringFlavor::Max);
        cert.min_coloring = face_coloring(family, cert.partition, ColoringFlavor::Min);
        cert.degree = cdeg(family, cert.partition, opts.degree);
    }
    return cert;
}

ResidueCertificate residue_element(const std::vector<LatticePolytope>& family,
                                   const ConstructOptions& opts) {
    if (family.empty()) throw InvalidInput("residue_element: empty family");
    const int n = family[0].ambient_dim();
    if (static_cast<int>(family.size()) != n + 1)
        throw InvalidInput("residue_element: need ambient_dim + 1 members");

    EssentialReport ess = is_essential(family);
    if (!ess.essential) {
        std::ostringstream os;
        os << "residue_element: family is not essential; members {";
        for (std::size_t i = 0; i < ess.witness_subset.size(); ++i) {
            if (i) os << ",";
            os << ess.witness_subset[i];
        }
        os << "} span too small a sum";
        throw NonEssential(os.str());
    }

    PartitionMatrix m;
    std::string strategy;
    std::optional<Dim2Report> d2;

    auto run_locally_unmixed = [&]() -> bool {
        LatticePolytope sum = minkowski_sum(family);
        std::optional<SharedFlag> flag = find_shared_flag(family, sum);
        if (!flag) return false;
        m = locally_unmixed_partition(family, *flag);
        strategy = "locally-unmixed";
        return true;
    };
    auto run_dim2 = [&]() {
        Dim2Report rep;
        m = dim2_partition(family, &rep);
        d2 = rep;
        strategy = "dim2";
    };
    auto run_search = [&]() {
        SearchResult sr = exhaustive_search(family, opts.search);
        if (!sr.first)
            throw NoPartitionFound("residue_element: bounded search found no compatible partition");
        m = std::move(*sr.first);
        strategy = "search";
    };

    switch (opts.strategy) {
        case Strategy::LocallyUnmixed:
            if (!run_locally_unmixed())
                throw NoPartitionFound("residue_element: no shared complete flag");
            break;
        case Strategy::Dim2:
            if (n != 2) throw InvalidInput("residue_element: dim2 strategy needs a planar family");
            run_dim2();
            break;
        case Strategy::Search:
            run_search();
            break;
        case Strategy::Auto:
            if (run_locally_unmixed()) break;
            if (n == 2) {
                run_dim2();
            } else {
                run_search();
            }
            break;
    }

    ResidueCertificate cert = certificate_for_partition(family, m, opts);
    if (!cert.validation.ok)
        throw InternalError("residue_element: constructed partition failed validation");
    cert.strategy_used = strategy;
    cert.dim2 = d2;
    return cert;
}

} // namespace reskit
