#include "reskit/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace reskit {

namespace {

bool colex_less_q(const VecQ& a, const VecQ& b) {
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

// Enumerate k-subsets of {0..m-1} in lex order, calling fn on each.
template <typename Fn>
void for_each_combination(int m, int k, Fn&& fn) {
    if (k > m || k < 0) return;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

LatticePolytope LatticePolytope::hull(std::vector<VecZ> points, int ambient_dim) {
    if (ambient_dim <= 0) throw InvalidInput("hull: ambient dimension must be positive");
    if (points.empty()) throw InvalidInput("hull: empty point set");
    for (const VecZ& p : points) {
        if (static_cast<int>(p.size()) != ambient_dim)
            throw InvalidInput("hull: point of wrong dimension");
    }
    std::sort(points.begin(), points.end(), colex_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());

    LatticePolytope P;
    P.ambient_dim_ = ambient_dim;

    std::vector<VecZ> diffs;
    diffs.reserve(points.size() - 1);
    for (std::size_t k = 1; k < points.size(); ++k) diffs.push_back(vsub(points[k], points[0]));
    P.dim_ = static_cast<int>(rank_of_z(diffs));

    for (const VecZ& nm : integer_orthogonal_complement(diffs, ambient_dim)) {
        P.span_.push_back({nm, -dot(nm, points[0])});
    }
    std::sort(P.span_.begin(), P.span_.end(),
              [](const SpanEquation& a, const SpanEquation& b) { return colex_less(a.normal, b.normal); });

    const int d = P.dim_;
    if (d == 0) {
        P.vertices_ = std::move(points);
        return P;
    }

    std::vector<VecQ> span_rows;
    for (const SpanEquation& eq : P.span_) span_rows.push_back(to_rat(eq.normal));

    // Every d-subset spanning a (d-1)-dim affine piece proposes a hyperplane
    // inside the affine span; keep the supporting ones.
    std::set<VecZ> seen_normals;
    const int m = static_cast<int>(points.size());
    for_each_combination(m, d, [&](const std::vector<int>& sel) {
        MatQ rows = span_rows;
        for (int k = 1; k < d; ++k) {
            rows.push_back(to_rat(vsub(points[sel[k]], points[sel[0]])));
        }
        // A segment in a line has no constraining rows at all: every normal
        // of the ambient line works.
        MatQ ns = rows.empty() ? MatQ{VecQ{Rat(1)}} : nullspace(std::move(rows));
        if (ns.size() != 1) return; // affinely degenerate subset
        VecZ v = primitive(ns[0]);

        const Int v0 = dot(v, points[sel[0]]);
        bool all_ge = true, all_le = true;
        Int lo = v0, hi = v0;
        for (const VecZ& p : points) {
            Int val = dot(v, p);
            if (val < v0) all_ge = false;
            if (val > v0) all_le = false;
            if (val < lo) lo = val;
            if (val > hi) hi = val;
        }
        if (lo == hi) return; // direction constant on P; not a proper face
        VecZ inner;
        Int offset;
        if (all_ge) {
            inner = v;
            offset = -lo;
        } else if (all_le) {
            inner = v;
            for (Int& c : inner) c = -c;
            offset = hi;
        } else {
            return;
        }
        if (seen_normals.insert(inner).second) P.facets_.push_back({std::move(inner), std::move(offset)});
    });
    std::sort(P.facets_.begin(), P.facets_.end(),
              [](const Facet& a, const Facet& b) { return colex_less(a.normal, b.normal); });
    if (P.facets_.empty()) throw InternalError("hull: no facets found for positive-dimensional polytope");

    // A point is a vertex exactly when its active facets pin it down to a
    // zero-dimensional face.
    for (const VecZ& p : points) {
        std::vector<VecZ> active;
        for (const SpanEquation& eq : P.span_) active.push_back(eq.normal);
        for (const Facet& f : P.facets_) {
            if (dot(f.normal, p) + f.offset == 0) active.push_back(f.normal);
        }
        if (static_cast<int>(rank_of_z(active)) == ambient_dim) P.vertices_.push_back(p);
    }
    if (P.vertices_.empty()) throw InternalError("hull: vertex detection failed");
    return P;
}

bool LatticePolytope::contains(const VecZ& u) const {
    if (static_cast<int>(u.size()) != ambient_dim_) throw InvalidInput("contains: wrong dimension");
    for (const SpanEquation& eq : span_) {
        if (dot(eq.normal, u) + eq.offset != 0) return false;
    }
    for (const Facet& f : facets_) {
        if (dot(f.normal, u) + f.offset < 0) return false;
    }
    if (dim_ == 0) return u == vertices_[0];
    return true;
}

bool LatticePolytope::interior_contains(const VecZ& u) const {
    if (static_cast<int>(u.size()) != ambient_dim_) throw InvalidInput("interior_contains: wrong dimension");
    if (dim_ != ambient_dim_) return false;
    for (const Facet& f : facets_) {
        if (dot(f.normal, u) + f.offset <= 0) return false;
    }
    return true;
}

std::vector<VecZ> LatticePolytope::lattice_points() const {
    VecZ lo = vertices_[0], hi = vertices_[0];
    for (const VecZ& v : vertices_) {
        for (int i = 0; i < ambient_dim_; ++i) {
            if (v[i] < lo[i]) lo[i] = v[i];
            if (v[i] > hi[i]) hi[i] = v[i];
        }
    }
    std::vector<VecZ> out;
    VecZ u = lo;
    while (true) {
        if (contains(u)) out.push_back(u);
        int i = 0;
        while (i < ambient_dim_ && u[i] == hi[i]) {
            u[i] = lo[i];
            ++i;
        }
        if (i == ambient_dim_) break;
        ++u[i];
    }
    return out; // box sweep with coordinate 0 fastest == colex order
}

FaceRef LatticePolytope::whole_face() const {
    FaceRef f;
    f.vertex_set.resize(vertices_.size());
    std::iota(f.vertex_set.begin(), f.vertex_set.end(), 0);
    f.dim = dim_;
    f.witness.assign(ambient_dim_, Int(0));
    f.whole = true;
    return f;
}

FaceRef LatticePolytope::face_of(const VecZ& direction) const {
    if (static_cast<int>(direction.size()) != ambient_dim_)
        throw InvalidInput("face_of: wrong dimension");
    Int best = dot(direction, vertices_[0]);
    for (const VecZ& v : vertices_) best = std::min(best, dot(direction, v));
    FaceRef f;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (dot(direction, vertices_[i]) == best) f.vertex_set.push_back(static_cast<int>(i));
    }
    if (f.vertex_set.size() == vertices_.size()) return whole_face();
    std::vector<VecZ> diffs;
    for (std::size_t k = 1; k < f.vertex_set.size(); ++k) {
        diffs.push_back(vsub(vertices_[f.vertex_set[k]], vertices_[f.vertex_set[0]]));
    }
    f.dim = static_cast<int>(rank_of_z(diffs));
    f.witness = direction;
    return f;
}

FaceRef LatticePolytope::minimal_face(const VecZ& u) const {
    if (!contains(u)) throw InvalidInput("minimal_face: point not in polytope");
    VecZ witness(ambient_dim_, Int(0));
    bool any = false;
    for (const Facet& f : facets_) {
        if (dot(f.normal, u) + f.offset == 0) {
            witness = vadd(witness, f.normal);
            any = true;
        }
    }
    if (!any) return whole_face();
    return face_of(witness);
}

const std::vector<FaceRef>& LatticePolytope::proper_faces() const {
    if (faces_built_) return faces_cache_;
    faces_built_ = true;
    if (dim_ == 0) return faces_cache_;

    // Tight vertex sets of facets, then close under pairwise intersection.
    std::set<std::vector<int>> sets;
    std::vector<std::vector<int>> facet_sets;
    for (const Facet& f : facets_) {
        std::vector<int> s;
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            if (dot(f.normal, vertices_[i]) + f.offset == 0) s.push_back(static_cast<int>(i));
        }
        facet_sets.push_back(s);
        sets.insert(std::move(s));
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> current(sets.begin(), sets.end());
        for (std::size_t a = 0; a < current.size(); ++a) {
            for (std::size_t b = a + 1; b < current.size(); ++b) {
                std::vector<int> inter;
                std::set_intersection(current[a].begin(), current[a].end(),
                                      current[b].begin(), current[b].end(),
                                      std::back_inserter(inter));
                if (!inter.empty() && sets.insert(inter).second) grew = true;
            }
        }
    }

    for (const std::vector<int>& s : sets) {
        FaceRef f;
        f.vertex_set = s;
        std::vector<VecZ> diffs;
        for (std::size_t k = 1; k < s.size(); ++k) {
            diffs.push_back(vsub(vertices_[s[k]], vertices_[s[0]]));
        }
        f.dim = static_cast<int>(rank_of_z(diffs));
        f.witness.assign(ambient_dim_, Int(0));
        for (std::size_t fi = 0; fi < facet_sets.size(); ++fi) {
            if (std::includes(facet_sets[fi].begin(), facet_sets[fi].end(), s.begin(), s.end())) {
                f.witness = vadd(f.witness, facets_[fi].normal);
            }
        }
        faces_cache_.push_back(std::move(f));
    }
    std::sort(faces_cache_.begin(), faces_cache_.end(), [this](const FaceRef& a, const FaceRef& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        VecQ ba = face_barycenter(a), bb = face_barycenter(b);
        if (ba != bb) return colex_less_q(ba, bb);
        return a.vertex_set < b.vertex_set;
    });
    return faces_cache_;
}

std::vector<std::vector<FaceRef>> LatticePolytope::complete_flags() const {
    const std::vector<FaceRef>& faces = proper_faces();
    std::vector<std::vector<int>> by_dim(std::max(dim_, 0));
    for (std::size_t i = 0; i < faces.size(); ++i) {
        by_dim[faces[i].dim].push_back(static_cast<int>(i));
    }
    std::vector<std::vector<FaceRef>> flags;
    std::vector<int> chain;
    auto extend = [&](auto&& self, int level) -> void {
        if (level == dim_) {
            std::vector<FaceRef> flag;
            for (int fi : chain) flag.push_back(faces[fi]);
            flags.push_back(std::move(flag));
            return;
        }
        for (int fi : by_dim[level]) {
            if (level > 0) {
                const std::vector<int>& prev = faces[chain.back()].vertex_set;
                const std::vector<int>& cur = faces[fi].vertex_set;
                if (!std::includes(cur.begin(), cur.end(), prev.begin(), prev.end())) continue;
            }
            chain.push_back(fi);
            self(self, level + 1);
            chain.pop_back();
        }
    };
    if (dim_ > 0) extend(extend, 0);
    return flags;
}

VecQ LatticePolytope::barycenter() const {
    return face_barycenter(whole_face());
}

VecQ LatticePolytope::face_barycenter(const FaceRef& f) const {
    if (f.vertex_set.empty()) throw PreconditionViolated("face_barycenter: empty face");
    VecQ b(ambient_dim_, Rat(0));
    for (int vi : f.vertex_set) {
        for (int i = 0; i < ambient_dim_; ++i) b[i] += Rat(vertices_[vi][i]);
    }
    Rat inv = Rat(1, static_cast<long>(f.vertex_set.size()));
    for (Rat& c : b) c *= inv;
    return b;
}

int LatticePolytope::flag_sign(const std::vector<FaceRef>& flag) const {
    if (dim_ != ambient_dim_)
        throw PreconditionViolated("flag_sign: polytope must be full-dimensional");
    if (static_cast<int>(flag.size()) != dim_)
        throw PreconditionViolated("flag_sign: flag has wrong length");
    for (int k = 0; k < dim_; ++k) {
        if (flag[k].dim != k) throw PreconditionViolated("flag_sign: flag dims must be 0..dim-1");
    }
    const VecZ& v0 = vertices_[flag[0].vertex_set[0]];
    VecQ origin = to_rat(v0);
    MatQ rows;
    for (int k = 1; k < dim_; ++k) rows.push_back(vsub(face_barycenter(flag[k]), origin));
    rows.push_back(vsub(barycenter(), origin));
    int s = sign(det(std::move(rows)));
    if (s == 0) throw InternalError("flag_sign: degenerate flag frame");
    return s;
}

LatticePolytope minkowski(const LatticePolytope& a, const LatticePolytope& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw InvalidInput("minkowski: ambient dimensions differ");
    std::vector<VecZ> sums;
    sums.reserve(a.vertices().size() * b.vertices().size());
    for (const VecZ& p : a.vertices()) {
        for (const VecZ& q : b.vertices()) sums.push_back(vadd(p, q));
    }
    return LatticePolytope::hull(std::move(sums), a.ambient_dim());
}

LatticePolytope minkowski_sum(const std::vector<LatticePolytope>& members) {
    if (members.empty()) throw InvalidInput("minkowski_sum: empty family");
    LatticePolytope acc = members[0];
    for (std::size_t i = 1; i < members.size(); ++i) acc = minkowski(acc, members[i]);
    return acc;
}

EssentialReport is_essential(const std::vector<LatticePolytope>& family) {
    if (family.empty()) throw InvalidInput("is_essential: empty family");
    const int n = family[0].ambient_dim();
    if (static_cast<int>(family.size()) != n + 1)
        throw InvalidInput("is_essential: need exactly ambient_dim + 1 members");
    for (const LatticePolytope& p : family) {
        if (p.ambient_dim() != n) throw InvalidInput("is_essential: mixed ambient dimensions");
    }
    for (int size = 1; size <= n; ++size) {
        EssentialReport bad;
        bool found = false;
        for_each_combination(n + 1, size, [&](const std::vector<int>& sel) {
            if (found) return;
            std::vector<VecZ> dirs;
            for (int i : sel) {
                const std::vector<VecZ>& vs = family[i].vertices();
                for (std::size_t k = 1; k < vs.size(); ++k) dirs.push_back(vsub(vs[k], vs[0]));
            }
            if (static_cast<int>(rank_of_z(dirs)) < size) {
                bad.witness_subset = sel;
                found = true;
            }
        });
        if (found) return bad;
    }
    return {true, {}};
}

std::vector<int> ccw_vertex_cycle(const LatticePolytope& p) {
    if (p.ambient_dim() != 2 || p.dim() != 2)
        throw PreconditionViolated("ccw_vertex_cycle: need a full-dimensional planar polytope");
    const std::vector<VecZ>& vs = p.vertices();
    VecQ c = p.barycenter();
    std::vector<int> order(vs.size());
    std::iota(order.begin(), order.end(), 0);
    auto angular_key = [&](int i) {
        VecQ d = vsub(to_rat(vs[i]), c);
        int half = (d[1] < 0 || (d[1] == 0 && d[0] < 0)) ? 1 : 0;
        return std::make_pair(half, d);
    };
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        auto [ha, da] = angular_key(a);
        auto [hb, db] = angular_key(b);
        if (ha != hb) return ha < hb;
        Rat cross = da[0] * db[1] - da[1] * db[0];
        if (cross != 0) return cross > 0;
        throw InternalError("ccw_vertex_cycle: two vertices on one ray from the barycenter");
    });
    int start_pos = 0;
    for (std::size_t k = 1; k < order.size(); ++k) {
        if (lex_less(vs[order[k]], vs[order[start_pos]])) start_pos = static_cast<int>(k);
    }
    std::rotate(order.begin(), order.begin() + start_pos, order.end());
    return order;
}

std::string to_string(const VecZ& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << ")";
    return os.str();
}

std::string to_string(const FaceRef& f, const LatticePolytope& p) {
    if (f.whole) return p.dim() == p.ambient_dim() ? "Interior" : "WholePolytope";
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < f.vertex_set.size(); ++i) {
        if (i) os << " ";
        os << to_string(p.vertices()[f.vertex_set[i]]);
    }
    os << "}";
    return os.str();
}

} // namespace reskit
