#include "reskit/degree.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace reskit {

namespace {

// Chirality convention.  The two determinant conventions (outward normal
// last in the source, facet normal then hyperplane normal in the target)
// differ by a dimension-parity factor; this normalizes the count so that
// the family of unit simplices sharing the standard flag has degree +1 in
// every ambient dimension.
int calibration(int ambient_dim) { return ambient_dim % 2 == 0 ? 1 : -1; }

// One top simplex of the second barycentric subdivision of the boundary:
// a chain of chains of faces, recorded by its geometric vertices and the
// color unions of its chains.
struct BsdSimplex {
    std::vector<VecQ> x;               // n points in R^n
    std::vector<std::vector<int>> J;   // n sorted color unions, increasing
    int o_src = 0;                     // boundary orientation in the source
};

bool is_permutation_of_all(const std::vector<int>& eps, int n_plus_1) {
    if (static_cast<int>(eps.size()) != n_plus_1) return false;
    std::vector<bool> seen(n_plus_1, false);
    for (int v : eps) {
        if (v < 0 || v >= n_plus_1 || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

int permutation_parity(const std::vector<int>& eps) {
    int inv = 0;
    for (std::size_t a = 0; a < eps.size(); ++a) {
        for (std::size_t b = a + 1; b < eps.size(); ++b) {
            if (eps[a] > eps[b]) ++inv;
        }
    }
    return inv % 2 == 0 ? 1 : -1;
}

// Interior anchor of the simplex face { y_j = 0 : j in J }: barycentric by
// default, or weights 1,2,3,... on the surviving coordinates.
VecQ simplex_anchor(const std::vector<int>& J, int n, bool weighted) {
    VecQ q(n + 1, Rat(0));
    std::vector<bool> off(n + 1, false);
    for (int j : J) off[j] = true;
    long total = 0;
    long w = 0;
    for (int j = 0; j <= n; ++j) {
        if (off[j]) continue;
        long weight = weighted ? ++w : 1;
        q[j] = weight;
        total += weight;
    }
    if (total == 0) throw PreconditionViolated("simplex_anchor: full color set");
    for (Rat& c : q) c /= total;
    return q;
}

std::vector<BsdSimplex> build_simplices(const FaceColoring& fc) {
    const LatticePolytope& P = fc.sum;
    const int n = P.ambient_dim();
    std::map<std::vector<int>, const std::vector<int>*> color_of;
    for (std::size_t i = 0; i < fc.faces.size(); ++i) color_of[fc.faces[i].vertex_set] = &fc.colors[i];

    std::vector<BsdSimplex> out;
    for (const std::vector<FaceRef>& flag : P.complete_flags()) {
        std::vector<VecQ> b(n);
        std::vector<const std::vector<int>*> cols(n);
        for (int k = 0; k < n; ++k) {
            b[k] = P.face_barycenter(flag[k]);
            cols[k] = color_of.at(flag[k].vertex_set);
        }
        // For faces built by proper_faces() the witness of a facet is its own
        // primitive inner normal; the outward normal is its negative.
        VecQ nu_out = to_rat(flag[n - 1].witness);
        for (Rat& c : nu_out) c = -c;

        std::vector<int> pi(n);
        std::iota(pi.begin(), pi.end(), 0);
        do {
            BsdSimplex s;
            s.x.reserve(n);
            s.J.reserve(n);
            VecQ acc(n, Rat(0));
            std::set<int> ju;
            for (int k = 0; k < n; ++k) {
                acc = vadd(acc, b[pi[k]]);
                VecQ pos = acc;
                Rat inv = Rat(1, k + 1);
                for (Rat& c : pos) c *= inv;
                s.x.push_back(std::move(pos));
                ju.insert(cols[pi[k]]->begin(), cols[pi[k]]->end());
                s.J.emplace_back(ju.begin(), ju.end());
            }
            MatQ rows;
            for (int k = 1; k < n; ++k) rows.push_back(vsub(s.x[k], s.x[0]));
            rows.push_back(nu_out);
            s.o_src = sign(det(std::move(rows)));
            if (s.o_src == 0)
                throw InternalError("pl_degree: degenerate source simplex in the subdivision");
            out.push_back(std::move(s));
        } while (std::next_permutation(pi.begin(), pi.end()));
    }
    return out;
}

} // namespace

int pl_degree(const FaceColoring& fc, const DegreeOptions& opts) {
    const LatticePolytope& P = fc.sum;
    const int n = P.ambient_dim();
    if (P.dim() != n) throw PreconditionViolated("pl_degree: sum must be full-dimensional");
    if (!is_simplicial(fc)) throw PreconditionViolated("pl_degree: coloring is not simplicial");

    std::vector<BsdSimplex> simplices = build_simplices(fc);

    // Image data: target points for each chain, and the boundary orientation
    // of the image simplex against the facet { y_0 = 0 } of the standard
    // simplex (outward direction -e_0, hyperplane vector all-ones).
    struct Image {
        std::vector<VecQ> q;
        int o_tgt = 0;
    };
    std::vector<Image> images;
    images.reserve(simplices.size());
    for (const BsdSimplex& s : simplices) {
        Image im;
        im.q.reserve(n);
        for (const std::vector<int>& J : s.J) im.q.push_back(simplex_anchor(J, n, opts.weighted_anchor));
        MatQ rows;
        for (int k = 1; k < n; ++k) rows.push_back(vsub(im.q[k], im.q[0]));
        VecQ me0(n + 1, Rat(0));
        me0[0] = -1;
        rows.push_back(std::move(me0));
        rows.push_back(VecQ(n + 1, Rat(1)));
        im.o_tgt = sign(det(std::move(rows)));
        images.push_back(std::move(im));
    }

    std::mt19937_64 rng(opts.seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(opts.sample_index + 1)));
    std::uniform_int_distribution<long> draw(1, 1 << 20);

    for (int attempt = 0; attempt < 64; ++attempt) {
        // Generic sample in the relative interior of the facet { y_0 = 0 }.
        VecQ p(n + 1, Rat(0));
        Int total = 0;
        for (int j = 1; j <= n; ++j) {
            long r = draw(rng);
            p[j] = r;
            total += r;
        }
        for (Rat& c : p) c /= Rat(total);

        bool degenerate = false;
        long signed_count = 0;
        for (std::size_t si = 0; si < simplices.size() && !degenerate; ++si) {
            const Image& im = images[si];
            // Does p lie strictly inside conv(q_1..q_n)?  Solve the affine
            // system exactly.
            MatQ A(n + 2, VecQ(n, Rat(0)));
            VecQ b(n + 2, Rat(0));
            for (int r = 0; r <= n; ++r) {
                for (int k = 0; k < n; ++k) A[r][k] = im.q[k][r];
                b[r] = p[r];
            }
            for (int k = 0; k < n; ++k) A[n + 1][k] = 1;
            b[n + 1] = 1;
            LinSolve ls = solve(std::move(A), std::move(b));
            if (ls.status == SolveStatus::Inconsistent) continue;
            if (ls.status == SolveStatus::Underdetermined) {
                degenerate = true;
                break;
            }
            bool inside = true, on_boundary = false;
            for (const Rat& lam : ls.x) {
                if (lam == 0) on_boundary = true;
                if (lam < 0) inside = false;
            }
            if (on_boundary && inside) {
                degenerate = true;
                break;
            }
            if (!inside || on_boundary) continue;
            if (im.o_tgt == 0) throw InternalError("pl_degree: counted a degenerate image simplex");
            signed_count += simplices[si].o_src * im.o_tgt;
        }
        if (!degenerate) return calibration(n) * static_cast<int>(signed_count);
    }
    throw DegeneracyError("pl_degree: no generic sample point found within the retry budget");
}

int signed_flag_count(const FaceColoring& fc, const std::vector<int>& eps) {
    const LatticePolytope& P = fc.sum;
    const int n = P.ambient_dim();
    if (P.dim() != n) throw PreconditionViolated("signed_flag_count: sum must be full-dimensional");
    if (!is_permutation_of_all(eps, n + 1))
        throw PreconditionViolated("signed_flag_count: eps must be a permutation of 0..n");

    // The count below is only meaningful for colorings that reverse the face
    // order: a smaller face carries a superset of the colors of any face
    // containing it (flag vertices accumulate the most colors).
    for (std::size_t a = 0; a < fc.faces.size(); ++a) {
        for (std::size_t b = 0; b < fc.faces.size(); ++b) {
            if (a == b) continue;
            const std::vector<int>& va = fc.faces[a].vertex_set;
            const std::vector<int>& vb = fc.faces[b].vertex_set;
            if (!std::includes(vb.begin(), vb.end(), va.begin(), va.end())) continue;
            if (!std::includes(fc.colors[a].begin(), fc.colors[a].end(), fc.colors[b].begin(),
                               fc.colors[b].end()))
                throw PreconditionViolated(
                    "signed_flag_count: coloring does not reverse the face order");
        }
    }

    std::vector<std::vector<int>> suffix(n + 1);
    for (int k = 1; k <= n; ++k) {
        for (int t = k; t <= n; ++t) suffix[k].push_back(eps[t]);
        std::sort(suffix[k].begin(), suffix[k].end());
    }

    std::map<std::vector<int>, const std::vector<int>*> color_of;
    for (std::size_t i = 0; i < fc.faces.size(); ++i) color_of[fc.faces[i].vertex_set] = &fc.colors[i];

    int total = 0;
    for (const std::vector<FaceRef>& flag : P.complete_flags()) {
        bool match = true;
        for (int k = 1; k <= n && match; ++k) {
            match = (*color_of.at(flag[k - 1].vertex_set) == suffix[k]);
        }
        if (match) total += P.flag_sign(flag);
    }
    return permutation_parity(eps) * total;
}

long unique_colored_flag_check(const FaceColoring& fc, const std::vector<int>& eps) {
    const LatticePolytope& P = fc.sum;
    const int n = P.ambient_dim();
    if (P.dim() != n) throw PreconditionViolated("unique_colored_flag_check: sum must be full-dimensional");
    if (!is_permutation_of_all(eps, n + 1))
        throw PreconditionViolated("unique_colored_flag_check: eps must be a permutation of 0..n");

    // target[k] = colors that the union of a k-chain must hit exactly:
    // the last k entries of eps.
    std::vector<std::vector<int>> target(n + 1);
    for (int k = 1; k <= n; ++k) {
        for (int t = n - k + 1; t <= n; ++t) target[k].push_back(eps[t]);
        std::sort(target[k].begin(), target[k].end());
    }

    std::map<std::vector<int>, const std::vector<int>*> color_of;
    for (std::size_t i = 0; i < fc.faces.size(); ++i) color_of[fc.faces[i].vertex_set] = &fc.colors[i];

    long count = 0;
    for (const std::vector<FaceRef>& flag : P.complete_flags()) {
        std::vector<const std::vector<int>*> cols(n);
        for (int k = 0; k < n; ++k) cols[k] = color_of.at(flag[k].vertex_set);
        std::vector<int> pi(n);
        std::iota(pi.begin(), pi.end(), 0);
        do {
            std::set<int> u;
            bool ok = true;
            for (int k = 1; k <= n && ok; ++k) {
                u.insert(cols[pi[k - 1]]->begin(), cols[pi[k - 1]]->end());
                ok = std::equal(u.begin(), u.end(), target[k].begin(), target[k].end()) &&
                     u.size() == target[k].size();
            }
            if (ok) ++count;
        } while (std::next_permutation(pi.begin(), pi.end()));
    }
    return count;
}

int cdeg(const std::vector<LatticePolytope>& family, const PartitionMatrix& m,
         const DegreeOptions& opts) {
    FaceColoring fmax = face_coloring(family, m, ColoringFlavor::Max);
    FaceColoring fmin = face_coloring(family, m, ColoringFlavor::Min);
    int d = pl_degree(fmax, opts);
    int dmin = pl_degree(fmin, opts);
    if (d != dmin)
        throw InternalError("cdeg: minimal and maximal canonical colorings disagree on the degree");
    DegreeOptions second = opts;
    second.sample_index += 1;
    int d2 = pl_degree(fmax, second);
    if (d != d2) throw InternalError("cdeg: degree depends on the generic sample point");
    return d;
}

} // namespace reskit
