#include "reskit/coloring.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace reskit {

Mat01 coloring_matrix(const std::vector<LatticePolytope>& family, const PartitionMatrix& m,
                      const FaceRef& face) {
    const int k = static_cast<int>(family.size());
    Mat01 out(k, std::vector<int>(k, 0));
    for (int i = 0; i < k; ++i) {
        // Minimum of the witness functional on member i; points attaining it
        // lie on the member face induced by `face`.
        Int lo = dot(face.witness, family[i].vertices()[0]);
        for (const VecZ& v : family[i].vertices()) lo = std::min(lo, dot(face.witness, v));
        for (int j = 0; j < k; ++j) {
            for (const VecZ& u : m.cells[i][j]) {
                if (dot(face.witness, u) == lo) {
                    out[i][j] = 1;
                    break;
                }
            }
        }
    }
    return out;
}

Int permanent(const Mat01& m) {
    const std::size_t n = m.size();
    for (const std::vector<int>& row : m) {
        if (row.size() != n) throw InvalidInput("permanent: matrix not square");
    }
    if (n > 8) throw InvalidInput("permanent: matrices beyond 8x8 are not supported");
    if (n == 0) return 1;
    // Ryser's formula over column subsets.
    Int total = 0;
    for (unsigned s = 1; s < (1u << n); ++s) {
        Int prod = 1;
        for (std::size_t i = 0; i < n && prod != 0; ++i) {
            Int rowsum = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (s & (1u << j)) rowsum += m[i][j];
            }
            prod *= rowsum;
        }
        int bits = __builtin_popcount(s);
        if ((n - bits) % 2 == 0) {
            total += prod;
        } else {
            total -= prod;
        }
    }
    return total;
}

std::optional<ZeroBlock> fk_zero_submatrix(const Mat01& m) {
    const int n = static_cast<int>(m.size());
    // Kuhn's augmenting-path matching, rows in ascending order so the result
    // is deterministic.
    std::vector<int> match_col(n, -1); // col -> row
    auto try_row = [&](auto&& self, int r, std::vector<bool>& seen) -> bool {
        for (int c = 0; c < n; ++c) {
            if (m[r][c] == 0 || seen[c]) continue;
            seen[c] = true;
            if (match_col[c] == -1 || self(self, match_col[c], seen)) {
                match_col[c] = r;
                return true;
            }
        }
        return false;
    };
    int matched = 0;
    for (int r = 0; r < n; ++r) {
        std::vector<bool> seen(n, false);
        if (try_row(try_row, r, seen)) ++matched;
    }
    if (matched == n) return std::nullopt; // perfect matching -> permanent > 0

    // Koenig: alternating reachability from unmatched rows.  The reachable
    // rows x unreachable columns block is all zero.
    std::vector<int> match_row(n, -1); // row -> col
    for (int c = 0; c < n; ++c) {
        if (match_col[c] != -1) match_row[match_col[c]] = c;
    }
    std::vector<bool> row_z(n, false), col_z(n, false);
    std::vector<int> stack;
    for (int r = 0; r < n; ++r) {
        if (match_row[r] == -1) {
            row_z[r] = true;
            stack.push_back(r);
        }
    }
    while (!stack.empty()) {
        int r = stack.back();
        stack.pop_back();
        for (int c = 0; c < n; ++c) {
            if (m[r][c] == 0 || col_z[c]) continue;
            if (match_row[r] == c) continue; // only non-matching edges row -> col
            col_z[c] = true;
            int r2 = match_col[c];
            if (r2 != -1 && !row_z[r2]) {
                row_z[r2] = true;
                stack.push_back(r2);
            }
        }
    }
    std::vector<int> rows, cols;
    for (int r = 0; r < n; ++r) {
        if (row_z[r]) rows.push_back(r);
    }
    for (int c = 0; c < n; ++c) {
        if (!col_z[c]) cols.push_back(c);
    }
    // |rows| + |cols| = 2n - matched >= n + 1; trim (lex-first kept) to the
    // tight size the certificate format wants.
    int r_keep = std::max(1, n + 1 - static_cast<int>(cols.size()));
    rows.resize(r_keep);
    cols.resize(n + 1 - r_keep);
    return ZeroBlock{std::move(rows), std::move(cols)};
}

bool is_admissible(const Mat01& m, const std::vector<int>& J) {
    const int n = static_cast<int>(m.size());
    if (J.empty() || static_cast<int>(J.size()) >= n) return false;
    int zero_rows = 0;
    for (int r = 0; r < n; ++r) {
        bool zero = true;
        for (int c : J) {
            if (m[r][c] != 0) {
                zero = false;
                break;
            }
        }
        if (zero) ++zero_rows;
    }
    return zero_rows >= n + 1 - static_cast<int>(J.size());
}

std::vector<std::vector<int>> admissible_colorings(const Mat01& m) {
    const int n = static_cast<int>(m.size());
    std::vector<std::vector<int>> out;
    for (unsigned s = 1; s + 1 < (1u << n); ++s) {
        std::vector<int> J;
        for (int c = 0; c < n; ++c) {
            if (s & (1u << c)) J.push_back(c);
        }
        if (is_admissible(m, J)) out.push_back(std::move(J));
    }
    std::sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

namespace {

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

std::vector<int> canonical_min_coloring(const Mat01& m) {
    std::vector<std::vector<int>> adm = admissible_colorings(m);
    if (adm.empty()) throw PreconditionViolated("canonical_min_coloring: no admissible color set");
    std::set<int> u;
    for (const std::vector<int>& J : adm) {
        bool minimal = true;
        for (const std::vector<int>& K : adm) {
            if (K != J && subset_of(K, J)) {
                minimal = false;
                break;
            }
        }
        if (minimal) u.insert(J.begin(), J.end());
    }
    return std::vector<int>(u.begin(), u.end());
}

std::vector<int> canonical_max_coloring(const Mat01& m) {
    std::vector<std::vector<int>> adm = admissible_colorings(m);
    if (adm.empty()) throw PreconditionViolated("canonical_max_coloring: no admissible color set");
    std::vector<int> inter;
    bool first = true;
    for (const std::vector<int>& J : adm) {
        bool maximal = true;
        for (const std::vector<int>& K : adm) {
            if (K != J && subset_of(J, K)) {
                maximal = false;
                break;
            }
        }
        if (!maximal) continue;
        if (first) {
            inter = J;
            first = false;
        } else {
            std::vector<int> tmp;
            std::set_intersection(inter.begin(), inter.end(), J.begin(), J.end(),
                                  std::back_inserter(tmp));
            inter = std::move(tmp);
        }
    }
    return inter;
}

const std::vector<int>* FaceColoring::colors_of(const FaceRef& f) const {
    for (std::size_t i = 0; i < faces.size(); ++i) {
        if (faces[i].vertex_set == f.vertex_set) return &colors[i];
    }
    return nullptr;
}

FaceColoring face_coloring(const std::vector<LatticePolytope>& family, const PartitionMatrix& m,
                           ColoringFlavor flavor) {
    FaceColoring fc;
    fc.sum = minkowski_sum(family);
    fc.faces = fc.sum.proper_faces();
    fc.flavor = flavor;
    fc.colors.reserve(fc.faces.size());
    for (const FaceRef& face : fc.faces) {
        Mat01 cm = coloring_matrix(family, m, face);
        fc.colors.push_back(flavor == ColoringFlavor::Min ? canonical_min_coloring(cm)
                                                          : canonical_max_coloring(cm));
    }
    return fc;
}

bool is_simplicial(const FaceColoring& fc) {
    const int full = fc.sum.ambient_dim() + 1;
    std::map<std::vector<int>, const std::vector<int>*> by_set;
    for (std::size_t i = 0; i < fc.faces.size(); ++i) by_set[fc.faces[i].vertex_set] = &fc.colors[i];
    for (const std::vector<FaceRef>& flag : fc.sum.complete_flags()) {
        std::set<int> u;
        for (const FaceRef& f : flag) {
            const std::vector<int>* c = by_set.at(f.vertex_set);
            u.insert(c->begin(), c->end());
        }
        if (static_cast<int>(u.size()) >= full) return false;
    }
    return true;
}

} // namespace reskit
