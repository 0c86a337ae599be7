#pragma once

// Exact dense linear algebra on small vectors and matrices.  Everything here
// is rational or integer arithmetic on boost::multiprecision types; nothing
// in the library ever touches floating point.  Matrices are tiny (ambient
// dimension <= 4, permanents <= 8x8), so plain Gaussian elimination over the
// rationals is the right tool.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "reskit/error.hpp"

namespace reskit {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using VecZ = std::vector<Int>;
using VecQ = std::vector<Rat>;
using MatQ = std::vector<VecQ>; // row-major

inline int sign(const Int& x) { return x.sign(); }
inline int sign(const Rat& x) { return x.sign(); }

inline VecQ to_rat(const VecZ& v) {
    VecQ out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
    return out;
}

inline VecZ vadd(const VecZ& a, const VecZ& b) {
    VecZ out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline VecZ vsub(const VecZ& a, const VecZ& b) {
    VecZ out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline VecQ vadd(const VecQ& a, const VecQ& b) {
    VecQ out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline VecQ vsub(const VecQ& a, const VecQ& b) {
    VecQ out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline VecQ vscale(const Rat& c, const VecQ& a) {
    VecQ out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
    return out;
}

inline Int dot(const VecZ& a, const VecZ& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot(const VecQ& a, const VecQ& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot(const VecZ& a, const VecQ& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

// Colexicographic comparison: the *last* coordinate is the most significant.
// This is the canonical order for lattice points throughout the library
// (coefficient ranks, cell listings, tie-breaks).
inline bool colex_less(const VecZ& a, const VecZ& b) {
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

// Plain lexicographic comparison (first coordinate most significant).  Used
// only where a convention explicitly calls for it, e.g. picking the start
// vertex of the planar edge walk.
inline bool lex_less(const VecZ& a, const VecZ& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

inline Int gcd_all(const VecZ& v) {
    Int g = 0;
    for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
    return g;
}

// Divide out the content.  Direction is preserved; the zero vector is
// rejected because a "primitive direction" for it makes no sense.
inline VecZ primitive(const VecZ& v) {
    Int g = gcd_all(v);
    if (g == 0) throw PreconditionViolated("primitive(): zero vector");
    VecZ out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

// Clear denominators and divide out the content, preserving direction.
inline VecZ primitive(const VecQ& v) {
    Int lcm = 1;
    for (const Rat& x : v) {
        lcm = boost::multiprecision::lcm(lcm, Int(boost::multiprecision::denominator(x)));
    }
    VecZ scaled(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat y = v[i] * Rat(lcm);
        scaled[i] = Int(boost::multiprecision::numerator(y));
    }
    return primitive(scaled);
}

// Row-reduce a copy of `rows` and report the rank.
inline std::size_t rank(MatQ rows) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            Rat f = rows[i][c] / rows[r][c];
            for (std::size_t j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

inline std::size_t rank_of_z(const std::vector<VecZ>& rows) {
    MatQ q;
    q.reserve(rows.size());
    for (const VecZ& r : rows) q.push_back(to_rat(r));
    return rank(std::move(q));
}

// Exact determinant of a square rational matrix by fraction-full Gaussian
// elimination.  Matrices here never exceed a handful of rows.
inline Rat det(MatQ m) {
    const std::size_t n = m.size();
    for (const VecQ& row : m) {
        if (row.size() != n) throw PreconditionViolated("det(): matrix not square");
    }
    Rat result = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != c) {
            std::swap(m[c], m[piv]);
            result = -result;
        }
        result *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return result;
}

inline Rat det_z(const std::vector<VecZ>& rows) {
    MatQ q;
    q.reserve(rows.size());
    for (const VecZ& r : rows) q.push_back(to_rat(r));
    return det(std::move(q));
}

enum class SolveStatus { Unique, Underdetermined, Inconsistent };

struct LinSolve {
    SolveStatus status;
    VecQ x; // valid only when status == Unique
};

// Solve A x = b exactly.  Distinguishing "unique" from "underdetermined" is
// load-bearing: the degree computation treats anything non-unique as a sign
// that the sample point must be re-drawn.
inline LinSolve solve(MatQ a, VecQ b) {
    const std::size_t m = a.size();
    const std::size_t n = m == 0 ? 0 : a[0].size();
    if (b.size() != m) throw PreconditionViolated("solve(): size mismatch");
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t piv = r;
        while (piv < m && a[piv][c] == 0) ++piv;
        if (piv == m) continue;
        std::swap(a[r], a[piv]);
        std::swap(b[r], b[piv]);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i) {
        if (b[i] != 0) return {SolveStatus::Inconsistent, {}};
    }
    if (r < n) return {SolveStatus::Underdetermined, {}};
    VecQ x(n, Rat(0));
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i] / a[i][pivot_col[i]];
    return {SolveStatus::Unique, std::move(x)};
}

// Basis of { x : R x = 0 } for the rational row space R.
inline MatQ nullspace(MatQ rows) {
    if (rows.empty()) return {};
    const std::size_t m = rows.size();
    const std::size_t n = rows[0].size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t piv = r;
        while (piv < m && rows[piv][c] == 0) ++piv;
        if (piv == m) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rat f = rows[i][c] / rows[r][c];
            for (std::size_t j = 0; j < n; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    MatQ basis;
    for (std::size_t free_c = 0; free_c < n; ++free_c) {
        if (is_pivot[free_c]) continue;
        VecQ x(n, Rat(0));
        x[free_c] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) {
            x[pivot_col[i]] = -rows[i][free_c] / rows[i][pivot_col[i]];
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

// Integer basis (primitive rows) of the lattice-orthogonal complement of a
// set of integer vectors: { a : <d, a> = 0 for all d }.
inline std::vector<VecZ> integer_orthogonal_complement(const std::vector<VecZ>& dirs,
                                                       std::size_t ambient_dim) {
    MatQ rows;
    rows.reserve(dirs.size());
    for (const VecZ& d : dirs) rows.push_back(to_rat(d));
    if (rows.empty()) rows.push_back(VecQ(ambient_dim, Rat(0)));
    MatQ basis = nullspace(std::move(rows));
    std::vector<VecZ> out;
    out.reserve(basis.size());
    for (const VecQ& v : basis) out.push_back(primitive(v));
    return out;
}

} // namespace reskit
