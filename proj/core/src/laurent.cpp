#include "reskit/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace reskit {

std::string symbol_name(const CoeffSymbol& s) {
    if (s.member < 0 || s.rank < 0) throw PreconditionViolated("symbol_name: negative index");
    std::string out;
    if (s.member < 26) {
        out.push_back(static_cast<char>('a' + s.member));
    } else {
        out = "m" + std::to_string(s.member) + "_";
    }
    out += std::to_string(s.rank);
    return out;
}

namespace {

bool monomial_order(const CoeffMonomial& a, const CoeffMonomial& b) {
    return a.symbols < b.symbols;
}

// Merge equal symbol products, drop zero scalars; keeps canonical order.
void normalize(std::vector<CoeffMonomial>& monos) {
    std::sort(monos.begin(), monos.end(), monomial_order);
    std::vector<CoeffMonomial> out;
    for (CoeffMonomial& m : monos) {
        if (!out.empty() && out.back().symbols == m.symbols) {
            out.back().scalar += m.scalar;
        } else {
            out.push_back(std::move(m));
        }
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const CoeffMonomial& m) { return m.scalar == 0; }),
              out.end());
    monos = std::move(out);
}

} // namespace

LaurentPoly LaurentPoly::term(const VecZ& exponent, CoeffSymbol symbol) {
    LaurentPoly p;
    CoeffMonomial m;
    m.scalar = 1;
    m.symbols = {symbol};
    p.terms_[exponent] = {std::move(m)};
    return p;
}

void LaurentPoly::add_monomials(const VecZ& e, const std::vector<CoeffMonomial>& monos, bool negate) {
    std::vector<CoeffMonomial>& mine = terms_[e];
    for (CoeffMonomial m : monos) {
        if (negate) m.scalar = -m.scalar;
        mine.push_back(std::move(m));
    }
    normalize(mine);
    if (mine.empty()) terms_.erase(e);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    for (const auto& [e, monos] : other.terms_) add_monomials(e, monos, false);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
    for (const auto& [e, monos] : other.terms_) add_monomials(e, monos, true);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ma] : a.terms_) {
        for (const auto& [eb, mb] : b.terms_) {
            VecZ e = vadd(ea, eb);
            std::vector<CoeffMonomial> prod;
            prod.reserve(ma.size() * mb.size());
            for (const CoeffMonomial& x : ma) {
                for (const CoeffMonomial& y : mb) {
                    CoeffMonomial m;
                    m.scalar = x.scalar * y.scalar;
                    m.symbols.reserve(x.symbols.size() + y.symbols.size());
                    std::merge(x.symbols.begin(), x.symbols.end(), y.symbols.begin(),
                               y.symbols.end(), std::back_inserter(m.symbols));
                    prod.push_back(std::move(m));
                }
            }
            out.add_monomials(e, prod, false);
        }
    }
    return out;
}

std::vector<VecZ> LaurentPoly::support() const {
    std::vector<VecZ> out;
    out.reserve(terms_.size());
    for (const auto& [e, monos] : terms_) out.push_back(e);
    return out;
}

std::vector<std::string> variable_names(int n) {
    if (n <= 0) throw PreconditionViolated("variable_names: dimension must be positive");
    if (n == 1) return {"t"};
    if (n <= 4) {
        static const char* xyzw[] = {"x", "y", "z", "w"};
        std::vector<std::string> out;
        for (int i = 0; i < n; ++i) out.emplace_back(xyzw[i]);
        return out;
    }
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i) out.push_back("t" + std::to_string(i));
    return out;
}

namespace {

std::string render(const LaurentPoly& p, int ambient_dim,
                   const std::vector<std::vector<std::string>>* names) {
    if (p.is_zero()) return "0";
    std::vector<std::string> vars = variable_names(ambient_dim);
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, monos] : p.terms()) {
        for (const CoeffMonomial& m : monos) {
            Int mag = boost::multiprecision::abs(m.scalar);
            bool neg = m.scalar < 0;
            if (first) {
                if (neg) os << "-";
                first = false;
            } else {
                os << (neg ? " - " : " + ");
            }
            std::vector<std::string> parts;
            if (mag != 1 || (m.symbols.empty() && e == VecZ(e.size(), Int(0)))) {
                parts.push_back(mag.str());
            }
            for (const CoeffSymbol& s : m.symbols) {
                if (names) {
                    parts.push_back((*names)[s.member][s.rank]);
                } else {
                    parts.push_back(symbol_name(s));
                }
            }
            for (int i = 0; i < ambient_dim; ++i) {
                if (e[i] == 0) continue;
                if (e[i] == 1) {
                    parts.push_back(vars[i]);
                } else {
                    parts.push_back(vars[i] + "^" + e[i].str());
                }
            }
            if (parts.empty()) parts.push_back("1");
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (i) os << "*";
                os << parts[i];
            }
        }
    }
    return os.str();
}

} // namespace

std::string canonical_text(const LaurentPoly& p, int ambient_dim) {
    return render(p, ambient_dim, nullptr);
}

std::string canonical_text(const LaurentPoly& p, int ambient_dim,
                           const std::vector<std::vector<std::string>>& names) {
    return render(p, ambient_dim, &names);
}

std::vector<std::vector<LaurentPoly>> residue_matrix(
    const std::vector<LatticePolytope>& family, const PartitionMatrix& m,
    const std::vector<std::vector<VecZ>>& supports) {
    const int k = static_cast<int>(family.size());
    if (m.members() != k || static_cast<int>(supports.size()) != k)
        throw PreconditionViolated("residue_matrix: size mismatch");
    std::vector<std::vector<LaurentPoly>> out(k, std::vector<LaurentPoly>(k));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            LaurentPoly entry;
            for (const VecZ& u : m.cells[i][j]) {
                auto it = std::lower_bound(supports[i].begin(), supports[i].end(), u, colex_less);
                if (it == supports[i].end() || *it != u) continue; // zero coefficient
                CoeffSymbol s;
                s.member = i;
                s.rank = static_cast<int>(it - supports[i].begin());
                entry += LaurentPoly::term(u, s);
            }
            out[i][j] = std::move(entry);
        }
    }
    return out;
}

LaurentPoly poly_det(const std::vector<std::vector<LaurentPoly>>& mat) {
    const std::size_t n = mat.size();
    for (const auto& row : mat) {
        if (row.size() != n) throw PreconditionViolated("poly_det: matrix not square");
    }
    if (n == 0) throw PreconditionViolated("poly_det: empty matrix");
    if (n == 1) return mat[0][0];
    LaurentPoly out;
    for (std::size_t c = 0; c < n; ++c) {
        if (mat[0][c].is_zero()) continue;
        std::vector<std::vector<LaurentPoly>> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<LaurentPoly> row;
            row.reserve(n - 1);
            for (std::size_t cc = 0; cc < n; ++cc) {
                if (cc != c) row.push_back(mat[r][cc]);
            }
            minor.push_back(std::move(row));
        }
        LaurentPoly contrib = mat[0][c] * poly_det(minor);
        if (c % 2 == 0) {
            out += contrib;
        } else {
            out -= contrib;
        }
    }
    return out;
}

bool support_interior(const LaurentPoly& p, const LatticePolytope& sum) {
    for (const auto& [e, monos] : p.terms()) {
        if (!sum.interior_contains(e)) return false;
    }
    return true;
}

std::vector<HomogenizedTerm> homogenize(const LaurentPoly& p, const LatticePolytope& sum) {
    std::vector<HomogenizedTerm> out;
    for (const auto& [e, monos] : p.terms()) {
        if (!sum.contains(e))
            throw InvalidInput("homogenize: exponent " + to_string(e) + " lies outside the polytope");
        HomogenizedTerm t;
        t.exponent = e;
        for (const Facet& f : sum.facets()) {
            t.facet_exponents.push_back(dot(f.normal, e) + f.offset - 1);
        }
        out.push_back(std::move(t));
    }
    return out;
}

} // namespace reskit
