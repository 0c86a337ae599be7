#pragma once

// Symbolic Laurent polynomials whose coefficients are polynomials in named
// symbols with integer scalars.  Symbols name the generic coefficients of
// the input supports: member 0 gets a0, a1, ..., member 1 gets b0, b1, ...,
// ranked by colex position of the lattice point inside its member's support.
// Everything is exact; rendering is canonical so equal polynomials print
// identically byte for byte.

#include <map>
#include <string>
#include <vector>

#include "reskit/partition.hpp"

namespace reskit {

// One generic coefficient: the `rank`-th support point of member `member`.
struct CoeffSymbol {
    int member = 0;
    int rank = 0; // colex rank within the member's support

    friend auto operator<=>(const CoeffSymbol&, const CoeffSymbol&) = default;
};

// Default display name, letter by member: a0, b3, c1, ...
std::string symbol_name(const CoeffSymbol& s);

// Product of symbols (kept sorted) with an integer scalar.
struct CoeffMonomial {
    Int scalar = 1;
    std::vector<CoeffSymbol> symbols;

    friend bool operator==(const CoeffMonomial& a, const CoeffMonomial& b) {
        return a.scalar == b.scalar && a.symbols == b.symbols;
    }
};

struct LexLess {
    bool operator()(const VecZ& a, const VecZ& b) const { return lex_less(a, b); }
};

// Sum over lattice exponents of coefficient polynomials.  The exponent map
// is kept in plain lex order, which is also the canonical print order.
class LaurentPoly {
public:
    using TermMap = std::map<VecZ, std::vector<CoeffMonomial>, LexLess>;

    LaurentPoly() = default;
    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly term(const VecZ& exponent, CoeffSymbol symbol);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }

    // Exponents with nonzero coefficient, lex ascending.
    std::vector<VecZ> support() const;

private:
    TermMap terms_;
    void add_monomials(const VecZ& e, const std::vector<CoeffMonomial>& monos, bool negate);
};

// Variable names: n=1 -> t; n=2..4 -> x,y,z,w; larger -> t1..tn.
std::vector<std::string> variable_names(int n);

// Canonical text: terms lex-ascending by exponent, coefficient monomials in
// canonical order, e.g. "a1*b2*c0*x*y + a0*b1*c1*x^2*y - a1*b0*c1*x^2*y".
std::string canonical_text(const LaurentPoly& p, int ambient_dim);

// Same, with caller-chosen coefficient names (names[member][rank]).
std::string canonical_text(const LaurentPoly& p, int ambient_dim,
                           const std::vector<std::vector<std::string>>& names);

// The (n+1) x (n+1) residue matrix of a partition: entry (i,j) collects the
// generic terms of member i whose exponents were assigned to class j.
// `supports` lists each member's named support in colex order (normally its
// full lattice point set).
std::vector<std::vector<LaurentPoly>> residue_matrix(
    const std::vector<LatticePolytope>& family, const PartitionMatrix& m,
    const std::vector<std::vector<VecZ>>& supports);

// Determinant by cofactor expansion along the first row.
LaurentPoly poly_det(const std::vector<std::vector<LaurentPoly>>& mat);

// True when every exponent of p is interior to the polytope.
bool support_interior(const LaurentPoly& p, const LatticePolytope& sum);

// Homogenization data: for each exponent, the facet pairing values
// <u, normal> + offset - 1 in facet order (the -1 is the canonical-twist
// shift, so interior exponents give nonnegative entries).  Exponents outside
// the polytope are refused.
struct HomogenizedTerm {
    VecZ exponent;
    std::vector<Int> facet_exponents;
};
std::vector<HomogenizedTerm> homogenize(const LaurentPoly& p, const LatticePolytope& sum);

} // namespace reskit
