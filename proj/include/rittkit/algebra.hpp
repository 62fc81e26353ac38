#ifndef RITTKIT_ALGEBRA_HPP
#define RITTKIT_ALGEBRA_HPP

#include <vector>

#include "rittkit/poly.hpp"

namespace rittkit {

/// outer(inner(x))
Poly compose(const Poly& outer, const Poly& inner);

/// c * f := f(cx) / c^deg(f); monic in, monic out.
Poly rescale(const FieldElem& c, const Poly& f);

/// Digits c_i with f = sum c_i h^i and deg c_i < deg h.
std::vector<Poly> base_expansion(const Poly& f, const Poly& h);

/// f = lc * prod part_i ^ mult_i with parts squarefree and pairwise coprime (Yun).
struct SquarefreePart {
    Poly part;
    int multiplicity;
};
std::vector<SquarefreePart> squarefree_multiplicities(const Poly& f);

struct Factor {
    Poly poly;        // monic factor over K
    int multiplicity;
    bool irreducible;  // certified irreducible over K (always true for deg <= 2 output)
};

/// Critical values of f: the factorization over K of D(t) = Res_x(t - f(x), f'(x)).
/// ambient_d = 0 derives the field from the coefficients.
std::vector<Factor> critical_values(const Poly& f, long ambient_d = 0);

/// Resultant of two polynomials over K.
FieldElem resultant(const Poly& f, const Poly& g);

/// Desk-scale factorization: squarefree split, then K-rational roots and
/// quadratic factors; residuals that resist are returned unflagged.
std::vector<Factor> factor_desk(const Poly& f, long ambient_d = 0);

/// All roots of f lying in K, with multiplicities.
std::vector<std::pair<FieldElem, int>> roots_in_K(const Poly& f, long ambient_d = 0);

/// Rational roots of a polynomial with rational coefficients.
std::vector<Rat> rational_roots(const Poly& f);

/// Exact linear algebra over Q (row-major matrices).
int rat_rank(std::vector<std::vector<Rat>> m);
std::vector<std::vector<Rat>> rat_kernel(std::vector<std::vector<Rat>> m);

}  // namespace rittkit

#endif
