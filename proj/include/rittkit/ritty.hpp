#ifndef RITTKIT_RITTY_HPP
#define RITTKIT_RITTY_HPP

#include <optional>
#include <string>
#include <vector>

#include "rittkit/algebra.hpp"

namespace rittkit {

/// monic x^k * u(x^ell)^n with u monic, u(0) != 0, gcd(k,ell) = gcd(k,n) = 1.
struct SFormData {
    int k = 0, ell = 1, n = 1;
    Poly u;
    Poly to_poly() const;
};

enum class RittyVariant { Monomial, Quadratic, ChebyshevLike, SForm };

struct RittyForm {
    RittyVariant variant = RittyVariant::SForm;
    int prime = 0;                // degree for Monomial / ChebyshevLike
    FieldElem scale{1};           // lambda of C_{p,lambda}
    bool hat = false;             // hatted Chebyshev x*v(x)^2 shape
    SFormData sform;
    // L o ritty o M = f, when the witnesses live in K
    std::optional<std::pair<LinearMap, LinearMap>> witnesses;
    // defining quadratic t^2 - c of the extension the witnesses need, otherwise
    std::optional<Poly> witness_field;

    Poly ritty_poly() const;
};

enum class Taxon { Unswappable, Monomial, TypeC, TypeJ, TypeCoJ, TypeB };

std::string taxon_name(Taxon t);

struct SwapClass {
    Taxon verdict = Taxon::Unswappable;
    std::vector<RittyForm> evidence;
    std::vector<std::string> trace;   // reachability notes for coJ, certificates
    bool unresolved_witness = false;  // verdict is geometric but K-witnesses were not found
};

/// Monic Chebyshev C_n: x^n + x^-n = C_n(x + 1/x).
Poly chebyshev(int n);

/// f = scale * (x - center)^n + value, the unique monomial presentation.
struct MPresentation {
    FieldElem center, value, scale;
    int n;
};
std::optional<MPresentation> mono_presentation(const Poly& f);

/// f = scale * S(x - center) + value with S a monic S-form ritty polynomial.
struct SPresentation {
    FieldElem center, value, scale;
    SFormData s;
};
std::vector<SPresentation> sform_presentations(const Poly& f, long ambient_d = 0);

/// T o f o S = C_n exactly (n = deg f), or the quadratic extension needed.
struct ChebWitness {
    int n = 0;
    std::optional<std::pair<LinearMap, LinearMap>> TS;
    std::optional<Poly> ext;  // t^2 - (required square)
    bool found() const { return TS.has_value() || ext.has_value(); }
};
ChebWitness chebyshev_witness(const Poly& f);

/// All ritty forms linearly related to an indecomposable f.
std::vector<RittyForm> ritty_presentations(const Poly& f, long ambient_d = 0);

SwapClass classify(const Poly& f, long ambient_d = 0);

/// (ell, n) of an SForm presentation.
std::pair<int, int> in_out_degree(const RittyForm& form);

struct TranslationSolution {
    Poly u;
    FieldElem B;
    Poly u2;
};

/// Unique monic degree-s u with (+B) o (x u(x)^2) o (+1) = x u2(x)^2.
TranslationSolution type_w_polynomial(int s);

/// Unique monic degree-s u with (+B) o (x u(x)^2) o (+1) = x u2(x^2).
TranslationSolution type_c_hat_polynomial(int s);

/// Rank of the defining linear operator on degree-<=s polynomials (equals s).
int type_w_operator_rank(int s);
int type_c_hat_operator_rank(int s);

}  // namespace rittkit

#endif
