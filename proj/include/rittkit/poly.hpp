#ifndef RITTKIT_POLY_HPP
#define RITTKIT_POLY_HPP

#include <initializer_list>
#include <utility>
#include <vector>

#include "rittkit/field.hpp"

namespace rittkit {

/// Dense univariate polynomial over K, coefficients lowest degree first.
class Poly {
  public:
    Poly() = default;
    Poly(std::initializer_list<FieldElem> coeffs) : c_(coeffs) { trim(); }
    explicit Poly(std::vector<FieldElem> coeffs) : c_(std::move(coeffs)) { trim(); }
    explicit Poly(const FieldElem& c) : c_{c} { trim(); }

    static Poly x();                          // the identity polynomial
    static Poly monomial(int n, FieldElem c = FieldElem(1));

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    FieldElem coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : FieldElem(0);
    }
    const std::vector<FieldElem>& coeffs() const { return c_; }

    FieldElem lc() const;
    bool is_monic() const { return !is_zero() && lc().is_one(); }

    FieldElem operator()(const FieldElem& x) const;  // evaluation
    Poly operator()(const Poly& inner) const;        // composition

    Poly operator-() const;
    friend Poly operator+(const Poly& f, const Poly& g);
    friend Poly operator-(const Poly& f, const Poly& g);
    friend Poly operator*(const Poly& f, const Poly& g);
    friend Poly operator*(const FieldElem& c, const Poly& f);
    Poly& operator+=(const Poly& g) { return *this = *this + g; }
    Poly& operator-=(const Poly& g) { return *this = *this - g; }
    Poly& operator*=(const Poly& g) { return *this = *this * g; }

    friend bool operator==(const Poly& f, const Poly& g) { return f.c_ == g.c_; }
    friend bool operator!=(const Poly& f, const Poly& g) { return !(f == g); }
    friend bool operator<(const Poly& f, const Poly& g);  // total order for dedup

    Poly derivative() const;
    Poly pow(unsigned n) const;
    Poly monic() const;

    /// Quotient and remainder; divisor must be nonzero.
    friend std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g);

    Poly map_coeffs(FieldElem (*fn)(const FieldElem&)) const;
    Poly sigma(const FieldConfig& cfg) const;  // apply sigma to coefficients

    int ord0() const;  // order of vanishing at 0 (degree+1 convention avoided; zero poly -> -1)

    std::string str() const;

  private:
    std::vector<FieldElem> c_;
    void trim();
};

Poly gcd(const Poly& f, const Poly& g);  // monic gcd

/// Exact n-th root of a polynomial if it exists over K.
std::optional<Poly> poly_nth_root(const Poly& f, unsigned n);

/// Invertible x -> a*x + b.
struct LinearMap {
    FieldElem a{1}, b{0};

    LinearMap() = default;
    LinearMap(FieldElem a_, FieldElem b_);

    static LinearMap identity() { return LinearMap(); }
    static LinearMap scaling(const FieldElem& a) { return LinearMap(a, FieldElem(0)); }
    static LinearMap translation(const FieldElem& b) { return LinearMap(FieldElem(1), b); }

    bool is_identity() const { return a.is_one() && b.is_zero(); }
    bool is_scaling() const { return b.is_zero(); }
    bool is_translation() const { return a.is_one(); }

    FieldElem operator()(const FieldElem& x) const { return a * x + b; }
    Poly operator()(const Poly& f) const;   // this composed after f: a*f + b
    LinearMap inverse() const { return LinearMap(a.inverse(), -b * a.inverse()); }
    LinearMap then(const LinearMap& outer) const;  // outer o this
    Poly to_poly() const { return Poly({b, a}); }
    LinearMap sigma(const FieldConfig& cfg) const {
        return LinearMap(sigma_apply(cfg, a), sigma_apply(cfg, b));
    }

    friend bool operator==(const LinearMap& l, const LinearMap& m) {
        return l.a == m.a && l.b == m.b;
    }
    friend bool operator!=(const LinearMap& l, const LinearMap& m) { return !(l == m); }

    std::string str() const;
};

/// f composed with a linear map on the inside: f(a*x+b).
Poly compose_inner(const Poly& f, const LinearMap& m);

}  // namespace rittkit

#endif
