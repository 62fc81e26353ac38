#include "rittkit/poly.hpp"

#include <algorithm>
#include <sstream>

namespace rittkit {

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::x() { return Poly({FieldElem(0), FieldElem(1)}); }

Poly Poly::monomial(int n, FieldElem c) {
    std::vector<FieldElem> v(n + 1, FieldElem(0));
    v[n] = std::move(c);
    return Poly(std::move(v));
}

FieldElem Poly::lc() const {
    if (is_zero()) throw std::domain_error("poly: leading coefficient of zero polynomial");
    return c_.back();
}

FieldElem Poly::operator()(const FieldElem& x) const {
    FieldElem r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

Poly Poly::operator()(const Poly& inner) const {
    Poly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * inner + Poly(*it);
    return r;
}

Poly Poly::operator-() const {
    auto v = c_;
    for (auto& x : v) x = -x;
    return Poly(std::move(v));
}

Poly operator+(const Poly& f, const Poly& g) {
    std::vector<FieldElem> v(std::max(f.c_.size(), g.c_.size()), FieldElem(0));
    for (size_t i = 0; i < v.size(); ++i) v[i] = f.coeff(i) + g.coeff(i);
    return Poly(std::move(v));
}

Poly operator-(const Poly& f, const Poly& g) { return f + (-g); }

Poly operator*(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return Poly();
    std::vector<FieldElem> v(f.c_.size() + g.c_.size() - 1, FieldElem(0));
    for (size_t i = 0; i < f.c_.size(); ++i)
        for (size_t j = 0; j < g.c_.size(); ++j) v[i + j] += f.c_[i] * g.c_[j];
    return Poly(std::move(v));
}

Poly operator*(const FieldElem& c, const Poly& f) {
    auto v = f.c_;
    for (auto& x : v) x = c * x;
    return Poly(std::move(v));
}

bool operator<(const Poly& f, const Poly& g) {
    if (f.c_.size() != g.c_.size()) return f.c_.size() < g.c_.size();
    for (size_t i = f.c_.size(); i-- > 0;) {
        if (f.c_[i] != g.c_[i]) return f.c_[i] < g.c_[i];
    }
    return false;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<FieldElem> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = FieldElem(static_cast<long>(i)) * c_[i];
    return Poly(std::move(v));
}

Poly Poly::pow(unsigned n) const {
    Poly r(FieldElem(1)), base = *this;
    while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return lc().inverse() * *this;
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw std::domain_error("poly: division by zero polynomial");
    Poly r = f;
    std::vector<FieldElem> q(std::max(0, f.degree() - g.degree() + 1), FieldElem(0));
    FieldElem inv = g.lc().inverse();
    while (!r.is_zero() && r.degree() >= g.degree()) {
        int k = r.degree() - g.degree();
        FieldElem c = r.lc() * inv;
        q[k] = c;
        r = r - c * (Poly::monomial(k) * g);
    }
    return {Poly(std::move(q)), r};
}

Poly gcd(const Poly& f, const Poly& g) {
    Poly a = f, b = g;
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = b;
        b = r;
    }
    return a.is_zero() ? a : a.monic();
}

std::optional<Poly> poly_nth_root(const Poly& f, unsigned n) {
    if (n == 0) throw std::invalid_argument("poly_nth_root: n must be positive");
    if (n == 1) return f;
    if (f.is_zero()) return f;
    if (f.degree() % n != 0) return std::nullopt;
    auto lcr = f.lc().nth_root(n);
    if (!lcr) return std::nullopt;
    int m = f.degree() / n;
    // Build root coefficient by coefficient from the top.
    std::vector<FieldElem> h(m + 1, FieldElem(0));
    h[m] = *lcr;
    Poly H(h);
    FieldElem lcn(1);  // lc^(n-1)
    for (unsigned j = 0; j + 1 < n; ++j) lcn *= *lcr;
    for (int i = m - 1; i >= 0; --i) {
        // coefficient of x^(i + (n-1)m) in H^n is n*lc^(n-1)*h_i + terms already known
        Poly Hn = H.pow(n);
        FieldElem target = f.coeff(i + (n - 1) * m) - Hn.coeff(i + (n - 1) * m);
        h[i] = target / (FieldElem(static_cast<long>(n)) * lcn);
        H = Poly(h);
    }
    if (H.pow(n) != f) return std::nullopt;
    return H;
}

int Poly::ord0() const {
    if (is_zero()) return -1;
    int k = 0;
    while (c_[k].is_zero()) ++k;
    return k;
}

Poly Poly::sigma(const FieldConfig& cfg) const {
    if (cfg.sigma == Sigma::Identity) return *this;
    auto v = c_;
    for (auto& x : v) x = x.conj();
    return Poly(std::move(v));
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        FieldElem c = coeff(i);
        if (c.is_zero()) continue;
        std::string cs;
        bool neg = false;
        if (c.rb() == 0) {
            Rat a = c.ra();
            neg = a < 0;
            if (neg) a = -a;
            cs = a.get_str();
            if (cs == "1" && i > 0) cs.clear();
        } else if (c.ra() == 0) {
            Rat b = c.rb();
            neg = b < 0;
            if (neg) b = -b;
            cs = (b == 1) ? "s" : b.get_str() + "*s";
        } else {
            FieldElem cc = c;
            // keep mixed coefficients grouped so the expression re-parses exactly
            cs = "(" + cc.str() + ")";
        }
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (i == 0) {
            os << (cs.empty() ? "1" : cs);
        } else {
            if (!cs.empty()) os << cs << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

LinearMap::LinearMap(FieldElem a_, FieldElem b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a.is_zero()) throw std::invalid_argument("linear map: a must be nonzero");
}

Poly LinearMap::operator()(const Poly& f) const { return a * f + Poly(b); }

LinearMap LinearMap::then(const LinearMap& outer) const {
    return LinearMap(outer.a * a, outer.a * b + outer.b);
}

Poly compose_inner(const Poly& f, const LinearMap& m) { return f(m.to_poly()); }

std::string LinearMap::str() const {
    Poly p({b, a});
    return p.str();
}

}  // namespace rittkit
