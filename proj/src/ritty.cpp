#include "rittkit/ritty.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace rittkit {

Poly SFormData::to_poly() const {
    // u(x^ell)
    std::vector<FieldElem> spread(static_cast<size_t>(u.degree()) * ell + 1, FieldElem(0));
    for (int i = 0; i <= u.degree(); ++i) spread[static_cast<size_t>(i) * ell] = u.coeff(i);
    Poly ue{std::move(spread)};
    return Poly::monomial(k) * ue.pow(static_cast<unsigned>(n));
}

Poly chebyshev(int n) {
    if (n < 1) throw std::invalid_argument("chebyshev: n must be >= 1");
    Poly prev{FieldElem(2)};  // C_0 = 2
    Poly cur = Poly::x();     // C_1 = x
    for (int i = 1; i < n; ++i) {
        Poly next = Poly::x() * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

Poly RittyForm::ritty_poly() const {
    switch (variant) {
        case RittyVariant::Monomial:
            return Poly::monomial(prime);
        case RittyVariant::Quadratic:
            return Poly::monomial(2);
        case RittyVariant::ChebyshevLike: {
            Poly c = chebyshev(prime);
            if (hat) c = compose_inner(LinearMap::translation(FieldElem(2))(c),
                                       LinearMap::translation(FieldElem(-2)));
            return scale.is_one() ? c : rescale(scale, c);
        }
        case RittyVariant::SForm:
            return sform.to_poly();
    }
    throw std::logic_error("ritty_poly: bad variant");
}

std::string taxon_name(Taxon t) {
    switch (t) {
        case Taxon::Unswappable: return "Unswappable";
        case Taxon::Monomial: return "Monomial";
        case Taxon::TypeC: return "TypeC";
        case Taxon::TypeJ: return "TypeJ";
        case Taxon::TypeCoJ: return "TypeCoJ";
        case Taxon::TypeB: return "TypeB";
    }
    return "?";
}

std::optional<MPresentation> mono_presentation(const Poly& f) {
    int n = f.degree();
    if (n < 2) return std::nullopt;
    Poly fp = f.derivative();
    // f = A (x-m)^n + c requires f' = nA (x-m)^(n-1)
    FieldElem m = -fp.coeff(n - 2) / (FieldElem(n - 1) * fp.lc());
    if (n == 2) m = -fp.coeff(0) / fp.lc();
    FieldElem A = f.lc();
    FieldElem c = f(m);
    Poly target = A * compose_inner(Poly::monomial(n), LinearMap(FieldElem(1), -m)) + Poly(c);
    if (target != f) return std::nullopt;
    return MPresentation{m, c, A, n};
}

namespace {

int support_gcd(const Poly& g) {
    int acc = 0;
    for (int i = 1; i <= g.degree(); ++i)
        if (!g.coeff(i).is_zero()) acc = std::gcd(acc, i);
    return acc == 0 ? 1 : acc;
}

// G(x) = Gt(x^ell)
Poly contract(const Poly& g, int ell) {
    std::vector<FieldElem> v(g.degree() / ell + 1, FieldElem(0));
    for (int i = 0; i <= g.degree(); i += ell) v[i / ell] = g.coeff(i);
    return Poly{std::move(v)};
}

std::optional<SPresentation> sform_at(const Poly& f, const FieldElem& m) {
    Poly F = compose_inner(f, LinearMap::translation(m)) - Poly(f(m));
    int k = F.ord0();
    if (k < 1 || k == f.degree()) return std::nullopt;  // monomial shape is not an S-form
    Poly G = divmod(F, Poly::monomial(k)).first;
    int ell = support_gcd(G);
    Poly Gt = contract(G, ell);
    FieldElem A = Gt.lc();
    Poly H = A.inverse() * Gt;
    auto parts = squarefree_multiplicities(H);
    int n = 0;
    for (auto& p : parts) n = std::gcd(n, p.multiplicity);
    if (n == 0) return std::nullopt;
    Poly u{FieldElem(1)};
    for (auto& p : parts) u = u * p.part.pow(static_cast<unsigned>(p.multiplicity / n));
    if (u.is_constant()) return std::nullopt;
    if (u.coeff(0).is_zero()) return std::nullopt;
    if (!(ell > 1 || n > 1)) return std::nullopt;
    if (std::gcd(k, ell) != 1 || std::gcd(k, n) != 1) return std::nullopt;
    SPresentation pres{m, f(m), A, SFormData{k, ell, n, u}};
    // exact recomposition check
    Poly S = pres.s.to_poly();
    Poly back = A * compose_inner(S, LinearMap(FieldElem(1), -m)) + Poly(pres.value);
    if (back != f) return std::nullopt;
    return pres;
}

}  // namespace

std::vector<SPresentation> sform_presentations(const Poly& f, long ambient_d) {
    std::vector<SPresentation> out;
    int nf = f.degree();
    if (nf < 2) return out;
    std::set<std::pair<std::pair<Rat, Rat>, long>> seen;
    std::vector<FieldElem> candidates;
    // barycenter: the only possible center when ell > 1
    candidates.push_back(-f.coeff(nf - 1) / (FieldElem(nf) * f.lc()));
    // critical points in K
    Poly fp = f.derivative();
    for (auto& [r, mult] : roots_in_K(fp, ambient_d)) {
        (void)mult;
        candidates.push_back(r);
    }
    // simple K-roots of critical fibers f = c0 for K-rational critical values c0
    for (auto& fac : critical_values(f, ambient_d)) {
        if (fac.poly.degree() != 1) continue;
        FieldElem c0 = -fac.poly.coeff(0);
        for (auto& [r, mult] : roots_in_K(f - Poly(c0), ambient_d))
            if (mult == 1) candidates.push_back(r);
    }
    for (auto& m : candidates) {
        auto key = std::make_pair(std::make_pair(m.ra(), m.rb()), m.d());
        if (seen.count(key)) continue;
        seen.insert(key);
        if (auto p = sform_at(f, m)) out.push_back(*p);
    }
    std::sort(out.begin(), out.end(),
              [](const SPresentation& a, const SPresentation& b) { return a.center < b.center; });
    return out;
}

ChebWitness chebyshev_witness(const Poly& f) {
    ChebWitness w;
    int n = f.degree();
    if (n < 2) return w;
    w.n = n;
    if (n == 2) {
        // any quadratic: f = A (x-v)^2 + c and T o f o S = C_2 with S = (+v)
        auto mp = mono_presentation(f);
        if (!mp) return w;  // cannot happen for quadratics
        LinearMap S = LinearMap::translation(mp->center);
        LinearMap T(mp->scale.inverse(), -mp->value / mp->scale - FieldElem(2));
        if (T(f(S.to_poly())) != chebyshev(2)) return w;
        w.TS = {T, S};
        return w;
    }
    FieldElem m = -f.coeff(n - 1) / (FieldElem(n) * f.lc());
    Poly g = compose_inner(f, LinearMap::translation(m));
    if (g.coeff(n - 2).is_zero()) return w;
    FieldElem csq = -FieldElem(n) * g.lc() / g.coeff(n - 2);
    // verify g(x) = a C_n(c x) + b using only c^2 (C_n is parity-graded)
    Poly C = chebyshev(n);
    FieldElem gn = g.lc();
    for (int j = 1; j <= n; ++j) {
        // a c^j = g_n c^(j-n) = g_n csq^((j-n)/2) for j = n mod 2
        if ((n - j) % 2 == 0) {
            FieldElem pw(1);
            for (int t = 0; t < (n - j) / 2; ++t) pw = pw * csq;
            if (g.coeff(j) * pw != gn * C.coeff(j)) return w;
        } else if (!g.coeff(j).is_zero()) {
            return w;
        }
    }
    auto c = csq.nth_root(2);
    if (!c) {
        Poly ext({-csq, FieldElem(0), FieldElem(1)});  // t^2 - csq
        w.ext = ext;
        return w;
    }
    if (*c < FieldElem(0)) c = -*c;
    FieldElem cn(1);
    for (int t = 0; t < n; ++t) cn = cn * *c;
    FieldElem a = gn / cn;
    FieldElem b = g.coeff(0) - a * C.coeff(0);
    LinearMap S(c->inverse(), m);       // S(y) = y/c + m
    LinearMap T(a.inverse(), -b / a);   // T(z) = (z-b)/a
    if (T(f(S.to_poly())) != C) return ChebWitness{n, std::nullopt, std::nullopt};
    w.TS = {T, S};
    return w;
}

namespace {

bool is_prime_int(int n) {
    if (n < 2) return false;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

RittyForm sform_to_form(const SPresentation& p) {
    RittyForm rf;
    rf.variant = RittyVariant::SForm;
    rf.sform = p.s;
    // f = L o S o M with L(y) = A y + value, M(x) = x - center
    rf.witnesses = {LinearMap(p.scale, p.value), LinearMap(FieldElem(1), -p.center)};
    return rf;
}

}  // namespace

std::vector<RittyForm> ritty_presentations(const Poly& f, long ambient_d) {
    if (f.degree() < 2) throw std::invalid_argument("ritty_presentations: deg f must be >= 2");
    std::vector<RittyForm> out;
    if (auto mp = mono_presentation(f)) {
        RittyForm rf;
        rf.variant = f.degree() == 2 ? RittyVariant::Quadratic : RittyVariant::Monomial;
        rf.prime = f.degree();
        // f = L o x^n o M with L(y) = A y + c, M(x) = x - m
        rf.witnesses = {LinearMap(mp->scale, mp->value), LinearMap(FieldElem(1), -mp->center)};
        out.push_back(rf);
        return out;  // monomials are not linearly related to any other ritty polynomial
    }
    if (is_prime_int(f.degree()) && f.degree() % 2 == 1) {
        ChebWitness cw = chebyshev_witness(f);
        if (cw.found()) {
            RittyForm rf;
            rf.variant = RittyVariant::ChebyshevLike;
            rf.prime = f.degree();
            rf.scale = FieldElem(1);
            rf.hat = false;
            if (cw.TS) {
                // T o f o S = C_p, so f = T^-1 o C_p o S^-1
                rf.witnesses = {cw.TS->first.inverse(), cw.TS->second.inverse()};
                // hatted partner: f = (T^-1 o (-2)) o hatC_p o ((+2) o S^-1)
                RittyForm hatf = rf;
                hatf.hat = true;
                hatf.witnesses = {
                    LinearMap::translation(FieldElem(-2)).then(cw.TS->first.inverse()),
                    cw.TS->second.inverse().then(LinearMap::translation(FieldElem(2)))};
                out.push_back(rf);
                out.push_back(hatf);
            } else {
                rf.witness_field = cw.ext;
                out.push_back(rf);
                RittyForm hatf = rf;
                hatf.hat = true;
                out.push_back(hatf);
            }
            return out;
        }
    }
    for (auto& p : sform_presentations(f, ambient_d)) out.push_back(sform_to_form(p));
    return out;
}

std::pair<int, int> in_out_degree(const RittyForm& form) {
    if (form.variant != RittyVariant::SForm)
        throw std::invalid_argument("in_out_degree: SForm variant required");
    return {form.sform.ell, form.sform.n};
}

SwapClass classify(const Poly& f, long ambient_d) {
    if (f.degree() < 2) throw std::invalid_argument("classify: deg f must be >= 2");
    SwapClass sc;
    if (auto mp = mono_presentation(f)) {
        (void)mp;
        sc.verdict = Taxon::Monomial;
        sc.evidence = ritty_presentations(f, ambient_d);
        return sc;
    }
    if (is_prime_int(f.degree()) && f.degree() % 2 == 1) {
        ChebWitness cw = chebyshev_witness(f);
        if (cw.found()) {
            sc.verdict = Taxon::TypeC;
            sc.evidence = ritty_presentations(f, ambient_d);
            sc.unresolved_witness = !cw.TS.has_value();
            if (sc.unresolved_witness)
                sc.trace.push_back("witnesses need extension by " + cw.ext->str());
            return sc;
        }
    }
    auto pres = sform_presentations(f, ambient_d);
    if (pres.empty()) {
        sc.verdict = Taxon::Unswappable;
        return sc;
    }
    for (auto& p : pres) sc.evidence.push_back(sform_to_form(p));
    if (pres.size() >= 2) {
        sc.verdict = Taxon::TypeJ;
        sc.trace.push_back("distinct translation centers: " + pres[0].center.str() + ", " +
                           pres[1].center.str());
        return sc;
    }
    // coJ: redistribute all of ell into the exponent and test for two centers
    for (auto& p : pres) {
        if (p.s.ell == 1) continue;
        SFormData redis{p.s.k, 1, p.s.ell * p.s.n, p.s.u};
        Poly S2 = redis.to_poly();
        auto pres2 = sform_presentations(S2, ambient_d);
        if (pres2.size() >= 2) {
            sc.verdict = Taxon::TypeCoJ;
            sc.trace.push_back("monomial swaps reach type J form " + S2.str());
            return sc;
        }
    }
    sc.verdict = Taxon::TypeB;
    return sc;
}

namespace {

Rat binom(int n, int k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Rat(r);
}

}  // namespace

TranslationSolution type_w_polynomial(int s) {
    if (s < 1) throw std::invalid_argument("type_w_polynomial: s must be >= 1");
    // (2s^2+2s) Y + (3-4z) Y' + 2(z-z^2) Y'' = 0, upper bidiagonal in the monomial basis
    std::vector<Rat> u(s + 1, Rat(0));
    u[s] = 1;
    for (int i = s - 1; i >= 0; --i) {
        Rat diag = Rat(2) * s * s + Rat(2) * s - (Rat(2) * i * i + Rat(2) * i);
        Rat super = Rat(i + 1) * (2 * i + 3);
        if (diag == 0) throw std::logic_error("type_w_polynomial: singular system");
        u[i] = -super * u[i + 1] / diag;
    }
    std::vector<FieldElem> uc(u.begin(), u.end());
    Poly U{std::move(uc)};
    // (2s+1) u2(x) = u(x+1) + 2(x+1) u'(x+1)
    Poly ushift = compose_inner(U, LinearMap::translation(FieldElem(1)));
    Poly upshift = compose_inner(U.derivative(), LinearMap::translation(FieldElem(1)));
    Poly u2 = FieldElem(Rat(1, 2 * s + 1)) * (ushift + FieldElem(2) * (Poly::x() + Poly(FieldElem(1))) * upshift);
    FieldElem B = -U(FieldElem(1)) * U(FieldElem(1));
    // defining identity: (x+1) u(x+1)^2 + B = x u2(x)^2
    Poly lhs = (Poly::x() + Poly(FieldElem(1))) * ushift * ushift + Poly(B);
    Poly rhs = Poly::x() * u2 * u2;
    if (lhs != rhs) throw std::logic_error("type_w_polynomial: identity check failed");
    return {U, B, u2};
}

TranslationSolution type_c_hat_polynomial(int s) {
    if (s < 1) throw std::invalid_argument("type_c_hat_polynomial: s must be >= 1");
    // u(z) + 2z u'(z) - (2s+1)(-1)^s u(2-z) = 0, upper triangular
    std::vector<Rat> u(s + 1, Rat(0));
    u[s] = 1;
    Rat lead = Rat(2 * s + 1) * ((s % 2 == 0) ? 1 : -1);  // (2s+1)(-1)^s
    for (int j = s - 1; j >= 0; --j) {
        Rat diag = Rat(1 + 2 * j) - lead * ((j % 2 == 0) ? 1 : -1);
        Rat rest(0);
        for (int i = j + 1; i <= s; ++i) {
            Rat term = -lead * ((j % 2 == 0) ? 1 : -1) * binom(i, j);
            Int tp;
            mpz_ui_pow_ui(tp.get_mpz_t(), 2, i - j);
            rest += term * Rat(tp) * u[i];
        }
        if (diag == 0) throw std::logic_error("type_c_hat_polynomial: singular system");
        u[j] = -rest / diag;
    }
    std::vector<FieldElem> uc(u.begin(), u.end());
    Poly U{std::move(uc)};
    Poly ushift = compose_inner(U, LinearMap::translation(FieldElem(1)));
    FieldElem B = -U(FieldElem(1)) * U(FieldElem(1));
    // (x+1) u(x+1)^2 + B = x u2(x^2)
    Poly W = (Poly::x() + Poly(FieldElem(1))) * ushift * ushift + Poly(B);
    auto [E, rem] = divmod(W, Poly::x());
    if (!rem.is_zero()) throw std::logic_error("type_c_hat_polynomial: identity check failed");
    std::vector<FieldElem> u2c(E.degree() / 2 + 1, FieldElem(0));
    for (int i = 0; i <= E.degree(); ++i) {
        if (i % 2 == 1) {
            if (!E.coeff(i).is_zero())
                throw std::logic_error("type_c_hat_polynomial: right side is not even");
        } else {
            u2c[i / 2] = E.coeff(i);
        }
    }
    Poly u2{std::move(u2c)};
    // replay the identity exactly
    std::vector<FieldElem> spread(static_cast<size_t>(u2.degree()) * 2 + 1, FieldElem(0));
    for (int i = 0; i <= u2.degree(); ++i) spread[2 * static_cast<size_t>(i)] = u2.coeff(i);
    if (W != Poly::x() * Poly{std::move(spread)})
        throw std::logic_error("type_c_hat_polynomial: identity check failed");
    return {U, B, u2};
}

int type_w_operator_rank(int s) {
    std::vector<std::vector<Rat>> m(s + 1, std::vector<Rat>(s + 1, Rat(0)));
    for (int i = 0; i <= s; ++i) {
        m[i][i] = Rat(2) * s * s + Rat(2) * s - (Rat(2) * i * i + Rat(2) * i);
        if (i + 1 <= s) m[i][i + 1] = Rat(i + 1) * (2 * i + 3);
    }
    return rat_rank(std::move(m));
}

int type_c_hat_operator_rank(int s) {
    Rat lead = Rat(2 * s + 1) * ((s % 2 == 0) ? 1 : -1);
    std::vector<std::vector<Rat>> m(s + 1, std::vector<Rat>(s + 1, Rat(0)));
    for (int j = 0; j <= s; ++j) {
        for (int i = j; i <= s; ++i) {
            Int tp;
            mpz_ui_pow_ui(tp.get_mpz_t(), 2, i - j);
            Rat v = -lead * ((j % 2 == 0) ? 1 : -1) * binom(i, j) * Rat(tp);
            if (i == j) v += Rat(1 + 2 * j);
            m[j][i] = v;
        }
    }
    return rat_rank(std::move(m));
}

}  // namespace rittkit
