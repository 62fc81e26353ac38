#include "rittkit/swaps.hpp"

#include <algorithm>

namespace rittkit {

namespace {

// Splice the swapped pair back into the decomposition and canonicalize.
SwapResult finish(const Decomposition& d, int i, const Poly& new_outer, const Poly& new_inner) {
    const auto& fs = d.factors();
    size_t k = fs.size();
    Poly check = new_outer(new_inner);
    Poly orig = d.from_inner(i + 1)(d.from_inner(i));
    if (check != orig) throw std::logic_error("try_ritt_swap: swap does not preserve composition");
    std::vector<Poly> out(fs);
    out[k - i - 1] = new_outer;
    out[k - i] = new_inner;
    SwapResult r;
    r.outcome = SwapOutcome::Swapped;
    r.decomposition = normalize(out);
    return r;
}

FieldElem power(const FieldElem& x, int n) {
    FieldElem acc(1);
    for (int i = 0; i < n; ++i) acc = acc * x;
    return acc;
}

// u(x^ell)
Poly spread_u(const Poly& u, int ell) {
    std::vector<FieldElem> v(static_cast<size_t>(u.degree()) * ell + 1, FieldElem(0));
    for (int i = 0; i <= u.degree(); ++i) v[static_cast<size_t>(i) * ell] = u.coeff(i);
    return Poly{std::move(v)};
}

}  // namespace

SwapResult try_ritt_swap(const Decomposition& d, int i, long ambient_d) {
    if (i < 1 || i >= static_cast<int>(d.length()))
        throw std::invalid_argument("try_ritt_swap: position out of range");
    const Poly& inner = d.from_inner(i);
    const Poly& outer = d.from_inner(i + 1);
    auto mi = mono_presentation(inner);
    auto mo = mono_presentation(outer);
    SwapResult undef;

    if (mi && mo) {
        int p = inner.degree(), q = outer.degree();
        if (p == q) return undef;  // tautological identities are excluded
        // alignment: the critical value of the inner factor must be the
        // critical point of the outer one
        if (mi->value != mo->center) return undef;
        // M(x) = A_a x + m_b, N(x) = x + m_a, L(y) = A_b A_a^q y + c_b
        FieldElem Aa = mi->scale, Ab = mo->scale;
        LinearMap N = LinearMap::translation(mi->center);
        LinearMap L(Ab * power(Aa, q), mo->value);
        Poly new_inner = compose_inner(Poly::monomial(q), N.inverse());
        Poly new_outer = L(Poly::monomial(p));
        return finish(d, i, new_outer, new_inner);
    }

    if (mi && !mo) {
        // inner monomial P_p; outer needs an S-presentation centered at the
        // inner critical value with out-degree divisible by p
        int p = inner.degree();
        for (auto& pres : sform_presentations(outer, ambient_d)) {
            if (pres.center != mi->value) continue;
            if (pres.s.n % p != 0) continue;
            FieldElem Aa = mi->scale;
            LinearMap N = LinearMap::translation(mi->center);
            // L^-1 o outer o M = lambda * S with lambda = Aa
            FieldElem lambda = Aa;
            Poly u2 = rescale(power(lambda, pres.s.ell), pres.s.u);
            SFormData stilde{pres.s.k, pres.s.ell * p, pres.s.n / p, u2};
            FieldElem Lslope = pres.scale * power(lambda, outer.degree());
            LinearMap L(Lslope, pres.value);
            Poly new_inner = compose_inner(stilde.to_poly(), N.inverse());
            Poly new_outer = L(Poly::monomial(p));
            return finish(d, i, new_outer, new_inner);
        }
        return undef;
    }

    if (!mi && mo) {
        // outer monomial P_p; inner needs an S-presentation whose value is the
        // outer critical point, with in-degree divisible by p
        int p = outer.degree();
        for (auto& pres : sform_presentations(inner, ambient_d)) {
            if (pres.value != mo->center) continue;
            if (pres.s.ell % p != 0) continue;
            FieldElem Aa = pres.scale, Ab = mo->scale;
            LinearMap N = LinearMap::translation(pres.center);
            SFormData router{pres.s.k, pres.s.ell / p, pres.s.n * p, pres.s.u};
            LinearMap L(Ab * power(Aa, p), mo->value);
            Poly new_inner = compose_inner(Poly::monomial(p), N.inverse());
            Poly new_outer = L(router.to_poly());
            return finish(d, i, new_outer, new_inner);
        }
        return undef;
    }

    // both non-monomial: only commuting odd Chebyshevs remain
    ChebWitness wi = chebyshev_witness(inner);
    ChebWitness wo = chebyshev_witness(outer);
    if (!wi.found() || !wo.found()) return undef;
    if (inner.degree() == outer.degree()) return undef;  // tautological
    if (!wi.TS || !wo.TS) {
        SwapResult r;
        r.outcome = SwapOutcome::NeedsExtension;
        r.extension = wi.TS ? wo.ext : wi.ext;
        return r;
    }
    auto [Ta, Sa] = *wi.TS;
    auto [Tb, Sb] = *wo.TS;
    // swappable iff S_b^-1 o T_a^-1 is (. eps) with eps = +-1
    LinearMap comp = Ta.inverse().then(Sb.inverse());
    if (!comp.is_scaling()) return undef;
    FieldElem eps = comp.a;
    if (eps != FieldElem(1) && eps != FieldElem(-1)) return undef;
    int p = outer.degree(), q = inner.degree();
    // outer o inner = T_b^-1 o (. eps) o C_q o C_p o S_a^-1
    Poly Cq = chebyshev(q), Cp = chebyshev(p);
    LinearMap scale_eps = LinearMap::scaling(eps);
    Poly new_outer = Tb.inverse()(scale_eps(Cq));
    Poly new_inner = compose_inner(Cp, Sa.inverse());
    return finish(d, i, new_outer, new_inner);
}

SwapResult apply_word(const Decomposition& d, const Word& w, long ambient_d) {
    if (w.alphabet != Alphabet::Mk)
        throw std::invalid_argument("apply_word: M_k word required");
    if (w.k != static_cast<int>(d.length()))
        throw std::invalid_argument("apply_word: rank mismatch");
    SwapResult r;
    r.outcome = SwapOutcome::Swapped;
    r.decomposition = normalize(d.factors());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        r = try_ritt_swap(*r.decomposition, it->index, ambient_d);
        if (r.outcome != SwapOutcome::Swapped) return r;  // infinity is absorbing
    }
    return r;
}

ChebyclumpReport chebyclumps(const Decomposition& d) {
    ChebyclumpReport report;
    int k = static_cast<int>(d.length());
    std::vector<ChebyclumpInterval> all;
    for (int lo = 1; lo <= k; ++lo) {
        for (int hi = lo; hi <= k; ++hi) {
            Poly comp = d.from_inner(hi);
            for (int j = hi - 1; j >= lo; --j) comp = comp(d.from_inner(j));
            int n = comp.degree();
            if ((n & (n - 1)) == 0) continue;  // powers of two are not chebyclumps
            ChebWitness w = chebyshev_witness(comp);
            if (!w.TS) continue;
            all.push_back({lo, hi, n, w.TS->first, w.TS->second});
        }
    }
    for (auto& iv : all) {
        bool maximal = true;
        for (auto& other : all)
            if ((other.inner < iv.inner && other.outer >= iv.outer) ||
                (other.inner <= iv.inner && other.outer > iv.outer))
                maximal = false;
        if (maximal) report.intervals.push_back(iv);
    }
    return report;
}

}  // namespace rittkit
