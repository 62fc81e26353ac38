#include "rittkit/algebra.hpp"

#include <algorithm>
#include <map>

namespace rittkit {

Poly compose(const Poly& outer, const Poly& inner) { return outer(inner); }

Poly rescale(const FieldElem& c, const Poly& f) {
    if (c.is_zero()) throw std::invalid_argument("rescale: c must be nonzero");
    if (f.is_constant()) throw std::invalid_argument("rescale: f must be nonconstant");
    // f(cx) / c^deg
    std::vector<FieldElem> v(f.coeffs());
    FieldElem cp(1);
    for (size_t i = 0; i < v.size(); ++i) {
        v[i] = v[i] * cp;
        cp = cp * c;
    }
    Poly g{std::vector<FieldElem>(v)};
    FieldElem cd(1);
    for (int i = 0; i < f.degree(); ++i) cd = cd * c;
    return cd.inverse() * g;
}

std::vector<Poly> base_expansion(const Poly& f, const Poly& h) {
    if (h.degree() < 1) throw std::invalid_argument("base_expansion: deg h must be >= 1");
    std::vector<Poly> digits;
    Poly r = f;
    if (r.is_zero()) return {Poly()};
    while (!r.is_zero()) {
        auto [q, rem] = divmod(r, h);
        digits.push_back(rem);
        r = q;
    }
    return digits;
}

std::vector<SquarefreePart> squarefree_multiplicities(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree_multiplicities: zero polynomial");
    std::vector<SquarefreePart> out;
    Poly g = f.monic();
    if (g.degree() == 0) return out;
    // Yun's algorithm
    Poly d = g.derivative();
    Poly a = gcd(g, d);
    Poly b = divmod(g, a).first;
    Poly c = divmod(d, a).first;
    int i = 1;
    while (b.degree() > 0) {
        Poly e = c - b.derivative();
        Poly p = gcd(b, e);
        if (p.degree() > 0) out.push_back({p.monic(), i});
        b = divmod(b, p).first;
        c = divmod(e, p).first;
        ++i;
    }
    return out;
}

FieldElem resultant(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return FieldElem(0);
    Poly a = f, b = g;
    FieldElem acc(1);
    bool flip = false;
    while (b.degree() > 0) {
        Poly r = divmod(a, b).second;
        // res(a,b) = (-1)^(da*db) * lc(b)^(da - dr) * res(b, r)
        int da = a.degree(), db = b.degree();
        int dr = r.is_zero() ? 0 : r.degree();
        if (r.is_zero()) return FieldElem(0);
        if ((da & 1) && (db & 1)) flip = !flip;
        FieldElem lcb = b.lc();
        FieldElem p(1);
        for (int i = 0; i < da - dr; ++i) p = p * lcb;
        acc = acc * p;
        a = b;
        b = r;
    }
    // b constant
    FieldElem p(1);
    for (int i = 0; i < a.degree(); ++i) p = p * b.coeff(0);
    FieldElem res = acc * p;
    return flip ? -res : res;
}

namespace {

std::vector<Int> divisors_of(const Int& n_in, size_t cap = 200000) {
    Int n = n_in < 0 ? Int(-n_in) : n_in;
    if (n == 0) return {};
    std::map<Int, int> fac;
    Int m = n;
    for (long p = 2; Int(p) * p <= m && p < 100000; ++p) {
        while (m % p == 0) {
            fac[p]++;
            m /= p;
        }
    }
    if (m > 1) {
        // Pollard rho for the leftover (desk scale: few big factors)
        std::vector<Int> stack{m};
        while (!stack.empty()) {
            Int v = stack.back();
            stack.pop_back();
            if (v == 1) continue;
            if (mpz_probab_prime_p(v.get_mpz_t(), 30)) {
                fac[v]++;
                continue;
            }
            Int x(2), y(2), d(1), c(1);
            while (d == 1 || d == v) {
                x = (x * x + c) % v;
                y = (y * y + c) % v;
                y = (y * y + c) % v;
                Int diff = x > y ? x - y : y - x;
                if (diff == 0) {
                    c += 1;
                    x = 2;
                    y = 2;
                    continue;
                }
                mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), v.get_mpz_t());
            }
            stack.push_back(d);
            stack.push_back(v / d);
        }
    }
    std::vector<Int> divs{Int(1)};
    for (auto& [p, e] : fac) {
        size_t sz = divs.size();
        Int pk(1);
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < sz; ++j) {
                divs.push_back(divs[j] * pk);
                if (divs.size() > cap) return divs;  // give up on completeness
            }
        }
    }
    return divs;
}

bool all_rational(const Poly& f) {
    for (auto& c : f.coeffs())
        if (!c.is_rational()) return false;
    return true;
}

// Primitive integer version of a rational-coefficient polynomial.
Poly integer_version(const Poly& f) {
    Int l(1);
    for (auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.ra().get_den().get_mpz_t());
    Poly g = FieldElem(Rat(l)) * f;
    Int content(0);
    for (auto& c : g.coeffs()) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.ra().get_num().get_mpz_t());
    if (content > 1) g = FieldElem(Rat(1, content)) * g;
    return g;
}

// Monic quadratic factors over Q of a squarefree rational poly with no rational roots.
// Kronecker-style: enumerate integer divisor candidates for the quadratic's values.
std::vector<Poly> rational_quadratic_factors(const Poly& fin) {
    std::vector<Poly> out;
    Poly g = integer_version(fin);
    if (g.degree() < 4) {
        if (g.degree() == 2) out.push_back(fin.monic());
        return out;
    }
    Int lcg = g.lc().ra().get_num();
    Int a0 = g.coeff(0).ra().get_num();
    FieldElem g1 = g(FieldElem(1)), gm1 = g(FieldElem(-1));
    if (a0 == 0 || g1.is_zero() || gm1.is_zero()) return out;  // roots 0, +-1 handled elsewhere
    auto da = divisors_of(lcg);
    auto dc = divisors_of(a0);
    auto d1 = divisors_of(g1.ra().get_num());
    Poly rem = fin.monic();
    for (const Int& ai : da) {
        for (const Int& cmag : dc) {
            for (int cs : {1, -1}) {
                Int c = cs > 0 ? cmag : Int(-cmag);
                for (const Int& emag : d1) {
                    for (int es : {1, -1}) {
                        Int e = es > 0 ? emag : Int(-emag);  // e = a + b + c
                        Int b = e - ai - c;
                        // quick check with g(-1): a - b + c must divide g(-1)*lc-ish
                        Rat qa(ai), qb(b), qc(c);
                        Poly cand({FieldElem(qc / qa), FieldElem(qb / qa), FieldElem(1)});
                        if (rem.degree() < 2) return out;
                        auto [q, r] = divmod(rem, cand);
                        if (r.is_zero()) {
                            out.push_back(cand);
                            rem = q;
                        }
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace

std::vector<Rat> rational_roots(const Poly& f) {
    if (!all_rational(f)) throw std::invalid_argument("rational_roots: irrational coefficients");
    if (f.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    std::vector<Rat> out;
    Poly g = integer_version(f);
    int k = g.ord0();
    if (k > 0) {
        out.push_back(Rat(0));
        std::vector<FieldElem> v(g.coeffs().begin() + k, g.coeffs().end());
        g = Poly(v);
    }
    if (g.degree() < 1) return out;
    Int lcg = g.lc().ra().get_num();
    Int a0 = g.coeff(0).ra().get_num();
    auto dp = divisors_of(a0);
    auto dq = divisors_of(lcg);
    for (const Int& p : dp) {
        for (const Int& q : dq) {
            for (int s : {1, -1}) {
                Rat r(s > 0 ? p : Int(-p), q);
                r.canonicalize();
                if (g(FieldElem(r)).is_zero()) {
                    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<FieldElem, int>> roots_in_K(const Poly& f, long ambient_d) {
    if (f.is_zero()) throw std::invalid_argument("roots_in_K: zero polynomial");
    std::vector<std::pair<FieldElem, int>> out;
    for (auto& sf : squarefree_multiplicities(f)) {
        const Poly& g = sf.part;
        std::vector<FieldElem> roots;
        long d = ambient_d != 0 ? ambient_d : 1;
        for (auto& c : g.coeffs())
            if (!c.is_rational()) d = c.d();
        if (all_rational(g)) {
            for (auto& r : rational_roots(g)) roots.push_back(FieldElem(r));
            // quadratic-irrational roots a + b*sqrt(d) live in rational quadratic factors
            Poly rem = g.monic();
            for (auto& r : roots) rem = divmod(rem, Poly({-r, FieldElem(1)})).first;
            if (rem.degree() >= 2 && d != 1) {
                for (auto& q : rational_quadratic_factors(rem)) {
                    // roots (-p +- sqrt(p^2 - 4q))/2 lie in K iff the disc is d * square
                    Rat disc = (q.coeff(1) * q.coeff(1) - FieldElem(4) * q.coeff(0)).ra();
                    if (auto t = rat_nth_root(disc / Rat(d), 2)) {
                        FieldElem sq(Rat(0), *t, d);
                        FieldElem r1 = (-q.coeff(1) + sq) / FieldElem(2);
                        FieldElem r2 = (-q.coeff(1) - sq) / FieldElem(2);
                        if (g(r1).is_zero()) roots.push_back(r1);
                        if (g(r2).is_zero()) roots.push_back(r2);
                    }
                }
            }
        } else {
            // candidates come from the norm N = g * conj(g), which has rational coefficients
            Poly conj = g;
            {
                auto v = conj.coeffs();
                for (auto& c : v) c = c.conj();
                conj = Poly(v);
            }
            Poly N = g * conj;
            for (auto& [r, m] : roots_in_K(N, d)) {
                (void)m;
                if (g(r).is_zero()) roots.push_back(r);
            }
            // irrational roots of the norm in Q(sqrt d) also need checking against g
        }
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        for (auto& r : roots) out.emplace_back(r, sf.multiplicity);
    }
    return out;
}

std::vector<Factor> factor_desk(const Poly& f, long ambient_d) {
    if (f.is_zero()) throw std::invalid_argument("factor_desk: zero polynomial");
    std::vector<Factor> out;
    for (auto& sf : squarefree_multiplicities(f)) {
        Poly rem = sf.part;  // monic squarefree
        // linear factors over K
        for (auto& [r, m] : roots_in_K(rem, ambient_d)) {
            (void)m;
            out.push_back({Poly({-r, FieldElem(1)}), sf.multiplicity, true});
            rem = divmod(rem, Poly({-r, FieldElem(1)})).first;
        }
        if (rem.degree() == 0) continue;
        if (rem.degree() == 2) {
            out.push_back({rem, sf.multiplicity, true});  // no K-roots left, so irreducible
            continue;
        }
        if (all_rational(rem)) {
            for (auto& q : rational_quadratic_factors(rem)) {
                out.push_back({q, sf.multiplicity, true});
                rem = divmod(rem, q).first;
            }
            if (rem.degree() == 0) continue;
            // no rational roots, no rational quadratic factors
            bool irred = rem.degree() == 3 && all_rational(rem);
            out.push_back({rem, sf.multiplicity, irred});
        } else {
            out.push_back({rem, sf.multiplicity, false});
        }
    }
    std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
        if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
        return a.poly < b.poly;
    });
    return out;
}

std::vector<Factor> critical_values(const Poly& f, long ambient_d) {
    if (f.degree() < 2) throw std::invalid_argument("critical_values: deg f must be >= 2");
    Poly fp = f.derivative();
    int n = fp.degree();  // deg_t of D
    // D(t) = Res_x(t - f(x), f'(x)), computed by evaluation/interpolation.
    std::vector<FieldElem> xs, ys;
    for (int j = 0; j <= n; ++j) {
        FieldElem t(static_cast<long>(j));
        Poly tf = Poly(t) - f;
        xs.push_back(t);
        ys.push_back(resultant(tf, fp));
    }
    // Newton divided differences
    std::vector<FieldElem> coef = ys;
    for (int j = 1; j <= n; ++j)
        for (int i = n; i >= j; --i)
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
    Poly D(FieldElem(0));
    Poly acc(FieldElem(1));
    for (int i = 0; i <= n; ++i) {
        D += coef[i] * acc;
        acc = acc * Poly({-xs[i], FieldElem(1)});
    }
    if (D.is_zero()) throw std::logic_error("critical_values: vanishing discriminant locus");
    return factor_desk(D, ambient_d);
}

}  // namespace rittkit

namespace rittkit {

int rat_rank(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    size_t pr = 0;
    for (size_t c = 0; c < cols && pr < rows; ++c) {
        size_t piv = pr;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[pr], m[piv]);
        for (size_t r = 0; r < rows; ++r) {
            if (r != pr && m[r][c] != 0) {
                Rat f = m[r][c] / m[pr][c];
                for (size_t j = c; j < cols; ++j) m[r][j] -= f * m[pr][j];
            }
        }
        ++pr;
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Rat>> rat_kernel(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return {};
    size_t rows = m.size(), cols = m[0].size();
    std::vector<long> pivot_col;
    size_t pr = 0;
    for (size_t c = 0; c < cols && pr < rows; ++c) {
        size_t piv = pr;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[pr], m[piv]);
        Rat inv = 1 / m[pr][c];
        for (size_t j = c; j < cols; ++j) m[pr][j] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r != pr && m[r][c] != 0) {
                Rat f = m[r][c];
                for (size_t j = c; j < cols; ++j) m[r][j] -= f * m[pr][j];
            }
        }
        pivot_col.push_back(static_cast<long>(c));
        ++pr;
    }
    std::vector<std::vector<Rat>> basis;
    for (size_t c = 0; c < cols; ++c) {
        if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<long>(c)) != pivot_col.end())
            continue;
        std::vector<Rat> v(cols, Rat(0));
        v[c] = 1;
        for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -m[r][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace rittkit
