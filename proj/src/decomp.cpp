#include "rittkit/decomp.hpp"

#include <deque>
#include <map>

#include "rittkit/swaps.hpp"

namespace rittkit {

Decomposition::Decomposition(std::vector<Poly> outermost_first)
    : factors_(std::move(outermost_first)) {
    for (auto& f : factors_)
        if (f.degree() < 2)
            throw std::invalid_argument("decomposition: factors must have degree >= 2");
}

Poly Decomposition::compose_all() const {
    if (factors_.empty()) throw std::domain_error("decomposition: empty");
    Poly acc = factors_.back();
    for (size_t i = factors_.size() - 1; i-- > 0;) acc = factors_[i](acc);
    return acc;
}

bool Decomposition::is_canonical() const {
    for (size_t i = 1; i < factors_.size(); ++i) {
        const Poly& f = factors_[i];
        if (!f.is_monic() || !f.coeff(0).is_zero()) return false;
    }
    return true;
}

std::string Decomposition::key() const {
    std::string s;
    for (auto& f : factors_) {
        s += f.str();
        s += " | ";
    }
    return s;
}

Decomposition normalize(const std::vector<Poly>& raw) {
    if (raw.empty()) throw std::invalid_argument("normalize: empty factor list");
    for (auto& f : raw)
        if (f.degree() < 2) throw std::invalid_argument("normalize: linear factor present");
    size_t k = raw.size();
    std::vector<Poly> out(k);
    LinearMap carry = LinearMap::identity();  // L_{i-1} of the previous step
    // from the innermost factor leftwards
    for (size_t idx = k; idx-- > 1;) {
        Poly h = compose_inner(raw[idx], carry.inverse());
        // unique L with L o h monic and zero constant term
        FieldElem a = h.lc().inverse();
        FieldElem b = -h.coeff(0) * a;
        LinearMap L(a, b);
        out[idx] = L(h);
        carry = L;
    }
    out[0] = compose_inner(raw[0], carry.inverse());
    return Decomposition(out);
}

namespace {

std::vector<int> proper_divisors(int n) {
    std::vector<int> out;
    for (int e = 2; e < n; ++e)
        if (n % e == 0) out.push_back(e);
    return out;
}

// Monic inner candidate of degree e with zero constant term, matched against the
// top coefficients of f; unique if it exists.
std::optional<Poly> inner_candidate(const Poly& f, int e) {
    int n = f.degree();
    int m = n / e;
    Poly fh = f.monic();
    std::vector<FieldElem> h(e + 1, FieldElem(0));
    h[e] = FieldElem(1);
    for (int j = e - 1; j >= 1; --j) {
        Poly hp{std::vector<FieldElem>(h)};
        Poly hm = hp.pow(static_cast<unsigned>(m));
        // coefficient at degree (m-1)e + j depends linearly on h_j with slope m
        int target_deg = (m - 1) * e + j;
        FieldElem delta = fh.coeff(target_deg) - hm.coeff(target_deg);
        h[j] = delta / FieldElem(m);
    }
    return Poly{std::move(h)};
}

}  // namespace

Decomposition complete_decomposition(const Poly& f) {
    if (f.degree() < 2) throw std::invalid_argument("complete_decomposition: deg f must be >= 2");
    std::vector<Poly> factors;  // innermost first while building
    Poly cur = f;
    while (true) {
        int n = cur.degree();
        bool split = false;
        for (int e : proper_divisors(n)) {
            auto h = inner_candidate(cur, e);
            if (!h) continue;
            auto digits = base_expansion(cur, *h);
            bool all_const = true;
            for (auto& dgt : digits)
                if (dgt.degree() > 0) all_const = false;
            if (!all_const) continue;
            std::vector<FieldElem> g(digits.size());
            for (size_t i = 0; i < digits.size(); ++i) g[i] = digits[i].coeff(0);
            factors.push_back(*h);
            cur = Poly{std::move(g)};
            split = true;
            break;
        }
        if (!split) {
            factors.push_back(cur);
            break;
        }
    }
    std::vector<Poly> outermost(factors.rbegin(), factors.rend());
    Decomposition d = normalize(outermost);
    if (d.compose_all() != f) throw std::logic_error("complete_decomposition: recomposition failed");
    return d;
}

namespace {

// a * f + b = g for scalars a != 0, b
std::optional<LinearMap> solve_outer_linear(const Poly& f, const Poly& g) {
    if (f.degree() != g.degree() || f.degree() < 0) return std::nullopt;
    FieldElem a = g.lc() / f.lc();
    Poly rest = g - a * f;
    if (rest.degree() > 0) return std::nullopt;
    return LinearMap(a, rest.coeff(0));
}

}  // namespace

std::optional<std::vector<LinearMap>> linear_equivalent(const Decomposition& d1,
                                                        const Decomposition& d2,
                                                        std::string* reason) {
    if (d1.length() != d2.length()) {
        if (reason) *reason = "length mismatch";
        return std::nullopt;
    }
    size_t k = d1.length();
    std::vector<LinearMap> chain;  // L_1, ..., L_{k-1}
    LinearMap carry = LinearMap::identity();
    for (size_t i = 1; i < k; ++i) {
        // L_i^-1 o (f_i o L_{i-1}) = g_i
        Poly fi = compose_inner(d1.from_inner(i), carry);
        auto inv = solve_outer_linear(fi, d2.from_inner(i));
        if (!inv) {
            if (reason) *reason = "no linear witness at factor " + std::to_string(i);
            return std::nullopt;
        }
        LinearMap Li = inv->inverse();
        chain.push_back(Li);
        carry = Li;
    }
    if (compose_inner(d1.from_inner(k), carry) != d2.from_inner(k)) {
        if (reason) *reason = "outer factor mismatch";
        return std::nullopt;
    }
    return chain;
}

DecompositionSet enumerate_D_f(const Poly& f, long ambient_d) {
    DecompositionSet set;
    Decomposition seed = complete_decomposition(f);
    std::map<std::string, size_t> index;
    std::deque<size_t> queue;
    set.classes.push_back(seed);
    set.depth.push_back(0);
    index[seed.key()] = 0;
    queue.push_back(0);
    while (!queue.empty()) {
        size_t at = queue.front();
        queue.pop_front();
        int k = static_cast<int>(set.classes[at].length());
        for (int i = 1; i < k; ++i) {
            SwapResult r = try_ritt_swap(set.classes[at], i, ambient_d);
            if (r.outcome != SwapOutcome::Swapped) continue;
            const Decomposition& nd = *r.decomposition;
            auto it = index.find(nd.key());
            size_t to;
            if (it == index.end()) {
                to = set.classes.size();
                index[nd.key()] = to;
                set.classes.push_back(nd);
                set.depth.push_back(set.depth[at] + 1);
                queue.push_back(to);
            } else {
                to = it->second;
            }
            set.edges.push_back({at, i, to});
        }
    }
    return set;
}

}  // namespace rittkit
