#include "rittkit/words.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace rittkit {

Word Word::t(int k, std::initializer_list<int> indices) {
    Word w;
    w.alphabet = Alphabet::Mk;
    w.k = k;
    for (int i : indices) w.letters.push_back({Letter::T, i});
    w.validate();
    return w;
}

void Word::validate() const {
    if (k < 1) throw std::invalid_argument("word: rank must be positive");
    for (auto& l : letters) {
        switch (l.kind) {
            case Letter::T: {
                int bound = alphabet == Alphabet::Gk ? k - 2 : k - 1;
                if (l.index < 1 || l.index > bound)
                    throw std::invalid_argument("word: generator index out of range");
                break;
            }
            case Letter::Phi:
            case Letter::Beta:
                if (alphabet != Alphabet::Bk)
                    throw std::invalid_argument("word: phi/beta require B_k");
                break;
            case Letter::Psi:
            case Letter::Gamma:
                if (alphabet != Alphabet::Gk)
                    throw std::invalid_argument("word: psi/gamma require G_k");
                break;
        }
    }
}

Word Word::parse(const std::string& text, int k, Alphabet a) {
    Word w;
    w.alphabet = a;
    w.k = k;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok[0] == 't') {
            int idx = std::stoi(tok.substr(1));
            w.letters.push_back({Letter::T, idx});
        } else if (tok == "f") {
            w.letters.push_back({Letter::Phi, 0});
        } else if (tok == "b") {
            w.letters.push_back({Letter::Beta, 0});
        } else if (tok == "p") {
            w.letters.push_back({Letter::Psi, 0});
        } else if (tok == "g") {
            w.letters.push_back({Letter::Gamma, 0});
        } else {
            throw std::invalid_argument("word: unknown token '" + tok + "'");
        }
    }
    w.validate();
    return w;
}

std::string Word::str() const {
    std::string s;
    for (auto& l : letters) {
        if (!s.empty()) s += " ";
        switch (l.kind) {
            case Letter::T: s += "t" + std::to_string(l.index); break;
            case Letter::Phi: s += "f"; break;
            case Letter::Beta: s += "b"; break;
            case Letter::Psi: s += "p"; break;
            case Letter::Gamma: s += "g"; break;
        }
    }
    return s;
}

Permutation Permutation::identity(int k) {
    Permutation p;
    p.images.resize(k);
    for (int i = 0; i < k; ++i) p.images[i] = i;
    return p;
}

int Permutation::inversions() const {
    int inv = 0;
    for (size_t i = 0; i < images.size(); ++i)
        for (size_t j = i + 1; j < images.size(); ++j)
            if (images[i] > images[j]) ++inv;
    return inv;
}

Permutation permutation_of(const Word& w) {
    if (w.alphabet != Alphabet::Mk)
        throw std::invalid_argument("permutation_of: M_k word required");
    Permutation acc = Permutation::identity(w.k);
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        int a = it->index - 1;  // transposition (a, a+1), 0-based
        for (auto& img : acc.images) {
            if (img == a)
                img = a + 1;
            else if (img == a + 1)
                img = a;
        }
    }
    return acc;
}

std::vector<int> apply_to_arrangement(const Word& w, std::vector<int> arr) {
    if (static_cast<int>(arr.size()) != w.k)
        throw std::invalid_argument("apply_to_arrangement: size mismatch");
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        if (it->kind != Letter::T)
            throw std::invalid_argument("apply_to_arrangement: M_k letters only");
        std::swap(arr[it->index - 1], arr[it->index]);
    }
    return arr;
}

namespace {

// Canonical selection-sort word turning arrangement `from` into `to`.
Word canonical_sort_word(int k, std::vector<int> from, const std::vector<int>& to) {
    Word out;
    out.alphabet = Alphabet::Mk;
    out.k = k;
    for (int b = 1; b <= k; ++b) {
        int want = to[b - 1];
        int p = b;
        while (p <= k && from[p - 1] != want) ++p;
        if (p > k) throw std::logic_error("canonical_sort_word: arrangements differ as sets");
        if (p == b) continue;
        // run t_{p-1} ... t_b moves the item at slot p down to slot b
        for (int j = p - 1; j >= b; --j) out.letters.push_back({Letter::T, j});
        int item = from[p - 1];
        from.erase(from.begin() + (p - 1));
        from.insert(from.begin() + (b - 1), item);
    }
    return out;
}

std::vector<int> iota_arrangement(int k) {
    std::vector<int> v(k);
    for (int i = 0; i < k; ++i) v[i] = i + 1;
    return v;
}

}  // namespace

Word first_canonical_form(const Word& w) {
    if (w.alphabet != Alphabet::Mk)
        throw std::invalid_argument("first_canonical_form: M_k word required");
    std::vector<int> target = apply_to_arrangement(w, iota_arrangement(w.k));
    return canonical_sort_word(w.k, iota_arrangement(w.k), target);
}

SecondCanonicalForm second_canonical_form(const Word& w, const std::vector<int>& block_sizes) {
    int k = w.k;
    int sum = 0;
    for (int r : block_sizes) {
        if (r < 1) throw std::invalid_argument("second_canonical_form: invalid block size");
        sum += r;
    }
    if (sum != k) throw std::invalid_argument("second_canonical_form: block sizes must sum to k");
    std::vector<int> block_of(k + 1, 0), lo(block_sizes.size()), hi(block_sizes.size());
    {
        int at = 1;
        for (size_t bi = 0; bi < block_sizes.size(); ++bi) {
            lo[bi] = at;
            hi[bi] = at + block_sizes[bi] - 1;
            for (int s = lo[bi]; s <= hi[bi]; ++s) block_of[s] = static_cast<int>(bi);
            at = hi[bi] + 1;
        }
    }
    std::vector<int> V = apply_to_arrangement(w, iota_arrangement(k));
    // A: every block internally reordered to match its relative order in V
    std::vector<int> A(k);
    {
        std::vector<int> fill(block_sizes.size());
        for (size_t bi = 0; bi < block_sizes.size(); ++bi) fill[bi] = lo[bi] - 1;
        for (int s = 0; s < k; ++s) {
            int item = V[s];
            int bi = block_of[item];
            A[fill[bi]++] = item;
        }
    }
    SecondCanonicalForm out;
    for (size_t bi = 0; bi < block_sizes.size(); ++bi) {
        // local canonical word inside block bi, then shift the indices
        std::vector<int> from, to;
        for (int s = lo[bi]; s <= hi[bi]; ++s) {
            from.push_back(s);
            to.push_back(A[s - 1]);
        }
        Word local = canonical_sort_word(block_sizes[bi],
                                         [&] {
                                             std::vector<int> v(from.size());
                                             for (size_t i = 0; i < v.size(); ++i)
                                                 v[i] = static_cast<int>(i) + 1;
                                             return v;
                                         }(),
                                         [&] {
                                             std::vector<int> v(to.size());
                                             for (size_t i = 0; i < v.size(); ++i)
                                                 v[i] = to[i] - lo[bi] + 1;
                                             return v;
                                         }());
        Word shifted;
        shifted.alphabet = Alphabet::Mk;
        shifted.k = k;
        for (auto& l : local.letters) shifted.letters.push_back({Letter::T, l.index + lo[bi] - 1});
        out.blocks.push_back(shifted);
    }
    out.v = canonical_sort_word(k, A, V);
    // the merge part may never exchange two factors of the same block
    {
        std::vector<int> sim = A;
        for (auto it = out.v.letters.rbegin(); it != out.v.letters.rend(); ++it) {
            int i = it->index - 1;
            if (block_of[sim[i]] == block_of[sim[i + 1]])
                throw std::logic_error("second_canonical_form: merge word mixes a block");
            std::swap(sim[i], sim[i + 1]);
        }
        if (sim != V) throw std::logic_error("second_canonical_form: merge word is wrong");
    }
    return out;
}

namespace {

bool cancel_phi_beta(std::deque<Letter>& ls) {
    for (size_t i = 0; i + 1 < ls.size(); ++i) {
        if ((ls[i].kind == Letter::Phi && ls[i + 1].kind == Letter::Beta) ||
            (ls[i].kind == Letter::Beta && ls[i + 1].kind == Letter::Phi)) {
            ls.erase(ls.begin() + i, ls.begin() + i + 2);
            return true;
        }
    }
    return false;
}

}  // namespace

Word bword_normal_form(const Word& w) {
    if (w.alphabet != Alphabet::Bk)
        throw std::invalid_argument("bword_normal_form: B_k word required");
    int k = w.k;
    std::deque<Letter> ls(w.letters.begin(), w.letters.end());
    bool changed = true;
    while (changed) {
        changed = false;
        while (cancel_phi_beta(ls)) changed = true;
        // pad beta runs to multiples of k
        for (size_t i = 0; i < ls.size();) {
            if (ls[i].kind != Letter::Beta) {
                ++i;
                continue;
            }
            size_t j = i;
            while (j < ls.size() && ls[j].kind == Letter::Beta) ++j;
            size_t r = j - i;
            if (r % k != 0) {
                size_t pad = k - (r % k);
                std::vector<Letter> ins;
                for (size_t t = 0; t < pad; ++t) ins.push_back({Letter::Beta, 0});
                for (size_t t = 0; t < pad; ++t) ins.push_back({Letter::Phi, 0});
                ls.insert(ls.begin() + j, ins.begin(), ins.end());
                changed = true;
                break;
            }
            i = j;
        }
        if (changed) continue;
        // move beta^k blocks left past Ritt letters
        for (size_t i = 0; i + k < ls.size() + 1; ++i) {
            if (i > 0 && ls[i].kind == Letter::Beta && ls[i - 1].kind == Letter::T) {
                bool block = true;
                for (int t = 0; t < k; ++t)
                    if (i + t >= ls.size() || ls[i + t].kind != Letter::Beta) block = false;
                if (block) {
                    Letter ritt = ls[i - 1];
                    for (int t = 0; t < k; ++t) ls[i - 1 + t] = {Letter::Beta, 0};
                    ls[i - 1 + k] = ritt;
                    changed = true;
                    break;
                }
            }
        }
        if (changed) continue;
        // push single phis left: t_i phi -> phi t_{i+1} for i <= k-2
        for (size_t i = 0; i + 1 < ls.size(); ++i) {
            if (ls[i].kind == Letter::T && ls[i].index <= k - 2 && ls[i + 1].kind == Letter::Phi) {
                Letter t = ls[i];
                ls[i] = ls[i + 1];
                ls[i + 1] = {Letter::T, t.index + 1};
                changed = true;
                break;
            }
        }
        if (changed) continue;
        // whole phi^k blocks commute with any Ritt letter
        for (size_t i = 0; i + 1 < ls.size(); ++i) {
            if (ls[i].kind == Letter::T) {
                bool block = true;
                for (int t = 1; t <= k; ++t)
                    if (i + t >= ls.size() || ls[i + t].kind != Letter::Phi) block = false;
                if (block) {
                    Letter t = ls[i];
                    for (int j = 0; j < k; ++j) ls[i + j] = {Letter::Phi, 0};
                    ls[i + k] = t;
                    changed = true;
                    break;
                }
            }
        }
    }
    Word out;
    out.alphabet = Alphabet::Bk;
    out.k = k;
    out.letters.assign(ls.begin(), ls.end());
    return out;
}

namespace {

struct Claim2Result {
    int a, b;
    Letter u;
};

// t_i beta^a phi^b == beta^{a'} phi^{b'} u with u a single G_k generator
Claim2Result claim2(int k, int i, int a, int b) {
    if (a == 0 && b == 0) {
        if (i != k - 1) return {0, 0, {Letter::T, i}};
        return {0, 1, {Letter::Gamma, 0}};  // t_{k-1} = phi beta t_{k-1} = phi gamma
    }
    if (a == 0) {
        if (i != k - 1) {
            auto r = claim2(k, i + 1, 0, b - 1);  // t_i phi = phi t_{i+1}
            return {r.a, r.b + 1, r.u};
        }
        if (b == 1) return {0, 0, {Letter::Psi, 0}};  // t_{k-1} phi = psi
        auto r = claim2(k, 1, 0, b - 2);              // t_{k-1} phi^2 = phi^2 t_1
        return {r.a, r.b + 2, r.u};
    }
    if (i != 1) {
        auto r = claim2(k, i - 1, a - 1, b);  // t_i beta = beta t_{i-1}
        return {r.a + 1, r.b, r.u};
    }
    // t_1 beta = beta^2 t_{k-1} phi
    if (a == 1) {
        auto r = claim2(k, k - 1, 0, b + 1);
        return {r.a + 2, r.b, r.u};
    }
    auto r = claim2(k, k - 1, a - 2, b);
    return {r.a + 2, r.b, r.u};
}

// Split a G_k word so that all gammas precede all psis (string order),
// resolving psi..gamma patterns by the braid/commutation laws.
std::vector<Letter> resolve_psi_gamma(int k, std::vector<Letter> ls) {
    auto shift_down = [](const std::vector<Letter>& v) {
        std::vector<Letter> out;
        for (auto& l : v) out.push_back({Letter::T, l.index - 1});
        return out;
    };
    for (int guard = 0; guard < 10000; ++guard) {
        // find a psi followed by a gamma with only T letters between
        size_t pi = ls.size(), gi = ls.size();
        bool found = false;
        for (size_t i = 0; i < ls.size() && !found; ++i) {
            if (ls[i].kind != Letter::Psi) continue;
            for (size_t j = i + 1; j < ls.size(); ++j) {
                if (ls[j].kind == Letter::Gamma) {
                    pi = i;
                    gi = j;
                    found = true;
                    break;
                }
                if (ls[j].kind != Letter::T) break;
            }
        }
        if (!found) return ls;
        // canonicalize the T word between (it lives in M_{k-1})
        Word mid;
        mid.alphabet = Alphabet::Mk;
        mid.k = k - 1;
        for (size_t j = pi + 1; j < gi; ++j) mid.letters.push_back(ls[j]);
        Word cmid = first_canonical_form(mid);
        // at most one t_1 in canonical form
        std::vector<Letter> A, B;
        bool seen_t1 = false;
        for (auto& l : cmid.letters) {
            if (l.index == 1) {
                seen_t1 = true;
                continue;
            }
            (seen_t1 ? B : A).push_back(l);
        }
        std::vector<Letter> repl;
        if (!seen_t1) {
            // psi u gamma == u_down
            repl = shift_down(cmid.letters);
        } else {
            // psi A t_1 B gamma == A_down gamma t_{k-2} psi B_down
            repl = shift_down(A);
            repl.push_back({Letter::Gamma, 0});
            repl.push_back({Letter::T, k - 2});
            repl.push_back({Letter::Psi, 0});
            auto bd = shift_down(B);
            repl.insert(repl.end(), bd.begin(), bd.end());
        }
        std::vector<Letter> next(ls.begin(), ls.begin() + pi);
        next.insert(next.end(), repl.begin(), repl.end());
        next.insert(next.end(), ls.begin() + gi + 1, ls.end());
        ls = std::move(next);
    }
    throw std::logic_error("resolve_psi_gamma: did not terminate");
}

}  // namespace

BorderGuardForm border_guard_form(const Word& w) {
    if (w.alphabet != Alphabet::Bk)
        throw std::invalid_argument("border_guard_form: B_k word required");
    int k = w.k;
    if (k < 2) throw std::invalid_argument("border_guard_form: rank must be >= 2");
    int a = 0, b = 0;
    std::vector<Letter> good;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        switch (it->kind) {
            case Letter::Beta:
                ++a;
                break;
            case Letter::Phi:
                if (a > 0)
                    --a;
                else
                    ++b;
                break;
            case Letter::T: {
                auto r = claim2(k, it->index, a, b);
                a = r.a;
                b = r.b;
                good.insert(good.begin(), r.u);
                break;
            }
            default:
                throw std::invalid_argument("border_guard_form: B_k letters only");
        }
    }
    BorderGuardForm out;
    out.prefix_power = b - a;
    out.gk_word.alphabet = Alphabet::Gk;
    out.gk_word.k = k;
    out.gk_word.letters = resolve_psi_gamma(k, good);
    // split at the last gamma: w' = w2 w1 with w1 gamma-free, w2 psi-free
    size_t cut = 0;
    for (size_t i = 0; i < out.gk_word.letters.size(); ++i)
        if (out.gk_word.letters[i].kind == Letter::Gamma) cut = i + 1;
    out.w1.alphabet = out.w2.alphabet = Alphabet::Gk;
    out.w1.k = out.w2.k = k;
    out.w2.letters.assign(out.gk_word.letters.begin(), out.gk_word.letters.begin() + cut);
    out.w1.letters.assign(out.gk_word.letters.begin() + cut, out.gk_word.letters.end());
    for (auto& l : out.w1.letters)
        if (l.kind == Letter::Gamma) throw std::logic_error("border_guard_form: split failed");
    for (auto& l : out.w2.letters)
        if (l.kind == Letter::Psi) throw std::logic_error("border_guard_form: split failed");
    return out;
}

}  // namespace rittkit
