#ifndef RITTKIT_WORDS_HPP
#define RITTKIT_WORDS_HPP

#include <string>
#include <vector>

#include "rittkit/field.hpp"

namespace rittkit {

enum class Alphabet { Mk, Bk, Gk };

struct Letter {
    enum Kind { T, Phi, Beta, Psi, Gamma } kind = T;
    int index = 0;  // generator index for T letters (1-based)

    friend bool operator==(const Letter& a, const Letter& b) {
        return a.kind == b.kind && (a.kind != T || a.index == b.index);
    }
};

/// Word in M_k, B_k or G_k. Letters are stored in string order (leftmost
/// first); words act on decompositions rightmost letter first.
struct Word {
    Alphabet alphabet = Alphabet::Mk;
    int k = 1;
    std::vector<Letter> letters;

    static Word t(int k, std::initializer_list<int> indices);  // M_k word from t-indices
    size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    void validate() const;

    /// Token grammar: t1 t2 ... plus f (phi), b (beta), p (psi), g (gamma).
    static Word parse(const std::string& text, int k, Alphabet a = Alphabet::Mk);
    std::string str() const;

    friend bool operator==(const Word& a, const Word& b) {
        return a.k == b.k && a.letters == b.letters;
    }
};

struct Permutation {
    std::vector<int> images;  // 0-based, images[x] = image of x

    static Permutation identity(int k);
    int k() const { return static_cast<int>(images.size()); }
    int inversions() const;
    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.images == b.images;
    }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.images < b.images;
    }
};

/// Rightmost letter acts first: t_{a_r} ... t_{a_1} represents
/// (a_r+1 a_r) ... (a_1+1 a_1).
Permutation permutation_of(const Word& w);

/// Apply a word to an arrangement of items by slots (slot 1 = innermost).
std::vector<int> apply_to_arrangement(const Word& w, std::vector<int> arrangement);

/// Unique equivalent word of descending runs with strictly increasing
/// run-bottoms right-to-left (insert-sort form).
Word first_canonical_form(const Word& w);

struct SecondCanonicalForm {
    Word v;                    // block-merging part, first canonical form
    std::vector<Word> blocks;  // w_1 ... w_t, block i permutes only block i factors
};

/// Block sizes are listed innermost block first and must sum to k.
SecondCanonicalForm second_canonical_form(const Word& w, const std::vector<int>& block_sizes);

/// phi^{mk} u or beta^{nk} u with u free of beta and of phi^k substrings.
Word bword_normal_form(const Word& w);

struct BorderGuardForm {
    int prefix_power = 0;  // w = phi^N w' for N >= 0, beta^{-N} w' for N < 0
    Word gk_word;          // w' in G_k letters (t_1..t_{k-2}, psi, gamma)
    Word w1, w2;           // w' = w2 w1 with w1 gamma-free and w2 psi-free
};

BorderGuardForm border_guard_form(const Word& w);

}  // namespace rittkit

#endif
