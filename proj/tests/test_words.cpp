#include <doctest.h>

#include <map>
#include <set>

#include "rittkit/words.hpp"

using namespace rittkit;

namespace {

// every word over t_1..t_{k-1} of length <= len
std::vector<Word> all_words(int k, int len) {
    std::vector<Word> out{Word::t(k, {})};
    std::vector<std::vector<int>> frontier{{}};
    for (int l = 1; l <= len; ++l) {
        std::vector<std::vector<int>> next;
        for (auto& w : frontier) {
            for (int i = 1; i < k; ++i) {
                auto v = w;
                v.push_back(i);
                next.push_back(v);
                Word word;
                word.k = k;
                for (int idx : v) word.letters.push_back({Letter::T, idx});
                out.push_back(word);
            }
        }
        frontier = std::move(next);
    }
    return out;
}

}  // namespace

TEST_CASE("permutation representation") {
    CHECK(permutation_of(Word::t(3, {})) == Permutation::identity(3));
    auto p = permutation_of(Word::t(3, {1}));
    CHECK(p.images == std::vector<int>{1, 0, 2});
    auto q = permutation_of(Word::t(3, {1, 2, 1}));
    CHECK(q.images == std::vector<int>{2, 1, 0});  // transposition of 1 and 3
}

TEST_CASE("first canonical form") {
    CHECK(first_canonical_form(Word::t(2, {1, 1})).empty());
    CHECK(first_canonical_form(Word::t(3, {1, 2, 1})) == Word::t(3, {2, 1, 2}));
    // already canonical words are fixed
    CHECK(first_canonical_form(Word::t(3, {2, 1, 2})) == Word::t(3, {2, 1, 2}));
}

TEST_CASE("canonical form properties, exhaustively") {
    for (int k = 2; k <= 4; ++k) {
        std::map<std::vector<int>, std::set<std::string>> canon_by_perm;
        for (auto& w : all_words(k, 5)) {
            Word c = first_canonical_form(w);
            CHECK(permutation_of(c) == permutation_of(w));
            CHECK(static_cast<int>(c.size()) == permutation_of(w).inversions());
            canon_by_perm[permutation_of(w).images].insert(c.str());
        }
        // exactly one canonical word per permutation
        for (auto& [perm, words] : canon_by_perm) CHECK(words.size() == 1);
    }
}

TEST_CASE("second canonical form") {
    // t2 crosses the (2,2) block boundary
    auto r = second_canonical_form(Word::t(4, {2}), {2, 2});
    CHECK(r.v == Word::t(4, {2}));
    CHECK(r.blocks[0].empty());
    CHECK(r.blocks[1].empty());

    auto r2 = second_canonical_form(Word::t(4, {1}), {2, 2});
    CHECK(r2.v.empty());
    CHECK(r2.blocks[0] == Word::t(4, {1}));
    CHECK(r2.blocks[1].empty());
}

TEST_CASE("second canonical form, exhaustive structure") {
    std::vector<int> blocks = {2, 2};
    for (auto& w : all_words(4, 4)) {
        auto r = second_canonical_form(w, blocks);
        // concatenation represents the same permutation
        Word full;
        full.k = 4;
        full.letters = r.v.letters;
        for (auto& b : r.blocks)
            full.letters.insert(full.letters.end(), b.letters.begin(), b.letters.end());
        CHECK(permutation_of(full) == permutation_of(w));
        // block words stay inside their blocks
        for (auto& l : r.blocks[0].letters) CHECK(l.index == 1);
        for (auto& l : r.blocks[1].letters) CHECK(l.index == 3);
    }
}

TEST_CASE("B_k normal form") {
    Word bf = Word::parse("b f", 3, Alphabet::Bk);
    CHECK(bword_normal_form(bf).empty());

    Word tf = Word::parse("t1 f", 3, Alphabet::Bk);
    Word nf = bword_normal_form(tf);
    CHECK(nf == Word::parse("f t2", 3, Alphabet::Bk));

    Word fff = Word::parse("f f f", 3, Alphabet::Bk);
    CHECK(bword_normal_form(fff) == fff);  // preserved as the phi^k prefix

    // no beta and no phi^k inside the remainder
    for (const char* s : {"t1 b t2 f", "b b t1 f f", "f t2 b t1"}) {
        Word w = Word::parse(s, 3, Alphabet::Bk);
        Word n = bword_normal_form(w);
        size_t i = 0;
        while (i < n.letters.size() && n.letters[i].kind == Letter::Beta) ++i;
        size_t prefix_beta = i;
        while (i < n.letters.size() && n.letters[i].kind == Letter::Phi) ++i;
        size_t run = 0;
        bool leading = true;
        size_t lead_phi = i - prefix_beta;
        for (; i < n.letters.size(); ++i) {
            CHECK(n.letters[i].kind != Letter::Beta);
            if (n.letters[i].kind == Letter::Phi) {
                ++run;
                CHECK(run < 3);
            } else {
                run = 0;
            }
        }
        (void)leading;
        if (prefix_beta > 0) CHECK(prefix_beta % 3 == 0);
        if (prefix_beta > 0) CHECK(lead_phi == 0);
    }
}

TEST_CASE("border guard form") {
    // t_{k-1} = phi gamma
    auto bg = border_guard_form(Word::parse("t2", 3, Alphabet::Bk));
    CHECK(bg.prefix_power == 1);
    REQUIRE(bg.gk_word.size() == 1);
    CHECK(bg.gk_word.letters[0].kind == Letter::Gamma);

    // words that avoid the border pass through
    auto bg2 = border_guard_form(Word::parse("t1", 3, Alphabet::Bk));
    CHECK(bg2.prefix_power == 0);
    CHECK(bg2.gk_word == Word::parse("t1", 3, Alphabet::Gk));

    // no t_{k-1} ever appears in the G_k part
    for (const char* s : {"t1 b", "t2 f t1", "b t2 t1 f f", "t2 t1 t2"}) {
        auto r = border_guard_form(Word::parse(s, 3, Alphabet::Bk));
        for (auto& l : r.gk_word.letters)
            if (l.kind == Letter::T) CHECK(l.index <= 1);
        // split: w1 gamma-free, w2 psi-free
        for (auto& l : r.w1.letters) CHECK(l.kind != Letter::Gamma);
        for (auto& l : r.w2.letters) CHECK(l.kind != Letter::Psi);
    }
}
