#ifndef RITTKIT_SWAPS_HPP
#define RITTKIT_SWAPS_HPP

#include <optional>

#include "rittkit/decomp.hpp"
#include "rittkit/ritty.hpp"
#include "rittkit/words.hpp"

namespace rittkit {

enum class SwapOutcome { Swapped, Undefined, NeedsExtension };

struct SwapResult {
    SwapOutcome outcome = SwapOutcome::Undefined;
    std::optional<Decomposition> decomposition;  // canonical representative when swapped
    std::optional<Poly> extension;               // required quadratic t^2 - c over K

    bool ok() const { return outcome == SwapOutcome::Swapped; }
};

/// Ritt swap at position i (1 <= i < k, counted from the inner end).
SwapResult try_ritt_swap(const Decomposition& d, int i, long ambient_d = 0);

/// Right-to-left application of an M_k word; Undefined is absorbing.
SwapResult apply_word(const Decomposition& d, const Word& w, long ambient_d = 0);

struct ChebyclumpInterval {
    int inner, outer;  // factor positions from the inner end, inner <= outer
    int n;             // composite is linearly related to C_n
    LinearMap L, M;    // L o f_outer o ... o f_inner o M = C_n
};

struct ChebyclumpReport {
    std::vector<ChebyclumpInterval> intervals;  // maximal intervals only
};

ChebyclumpReport chebyclumps(const Decomposition& d);

}  // namespace rittkit

#endif
