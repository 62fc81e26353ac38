#ifndef RITTKIT_DECOMP_HPP
#define RITTKIT_DECOMP_HPP

#include <optional>
#include <string>
#include <vector>

#include "rittkit/algebra.hpp"

namespace rittkit {

/// Complete decomposition (f_k, ..., f_1), stored outermost first.
/// Canonical representative: f_1 .. f_{k-1} monic with zero constant term.
class Decomposition {
  public:
    Decomposition() = default;
    explicit Decomposition(std::vector<Poly> outermost_first);

    size_t length() const { return factors_.size(); }
    const std::vector<Poly>& factors() const { return factors_; }
    /// 1-based from the inner end: from_inner(1) = f_1 is applied first.
    const Poly& from_inner(size_t i) const { return factors_.at(factors_.size() - i); }

    Poly compose_all() const;
    bool is_canonical() const;
    std::string key() const;  // dedup key of the canonical form

    friend bool operator==(const Decomposition& a, const Decomposition& b) {
        return a.factors_ == b.factors_;
    }
    friend bool operator!=(const Decomposition& a, const Decomposition& b) { return !(a == b); }

  private:
    std::vector<Poly> factors_;
};

/// Canonical representative of the linear-equivalence class of a raw factor list.
Decomposition normalize(const std::vector<Poly>& raw_outermost_first);

/// Inner factors are searched by increasing degree, so the result is reproducible.
Decomposition complete_decomposition(const Poly& f);

/// Witness chain L_{k-1}, ..., L_1 with g_k = f_k o L_{k-1},
/// g_i = L_i^-1 o f_i o L_{i-1}, g_1 = L_1^-1 o f_1; nullopt when not equivalent.
std::optional<std::vector<LinearMap>> linear_equivalent(const Decomposition& d1,
                                                        const Decomposition& d2,
                                                        std::string* reason = nullptr);

struct DecompositionSet {
    struct Edge {
        size_t from;
        int position;  // swap position i
        size_t to;
    };
    std::vector<Decomposition> classes;
    std::vector<Edge> edges;
    std::vector<int> depth;  // BFS distance from classes[0]
};

/// BFS closure of complete_decomposition(f) under Ritt swaps at every position.
DecompositionSet enumerate_D_f(const Poly& f, long ambient_d = 0);

}  // namespace rittkit

#endif
