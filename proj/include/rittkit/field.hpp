#ifndef RITTKIT_FIELD_HPP
#define RITTKIT_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace rittkit {

using Rat = mpq_class;
using Int = mpz_class;

enum class Sigma { Identity, Conjugation };

/// Coefficient field K = Q(sqrt(d)) with an optional automorphism.
/// d = 1 denotes K = Q; conjugation negates the sqrt(d) component.
struct FieldConfig {
    long d = 1;
    Sigma sigma = Sigma::Identity;

    FieldConfig() = default;
    FieldConfig(long d_, Sigma s);

    bool is_rational() const { return d == 1; }
};

bool is_squarefree(long d);

/// Element a + b*sqrt(d), exact rational components.
/// Elements with b == 0 are field-agnostic and combine with any d.
class FieldElem {
  public:
    FieldElem() : d_(1) {}
    FieldElem(const Rat& a) : a_(a), d_(1) {}
    FieldElem(long a) : a_(a), d_(1) {}
    FieldElem(int a) : a_(a), d_(1) {}
    FieldElem(const Rat& a, const Rat& b, long d);

    const Rat& ra() const { return a_; }
    const Rat& rb() const { return b_; }
    long d() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }
    bool is_one() const { return b_ == 0 && a_ == 1; }

    FieldElem operator-() const { return FieldElem(-a_, -b_, d_); }
    FieldElem conj() const { return FieldElem(a_, -b_, d_); }

    FieldElem inverse() const;

    friend FieldElem operator+(const FieldElem& x, const FieldElem& y);
    friend FieldElem operator-(const FieldElem& x, const FieldElem& y);
    friend FieldElem operator*(const FieldElem& x, const FieldElem& y);
    friend FieldElem operator/(const FieldElem& x, const FieldElem& y);

    FieldElem& operator+=(const FieldElem& y) { return *this = *this + y; }
    FieldElem& operator-=(const FieldElem& y) { return *this = *this - y; }
    FieldElem& operator*=(const FieldElem& y) { return *this = *this * y; }
    FieldElem& operator/=(const FieldElem& y) { return *this = *this / y; }

    friend bool operator==(const FieldElem& x, const FieldElem& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || y.b_ == 0 || x.d_ == y.d_);
    }
    friend bool operator!=(const FieldElem& x, const FieldElem& y) { return !(x == y); }

    /// Total order used for canonical representatives and dedup.
    friend bool operator<(const FieldElem& x, const FieldElem& y) {
        if (x.a_ != y.a_) return x.a_ < y.a_;
        return x.b_ < y.b_;
    }

    /// Exact n-th root if it exists in K (n >= 1).
    std::optional<FieldElem> nth_root(unsigned n) const;

    std::string str() const;

  private:
    Rat a_, b_;
    long d_;
    friend long merge_d(const FieldElem& x, const FieldElem& y);
};

FieldElem sigma_apply(const FieldConfig& cfg, const FieldElem& x);

/// Exact n-th root of a rational, if any.
std::optional<Rat> rat_nth_root(const Rat& q, unsigned n);

}  // namespace rittkit

#endif
