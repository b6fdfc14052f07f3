#pragma once

#include <compare>
#include <cstdint>

#include "inclab/errors.hpp"
#include "inclab/rng.hpp"

namespace inclab {

class Fe;

/// Deterministic Miller-Rabin with bases {2,3,5,7}; exact for n < 3'215'031'751,
/// which covers the whole admissible modulus range.
bool is_prime_u32(std::uint32_t n);

/// The prime field F_p, 5 <= p < 2^31.
///
/// The lower bound guarantees every affine line carries at least three distinct
/// points (needed by line-in-surface sampling); the upper bound keeps all
/// products inside 64-bit intermediates.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t modulus);

    std::uint32_t modulus() const { return p_; }

    /// Reduce an arbitrary signed integer into [0, p).
    Fe element(std::int64_t value) const;
    Fe zero() const;
    Fe one() const;

    /// Uniform element of [0, p).
    Fe sample(SplitMix64& rng) const;
    /// Uniform element of [1, p).
    Fe sample_nonzero(SplitMix64& rng) const;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t p_;
};

/// An element of F_p. Immutable value; always stored fully reduced.
/// Operations between elements of different fields throw FieldMismatch.
class Fe {
public:
    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }
    PrimeField field() const { return PrimeField(p_); }
    bool is_zero() const { return v_ == 0; }

    friend Fe operator+(Fe a, Fe b) {
        a.check(b);
        std::uint32_t s = a.v_ + b.v_;  // < 2^32: both operands < 2^31
        if (s >= a.p_) s -= a.p_;
        return Fe(s, a.p_);
    }
    friend Fe operator-(Fe a, Fe b) {
        a.check(b);
        std::uint32_t s = a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_;
        return Fe(s, a.p_);
    }
    friend Fe operator*(Fe a, Fe b) {
        a.check(b);
        std::uint64_t prod = std::uint64_t(a.v_) * b.v_;
        return Fe(std::uint32_t(prod % a.p_), a.p_);
    }
    friend Fe operator/(Fe a, Fe b) { return a * inv(b); }
    Fe operator-() const { return Fe(v_ == 0 ? 0 : p_ - v_, p_); }

    /// Multiplicative inverse via the extended Euclid algorithm.
    friend Fe inv(Fe a);
    friend Fe pow(Fe base, std::uint64_t exp);

    friend bool operator==(const Fe&, const Fe&) = default;
    friend auto operator<=>(const Fe&, const Fe&) = default;

private:
    Fe(std::uint32_t v, std::uint32_t p) : v_(v), p_(p) {}
    void check(const Fe& other) const {
        if (p_ != other.p_) throw FieldMismatch("operands belong to different prime fields");
    }

    friend class PrimeField;

    std::uint32_t v_;
    std::uint32_t p_;
};

}  // namespace inclab
