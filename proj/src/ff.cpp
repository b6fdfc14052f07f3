#include "inclab/ff.hpp"

namespace inclab {

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return (unsigned __int128)(a)*b % m;
}

std::uint64_t powmod64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod64(r, base, m);
        base = mulmod64(base, base, m);
        exp >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
        std::uint64_t x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint32_t modulus) : p_(modulus) {
    if (modulus >= (1u << 31))
        throw NonPrimeField("modulus " + std::to_string(modulus) + " exceeds 2^31 - 1");
    if (modulus < 5)
        throw NonPrimeField("modulus " + std::to_string(modulus) + " is below the minimum of 5");
    if (!is_prime_u32(modulus))
        throw NonPrimeField("modulus " + std::to_string(modulus) + " is not prime");
}

Fe PrimeField::element(std::int64_t value) const {
    std::int64_t r = value % std::int64_t(p_);
    if (r < 0) r += p_;
    return Fe(std::uint32_t(r), p_);
}

Fe PrimeField::zero() const { return Fe(0, p_); }
Fe PrimeField::one() const { return Fe(1, p_); }

Fe PrimeField::sample(SplitMix64& rng) const { return Fe(std::uint32_t(rng.bounded(p_)), p_); }

Fe PrimeField::sample_nonzero(SplitMix64& rng) const {
    return Fe(std::uint32_t(1 + rng.bounded(p_ - 1)), p_);
}

Fe inv(Fe a) {
    if (a.v_ == 0) throw ZeroInverse("attempted to invert zero");
    // Extended Euclid on (v, p); only the coefficient of v is tracked.
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = a.p_, new_r = a.v_;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += a.p_;
    return Fe(std::uint32_t(t), a.p_);
}

Fe pow(Fe base, std::uint64_t exp) {
    Fe r = PrimeField(base.p_).one();
    while (exp) {
        if (exp & 1) r = r * base;
        base = base * base;
        exp >>= 1;
    }
    return r;
}

}  // namespace inclab
