#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cbg {

// Arithmetic in the prime field F_p, 2 <= p <= 2^31 - 1. Elements are stored
// reduced, as uint32_t in [0, p).
class PrimeField {
  public:
    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (p < 2 || p > 0x7fffffffU || !is_prime(p))
            throw std::invalid_argument("field modulus must be a prime in [2, 2^31-1], got " +
                                        std::to_string(p));
    }

    std::uint32_t modulus() const { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint64_t s = std::uint64_t(a) + b;
        if (s >= p_) s -= p_;
        return static_cast<std::uint32_t>(s);
    }

    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : static_cast<std::uint32_t>(a + std::uint64_t(p_) - b);
    }

    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((std::uint64_t(a) * b) % p_);
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1 % p_;
        std::uint32_t base = a % p_;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    // Multiplicative inverse; the zero element has none.
    std::uint32_t inv(std::uint32_t a) const {
        if (a % p_ == 0) throw std::invalid_argument("zero has no inverse");
        return pow(a, p_ - 2);
    }

    // Reduce an arbitrary signed value into [0, p).
    std::uint32_t reduce(std::int64_t v) const {
        std::int64_t r = v % std::int64_t(p_);
        if (r < 0) r += p_;
        return static_cast<std::uint32_t>(r);
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

    static bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

  private:
    std::uint32_t p_;
};

}  // namespace cbg
