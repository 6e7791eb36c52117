#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace pfb {

/// Arbitrary-precision nonnegative integer.
using Natural = mpz_class;

Natural parse_natural(std::string_view text);
std::string to_string(const Natural& n);

/// Exponentiation by squaring on naturals (no modulus).
Natural pow(const Natural& base, std::uint64_t exponent);

/// Fits in std::uint64_t.
bool fits_u64(const Natural& n);
std::uint64_t to_u64(const Natural& n);
Natural from_u64(std::uint64_t v);

struct PrimeFactor {
    Natural prime;
    unsigned multiplicity = 0;

    friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

/// Prime factorization, primes strictly increasing.
class Factorization {
public:
    Factorization() = default;
    explicit Factorization(std::vector<PrimeFactor> pairs);

    const std::vector<PrimeFactor>& pairs() const { return pairs_; }
    bool empty() const { return pairs_.empty(); }
    std::size_t size() const { return pairs_.size(); }

    /// Product of prime^multiplicity.
    Natural value() const;
    std::vector<Natural> primes() const;
    bool has_prime(const Natural& p) const;

    friend bool operator==(const Factorization&, const Factorization&) = default;

private:
    std::vector<PrimeFactor> pairs_;
};

/// Miller-Rabin with the first 13 primes as witnesses, which is a proof of
/// primality below 3.317e24. Larger inputs additionally get 64 rounds with
/// bases drawn from a fixed-seed stream.
bool is_prime(const Natural& n);

inline constexpr std::uint64_t kDefaultRhoBudget = 1ULL << 22;

/// Trial division by primes below 10^6, then Brent's variant of Pollard rho
/// with `rho_budget` iterations per attempt (four attempts per cofactor).
/// Throws FactorizationTooHard when rho gives up and InvalidArgument for
/// n = 0.
Factorization factor(const Natural& n, std::uint64_t rho_budget = kDefaultRhoBudget);

/// (p, t) with p prime and p^t = n, or nullopt. Throws for n < 2.
std::optional<std::pair<Natural, unsigned>> prime_power_decompose(const Natural& n);

/// The first k primes, 2 first.
std::vector<std::uint64_t> first_primes(std::size_t k);

/// 1-based position of prime p in the sequence of primes (pi(p)).
/// Throws DeskScaleExceeded above 10^8.
std::size_t prime_index(const Natural& p);

/// Every divisor of n (n >= 1, fitting in 64 bits), ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

}  // namespace pfb
