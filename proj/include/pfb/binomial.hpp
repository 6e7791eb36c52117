#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "pfb/field.hpp"

namespace pfb {

/// The first violated clause, in the order the criteria check them.
enum class FailedCondition {
    gcd_condition,             // gcd((q-1)/e, n) != 1
    prime_divisor_condition,   // some prime r | n with r not dividing e
    four_condition,            // 4 | n but 4 does not divide q-1
    pth_power,                 // g in K^r for some prime r | n
    minus4_fourth_power,       // 4 | n and g in -4K^4
};

std::string to_string(FailedCondition c);

/// Verdict of the order-based criterion (multiplicative order e of g).
struct OrderCriterion {
    Natural order_e;
    bool irreducible = false;
    std::optional<FailedCondition> failed;
};

/// Verdict of the power-class criterion (K^r and -4K^4 membership).
struct PowerCriterion {
    bool irreducible = false;
    std::optional<FailedCondition> failed;
};

/// Cross-checked irreducibility of x^n - g over F_q.
struct BinomialReport {
    PrimePower q;
    FieldElem g;
    std::uint64_t n = 0;
    Natural order_e;
    bool ln_verdict = false;
    bool karp_verdict = false;
    std::optional<bool> oracle_verdict;
    /// From the order criterion when it reports reducible.
    std::optional<FailedCondition> failed_condition;
};

/// x^n - g irreducible iff gcd((q-1)/e, n) = 1, every prime r | n divides
/// e, and 4 | n implies 4 | q-1. n = 1 is irreducible. Throws
/// InvalidArgument for g = 0 or n = 0.
OrderCriterion irreducible_ln(const FieldElem& g, std::uint64_t n);

/// g = h^p for some h in F. p must be prime.
bool is_pth_power(const FieldElem& g, const Natural& p);

/// g = -4 h^4 for some h in F. Always false in characteristic 2.
bool in_minus4_fourth_powers(const FieldElem& g);

/// x^n - g irreducible iff g is not an r-th power for any prime r | n and,
/// when 4 | n, g is not in -4K^4.
PowerCriterion irreducible_karp(const FieldElem& g, std::uint64_t n);

/// Every prime divisor of n divides q-1, and 4 | n implies 4 | q-1: the
/// condition under which x^n - g is irreducible for a generator g.
bool diamond(const Natural& q, std::uint64_t n);

/// Runs both criteria (and the Rabin test on x^n - g when asked) and
/// throws ConsistencyError if they disagree.
BinomialReport analyze_binomial(const FieldElem& g, std::uint64_t n, bool with_oracle = false);

}  // namespace pfb
