#pragma once

#include <cstdint>
#include <exception>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "pfb/arith.hpp"

namespace pfb {

/// A field size q = p^t.
class PrimePower {
public:
    /// Throws InvalidArgument unless p is prime and t >= 1.
    PrimePower(Natural p, unsigned t);

    /// Accepts a prime-power integer ("25") or "p^t" ("5^2").
    static PrimePower parse(std::string_view text);

    const Natural& p() const { return p_; }
    unsigned t() const { return t_; }
    const Natural& q() const { return q_; }

    /// "13" for primes, "5^2" otherwise.
    std::string str() const;

    friend bool operator==(const PrimePower& a, const PrimePower& b) { return a.p_ == b.p_ && a.t_ == b.t_; }

private:
    Natural p_;
    unsigned t_;
    Natural q_;
};

/// Coefficient vector of an element of F_{p^t}: t residues, little-endian.
using Coeffs = std::vector<std::uint64_t>;

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

/// F_{p^t} realized as F_p[x]/(m) with m the canonical modulus. Immutable;
/// the only lazily-filled state (the factorization of q - 1) is guarded.
///
/// Residues are machine words, so the characteristic must be below 2^63.
class FieldCtx {
public:
    FieldCtx(const Natural& p, unsigned t);

    const PrimePower& size() const { return size_; }
    std::uint64_t characteristic() const { return p_; }
    unsigned degree() const { return t_; }
    const Natural& order() const { return size_.q(); }

    /// Monic modulus, t + 1 little-endian residues. For t = 1 this is x.
    const Coeffs& modulus() const { return modulus_; }

    /// Factorization of q - 1, computed on first use and shared afterwards.
    /// Rethrows FactorizationTooHard on every call if it failed.
    const Factorization& unit_group_factorization() const;

    Coeffs zero() const { return Coeffs(t_, 0); }
    Coeffs one() const;
    Coeffs from_residue(std::uint64_t r) const;

    bool is_zero(const Coeffs& a) const;
    bool is_one(const Coeffs& a) const;

    Coeffs add(const Coeffs& a, const Coeffs& b) const;
    Coeffs sub(const Coeffs& a, const Coeffs& b) const;
    Coeffs neg(const Coeffs& a) const;
    Coeffs mul(const Coeffs& a, const Coeffs& b) const;
    Coeffs scale(const Coeffs& a, std::uint64_t r) const;
    Coeffs pow(const Coeffs& a, const Natural& e) const;
    /// Throws InvalidArgument on zero.
    Coeffs inv(const Coeffs& a) const;

    /// Position in the canonical enumeration, sum of c_i p^i.
    Natural index_of(const Coeffs& a) const;
    Coeffs element_at(const Natural& index) const;
    /// Strict enumeration order.
    bool precedes(const Coeffs& a, const Coeffs& b) const;

    std::uint64_t add_residue(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub_residue(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t mul_residue(std::uint64_t a, std::uint64_t b) const;

private:
    PrimePower size_;
    std::uint64_t p_;
    unsigned t_;
    Coeffs modulus_;

    mutable std::once_flag factor_once_;
    mutable Factorization unit_factors_;
    mutable std::exception_ptr factor_error_;
};

/// An element together with the field it lives in.
class FieldElem {
public:
    FieldElem(FieldPtr field, Coeffs coeffs);

    static FieldElem zero(const FieldPtr& field) { return {field, field->zero()}; }
    static FieldElem one(const FieldPtr& field) { return {field, field->one()}; }
    static FieldElem residue(const FieldPtr& field, std::uint64_t r) { return {field, field->from_residue(r)}; }

    const FieldPtr& field() const { return field_; }
    const Coeffs& coeffs() const { return c_; }

    bool is_zero() const { return field_->is_zero(c_); }
    bool is_one() const { return field_->is_one(c_); }

    FieldElem pow(const Natural& e) const { return {field_, field_->pow(c_, e)}; }
    FieldElem inv() const { return {field_, field_->inv(c_)}; }

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a);

    friend bool operator==(const FieldElem& a, const FieldElem& b);
    /// Canonical enumeration order.
    friend bool operator<(const FieldElem& a, const FieldElem& b);

private:
    FieldPtr field_;
    Coeffs c_;
};

/// Canonical F_{p^t}: the modulus is the lexicographically smallest monic
/// irreducible of degree t (coefficient tuples read as base-p numbers with
/// c_0 least significant). Equal inputs give equal contexts.
FieldPtr build_field(const Natural& p, unsigned t);
FieldPtr build_field(const PrimePower& q);

/// Least e >= 1 with a^e = 1. Throws InvalidArgument for a = 0.
Natural mult_order(const FieldElem& a);

/// a generates the multiplicative group.
bool is_generator(const FieldElem& a);

/// Smallest generator of F^x in enumeration order.
FieldElem find_generator(const FieldPtr& field);

/// Least d >= 1 with a^{q0^d} = a, for a subfield size q0 = p^s with s | t.
unsigned degree_over_subfield(const FieldElem& a, const PrimePower& subfield);

/// Decimal residue for t = 1; comma-separated little-endian residues of
/// length t otherwise.
std::string format_elem(const FieldElem& a);
/// Inverse of format_elem. Shorter lists are zero-padded.
FieldElem parse_elem(const FieldPtr& field, std::string_view text);

/// Comma-separated little-endian residues.
std::string format_residues(const Coeffs& c);

/// "F_13" or "F_3^2 mod 1,0,1".
std::string describe_field(const FieldCtx& field);

}  // namespace pfb
