#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pfb/field.hpp"

namespace pfb {

/// Univariate polynomial over a FieldCtx, little-endian, trailing zeros
/// stripped (the zero polynomial has no coefficients).
class Poly {
public:
    explicit Poly(FieldPtr field);
    Poly(FieldPtr field, std::vector<Coeffs> coeffs);

    static Poly constant(const FieldElem& c);
    static Poly x(const FieldPtr& field);
    /// x^n - g.
    static Poly binomial(std::uint64_t n, const FieldElem& g);
    /// Lift base-field residues (little-endian) into the field.
    static Poly from_residues(const FieldPtr& field, const std::vector<std::uint64_t>& residues);

    const FieldPtr& field() const { return field_; }
    const std::vector<Coeffs>& raw() const { return c_; }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const;

    FieldElem coeff(std::size_t i) const;
    FieldElem leading() const;
    FieldElem eval(const FieldElem& at) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);

private:
    void trim();

    FieldPtr field_;
    std::vector<Coeffs> c_;
};

/// Quotient and remainder; throws InvalidArgument on a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly rem(const Poly& a, const Poly& b);
Poly make_monic(const Poly& a);
/// Monic gcd (zero when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);
Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus);
Poly powmod(const Poly& base, const Natural& e, const Poly& modulus);

/// Rabin's test: f of degree n is irreducible iff f | x^{q^n} - x and
/// gcd(f, x^{q^{n/r}} - x) = 1 for each prime r | n. Throws for zero or
/// non-monic f.
bool rabin_irreducible(const Poly& f);

/// All roots of f in its field, ascending in enumeration order.
///
/// Distinct linear factors are isolated with gcd(f, x^q - x) and split by
/// Cantor-Zassenhaus (odd characteristic) or the trace map (characteristic
/// 2), drawing splitting elements from a fixed-seed mt19937_64.
std::vector<FieldElem> poly_roots(const Poly& f);

/// Comma-separated little-endian coefficients; each coefficient in element
/// text encoding, extension coefficients wrapped in brackets.
std::string format_poly(const Poly& f);

}  // namespace pfb
