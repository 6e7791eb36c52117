#pragma once

// Brute-force references used by the unit and acceptance suites. Nothing
// here calls the criteria, root finders or irreducibility tests under test;
// they only use raw field arithmetic and enumeration.

#include <cstdint>
#include <set>
#include <vector>

#include "pfb/field.hpp"
#include "pfb/poly.hpp"

namespace pfb::oracle {

/// Every element of F in enumeration order.
inline std::vector<FieldElem> elements(const FieldPtr& F)
{
    std::vector<FieldElem> out;
    const std::uint64_t q = to_u64(F->order());
    out.reserve(q);
    for (std::uint64_t i = 0; i < q; ++i)
        out.emplace_back(F, F->element_at(from_u64(i)));
    return out;
}

/// Order of a by repeated multiplication.
inline std::uint64_t order_by_iteration(const FieldElem& a)
{
    FieldElem x = a;
    std::uint64_t e = 1;
    while (!x.is_one()) {
        x = x * a;
        ++e;
    }
    return e;
}

/// Prime powers p^t <= bound, ascending.
inline std::vector<PrimePower> prime_powers_up_to(std::uint64_t bound)
{
    std::vector<PrimePower> out;
    for (std::uint64_t q = 2; q <= bound; ++q) {
        std::uint64_t p = 2;
        while (q % p != 0)
            ++p;
        std::uint64_t rest = q;
        unsigned t = 0;
        while (rest % p == 0) {
            rest /= p;
            ++t;
        }
        if (rest == 1)
            out.emplace_back(from_u64(p), t);
    }
    return out;
}

/// Monic polynomials of exact degree d over F, by enumeration index.
inline std::vector<Poly> monic_polys(const FieldPtr& F, unsigned d)
{
    const auto elems = elements(F);
    const std::uint64_t q = elems.size();
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i)
        count *= q;
    std::vector<Poly> out;
    out.reserve(count);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<Coeffs> c(d + 1, F->zero());
        std::uint64_t rest = idx;
        for (unsigned i = 0; i < d; ++i) {
            c[i] = elems[rest % q].coeffs();
            rest /= q;
        }
        c[d] = F->one();
        out.emplace_back(F, std::move(c));
    }
    return out;
}

/// f (monic, degree >= 1) has no monic divisor of degree 1..deg/2.
inline bool irreducible_by_search(const Poly& f)
{
    const unsigned n = static_cast<unsigned>(f.degree());
    for (unsigned d = 1; d <= n / 2; ++d)
        for (const auto& h : monic_polys(f.field(), d))
            if (rem(f, h).is_zero())
                return false;
    return true;
}

/// Roots by evaluating f at every element.
inline std::vector<FieldElem> roots_by_evaluation(const Poly& f)
{
    std::vector<FieldElem> out;
    for (const auto& a : elements(f.field()))
        if (f.eval(a).is_zero())
            out.push_back(a);
    return out;
}

/// a^{q0^n} = a fixed points, by enumeration of F.
inline std::vector<FieldElem> frobenius_fixed(const FieldPtr& F, const Natural& q0, unsigned n)
{
    const Natural e = pow(q0, n);
    std::vector<FieldElem> out;
    for (const auto& a : elements(F))
        if (a.pow(e) == a)
            out.push_back(a);
    return out;
}

}  // namespace pfb::oracle
