#include "pfb/binomial.hpp"

#include "pfb/errors.hpp"
#include "pfb/poly.hpp"

namespace pfb {

namespace {

void require_unit(const FieldElem& g, std::uint64_t n)
{
    if (g.is_zero())
        throw InvalidArgument("g must be nonzero");
    if (n == 0)
        throw InvalidArgument("n must be at least 1");
}

bool divides(const Natural& d, const Natural& n) { return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0; }

}  // namespace

std::string to_string(FailedCondition c)
{
    switch (c) {
    case FailedCondition::gcd_condition:
        return "gcd-condition";
    case FailedCondition::prime_divisor_condition:
        return "prime-divisor-condition";
    case FailedCondition::four_condition:
        return "four-condition";
    case FailedCondition::pth_power:
        return "pth-power";
    case FailedCondition::minus4_fourth_power:
        return "minus4-fourth-power";
    }
    return "unknown";
}

OrderCriterion irreducible_ln(const FieldElem& g, std::uint64_t n)
{
    require_unit(g, n);
    OrderCriterion out;
    out.order_e = mult_order(g);
    if (n == 1) {
        out.irreducible = true;
        return out;
    }
    const Natural q_minus_1 = g.field()->order() - 1;
    const Natural nn = from_u64(n);

    Natural cofactor_gcd;
    const Natural index = q_minus_1 / out.order_e;
    mpz_gcd(cofactor_gcd.get_mpz_t(), index.get_mpz_t(), nn.get_mpz_t());
    if (cofactor_gcd != 1) {
        out.failed = FailedCondition::gcd_condition;
        return out;
    }
    for (const auto& r : factor(nn).primes()) {
        if (!divides(r, out.order_e)) {
            out.failed = FailedCondition::prime_divisor_condition;
            return out;
        }
    }
    if (n % 4 == 0 && !divides(4, q_minus_1)) {
        out.failed = FailedCondition::four_condition;
        return out;
    }
    out.irreducible = true;
    return out;
}

bool is_pth_power(const FieldElem& g, const Natural& p)
{
    if (g.is_zero())
        throw InvalidArgument("g must be nonzero");
    if (!is_prime(p))
        throw InvalidArgument(to_string(p) + " is not prime");
    const FieldCtx& F = *g.field();
    if (p == F.size().p())
        return true;  // Frobenius is onto
    const Natural q_minus_1 = F.order() - 1;
    if (!divides(p, q_minus_1))
        return true;  // x -> x^p is a bijection
    return g.pow(q_minus_1 / p).is_one();
}

bool in_minus4_fourth_powers(const FieldElem& g)
{
    if (g.is_zero())
        throw InvalidArgument("g must be nonzero");
    const FieldPtr& F = g.field();
    if (F->characteristic() == 2)
        return false;  // -4 = 0, so -4K^4 = {0}
    const FieldElem four = FieldElem::residue(F, 4);
    const FieldElem h = -(g * four.inv());
    const Natural q_minus_1 = F->order() - 1;
    Natural d;
    mpz_gcd_ui(d.get_mpz_t(), q_minus_1.get_mpz_t(), 4);
    return h.pow(q_minus_1 / d).is_one();
}

PowerCriterion irreducible_karp(const FieldElem& g, std::uint64_t n)
{
    require_unit(g, n);
    PowerCriterion out;
    for (const auto& r : factor(from_u64(n)).primes()) {
        if (is_pth_power(g, r)) {
            out.failed = FailedCondition::pth_power;
            return out;
        }
    }
    if (n % 4 == 0 && in_minus4_fourth_powers(g)) {
        out.failed = FailedCondition::minus4_fourth_power;
        return out;
    }
    out.irreducible = true;
    return out;
}

bool diamond(const Natural& q, std::uint64_t n)
{
    if (n == 0)
        throw InvalidArgument("n must be at least 1");
    const Natural q_minus_1 = q - 1;
    if (n % 4 == 0 && !divides(4, q_minus_1))
        return false;
    // rad(n) | q-1 iff repeatedly stripping gcd(m, q-1) from n reaches 1.
    Natural m = from_u64(n), g;
    for (;;) {
        mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), q_minus_1.get_mpz_t());
        if (g == 1)
            break;
        m /= g;
    }
    return m == 1;
}

BinomialReport analyze_binomial(const FieldElem& g, std::uint64_t n, bool with_oracle)
{
    const OrderCriterion ln = irreducible_ln(g, n);
    const PowerCriterion karp = irreducible_karp(g, n);
    BinomialReport report{g.field()->size(), g, n, ln.order_e, ln.irreducible, karp.irreducible, std::nullopt,
                          ln.failed};
    const std::string where = "x^" + std::to_string(n) + " - " + format_elem(g) + " over F_" + report.q.str();
    if (ln.irreducible != karp.irreducible)
        throw ConsistencyError("order and power-class criteria disagree on " + where);
    if (with_oracle) {
        report.oracle_verdict = rabin_irreducible(Poly::binomial(n, g));
        if (*report.oracle_verdict != ln.irreducible)
            throw ConsistencyError("Rabin test disagrees with the criteria on " + where);
    }
    return report;
}

}  // namespace pfb
