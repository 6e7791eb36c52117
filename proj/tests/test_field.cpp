#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "pfb/errors.hpp"
#include "pfb/field.hpp"

using namespace pfb;

namespace {

// Lexicographically smallest monic irreducible of degree t over F_p, by
// scanning coefficient tuples as base-p numbers with c_0 least significant.
Coeffs smallest_irreducible_by_search(std::uint64_t p, unsigned t)
{
    const FieldPtr Fp = build_field(from_u64(p), 1);
    std::uint64_t count = 1;
    for (unsigned i = 0; i < t; ++i)
        count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Coeffs c(t + 1, 0);
        std::uint64_t rest = idx;
        for (unsigned i = 0; i < t; ++i) {
            c[i] = rest % p;
            rest /= p;
        }
        c[t] = 1;
        if (oracle::irreducible_by_search(Poly::from_residues(Fp, c)))
            return c;
    }
    return {};
}

FieldElem el(const FieldPtr& F, const char* text) { return parse_elem(F, text); }

}  // namespace

TEST_SUITE("field")
{
    TEST_CASE("build_field on documented sizes")
    {
        const FieldPtr F13 = build_field(13, 1);
        CHECK(F13->order() == 13);
        CHECK(F13->degree() == 1);
        CHECK(describe_field(*F13) == "F_13");

        const FieldPtr F9 = build_field(3, 2);
        CHECK(F9->modulus() == Coeffs{1, 0, 1});
        CHECK(describe_field(*F9) == "F_3^2 mod 1,0,1");

        CHECK_THROWS_AS(build_field(4, 1), InvalidArgument);
        CHECK_THROWS_AS(build_field(5, 0), InvalidArgument);
    }

    TEST_CASE("canonical modulus matches exhaustive lex-smallest search")
    {
        const std::vector<std::pair<std::uint64_t, unsigned>> cases = {
            {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 8}, {3, 2}, {3, 3}, {3, 4},
            {5, 2}, {5, 3}, {5, 4}, {7, 2}, {7, 3}, {11, 2}, {13, 2}, {13, 3},
        };
        for (auto [p, t] : cases) {
            CAPTURE(p);
            CAPTURE(t);
            CHECK(build_field(from_u64(p), t)->modulus() == smallest_irreducible_by_search(p, t));
        }
        CHECK(build_field(2, 3)->modulus() == Coeffs{1, 1, 0, 1});
    }

    TEST_CASE("build_field is deterministic")
    {
        for (auto [p, t] : std::vector<std::pair<unsigned, unsigned>>{{2, 16}, {3, 7}, {13, 12}, {101, 3}})
            CHECK(build_field(p, t)->modulus() == build_field(p, t)->modulus());
    }

    TEST_CASE("PrimePower parsing")
    {
        CHECK(PrimePower::parse("25") == PrimePower(5, 2));
        CHECK(PrimePower::parse("5^2") == PrimePower(5, 2));
        CHECK(PrimePower::parse("13").str() == "13");
        CHECK(PrimePower::parse("11^48").q() == pow(Natural(11), 48));
        CHECK_THROWS_AS(PrimePower::parse("12"), InvalidArgument);
        CHECK_THROWS_AS(PrimePower::parse("1"), InvalidArgument);
        CHECK_THROWS_AS(PrimePower::parse("4^2"), InvalidArgument);
        CHECK_THROWS_AS(PrimePower::parse("x"), InvalidArgument);
    }

    TEST_CASE("element arithmetic examples")
    {
        const FieldPtr F13 = build_field(13, 1);
        CHECK(el(F13, "2") * el(F13, "7") == FieldElem::one(F13));
        CHECK(el(F13, "2").pow(12).is_one());
        const FieldPtr F9 = build_field(3, 2);
        CHECK(el(F9, "0,1") * el(F9, "0,1") == el(F9, "2"));
        CHECK(el(F9, "0,1").inv() * el(F9, "0,1") == FieldElem::one(F9));
        CHECK_THROWS_AS(FieldElem::zero(F9).inv(), InvalidArgument);
    }

    TEST_CASE("field axioms hold exhaustively on small fields")
    {
        for (auto [p, t] : std::vector<std::pair<unsigned, unsigned>>{{2, 3}, {3, 2}, {5, 1}, {2, 4}, {7, 2}}) {
            const FieldPtr F = build_field(p, t);
            const auto E = oracle::elements(F);
            const FieldElem zero = FieldElem::zero(F), one = FieldElem::one(F);
            for (const auto& a : E) {
                CHECK(a + zero == a);
                CHECK(a * one == a);
                CHECK(a + (-a) == zero);
                CHECK(a - a == zero);
                if (!a.is_zero())
                    CHECK(a * a.inv() == one);
                CHECK(a.pow(F->order()) == a);
            }
            std::mt19937_64 rng(11);
            for (int i = 0; i < 300; ++i) {
                const auto& a = E[rng() % E.size()];
                const auto& b = E[rng() % E.size()];
                const auto& c = E[rng() % E.size()];
                CHECK(a * (b + c) == a * b + a * c);
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * b == b * a);
                CHECK((a + b) + c == a + (b + c));
            }
        }
    }

    TEST_CASE("enumeration index round trips")
    {
        const FieldPtr F = build_field(5, 3);
        for (std::uint64_t i = 0; i < 125; ++i) {
            const Coeffs c = F->element_at(from_u64(i));
            CHECK(F->index_of(c) == from_u64(i));
            if (i > 0)
                CHECK(F->precedes(F->element_at(from_u64(i - 1)), c));
        }
    }

    TEST_CASE("mult_order examples")
    {
        const FieldPtr F13 = build_field(13, 1);
        CHECK(mult_order(el(F13, "2")) == 12);
        CHECK(mult_order(el(F13, "3")) == 3);
        for (auto q : {"2", "9", "13", "5^4"})
            CHECK(mult_order(FieldElem::one(build_field(PrimePower::parse(q)))) == 1);
        CHECK_THROWS_AS(mult_order(FieldElem::zero(F13)), InvalidArgument);
    }

    TEST_CASE("mult_order agrees with iteration on fixed-seed samples")
    {
        const auto sizes = oracle::prime_powers_up_to(2000);
        std::mt19937_64 rng(2024);
        for (int i = 0; i < 200; ++i) {
            const PrimePower& pp = sizes[rng() % sizes.size()];
            const FieldPtr F = build_field(pp);
            const std::uint64_t q = to_u64(pp.q());
            const FieldElem a(F, F->element_at(from_u64(rng() % (q - 1) + 1)));
            CAPTURE(pp.str());
            CHECK(mult_order(a) == from_u64(oracle::order_by_iteration(a)));
        }
    }

    TEST_CASE("find_generator examples")
    {
        CHECK(format_elem(find_generator(build_field(13, 1))) == "2");
        CHECK(format_elem(find_generator(build_field(2, 1))) == "1");
        CHECK(format_elem(find_generator(build_field(5, 1))) == "2");
        CHECK(format_elem(find_generator(build_field(3, 2))) == "1,1");
    }

    TEST_CASE("find_generator is the smallest element of full order")
    {
        for (const auto& pp : oracle::prime_powers_up_to(200)) {
            const FieldPtr F = build_field(pp);
            const std::uint64_t q = to_u64(pp.q());
            std::optional<FieldElem> expected;
            for (const auto& a : oracle::elements(F)) {
                if (!a.is_zero() && oracle::order_by_iteration(a) == q - 1) {
                    expected = a;
                    break;
                }
            }
            REQUIRE(expected);
            CAPTURE(pp.str());
            CHECK(find_generator(F) == *expected);
            CHECK(is_generator(*expected));
        }
    }

    TEST_CASE("degree_over_subfield")
    {
        const FieldPtr F13 = build_field(13, 1);
        for (std::uint64_t r = 0; r < 13; ++r)
            CHECK(degree_over_subfield(FieldElem::residue(F13, r), PrimePower(13, 1)) == 1);

        // In the field of size 13^2, any element squaring to 2 has degree 2.
        const FieldPtr F169 = build_field(13, 2);
        const FieldElem two = FieldElem::residue(F169, 2);
        int found = 0;
        for (const auto& a : oracle::elements(F169)) {
            if (a * a == two) {
                ++found;
                CHECK(degree_over_subfield(a, PrimePower(13, 1)) == 2);
            }
        }
        CHECK(found == 2);

        // Elements of the size-13^2 subfield of 13^4 are a^{(13^4-1)/(13^2-1)} powers.
        const FieldPtr F4 = build_field(13, 4);
        const FieldElem g = find_generator(F4);
        const FieldElem s = g.pow(Natural((28561 - 1) / (169 - 1)));
        CHECK(degree_over_subfield(s, PrimePower(13, 1)) == 2);
        CHECK(degree_over_subfield(g, PrimePower(13, 1)) == 4);
        CHECK(degree_over_subfield(g, PrimePower(13, 2)) == 2);
        CHECK_THROWS_AS(degree_over_subfield(g, PrimePower(13, 3)), InvalidArgument);
        CHECK_THROWS_AS(degree_over_subfield(g, PrimePower(3, 1)), InvalidArgument);
    }

    TEST_CASE("element text encoding")
    {
        const FieldPtr F27 = build_field(3, 3);
        CHECK(format_elem(el(F27, "2,0,1")) == "2,0,1");
        CHECK(format_elem(el(F27, "2")) == "2,0,0");
        for (const auto& a : oracle::elements(F27))
            CHECK(parse_elem(F27, format_elem(a)) == a);
        CHECK_THROWS_AS(el(F27, "3"), InvalidArgument);
        CHECK_THROWS_AS(el(F27, "1,1,1,1"), InvalidArgument);
        CHECK_THROWS_AS(el(F27, "1,,1"), InvalidArgument);
        CHECK_THROWS_AS(el(build_field(13, 1), "13"), InvalidArgument);
    }

    TEST_CASE("unit group factorization is shared across threads")
    {
        const FieldPtr F = build_field(11, 48);
        const Factorization& f = F->unit_group_factorization();
        CHECK(f.value() == F->order() - 1);
        CHECK(&F->unit_group_factorization() == &f);
    }
}
