#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pfb/field.hpp"

namespace pfb {

enum class FamilyKind { explicit_list, paper_example, dirichlet };

/// Machine-checkable reasons why a per-index condition keeps holding past
/// the stored prefix. Each schema is tied to the generator that issues it.
enum class TailGuarantee {
    /// q_k = p_{k+1}^{(p_1-1)...(p_k-1)}: p_i | q_k - 1 for k >= i, and
    /// 4 | q_k - 1 for k >= 2.
    fermat_little_theorem,
    /// q_k = 1 mod lcm(4, p_1, ..., p_k): p_i | q_k - 1 for k >= i, 4 always.
    dirichlet_search,
    /// 4 | q_k - 1 for k >= 2 (even exponent of an odd prime); nothing else.
    even_exponent,
};

std::string to_string(FamilyKind kind);
std::string to_string(TailGuarantee tail);

struct FamilyEntry {
    std::size_t k = 0;
    PrimePower q;
    /// Divisors d verified to divide q - 1.
    std::vector<Natural> certificates;
};

/// A sequence (q_k) of field sizes, 1-based.
struct Family {
    FamilyKind kind = FamilyKind::explicit_list;
    std::vector<FamilyEntry> entries;
    std::optional<TailGuarantee> tail_guarantee;
    /// Per-entry generator of F_{q_k}^x, empty until attach_generators.
    std::vector<FieldElem> generator_choice;

    const FamilyEntry& entry(std::size_t k) const;

    /// Checks the Family invariants and throws InvalidArgument on the first
    /// violation: k and q strictly increasing, certificates divide q - 1,
    /// tail guarantee admissible for the kind, generator orders.
    void validate() const;
};

enum class Outcome { holds, fails, mixed, unknown_tail };

std::string to_string(Outcome outcome);

/// Three-valued decision of "for U-almost all k", independent of which
/// nonprincipal ultrafilter U is chosen.
struct Verdict {
    Outcome outcome = Outcome::unknown_tail;
    std::optional<std::size_t> threshold;
    std::vector<std::size_t> witness_indices;
    /// (k, truth at k) for every stored entry.
    std::vector<std::pair<std::size_t, bool>> per_index;
};

/// "holds for U-almost all k (from k=2)" and similar.
std::string describe(const Verdict& v);

/// Every prime divisor of n divides q - 1, and 4 | n implies 4 | q - 1.
bool condition3(const PrimePower& q, std::uint64_t n);

/// 4 and the first k primes all divide q_k - 1.
bool check_spade(const Family& fam, std::size_t k);

Verdict thm24_condition3(const Family& fam, std::uint64_t n);

/// Some g in F_q^x makes x^n - g irreducible.
bool exists_irreducible_binomial(const PrimePower& q, std::uint64_t n);

struct EquivalenceRow {
    std::size_t k = 0;
    PrimePower q;
    FieldElem generator;
    bool condition3 = false;
    bool exists_g = false;
    bool generator_irreducible = false;
};

struct EquivalenceReport {
    std::uint64_t n = 0;
    std::vector<EquivalenceRow> rows;
    Verdict verdict;
};

/// Evaluates the three equivalent conditions per index. Disagreement at any
/// index throws ConsistencyError.
EquivalenceReport thm24_equivalence_report(const Family& fam, std::uint64_t n);

/// Fills generator_choice with find_generator of each F_{q_k}.
void attach_generators(Family& fam);

/// K <= 4; larger K throws DeskScaleExceeded.
Family gen_paper_family(std::size_t K);

/// q_k is the least prime = 1 mod lcm(4, p_1, ..., p_k) above q_{k-1}.
Family gen_dirichlet_family(std::size_t K);

/// A user-supplied list without tail guarantee.
Family explicit_family(const std::vector<PrimePower>& sizes);

/// Family file: {"kind", "entries": [{"k", "p", "t", "certificates"}],
/// "tail_guarantee"}. Reading re-verifies every certificate and, for
/// generated kinds, the defining congruences.
std::string write_family(const Family& fam);
Family read_family(std::string_view json_text);

}  // namespace pfb
