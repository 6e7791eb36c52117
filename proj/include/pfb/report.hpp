#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pfb/binomial.hpp"
#include "pfb/pseudofinite.hpp"
#include "pfb/tower.hpp"

namespace pfb {

enum class OutputMode { text, json };

struct OrderReport {
    FieldElem a;
    Natural order;
};

struct GeneratorReport {
    FieldElem generator;
};

/// Condition (3) verdict over a family together with the per-index spade
/// checks.
struct FamilyCheck {
    Family family;
    std::uint64_t n = 0;
    Verdict verdict;
    std::vector<bool> spade;
};

FamilyCheck check_family(const Family& fam, std::uint64_t n);

// JSON mode emits one object followed by a newline. Text mode is stable
// for equal inputs.
std::string format_report(const BinomialReport& r, OutputMode mode);
std::string format_report(const OrderReport& r, OutputMode mode);
std::string format_report(const GeneratorReport& r, OutputMode mode);
std::string format_report(const Family& fam, OutputMode mode);
std::string format_report(const Verdict& v, OutputMode mode);
std::string format_report(const FamilyCheck& r, OutputMode mode);
std::string format_report(const EquivalenceReport& r, OutputMode mode);
std::string format_report(const std::vector<TowerLevel>& levels, OutputMode mode);
std::string format_report(const ClosureReport& r, OutputMode mode);

}  // namespace pfb
