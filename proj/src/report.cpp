#include "pfb/report.hpp"

#include <sstream>

#include "json.hpp"

namespace pfb {

namespace {

using json = nlohmann::ordered_json;

std::string emit(const json& j) { return j.dump() + "\n"; }

const char* yes_no(bool b) { return b ? "yes" : "no"; }

json field_json(const FieldCtx& f)
{
    return {{"q", to_string(f.order())},
            {"p", to_string(f.size().p())},
            {"t", f.degree()},
            {"modulus", format_residues(f.modulus())}};
}

json verdict_json(const Verdict& v)
{
    json per_index = json::array();
    for (const auto& [k, truth] : v.per_index)
        per_index.push_back({{"k", k}, {"holds", truth}});
    return {{"outcome", to_string(v.outcome)},
            {"threshold", v.threshold ? json(*v.threshold) : json(nullptr)},
            {"witness_indices", v.witness_indices},
            {"per_index", per_index}};
}

std::string tail_text(const Family& fam)
{
    return fam.tail_guarantee ? to_string(*fam.tail_guarantee) : "none";
}

std::string level_root_check(const TowerLevel& level)
{
    return level.root.pow(from_u64(level.degree_over_base)) == level.embedded_g ? "ok" : "FAILED";
}

}  // namespace

FamilyCheck check_family(const Family& fam, std::uint64_t n)
{
    FamilyCheck out{fam, n, thm24_condition3(fam, n), {}};
    for (const auto& e : fam.entries)
        out.spade.push_back(check_spade(fam, e.k));
    return out;
}

std::string format_report(const BinomialReport& r, OutputMode mode)
{
    if (mode == OutputMode::json) {
        json j;
        j["q"] = to_string(r.q.q());
        j["p"] = to_string(r.q.p());
        j["t"] = r.q.t();
        j["g"] = format_elem(r.g);
        j["n"] = r.n;
        j["order_e"] = to_string(r.order_e);
        j["ln_verdict"] = r.ln_verdict;
        j["karp_verdict"] = r.karp_verdict;
        j["oracle_verdict"] = r.oracle_verdict ? json(*r.oracle_verdict) : json(nullptr);
        j["failed_condition"] = r.failed_condition ? json(to_string(*r.failed_condition)) : json(nullptr);
        return emit(j);
    }
    std::ostringstream out;
    out << (r.ln_verdict ? "irreducible" : "reducible") << "\n";
    out << "  binomial: x^" << r.n << " - " << format_elem(r.g) << " over " << describe_field(*r.g.field()) << "\n";
    out << "  order of g: " << to_string(r.order_e) << "\n";
    out << "  order criterion: " << (r.ln_verdict ? "irreducible" : "reducible") << "\n";
    out << "  power-class criterion: " << (r.karp_verdict ? "irreducible" : "reducible") << "\n";
    if (r.oracle_verdict)
        out << "  rabin oracle: " << (*r.oracle_verdict ? "irreducible" : "reducible") << "\n";
    if (r.failed_condition)
        out << "  failed: " << to_string(*r.failed_condition) << "\n";
    return out.str();
}

std::string format_report(const OrderReport& r, OutputMode mode)
{
    if (mode == OutputMode::json) {
        json j;
        j["field"] = field_json(*r.a.field());
        j["a"] = format_elem(r.a);
        j["order"] = to_string(r.order);
        return emit(j);
    }
    std::string out = to_string(r.order) + "\n";
    if (r.a.field()->degree() > 1)
        out += "modulus: " + format_residues(r.a.field()->modulus()) + "\n";
    return out;
}

std::string format_report(const GeneratorReport& r, OutputMode mode)
{
    if (mode == OutputMode::json) {
        json j;
        j["field"] = field_json(*r.generator.field());
        j["generator"] = format_elem(r.generator);
        return emit(j);
    }
    std::string out = format_elem(r.generator) + "\n";
    if (r.generator.field()->degree() > 1)
        out += "modulus: " + format_residues(r.generator.field()->modulus()) + "\n";
    return out;
}

std::string format_report(const Family& fam, OutputMode mode)
{
    if (mode == OutputMode::json)
        return emit(json::parse(write_family(fam)));
    std::ostringstream out;
    out << to_string(fam.kind) << " family, " << fam.entries.size() << " entries, tail guarantee "
        << tail_text(fam) << "\n";
    for (const auto& e : fam.entries) {
        out << "  k=" << e.k << " q=" << e.q.str();
        if (e.q.t() > 1)
            out << " = " << to_string(e.q.q());
        out << " certified divisors of q-1:";
        for (const auto& d : e.certificates)
            out << " " << to_string(d);
        out << "\n";
    }
    return out.str();
}

std::string format_report(const Verdict& v, OutputMode mode)
{
    if (mode == OutputMode::json)
        return emit(verdict_json(v));
    return describe(v) + "\n";
}

std::string format_report(const FamilyCheck& r, OutputMode mode)
{
    if (mode == OutputMode::json) {
        json entries = json::array();
        for (std::size_t i = 0; i < r.family.entries.size(); ++i) {
            const auto& e = r.family.entries[i];
            entries.push_back({{"k", e.k},
                               {"q", to_string(e.q.q())},
                               {"condition3", r.verdict.per_index[i].second},
                               {"spade", static_cast<bool>(r.spade[i])}});
        }
        json j;
        j["kind"] = to_string(r.family.kind);
        j["n"] = r.n;
        j["tail_guarantee"] = r.family.tail_guarantee ? json(tail_text(r.family)) : json(nullptr);
        j["entries"] = std::move(entries);
        j["verdict"] = verdict_json(r.verdict);
        return emit(j);
    }
    std::ostringstream out;
    out << "condition (3) for n=" << r.n << " over a " << to_string(r.family.kind) << " family (tail guarantee "
        << tail_text(r.family) << ")\n";
    for (std::size_t i = 0; i < r.family.entries.size(); ++i) {
        const auto& e = r.family.entries[i];
        out << "  k=" << e.k << " q=" << e.q.str() << " condition3=" << yes_no(r.verdict.per_index[i].second)
            << " spade=" << yes_no(r.spade[i]) << "\n";
    }
    out << describe(r.verdict) << "\n";
    if (!r.verdict.witness_indices.empty()) {
        out << "exceptional k:";
        for (auto k : r.verdict.witness_indices)
            out << " " << k;
        out << "\n";
    }
    return out.str();
}

std::string format_report(const EquivalenceReport& r, OutputMode mode)
{
    if (mode == OutputMode::json) {
        json rows = json::array();
        for (const auto& row : r.rows)
            rows.push_back({{"k", row.k},
                            {"q", to_string(row.q.q())},
                            {"generator", format_elem(row.generator)},
                            {"condition3", row.condition3},
                            {"exists_g", row.exists_g},
                            {"generator_irreducible", row.generator_irreducible}});
        json j;
        j["n"] = r.n;
        j["rows"] = std::move(rows);
        j["verdict"] = verdict_json(r.verdict);
        return emit(j);
    }
    std::ostringstream out;
    out << "equivalence for n=" << r.n << ": (a) condition 3, (b) some g irreducible, (c) generator irreducible\n";
    for (const auto& row : r.rows)
        out << "  k=" << row.k << " q=" << row.q.str() << " g_k=" << format_elem(row.generator)
            << " a=" << yes_no(row.condition3) << " b=" << yes_no(row.exists_g)
            << " c=" << yes_no(row.generator_irreducible) << "\n";
    out << "all indices agree\n" << describe(r.verdict) << "\n";
    return out.str();
}

std::string format_report(const std::vector<TowerLevel>& levels, OutputMode mode)
{
    if (levels.empty())
        return mode == OutputMode::json ? emit(json::object()) : std::string("\n");
    const TowerLevel& top = levels.back();
    if (mode == OutputMode::json) {
        json rows = json::array();
        for (const auto& level : levels)
            rows.push_back({{"n", level.degree_over_base},
                            {"subfield_q", to_string(pfb::pow(top.base->order(), level.degree_over_base))},
                            {"root", format_elem(level.root)},
                            {"root_power_is_g", level_root_check(level) == "ok"},
                            {"degree_over_base", degree_over_subfield(level.root, top.base->size())}});
        json j;
        j["base"] = field_json(*top.base);
        j["g"] = format_elem(top.g);
        j["ambient"] = field_json(*top.field);
        j["embedded_g"] = format_elem(top.embedded_g);
        j["levels"] = std::move(rows);
        return emit(j);
    }
    std::ostringstream out;
    out << "tower over " << describe_field(*top.base) << " inside " << describe_field(*top.field) << "\n";
    out << "embedded g: " << format_elem(top.embedded_g) << "\n";
    for (const auto& level : levels)
        out << "  n=" << level.degree_over_base << " root=" << format_elem(level.root)
            << " root^n=g:" << level_root_check(level)
            << " degree=" << degree_over_subfield(level.root, top.base->size()) << "\n";
    return out.str();
}

std::string format_report(const ClosureReport& r, OutputMode mode)
{
    if (mode == OutputMode::json) {
        json rows = json::array();
        for (const auto& row : r.rows)
            rows.push_back({{"n", row.n},
                            {"irreducible", row.irreducible},
                            {"root_found", row.root_found},
                            {"generates_unique_subfield", row.generates_unique_subfield},
                            {"root", row.root ? json(format_elem(*row.root)) : json(nullptr)}});
        json j;
        j["base"] = field_json(*r.base);
        j["g"] = format_elem(r.g);
        j["N"] = r.ambient_degree;
        j["ambient"] = field_json(*r.ambient);
        j["rows"] = std::move(rows);
        j["hypothesis_met"] = r.hypothesis_met;
        j["obstructions"] = r.obstructions;
        return emit(j);
    }
    std::ostringstream out;
    out << "closure check over " << describe_field(*r.base) << ", g = " << format_elem(r.g)
        << ", N = " << r.ambient_degree << "\n";
    out << "ambient: " << describe_field(*r.ambient) << "\n";
    for (const auto& row : r.rows) {
        out << "  n=" << row.n << " irreducible=" << yes_no(row.irreducible) << " root="
            << (row.root ? format_elem(*row.root) : std::string("none"))
            << " generates=" << yes_no(row.generates_unique_subfield) << "\n";
    }
    out << "hypothesis_met: " << (r.hypothesis_met ? "true" : "false") << "\n";
    if (!r.obstructions.empty()) {
        out << "obstructions:";
        for (auto n : r.obstructions)
            out << " " << n;
        out << "\n";
    }
    return out.str();
}

}  // namespace pfb
