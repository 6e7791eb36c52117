#include "pfb/cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "pfb/errors.hpp"
#include "pfb/report.hpp"

namespace pfb::cli {

namespace {

struct OptionSpec {
    std::string name;
    std::string help;
    bool is_flag = false;
};

struct SubcommandSpec {
    std::string name;
    std::string help;
    std::vector<OptionSpec> options;
};

const std::vector<SubcommandSpec>& subcommands()
{
    static const std::vector<SubcommandSpec> specs = {
        {"irr",
         "decide irreducibility of x^n - g over F_q",
         {{"q", "field size: prime power or p^t"},
          {"g", "element of F_q"},
          {"n", "binomial degree"},
          {"oracle", "also run the Rabin test", true},
          {"json", "emit JSON", true}}},
        {"order",
         "multiplicative order of a in F_q",
         {{"q", "field size: prime power or p^t"}, {"a", "nonzero element of F_q"}, {"json", "emit JSON", true}}},
        {"gen", "smallest generator of F_q^x", {{"q", "field size: prime power or p^t"}, {"json", "emit JSON", true}}},
        {"family-gen",
         "generate a witness family and write it to a file",
         {{"kind", "paper or dirichlet"},
          {"count", "number of entries K"},
          {"out", "output path"},
          {"json", "emit JSON", true}}},
        {"family-check",
         "decide condition (3) for U-almost all k over a family file",
         {{"file", "family file"}, {"n", "binomial degree"}, {"json", "emit JSON", true}}},
        {"equiv",
         "per-index equivalence of the three irreducibility conditions",
         {{"file", "family file"}, {"n", "binomial degree"}, {"json", "emit JSON", true}}},
        {"tower",
         "radical tower of roots of x^n - g for a divisibility chain of degrees",
         {{"q", "field size: prime power or p^t"},
          {"g", "element of F_q"},
          {"degrees", "comma-separated chain n1,n2,..."},
          {"json", "emit JSON", true}}},
        {"closure",
         "check that roots of x^n - g generate every subfield of F_{q^N}",
         {{"q", "field size: prime power or p^t"},
          {"g", "element of F_q"},
          {"N", "ambient degree"},
          {"json", "emit JSON", true}}},
    };
    return specs;
}

const SubcommandSpec& spec_for(const std::string& name)
{
    for (const auto& s : subcommands())
        if (s.name == name)
            return s;
    throw UsageError{"unknown subcommand '" + name + "'", ""};
}

std::unique_ptr<CLI::App> make_app()
{
    auto app = std::make_unique<CLI::App>("Irreducible binomials over finite fields and ultraproduct families", "pfb");
    app->require_subcommand(1);
    for (const auto& spec : subcommands()) {
        CLI::App* sub = app->add_subcommand(spec.name, spec.help);
        for (const auto& opt : spec.options) {
            if (opt.is_flag)
                sub->add_flag("--" + opt.name, opt.help);
            else
                sub->add_option("--" + opt.name, opt.help)->required()->type_name("VALUE");
        }
    }
    return app;
}

// Converts argument-value errors into usage errors (status 1).
template <typename F>
auto parse_value(const std::string& what, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const InvalidArgument& e) {
        throw UsageError{"invalid --" + what + ": " + e.what(), ""};
    }
}

std::uint64_t parse_u64(const std::string& what, const std::string& text)
{
    return parse_value(what, [&] { return to_u64(parse_natural(text)); });
}

std::vector<std::uint64_t> parse_list(const std::string& what, const std::string& text)
{
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_u64(what, item));
    if (out.empty())
        throw UsageError{"invalid --" + what + ": empty list", ""};
    return out;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError{"cannot read family file '" + path + "'", ""};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

FieldPtr parse_field(const Command& cmd)
{
    return parse_value("q", [&] { return build_field(PrimePower::parse(cmd.options.at("q"))); });
}

FieldElem parse_element(const Command& cmd, const std::string& name, const FieldPtr& field)
{
    return parse_value(name, [&] { return parse_elem(field, cmd.options.at(name)); });
}

std::string dispatch(const Command& cmd)
{
    const OutputMode mode = cmd.flag("json") ? OutputMode::json : OutputMode::text;
    const auto& o = cmd.options;
    const std::string& sub = cmd.subcommand;

    if (sub == "irr") {
        const FieldPtr F = parse_field(cmd);
        const FieldElem g = parse_element(cmd, "g", F);
        const std::uint64_t n = parse_u64("n", o.at("n"));
        return format_report(analyze_binomial(g, n, cmd.flag("oracle")), mode);
    }
    if (sub == "order") {
        const FieldPtr F = parse_field(cmd);
        const FieldElem a = parse_element(cmd, "a", F);
        return format_report(OrderReport{a, mult_order(a)}, mode);
    }
    if (sub == "gen") {
        const FieldPtr F = parse_field(cmd);
        return format_report(GeneratorReport{find_generator(F)}, mode);
    }
    if (sub == "family-gen") {
        const std::string& kind = o.at("kind");
        if (kind != "paper" && kind != "dirichlet")
            throw UsageError{"invalid --kind: expected paper or dirichlet", ""};
        const std::uint64_t count = parse_u64("count", o.at("count"));
        const Family fam = kind == "paper" ? gen_paper_family(count) : gen_dirichlet_family(count);
        std::ofstream out(o.at("out"), std::ios::binary);
        out << write_family(fam);
        out.close();
        if (!out)
            throw Error("cannot write family file '" + o.at("out") + "'");
        if (mode == OutputMode::json)
            return format_report(fam, mode);
        return "wrote " + std::to_string(fam.entries.size()) + " entries to " + o.at("out") + "\n" +
               format_report(fam, mode);
    }
    if (sub == "family-check" || sub == "equiv") {
        const std::string text = read_file(o.at("file"));
        const Family fam = parse_value("file", [&] { return read_family(text); });
        const std::uint64_t n = parse_u64("n", o.at("n"));
        if (sub == "family-check")
            return format_report(check_family(fam, n), mode);
        return format_report(thm24_equivalence_report(fam, n), mode);
    }
    if (sub == "tower") {
        const FieldPtr F = parse_field(cmd);
        const FieldElem g = parse_element(cmd, "g", F);
        const auto degrees = parse_list("degrees", o.at("degrees"));
        return format_report(build_tower(g, degrees), mode);
    }
    if (sub == "closure") {
        const FieldPtr F = parse_field(cmd);
        const FieldElem g = parse_element(cmd, "g", F);
        const std::uint64_t N = parse_u64("N", o.at("N"));
        return format_report(closure_check(g, N), mode);
    }
    throw UsageError{"unknown subcommand '" + sub + "'", ""};
}

}  // namespace

std::string Command::canonical() const
{
    std::string out = subcommand;
    for (const auto& opt : spec_for(subcommand).options) {
        auto it = options.find(opt.name);
        if (it == options.end())
            continue;
        out += " --" + opt.name;
        if (!opt.is_flag)
            out += " " + it->second;
    }
    return out;
}

Command parse_command(const std::vector<std::string>& args)
{
    auto app = make_app();
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app->parse(reversed);
    } catch (const CLI::ParseError& e) {
        throw UsageError{e.what(), app->help()};
    }
    CLI::App* sub = app->get_subcommands().front();
    Command cmd;
    cmd.subcommand = sub->get_name();
    for (const auto& opt : spec_for(cmd.subcommand).options) {
        const CLI::Option* o = sub->get_option("--" + opt.name);
        if (o->count() == 0)
            continue;
        cmd.options[opt.name] = opt.is_flag ? std::string() : o->as<std::string>();
    }
    return cmd;
}

RunResult run(const std::vector<std::string>& args)
{
    RunResult result;
    for (const auto& a : args) {
        if (a == "--help" || a == "-h") {
            auto app = make_app();
            result.out = app->help();
            return result;
        }
    }
    try {
        const Command cmd = parse_command(args);
        result.out = dispatch(cmd);
    } catch (const UsageError& e) {
        result.status = kUsageError;
        result.err = "error: " + e.message + "\n" + (e.usage.empty() ? "run 'pfb --help' for usage\n" : e.usage);
    } catch (const ConsistencyError& e) {
        result.status = kConsistencyViolation;
        result.err = std::string("internal consistency violation: ") + e.what() + "\n";
    } catch (const std::exception& e) {
        result.status = kComputationError;
        result.err = std::string("error: ") + e.what() + "\n";
    }
    return result;
}

}  // namespace pfb::cli
