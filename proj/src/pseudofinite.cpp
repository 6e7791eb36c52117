#include "pfb/pseudofinite.hpp"

#include <algorithm>

#include "json.hpp"
#include "pfb/binomial.hpp"
#include "pfb/errors.hpp"

namespace pfb {

namespace {

using json = nlohmann::ordered_json;

constexpr std::size_t kPaperFamilyLimit = 4;
constexpr std::uint64_t kDirichletCandidateLimit = 1'000'000'000;

bool divides(const Natural& d, const Natural& n) { return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0; }

// 4 followed by p_1, ..., p_k: the moduli named in the spade condition.
std::vector<Natural> spade_divisors(std::size_t k)
{
    std::vector<Natural> out{Natural(4)};
    for (auto p : first_primes(k))
        out.push_back(from_u64(p));
    return out;
}

std::vector<Natural> verified_certificates(const PrimePower& q, std::size_t k)
{
    const Natural q_minus_1 = q.q() - 1;
    std::vector<Natural> out;
    for (const auto& d : spade_divisors(k))
        if (divides(d, q_minus_1))
            out.push_back(d);
    return out;
}

Natural paper_exponent(std::size_t k)
{
    Natural e = 1;
    for (auto p : first_primes(k))
        e *= from_u64(p - 1);
    return e;
}

Natural dirichlet_modulus(std::size_t k)
{
    Natural m = 4;
    for (auto p : first_primes(k))
        if (p != 2)
            m *= from_u64(p);
    return m;
}

// First index from which the tail schema certifies condition (3) for n.
std::optional<std::size_t> guaranteed_from(TailGuarantee tail, std::uint64_t n)
{
    const auto primes = factor(from_u64(n)).primes();
    const bool odd_prime = std::any_of(primes.begin(), primes.end(), [](const Natural& r) { return r != 2; });
    std::size_t from = 1;
    switch (tail) {
    case TailGuarantee::fermat_little_theorem:
    case TailGuarantee::dirichlet_search:
        for (const auto& r : primes)
            from = std::max(from, prime_index(r));
        if (tail == TailGuarantee::fermat_little_theorem && n % 4 == 0)
            from = std::max<std::size_t>(from, 2);
        return from;
    case TailGuarantee::even_exponent:
        if (odd_prime)
            return std::nullopt;
        return n == 1 ? 1 : 2;
    }
    return std::nullopt;
}

bool contiguous_from_one(const Family& fam)
{
    for (std::size_t i = 0; i < fam.entries.size(); ++i)
        if (fam.entries[i].k != i + 1)
            return false;
    return true;
}

FamilyKind parse_kind(const std::string& s)
{
    if (s == "explicit")
        return FamilyKind::explicit_list;
    if (s == "paper-example")
        return FamilyKind::paper_example;
    if (s == "dirichlet")
        return FamilyKind::dirichlet;
    throw InvalidArgument("unknown family kind '" + s + "'");
}

TailGuarantee parse_tail(const std::string& s)
{
    if (s == "fermat-little-theorem")
        return TailGuarantee::fermat_little_theorem;
    if (s == "dirichlet-search")
        return TailGuarantee::dirichlet_search;
    if (s == "even-exponent")
        return TailGuarantee::even_exponent;
    throw InvalidArgument("unknown tail guarantee '" + s + "'");
}

}  // namespace

std::string to_string(FamilyKind kind)
{
    switch (kind) {
    case FamilyKind::explicit_list:
        return "explicit";
    case FamilyKind::paper_example:
        return "paper-example";
    case FamilyKind::dirichlet:
        return "dirichlet";
    }
    return "unknown";
}

std::string to_string(TailGuarantee tail)
{
    switch (tail) {
    case TailGuarantee::fermat_little_theorem:
        return "fermat-little-theorem";
    case TailGuarantee::dirichlet_search:
        return "dirichlet-search";
    case TailGuarantee::even_exponent:
        return "even-exponent";
    }
    return "unknown";
}

std::string to_string(Outcome outcome)
{
    switch (outcome) {
    case Outcome::holds:
        return "holds";
    case Outcome::fails:
        return "fails";
    case Outcome::mixed:
        return "mixed";
    case Outcome::unknown_tail:
        return "unknown-tail";
    }
    return "unknown";
}

std::string describe(const Verdict& v)
{
    const std::string from = v.threshold ? " (from k=" + std::to_string(*v.threshold) + ")" : "";
    switch (v.outcome) {
    case Outcome::holds:
        return "holds for U-almost all k" + from;
    case Outcome::fails:
        return "fails for U-almost all k" + from;
    case Outcome::mixed:
        return "mixed: both values recur, the verdict depends on U";
    case Outcome::unknown_tail:
        return "unknown tail: finite evidence only, the verdict depends on U";
    }
    return "unknown";
}

const FamilyEntry& Family::entry(std::size_t k) const
{
    for (const auto& e : entries)
        if (e.k == k)
            return e;
    throw InvalidArgument("family has no entry with index k=" + std::to_string(k));
}

void Family::validate() const
{
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& e = entries[i];
        if (e.k == 0)
            throw InvalidArgument("family indices are 1-based");
        if (i > 0 && entries[i - 1].k >= e.k)
            throw InvalidArgument("family indices must be strictly increasing");
        if (i > 0 && entries[i - 1].q.q() >= e.q.q())
            throw InvalidArgument("family sizes q_k must be strictly increasing");
        const Natural q_minus_1 = e.q.q() - 1;
        for (const auto& d : e.certificates)
            if (sgn(d) <= 0 || !divides(d, q_minus_1))
                throw InvalidArgument("certificate " + to_string(d) + " does not divide q_" + std::to_string(e.k) +
                                      " - 1");
    }

    if (tail_guarantee) {
        const bool admissible =
            (kind == FamilyKind::paper_example && (*tail_guarantee == TailGuarantee::fermat_little_theorem ||
                                                    *tail_guarantee == TailGuarantee::even_exponent)) ||
            (kind == FamilyKind::dirichlet && *tail_guarantee == TailGuarantee::dirichlet_search);
        if (!admissible)
            throw InvalidArgument("tail guarantee " + to_string(*tail_guarantee) + " not admissible for a " +
                                  to_string(kind) + " family");
    }
    if (kind != FamilyKind::explicit_list && !contiguous_from_one(*this))
        throw InvalidArgument("generated families are indexed 1, 2, ..., K");
    for (const auto& e : entries) {
        if (kind == FamilyKind::paper_example) {
            const auto primes = first_primes(e.k + 1);
            const Natural exponent = paper_exponent(e.k);
            if (e.q.p() != from_u64(primes.back()) || Natural(e.q.t()) != exponent)
                throw InvalidArgument("entry k=" + std::to_string(e.k) + " is not p_{k+1}^{(p_1-1)...(p_k-1)}");
        } else if (kind == FamilyKind::dirichlet) {
            if (e.q.t() != 1 || !divides(dirichlet_modulus(e.k), e.q.q() - 1))
                throw InvalidArgument("entry k=" + std::to_string(e.k) + " is not a prime = 1 mod lcm(4, p_1..p_k)");
        }
    }

    if (!generator_choice.empty()) {
        if (generator_choice.size() != entries.size())
            throw InvalidArgument("generator choice does not cover every entry");
        for (std::size_t i = 0; i < entries.size(); ++i)
            if (!(generator_choice[i].field()->size() == entries[i].q) || !is_generator(generator_choice[i]))
                throw InvalidArgument("generator choice at k=" + std::to_string(entries[i].k) +
                                      " does not generate F_q^x");
    }
}

bool condition3(const PrimePower& q, std::uint64_t n)
{
    if (n == 0)
        throw InvalidArgument("n must be at least 1");
    const Natural q_minus_1 = q.q() - 1;
    for (const auto& r : factor(from_u64(n)).primes())
        if (!divides(r, q_minus_1))
            return false;
    return n % 4 != 0 || divides(4, q_minus_1);
}

bool check_spade(const Family& fam, std::size_t k)
{
    const Natural q_minus_1 = fam.entry(k).q.q() - 1;
    const auto ds = spade_divisors(k);
    return std::all_of(ds.begin(), ds.end(), [&](const Natural& d) { return divides(d, q_minus_1); });
}

Verdict thm24_condition3(const Family& fam, std::uint64_t n)
{
    if (fam.entries.empty())
        throw InvalidArgument("family is empty");
    Verdict v;
    for (const auto& e : fam.entries)
        v.per_index.emplace_back(e.k, condition3(e.q, n));

    const auto from = fam.tail_guarantee ? guaranteed_from(*fam.tail_guarantee, n) : std::nullopt;
    if (!from)
        return v;  // unknown-tail

    // Every schema certifies truth, so the decided outcome is "holds".
    constexpr bool tail_value = true;
    for (const auto& [k, truth] : v.per_index)
        if (k >= *from && truth != tail_value)
            throw ConsistencyError("tail guarantee " + to_string(*fam.tail_guarantee) + " violated at k=" +
                                   std::to_string(k));

    // Generated families are contiguous from 1, so per_index[k-1] is entry k.
    const std::size_t last = v.per_index.back().first;
    std::size_t threshold = *from;
    if (threshold <= last + 1) {
        threshold = std::min(threshold, last + 1);
        while (threshold > 1 && v.per_index[threshold - 2].second == tail_value)
            --threshold;
    }
    v.outcome = tail_value ? Outcome::holds : Outcome::fails;
    v.threshold = threshold;
    for (const auto& [k, truth] : v.per_index)
        if (truth != tail_value)
            v.witness_indices.push_back(k);
    return v;
}

bool exists_irreducible_binomial(const PrimePower& q, std::uint64_t n) { return diamond(q.q(), n); }

EquivalenceReport thm24_equivalence_report(const Family& fam, std::uint64_t n)
{
    if (fam.entries.empty())
        throw InvalidArgument("family is empty");
    Family with_generators = fam;
    if (with_generators.generator_choice.empty())
        attach_generators(with_generators);

    EquivalenceReport report{n, {}, thm24_condition3(fam, n)};
    for (std::size_t i = 0; i < fam.entries.size(); ++i) {
        const auto& e = fam.entries[i];
        const FieldElem& g = with_generators.generator_choice[i];
        EquivalenceRow row{e.k, e.q, g, condition3(e.q, n), exists_irreducible_binomial(e.q, n),
                           irreducible_ln(g, n).irreducible};
        if (row.condition3 != row.exists_g || row.exists_g != row.generator_irreducible)
            throw ConsistencyError("equivalent conditions disagree at k=" + std::to_string(e.k) + " (q=" +
                                   e.q.str() + ", n=" + std::to_string(n) + ")");
        report.rows.push_back(std::move(row));
    }
    return report;
}

void attach_generators(Family& fam)
{
    fam.generator_choice.clear();
    for (const auto& e : fam.entries)
        fam.generator_choice.push_back(find_generator(build_field(e.q)));
}

Family gen_paper_family(std::size_t K)
{
    if (K == 0)
        throw InvalidArgument("K must be positive");
    if (K > kPaperFamilyLimit)
        throw DeskScaleExceeded("paper-example family is capped at K=4 (q_5 = 13^480 has 535 digits)");
    Family fam;
    fam.kind = FamilyKind::paper_example;
    fam.tail_guarantee = TailGuarantee::fermat_little_theorem;
    const auto primes = first_primes(K + 1);
    for (std::size_t k = 1; k <= K; ++k) {
        const Natural exponent = paper_exponent(k);
        PrimePower q(from_u64(primes[k]), static_cast<unsigned>(exponent.get_ui()));
        auto certs = verified_certificates(q, k);
        fam.entries.push_back({k, std::move(q), std::move(certs)});
    }
    fam.validate();
    return fam;
}

Family gen_dirichlet_family(std::size_t K)
{
    if (K == 0)
        throw InvalidArgument("K must be positive");
    Family fam;
    fam.kind = FamilyKind::dirichlet;
    fam.tail_guarantee = TailGuarantee::dirichlet_search;
    Natural previous = 1;
    for (std::size_t k = 1; k <= K; ++k) {
        const Natural modulus = dirichlet_modulus(k);
        Natural candidate = modulus + 1;
        if (candidate <= previous)
            candidate += ((previous - candidate) / modulus + 1) * modulus;
        std::uint64_t tried = 0;
        while (!is_prime(candidate)) {
            if (++tried >= kDirichletCandidateLimit)
                throw DeskScaleExceeded("no prime = 1 mod " + to_string(modulus) + " within 10^9 candidates");
            candidate += modulus;
        }
        PrimePower q(candidate, 1);
        auto certs = verified_certificates(q, k);
        fam.entries.push_back({k, std::move(q), std::move(certs)});
        previous = candidate;
    }
    fam.validate();
    return fam;
}

Family explicit_family(const std::vector<PrimePower>& sizes)
{
    Family fam;
    for (std::size_t i = 0; i < sizes.size(); ++i)
        fam.entries.push_back({i + 1, sizes[i], {}});
    fam.validate();
    return fam;
}

std::string write_family(const Family& fam)
{
    json entries = json::array();
    for (const auto& e : fam.entries) {
        json certs = json::array();
        for (const auto& d : e.certificates)
            certs.push_back(to_string(d));
        entries.push_back({{"k", e.k}, {"p", to_string(e.q.p())}, {"t", e.q.t()}, {"certificates", certs}});
    }
    json doc;
    doc["kind"] = to_string(fam.kind);
    doc["entries"] = std::move(entries);
    doc["tail_guarantee"] = fam.tail_guarantee ? json(to_string(*fam.tail_guarantee)) : json(nullptr);
    return doc.dump(2) + "\n";
}

Family read_family(std::string_view json_text)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("family file is not valid JSON: ") + e.what());
    }
    try {
        Family fam;
        fam.kind = parse_kind(doc.at("kind").get<std::string>());
        for (const auto& e : doc.at("entries")) {
            FamilyEntry entry{e.at("k").get<std::size_t>(),
                              PrimePower(parse_natural(e.at("p").get<std::string>()), e.at("t").get<unsigned>()),
                              {}};
            for (const auto& d : e.at("certificates"))
                entry.certificates.push_back(parse_natural(d.get<std::string>()));
            fam.entries.push_back(std::move(entry));
        }
        const auto& tail = doc.at("tail_guarantee");
        if (!tail.is_null())
            fam.tail_guarantee = parse_tail(tail.get<std::string>());
        if (fam.entries.empty())
            throw InvalidArgument("family file has no entries");
        fam.validate();
        return fam;
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("malformed family file: ") + e.what());
    }
}

}  // namespace pfb
