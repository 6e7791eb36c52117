#include "pfb/tower.hpp"

#include <algorithm>
#include <future>

#include "pfb/binomial.hpp"
#include "pfb/errors.hpp"

namespace pfb {

namespace {

FieldPtr ambient_field(const FieldCtx& base, std::uint64_t n)
{
    const std::uint64_t total = static_cast<std::uint64_t>(base.degree()) * n;
    if (n == 0 || total > kMaxAmbientDegree)
        throw DeskScaleExceeded("ambient degree " + std::to_string(total) + " over F_" +
                                std::to_string(base.characteristic()) + " exceeds " +
                                std::to_string(kMaxAmbientDegree));
    return build_field(base.size().p(), static_cast<unsigned>(total));
}

// Smallest root of the base modulus in `ambient`; its powers give the
// embedded polynomial basis.
FieldElem embedded_generator(const FieldCtx& base, const FieldPtr& ambient)
{
    const auto roots = poly_roots(Poly::from_residues(ambient, base.modulus()));
    if (roots.empty())
        throw ConsistencyError("base modulus has no root in F_" + ambient->size().str());
    return roots.front();
}

FieldElem embed_with(const FieldElem& a, const FieldElem& theta)
{
    const FieldPtr& ambient = theta.field();
    FieldElem acc = FieldElem::zero(ambient);
    const auto& c = a.coeffs();
    for (std::size_t i = c.size(); i-- > 0;)
        acc = acc * theta + FieldElem::residue(ambient, c[i]);
    return acc;
}

void require_irreducible(const FieldElem& g, std::uint64_t n)
{
    if (!irreducible_ln(g, n).irreducible)
        throw NotIrreducible("x^" + std::to_string(n) + " - " + format_elem(g) + " is reducible over F_" +
                             g.field()->size().str());
}

TowerLevel make_level(const FieldElem& g, std::uint64_t n, const FieldPtr& field, const FieldElem& embedded_g,
                      FieldElem root)
{
    return TowerLevel{n, g.field(), g, field, embedded_g, std::move(root), Poly::binomial(n, g)};
}

}  // namespace

FieldElem embed(const FieldElem& a, const FieldPtr& ambient)
{
    const FieldCtx& base = *a.field();
    if (base.size().p() != ambient->size().p() || ambient->degree() % base.degree() != 0)
        throw InvalidArgument("F_" + base.size().str() + " does not embed in F_" + ambient->size().str());
    return embed_with(a, embedded_generator(base, ambient));
}

TowerLevel extend_by_binomial(const FieldElem& g, std::uint64_t n)
{
    if (g.is_zero())
        throw InvalidArgument("g must be nonzero");
    require_irreducible(g, n);
    const FieldPtr ambient = ambient_field(*g.field(), n);
    const FieldElem image = embed(g, ambient);
    const auto roots = poly_roots(Poly::binomial(n, image));
    if (roots.empty())
        throw ConsistencyError("irreducible x^n - g has no root in the degree-n extension");
    return make_level(g, n, ambient, image, roots.front());
}

std::vector<TowerLevel> build_tower(const FieldElem& g, const std::vector<std::uint64_t>& degrees)
{
    if (degrees.empty())
        throw InvalidArgument("tower needs at least one degree");
    if (g.is_zero())
        throw InvalidArgument("g must be nonzero");
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (degrees[i] == 0)
            throw InvalidArgument("tower degrees must be positive");
        if (i > 0 && (degrees[i] <= degrees[i - 1] || degrees[i] % degrees[i - 1] != 0))
            throw InvalidArgument("tower degrees must form a divisibility chain: " +
                                  std::to_string(degrees[i - 1]) + " does not properly divide " +
                                  std::to_string(degrees[i]));
    }
    for (auto n : degrees)
        require_irreducible(g, n);

    const std::uint64_t top = degrees.back();
    const FieldPtr ambient = ambient_field(*g.field(), top);
    const FieldElem image = embed(g, ambient);
    const auto roots = poly_roots(Poly::binomial(top, image));
    if (roots.empty())
        throw ConsistencyError("irreducible x^n - g has no root in the degree-n extension");
    const FieldElem& top_root = roots.front();

    std::vector<TowerLevel> levels;
    for (auto n : degrees)
        levels.push_back(make_level(g, n, ambient, image, top_root.pow(from_u64(top / n))));
    return levels;
}

ClosureReport closure_check(const FieldElem& g, std::uint64_t N)
{
    if (g.is_zero())
        throw InvalidArgument("g must be nonzero");
    const FieldPtr& base = g.field();
    const FieldPtr ambient = ambient_field(*base, N);
    const FieldElem image = embed(g, ambient);
    const auto ns = divisors(N);

    std::vector<std::future<ClosureRow>> pending;
    for (auto n : ns) {
        pending.push_back(std::async(std::launch::async, [&, n] {
            ClosureRow row;
            row.n = n;
            row.irreducible = irreducible_ln(g, n).irreducible;
            const auto roots = poly_roots(Poly::binomial(n, image));
            if (!roots.empty()) {
                row.root_found = true;
                row.root = roots.front();
                row.generates_unique_subfield = degree_over_subfield(roots.front(), base->size()) == n;
            }
            return row;
        }));
    }

    ClosureReport report{base, g, N, ambient, {}, true, {}};
    for (auto& f : pending)
        report.rows.push_back(f.get());
    for (const auto& row : report.rows) {
        if (row.irreducible)
            continue;
        report.hypothesis_met = false;
        const bool minimal = std::none_of(report.obstructions.begin(), report.obstructions.end(),
                                          [&](std::uint64_t d) { return row.n % d == 0; });
        if (minimal)
            report.obstructions.push_back(row.n);
    }
    verify_closure_report(report);
    return report;
}

void verify_closure_report(const ClosureReport& report)
{
    const bool all_irreducible =
        std::all_of(report.rows.begin(), report.rows.end(), [](const ClosureRow& r) { return r.irreducible; });
    if (report.hypothesis_met != all_irreducible)
        throw ConsistencyError("hypothesis_met does not match the per-divisor rows");
    for (const auto& row : report.rows) {
        // An irreducible x^n - g with n | N always splits in F_{q^N}, and each
        // of its roots has degree exactly n.
        if (row.irreducible && !(row.root_found && row.generates_unique_subfield))
            throw ConsistencyError("irreducible row n=" + std::to_string(row.n) +
                                   " lacks a root generating the subfield of size q^n");
    }
}

}  // namespace pfb
