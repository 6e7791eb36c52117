#include "pfb/poly.hpp"

#include <algorithm>
#include <random>

#include "pfb/errors.hpp"

namespace pfb {

namespace {

constexpr std::uint64_t kSplitSeed = 0x5EED5EED2021ULL;

void require_same_field(const Poly& a, const Poly& b)
{
    if (!(a.field()->size() == b.field()->size()))
        throw InvalidArgument("polynomials over different fields");
}

Poly x_power_q_minus_x(const Poly& modulus, const Natural& q)
{
    return powmod(Poly::x(modulus.field()), q, modulus) - Poly::x(modulus.field());
}

Coeffs random_element(const FieldCtx& f, std::mt19937_64& rng)
{
    Coeffs c(f.degree());
    for (auto& r : c)
        r = rng() % f.characteristic();
    return c;
}

// f squarefree, monic, product of distinct linear factors.
void split_linear(const Poly& f, std::mt19937_64& rng, std::vector<FieldElem>& out)
{
    const FieldPtr& field = f.field();
    if (f.degree() <= 0)
        return;
    if (f.degree() == 1) {
        out.push_back(-f.coeff(0));
        return;
    }
    const FieldCtx& F = *field;
    const bool char2 = F.characteristic() == 2;
    const Natural half = (F.order() - 1) / 2;
    for (;;) {
        Poly h(field);
        if (char2) {
            // Tr(a x) = sum_{i<m} (a x)^{2^i}; roots split by trace value.
            Poly ax = rem(Poly(field, {F.zero(), random_element(F, rng)}), f);
            Poly term = ax;
            h = ax;
            const unsigned m = F.degree();
            for (unsigned i = 1; i < m; ++i) {
                term = mulmod(term, term, f);
                h = h + term;
            }
        } else {
            Poly shifted(field, {random_element(F, rng), F.one()});
            h = powmod(shifted, half, f) - Poly::constant(FieldElem::one(field));
        }
        Poly d = gcd(f, h);
        if (d.degree() > 0 && d.degree() < f.degree()) {
            split_linear(d, rng, out);
            split_linear(divmod(f, d).first, rng, out);
            return;
        }
    }
}

}  // namespace

Poly::Poly(FieldPtr field) : field_(std::move(field))
{
    if (!field_)
        throw InvalidArgument("polynomial without a field");
}

Poly::Poly(FieldPtr field, std::vector<Coeffs> coeffs) : field_(std::move(field)), c_(std::move(coeffs))
{
    if (!field_)
        throw InvalidArgument("polynomial without a field");
    for (const auto& c : c_)
        if (c.size() != field_->degree())
            throw InvalidArgument("polynomial coefficient of wrong width");
    trim();
}

void Poly::trim()
{
    while (!c_.empty() && field_->is_zero(c_.back()))
        c_.pop_back();
}

Poly Poly::constant(const FieldElem& c) { return Poly(c.field(), {c.coeffs()}); }

Poly Poly::x(const FieldPtr& field) { return Poly(field, {field->zero(), field->one()}); }

Poly Poly::binomial(std::uint64_t n, const FieldElem& g)
{
    const FieldPtr& field = g.field();
    std::vector<Coeffs> c(n + 1, field->zero());
    c[n] = field->one();
    c[0] = field->sub(c[0], g.coeffs());
    return Poly(field, std::move(c));
}

Poly Poly::from_residues(const FieldPtr& field, const std::vector<std::uint64_t>& residues)
{
    std::vector<Coeffs> c;
    c.reserve(residues.size());
    for (auto r : residues)
        c.push_back(field->from_residue(r));
    return Poly(field, std::move(c));
}

bool Poly::is_monic() const { return !c_.empty() && field_->is_one(c_.back()); }

FieldElem Poly::coeff(std::size_t i) const
{
    return i < c_.size() ? FieldElem(field_, c_[i]) : FieldElem::zero(field_);
}

FieldElem Poly::leading() const
{
    if (c_.empty())
        throw InvalidArgument("zero polynomial has no leading coefficient");
    return {field_, c_.back()};
}

FieldElem Poly::eval(const FieldElem& at) const
{
    Coeffs acc = field_->zero();
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = field_->add(field_->mul(acc, at.coeffs()), c_[i]);
    return {field_, acc};
}

Poly operator+(const Poly& a, const Poly& b)
{
    require_same_field(a, b);
    const FieldCtx& F = *a.field_;
    std::vector<Coeffs> c(std::max(a.c_.size(), b.c_.size()), F.zero());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size())
            c[i] = F.add(c[i], a.c_[i]);
        if (i < b.c_.size())
            c[i] = F.add(c[i], b.c_[i]);
    }
    return Poly(a.field_, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b)
{
    require_same_field(a, b);
    const FieldCtx& F = *a.field_;
    std::vector<Coeffs> c(std::max(a.c_.size(), b.c_.size()), F.zero());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size())
            c[i] = F.add(c[i], a.c_[i]);
        if (i < b.c_.size())
            c[i] = F.sub(c[i], b.c_[i]);
    }
    return Poly(a.field_, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b)
{
    require_same_field(a, b);
    if (a.is_zero() || b.is_zero())
        return Poly(a.field_);
    const FieldCtx& F = *a.field_;
    std::vector<Coeffs> c(a.c_.size() + b.c_.size() - 1, F.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (F.is_zero(a.c_[i]))
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] = F.add(c[i + j], F.mul(a.c_[i], b.c_[j]));
    }
    return Poly(a.field_, std::move(c));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b)
{
    require_same_field(a, b);
    if (b.is_zero())
        throw InvalidArgument("polynomial division by zero");
    const FieldCtx& F = *a.field();
    const auto& bc = b.raw();
    const std::size_t nb = bc.size();
    std::vector<Coeffs> r = a.raw();
    if (r.size() < nb)
        return {Poly(a.field()), a};

    const bool monic = F.is_one(bc.back());
    const Coeffs lead_inv = monic ? F.one() : F.inv(bc.back());
    std::vector<Coeffs> quot(r.size() - nb + 1, F.zero());
    for (std::size_t i = r.size(); i-- >= nb;) {
        if (F.is_zero(r[i]))
            continue;
        const Coeffs c = monic ? r[i] : F.mul(r[i], lead_inv);
        quot[i - nb + 1] = c;
        for (std::size_t j = 0; j < nb; ++j)
            r[i - nb + 1 + j] = F.sub(r[i - nb + 1 + j], F.mul(c, bc[j]));
    }
    r.resize(nb - 1);
    return {Poly(a.field(), std::move(quot)), Poly(a.field(), std::move(r))};
}

Poly rem(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly make_monic(const Poly& a)
{
    if (a.is_zero() || a.is_monic())
        return a;
    const FieldCtx& F = *a.field();
    const Coeffs inv = F.inv(a.raw().back());
    std::vector<Coeffs> c;
    c.reserve(a.raw().size());
    for (const auto& x : a.raw())
        c.push_back(F.mul(x, inv));
    return Poly(a.field(), std::move(c));
}

Poly gcd(const Poly& a, const Poly& b)
{
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = rem(x, y);
        x = std::move(y);
        y = make_monic(r);
    }
    return make_monic(x);
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus) { return rem(a * b, modulus); }

Poly powmod(const Poly& base, const Natural& e, const Poly& modulus)
{
    if (sgn(e) < 0)
        throw InvalidArgument("negative exponent");
    Poly r = rem(Poly::constant(FieldElem::one(base.field())), modulus);
    if (e == 0)
        return r;
    const Poly b = rem(base, modulus);
    for (std::size_t i = mpz_sizeinbase(e.get_mpz_t(), 2); i-- > 0;) {
        r = mulmod(r, r, modulus);
        if (mpz_tstbit(e.get_mpz_t(), i))
            r = mulmod(r, b, modulus);
    }
    return r;
}

bool rabin_irreducible(const Poly& f)
{
    if (f.is_zero() || !f.is_monic())
        throw InvalidArgument("rabin_irreducible: polynomial must be monic and nonzero");
    const auto n = static_cast<std::uint64_t>(f.degree());
    if (n == 0)
        throw InvalidArgument("rabin_irreducible: degree must be at least 1");
    if (n == 1)
        return true;

    const FieldPtr& field = f.field();
    const Natural& q = field->order();
    const Poly x = Poly::x(field);

    // frob[m] = x^{q^m} mod f, built by repeated q-th powering.
    std::vector<Poly> frob{rem(x, f)};
    frob.reserve(n + 1);
    for (std::uint64_t m = 1; m <= n; ++m)
        frob.push_back(powmod(frob.back(), q, f));

    if (!(rem(frob[n] - x, f)).is_zero())
        return false;
    for (const auto& r : factor(from_u64(n)).primes()) {
        const std::uint64_t m = n / to_u64(r);
        if (gcd(f, frob[m] - x).degree() != 0)
            return false;
    }
    return true;
}

std::vector<FieldElem> poly_roots(const Poly& f)
{
    if (f.is_zero())
        throw InvalidArgument("poly_roots: zero polynomial");
    if (f.degree() == 0)
        return {};
    const Poly monic = make_monic(f);
    Poly linear = gcd(monic, x_power_q_minus_x(monic, monic.field()->order()));

    std::vector<FieldElem> roots;
    std::mt19937_64 rng(kSplitSeed);
    split_linear(linear, rng, roots);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::string format_poly(const Poly& f)
{
    std::string out;
    const bool wrap = f.field()->degree() > 1;
    for (std::size_t i = 0; i < f.raw().size(); ++i) {
        if (i)
            out += ',';
        out += wrap ? "[" + format_residues(f.raw()[i]) + "]" : format_residues(f.raw()[i]);
    }
    return out.empty() ? "0" : out;
}

}  // namespace pfb
