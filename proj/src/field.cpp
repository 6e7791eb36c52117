#include "pfb/field.hpp"

#include <algorithm>
#include <charconv>
#include <tuple>

#include "pfb/errors.hpp"

namespace pfb {

namespace {

using u128 = unsigned __int128;

// Minimal F_p[x] arithmetic on trimmed little-endian residue vectors, used
// only to find the canonical modulus before a FieldCtx exists.
namespace zp {

using Poly = std::vector<std::uint64_t>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= b ? a - b : a + (p - b); }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

// a mod f, f monic.
void reduce(Poly& a, const Poly& f, std::uint64_t p)
{
    const std::size_t n = f.size() - 1;
    for (std::size_t i = a.size(); i-- > n;) {
        const std::uint64_t c = a[i];
        if (c == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j)
            a[i - n + j] = submod(a[i - n + j], mulmod(c, f[j], p), p);
        a[i] = 0;
    }
    trim(a);
}

Poly mulmod_poly(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p)
{
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint64_t>((static_cast<u128>(a[i]) * b[j] + r[i + j]) % p);
    reduce(r, f, p);
    return r;
}

Poly powmod_poly(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p)
{
    Poly r{1};
    while (e) {
        if (e & 1)
            r = mulmod_poly(r, base, f, p);
        e >>= 1;
        if (e)
            base = mulmod_poly(base, base, f, p);
    }
    return r;
}

std::size_t gcd_degree(Poly a, Poly b, std::uint64_t p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b with b made monic.
        const std::uint64_t lead_inv = powmod(b.back(), p - 2, p);
        for (auto& c : b)
            c = mulmod(c, lead_inv, p);
        reduce(a, b, p);
        std::swap(a, b);
    }
    return a.empty() ? 0 : a.size() - 1;
}

// Ben-Or: f (monic, degree n) is irreducible iff gcd(f, x^{p^d} - x) = 1
// for every d <= n / 2.
bool ben_or_irreducible(const Poly& f, std::uint64_t p)
{
    const std::size_t n = f.size() - 1;
    Poly h{0, 1};
    for (std::size_t d = 1; d <= n / 2; ++d) {
        h = powmod_poly(h, p, f, p);
        Poly diff = h;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = submod(diff[1], 1, p);
        trim(diff);
        if (diff.empty() || gcd_degree(f, diff, p) > 0)
            return false;
    }
    return true;
}

}  // namespace zp

Coeffs canonical_modulus(std::uint64_t p, unsigned t)
{
    Coeffs f(t + 1, 0);
    f[t] = 1;
    if (t == 1)
        return f;
    // Scan c_0 + c_1 p + ... ascending; c_0 = 0 is always reducible.
    f[0] = 1;
    for (;;) {
        if (zp::ben_or_irreducible(f, p))
            return f;
        for (unsigned i = 0; i < t; ++i) {
            if (++f[i] < p)
                break;
            f[i] = 0;
        }
    }
}

std::uint64_t parse_residue(std::string_view text)
{
    std::uint64_t v = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (text.empty() || ec != std::errc() || ptr != end)
        throw InvalidArgument("malformed residue '" + std::string(text) + "'");
    return v;
}

}  // namespace

PrimePower::PrimePower(Natural p, unsigned t) : p_(std::move(p)), t_(t)
{
    if (t_ == 0)
        throw InvalidArgument("prime power exponent must be positive");
    if (!is_prime(p_))
        throw InvalidArgument(to_string(p_) + " is not prime");
    q_ = pfb::pow(p_, t_);
}

PrimePower PrimePower::parse(std::string_view text)
{
    const auto caret = text.find('^');
    if (caret != std::string_view::npos) {
        const Natural p = parse_natural(text.substr(0, caret));
        const Natural t = parse_natural(text.substr(caret + 1));
        if (!t.fits_uint_p() || t == 0)
            throw InvalidArgument("bad exponent in '" + std::string(text) + "'");
        return PrimePower(p, static_cast<unsigned>(t.get_ui()));
    }
    const Natural q = parse_natural(text);
    if (q < 2)
        throw InvalidArgument(std::string(text) + " is not a prime power");
    auto pt = prime_power_decompose(q);
    if (!pt)
        throw InvalidArgument(std::string(text) + " is not a prime power");
    return PrimePower(pt->first, pt->second);
}

std::string PrimePower::str() const
{
    return t_ == 1 ? to_string(p_) : to_string(p_) + "^" + std::to_string(t_);
}

FieldCtx::FieldCtx(const Natural& p, unsigned t) : size_(p, t), p_(0), t_(t)
{
    if (mpz_sizeinbase(p.get_mpz_t(), 2) > 63)
        throw InvalidArgument("characteristic " + to_string(p) + " exceeds the 63-bit residue range");
    p_ = to_u64(p);
    modulus_ = canonical_modulus(p_, t_);
}

const Factorization& FieldCtx::unit_group_factorization() const
{
    std::call_once(factor_once_, [this] {
        try {
            unit_factors_ = factor(size_.q() - 1);
        } catch (...) {
            factor_error_ = std::current_exception();
        }
    });
    if (factor_error_)
        std::rethrow_exception(factor_error_);
    return unit_factors_;
}

Coeffs FieldCtx::one() const { return from_residue(1); }

Coeffs FieldCtx::from_residue(std::uint64_t r) const
{
    Coeffs c(t_, 0);
    c[0] = r % p_;
    return c;
}

bool FieldCtx::is_zero(const Coeffs& a) const
{
    return std::all_of(a.begin(), a.end(), [](std::uint64_t c) { return c == 0; });
}

bool FieldCtx::is_one(const Coeffs& a) const
{
    return a[0] == 1 && std::all_of(a.begin() + 1, a.end(), [](std::uint64_t c) { return c == 0; });
}

std::uint64_t FieldCtx::add_residue(std::uint64_t a, std::uint64_t b) const
{
    const std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
}

std::uint64_t FieldCtx::sub_residue(std::uint64_t a, std::uint64_t b) const
{
    return a >= b ? a - b : a + (p_ - b);
}

std::uint64_t FieldCtx::mul_residue(std::uint64_t a, std::uint64_t b) const
{
    if (p_ < (1ULL << 32))
        return a * b % p_;
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p_);
}

Coeffs FieldCtx::add(const Coeffs& a, const Coeffs& b) const
{
    Coeffs r(t_);
    for (unsigned i = 0; i < t_; ++i)
        r[i] = add_residue(a[i], b[i]);
    return r;
}

Coeffs FieldCtx::sub(const Coeffs& a, const Coeffs& b) const
{
    Coeffs r(t_);
    for (unsigned i = 0; i < t_; ++i)
        r[i] = sub_residue(a[i], b[i]);
    return r;
}

Coeffs FieldCtx::neg(const Coeffs& a) const
{
    Coeffs r(t_);
    for (unsigned i = 0; i < t_; ++i)
        r[i] = a[i] == 0 ? 0 : p_ - a[i];
    return r;
}

Coeffs FieldCtx::scale(const Coeffs& a, std::uint64_t s) const
{
    Coeffs r(t_);
    for (unsigned i = 0; i < t_; ++i)
        r[i] = mul_residue(a[i], s);
    return r;
}

Coeffs FieldCtx::mul(const Coeffs& a, const Coeffs& b) const
{
    if (t_ == 1)
        return {mul_residue(a[0], b[0])};

    std::vector<std::uint64_t> prod(2 * t_ - 1, 0);
    if (p_ < (1ULL << 32)) {
        // Products fit in 64 bits; accumulate each diagonal in 128.
        for (unsigned k = 0; k < 2 * t_ - 1; ++k) {
            u128 acc = 0;
            const unsigned lo = k >= t_ ? k - t_ + 1 : 0;
            const unsigned hi = std::min(k, t_ - 1);
            for (unsigned i = lo; i <= hi; ++i)
                acc += a[i] * b[k - i];
            prod[k] = static_cast<std::uint64_t>(acc % p_);
        }
    } else {
        for (unsigned i = 0; i < t_; ++i)
            for (unsigned j = 0; j < t_; ++j)
                prod[i + j] = add_residue(prod[i + j], mul_residue(a[i], b[j]));
    }
    for (unsigned i = 2 * t_ - 1; i-- > t_;) {
        const std::uint64_t c = prod[i];
        if (c == 0)
            continue;
        for (unsigned j = 0; j < t_; ++j)
            prod[i - t_ + j] = sub_residue(prod[i - t_ + j], mul_residue(c, modulus_[j]));
    }
    prod.resize(t_);
    return prod;
}

Coeffs FieldCtx::pow(const Coeffs& a, const Natural& e) const
{
    if (sgn(e) < 0)
        throw InvalidArgument("negative exponent");
    Coeffs r = one();
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0)
        return r;
    for (std::size_t i = bits; i-- > 0;) {
        r = mul(r, r);
        if (mpz_tstbit(e.get_mpz_t(), i))
            r = mul(r, a);
    }
    return r;
}

Coeffs FieldCtx::inv(const Coeffs& a) const
{
    if (is_zero(a))
        throw InvalidArgument("inverse of zero");
    if (t_ == 1) {
        // Extended Euclid on residues.
        __int128 r0 = p_, r1 = a[0], s0 = 0, s1 = 1;
        while (r1 != 0) {
            const __int128 quot = r0 / r1;
            std::tie(r0, r1) = std::make_pair(r1, r0 - quot * r1);
            std::tie(s0, s1) = std::make_pair(s1, s0 - quot * s1);
        }
        if (s0 < 0)
            s0 += p_;
        return {static_cast<std::uint64_t>(s0)};
    }
    return pow(a, order() - 2);
}

Natural FieldCtx::index_of(const Coeffs& a) const
{
    Natural v = 0;
    const Natural p = from_u64(p_);
    for (unsigned i = t_; i-- > 0;)
        v = v * p + from_u64(a[i]);
    return v;
}

Coeffs FieldCtx::element_at(const Natural& index) const
{
    if (sgn(index) < 0 || index >= order())
        throw InvalidArgument("element index out of range");
    Coeffs c(t_, 0);
    Natural rest = index;
    const Natural p = from_u64(p_);
    for (unsigned i = 0; i < t_; ++i) {
        c[i] = to_u64(Natural(rest % p));
        rest /= p;
    }
    return c;
}

bool FieldCtx::precedes(const Coeffs& a, const Coeffs& b) const
{
    for (unsigned i = t_; i-- > 0;)
        if (a[i] != b[i])
            return a[i] < b[i];
    return false;
}

FieldElem::FieldElem(FieldPtr field, Coeffs coeffs) : field_(std::move(field)), c_(std::move(coeffs))
{
    if (!field_)
        throw InvalidArgument("field element without a field");
    if (c_.size() != field_->degree())
        throw InvalidArgument("coefficient count does not match field degree");
    for (auto c : c_)
        if (c >= field_->characteristic())
            throw InvalidArgument("residue out of range");
}

namespace {

void require_same_field(const FieldElem& a, const FieldElem& b)
{
    if (a.field() != b.field() && !(a.field()->size() == b.field()->size()))
        throw InvalidArgument("operands belong to different fields");
}

}  // namespace

FieldElem operator+(const FieldElem& a, const FieldElem& b)
{
    require_same_field(a, b);
    return {a.field_, a.field_->add(a.c_, b.c_)};
}

FieldElem operator-(const FieldElem& a, const FieldElem& b)
{
    require_same_field(a, b);
    return {a.field_, a.field_->sub(a.c_, b.c_)};
}

FieldElem operator*(const FieldElem& a, const FieldElem& b)
{
    require_same_field(a, b);
    return {a.field_, a.field_->mul(a.c_, b.c_)};
}

FieldElem operator-(const FieldElem& a) { return {a.field_, a.field_->neg(a.c_)}; }

bool operator==(const FieldElem& a, const FieldElem& b)
{
    return a.field_->size() == b.field_->size() && a.c_ == b.c_;
}

bool operator<(const FieldElem& a, const FieldElem& b)
{
    require_same_field(a, b);
    return a.field_->precedes(a.c_, b.c_);
}

FieldPtr build_field(const Natural& p, unsigned t) { return std::make_shared<const FieldCtx>(p, t); }

FieldPtr build_field(const PrimePower& q) { return build_field(q.p(), q.t()); }

Natural mult_order(const FieldElem& a)
{
    if (a.is_zero())
        throw InvalidArgument("multiplicative order of zero is undefined");
    const FieldCtx& f = *a.field();
    Natural e = f.order() - 1;
    for (const auto& [r, m] : f.unit_group_factorization().pairs()) {
        for (unsigned i = 0; i < m; ++i) {
            if (!f.is_one(f.pow(a.coeffs(), e / r)))
                break;
            e /= r;
        }
    }
    return e;
}

bool is_generator(const FieldElem& a)
{
    if (a.is_zero())
        return false;
    const FieldCtx& f = *a.field();
    const Natural group = f.order() - 1;
    for (const auto& r : f.unit_group_factorization().primes())
        if (f.is_one(f.pow(a.coeffs(), group / r)))
            return false;
    return true;
}

FieldElem find_generator(const FieldPtr& field)
{
    Coeffs c = field->one();
    for (;;) {
        FieldElem candidate(field, c);
        if (is_generator(candidate))
            return candidate;
        for (unsigned i = 0; i < field->degree(); ++i) {
            if (++c[i] < field->characteristic())
                break;
            c[i] = 0;
        }
    }
}

unsigned degree_over_subfield(const FieldElem& a, const PrimePower& subfield)
{
    const FieldCtx& f = *a.field();
    if (subfield.p() != f.size().p() || f.degree() % subfield.t() != 0)
        throw InvalidArgument("F_" + subfield.str() + " is not a subfield of F_" + f.size().str());
    const unsigned bound = f.degree() / subfield.t();
    Coeffs b = a.coeffs();
    for (unsigned d = 1; d <= bound; ++d) {
        b = f.pow(b, subfield.q());
        if (b == a.coeffs())
            return d;
    }
    throw ConsistencyError("Frobenius orbit longer than the field degree");
}

std::string format_residues(const Coeffs& c)
{
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(c[i]);
    }
    return out;
}

std::string format_elem(const FieldElem& a) { return format_residues(a.coeffs()); }

FieldElem parse_elem(const FieldPtr& field, std::string_view text)
{
    Coeffs c;
    std::size_t start = 0;
    for (;;) {
        const auto comma = text.find(',', start);
        c.push_back(parse_residue(text.substr(start, comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    if (c.size() > field->degree())
        throw InvalidArgument("element '" + std::string(text) + "' has more than " +
                              std::to_string(field->degree()) + " coefficients");
    for (auto r : c)
        if (r >= field->characteristic())
            throw InvalidArgument("residue " + std::to_string(r) + " out of range for F_" + field->size().str());
    c.resize(field->degree(), 0);
    return {field, std::move(c)};
}

std::string describe_field(const FieldCtx& field)
{
    if (field.degree() == 1)
        return "F_" + field.size().str();
    return "F_" + field.size().str() + " mod " + format_residues(field.modulus());
}

}  // namespace pfb
