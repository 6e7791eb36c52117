#include "pfb/arith.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <random>

#include "pfb/errors.hpp"

namespace pfb {

namespace {

constexpr std::uint64_t kTrialBound = 1'000'000;

// Deterministic for n < 3317044064679887385961981.
constexpr std::array<unsigned, 13> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

std::vector<std::uint64_t> sieve(std::uint64_t bound)
{
    std::vector<bool> composite(bound + 1, false);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i])
            continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i)
            composite[j] = true;
    }
    return primes;
}

const std::vector<std::uint64_t>& trial_primes()
{
    static const std::vector<std::uint64_t> primes = sieve(kTrialBound);
    return primes;
}

// One strong-probable-prime round; n odd, n > 3, n - 1 = d * 2^s.
bool strong_probable_prime(const Natural& n, const Natural& d, unsigned s, const Natural& base)
{
    const Natural n_minus_1 = n - 1;
    Natural x;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1)
        return true;
    for (unsigned i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n_minus_1)
            return true;
        if (x == 1)
            return false;
    }
    return false;
}

Natural gcd(const Natural& a, const Natural& b)
{
    Natural g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Brent's cycle detection over x -> x^2 + c mod n. Returns a nontrivial
// factor or nullopt when the budget runs out.
std::optional<Natural> brent_rho(const Natural& n, std::uint64_t budget, std::mt19937_64& rng)
{
    constexpr std::uint64_t kBatch = 128;
    constexpr int kAttempts = 4;

    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        const Natural c = from_u64(rng()) % (n - 1) + 1;
        Natural y = from_u64(rng()) % n;
        Natural x, ys, q = 1, g = 1;
        std::uint64_t r = 1, spent = 0;
        auto step = [&](Natural& v) { v = (v * v + c) % n; };

        while (g == 1 && spent < budget) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i)
                step(y);
            std::uint64_t k = 0;
            while (k < r && g == 1) {
                ys = y;
                const std::uint64_t m = std::min(kBatch, r - k);
                for (std::uint64_t i = 0; i < m; ++i) {
                    step(y);
                    q = (q * abs(x - y)) % n;
                }
                g = gcd(q, n);
                k += m;
                spent += m;
            }
            r *= 2;
        }
        if (g == n) {
            // Batched product collapsed; back up one step at a time.
            do {
                step(ys);
                g = gcd(abs(x - ys), n);
            } while (g == 1);
        }
        if (g != 1 && g != n)
            return g;
    }
    return std::nullopt;
}

void factor_into(const Natural& n, std::map<Natural, unsigned>& out, std::uint64_t budget, std::mt19937_64& rng)
{
    if (n == 1)
        return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    const auto bits = static_cast<unsigned>(mpz_sizeinbase(n.get_mpz_t(), 2));
    for (unsigned k = 2; k <= bits; ++k) {
        Natural root;
        if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
            std::map<Natural, unsigned> inner;
            factor_into(root, inner, budget, rng);
            for (const auto& [p, m] : inner)
                out[p] += m * k;
            return;
        }
    }
    auto d = brent_rho(n, budget, rng);
    if (!d)
        throw FactorizationTooHard("factorization too hard: no factor of " + to_string(n) +
                                   " found within the rho budget");
    factor_into(*d, out, budget, rng);
    factor_into(n / *d, out, budget, rng);
}

}  // namespace

Natural parse_natural(std::string_view text)
{
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw InvalidArgument("not a natural number: '" + std::string(text) + "'");
    return Natural(std::string(text), 10);
}

std::string to_string(const Natural& n) { return n.get_str(10); }

Natural pow(const Natural& base, std::uint64_t exponent)
{
    Natural result = 1, b = base;
    while (exponent > 0) {
        if (exponent & 1)
            result *= b;
        exponent >>= 1;
        if (exponent > 0)
            b *= b;
    }
    return result;
}

bool fits_u64(const Natural& n) { return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

std::uint64_t to_u64(const Natural& n)
{
    if (!fits_u64(n))
        throw InvalidArgument("value does not fit in 64 bits: " + to_string(n));
    std::uint64_t v = 0;
    mpz_export(&v, nullptr, -1, sizeof v, 0, 0, n.get_mpz_t());
    return v;
}

Natural from_u64(std::uint64_t v)
{
    Natural n;
    mpz_import(n.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
    return n;
}

Factorization::Factorization(std::vector<PrimeFactor> pairs) : pairs_(std::move(pairs))
{
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (pairs_[i].multiplicity == 0)
            throw InvalidArgument("factorization multiplicity must be positive");
        if (i > 0 && pairs_[i - 1].prime >= pairs_[i].prime)
            throw InvalidArgument("factorization primes must be strictly increasing");
    }
}

Natural Factorization::value() const
{
    Natural v = 1;
    for (const auto& [p, m] : pairs_)
        v *= pow(p, m);
    return v;
}

std::vector<Natural> Factorization::primes() const
{
    std::vector<Natural> out;
    out.reserve(pairs_.size());
    for (const auto& pf : pairs_)
        out.push_back(pf.prime);
    return out;
}

bool Factorization::has_prime(const Natural& p) const
{
    return std::any_of(pairs_.begin(), pairs_.end(), [&](const PrimeFactor& pf) { return pf.prime == p; });
}

bool is_prime(const Natural& n)
{
    if (n < 2)
        return false;
    for (unsigned w : kWitnesses) {
        if (n == w)
            return true;
        if (n % w == 0)
            return false;
    }
    if (n < 43 * 43)
        return true;

    Natural d = n - 1;
    unsigned s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d /= 2;
        ++s;
    }
    for (unsigned w : kWitnesses)
        if (!strong_probable_prime(n, d, s, Natural(w)))
            return false;

    static const Natural kDeterministicBound("3317044064679887385961981", 10);
    if (n < kDeterministicBound)
        return true;

    std::mt19937_64 rng(0x9E3779B97F4A7C15ULL);
    const Natural span = n - 3;
    for (int round = 0; round < 64; ++round) {
        Natural base = 0;
        for (int limb = 0; limb < 4; ++limb)
            base = (base << 64) + from_u64(rng());
        base = base % span + 2;
        if (!strong_probable_prime(n, d, s, base))
            return false;
    }
    return true;
}

Factorization factor(const Natural& n, std::uint64_t rho_budget)
{
    if (sgn(n) <= 0)
        throw InvalidArgument("factor: 0 has no factorization");
    std::map<Natural, unsigned> found;
    Natural rest = n;
    for (std::uint64_t p : trial_primes()) {
        const Natural pp = from_u64(p);
        if (pp * pp > rest)
            break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            rest /= pp;
            ++found[pp];
        }
    }
    if (rest > 1) {
        std::mt19937_64 rng(0xC0FFEE);
        factor_into(rest, found, rho_budget, rng);
    }
    std::vector<PrimeFactor> pairs;
    for (auto& [p, m] : found)
        pairs.push_back({p, m});
    return Factorization(std::move(pairs));
}

std::optional<std::pair<Natural, unsigned>> prime_power_decompose(const Natural& n)
{
    if (n < 2)
        throw InvalidArgument("prime_power_decompose: n must be at least 2");
    const auto bits = static_cast<unsigned>(mpz_sizeinbase(n.get_mpz_t(), 2));
    // Largest exponent first so that p is as small as possible.
    for (unsigned t = bits; t >= 1; --t) {
        Natural root;
        if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), t) != 0 && root >= 2 && is_prime(root))
            return std::make_pair(root, t);
    }
    return std::nullopt;
}

std::vector<std::uint64_t> first_primes(std::size_t k)
{
    if (k == 0)
        throw InvalidArgument("first_primes: k must be positive");
    // p_k < k (ln k + ln ln k) for k >= 6.
    std::uint64_t bound = 15;
    if (k >= 6) {
        const double kk = static_cast<double>(k);
        bound = static_cast<std::uint64_t>(kk * (std::log(kk) + std::log(std::log(kk)))) + 1;
    }
    auto primes = sieve(bound);
    primes.resize(k);
    return primes;
}

std::size_t prime_index(const Natural& p)
{
    static const Natural kLimit(100'000'000);
    if (p > kLimit)
        throw DeskScaleExceeded("prime_index: " + to_string(p) + " exceeds 10^8");
    if (!is_prime(p))
        throw InvalidArgument("prime_index: " + to_string(p) + " is not prime");
    const std::uint64_t v = to_u64(p);
    if (v <= kTrialBound) {
        const auto& primes = trial_primes();
        return static_cast<std::size_t>(std::lower_bound(primes.begin(), primes.end(), v) - primes.begin()) + 1;
    }
    return sieve(v).size();
}

std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    if (n == 0)
        throw InvalidArgument("divisors: n must be positive");
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d <= n / d; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d)
                large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace pfb
