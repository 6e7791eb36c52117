#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pfb/field.hpp"
#include "pfb/poly.hpp"

namespace pfb {

/// Largest total degree over the prime field that tower and closure
/// computations will build.
inline constexpr unsigned kMaxAmbientDegree = 64;

/// A root of x^n - g realized inside a concrete field.
struct TowerLevel {
    std::uint64_t degree_over_base = 0;
    FieldPtr base;
    FieldElem g;
    /// Field containing the root; for towers, the shared ambient field.
    FieldPtr field;
    /// Image of g in `field`.
    FieldElem embedded_g;
    FieldElem root;
    /// x^n - g over the base field.
    Poly minimal_poly;
};

struct ClosureRow {
    std::uint64_t n = 0;
    bool irreducible = false;
    bool root_found = false;
    bool generates_unique_subfield = false;
    std::optional<FieldElem> root;
};

struct ClosureReport {
    FieldPtr base;
    FieldElem g;
    std::uint64_t ambient_degree = 0;
    FieldPtr ambient;
    std::vector<ClosureRow> rows;
    bool hypothesis_met = false;
    /// Minimal reducible divisors; every reducible row is a multiple of one.
    std::vector<std::uint64_t> obstructions;
};

/// Image of `a` under the embedding of its field into `ambient` that sends
/// the base generator to the smallest root of the base modulus.
FieldElem embed(const FieldElem& a, const FieldPtr& ambient);

/// F(root) with root^n = g, as the canonical field of size q^n. Throws
/// NotIrreducible when x^n - g is reducible over F.
TowerLevel extend_by_binomial(const FieldElem& g, std::uint64_t n);

/// One level per degree inside the field of size q^{n_last}, with
/// root_i = root_last^{n_last / n_i}. Degrees must form a strictly
/// increasing divisibility chain.
std::vector<TowerLevel> build_tower(const FieldElem& g, const std::vector<std::uint64_t>& degrees);

/// For every n | N: irreducibility of x^n - g, a root of it in F_{q^N}, and
/// whether that root has degree exactly n over F_q (so generates the unique
/// subfield of size q^n). Rows are computed concurrently.
ClosureReport closure_check(const FieldElem& g, std::uint64_t N);

/// Checks the ClosureReport invariants; throws ConsistencyError.
void verify_closure_report(const ClosureReport& report);

}  // namespace pfb
