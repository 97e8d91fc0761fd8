#pragma once

// Graded families of monomial ideals and their Newton-Okounkov bodies.

#include <optional>
#include <variant>

#include "nok/bodies.hpp"

namespace nok {

/// I_k = base^k.
struct PowerFamily {
    MonomialIdeal base;
};

/// I_k = base^(k).
struct SymbolicFamily {
    ClassifiedIdeal base;
};

/// I_k = J_1^k cap ... cap J_s^k.
struct IntersectionFamily {
    std::vector<MonomialIdeal> components;
};

/// I_k = base^ceil(alpha k + beta).
struct CeilingPowerFamily {
    MonomialIdeal base;
    Rational alpha;
    Rational beta;
};

using FamilySpec = std::variant<PowerFamily, SymbolicFamily, IntersectionFamily, CeilingPowerFamily>;

std::string_view family_name(const FamilySpec &family);
std::size_t family_nvars(const FamilySpec &family);

/// Checks the family is well formed and graded. Throws EmptyList,
/// DimensionMismatch, NonPositiveExponent, NotGradedFamily,
/// UnsupportedIdealClass.
void validate(const FamilySpec &family);

/// The exponent ceil(alpha k + beta).
std::int64_t ceiling_exponent(const CeilingPowerFamily &family, std::int64_t k);

/// inf_k ceil(alpha k + beta) / k, attained within the first period of k.
Rational ceiling_rate(const CeilingPowerFamily &family);

MonomialIdeal member_ideal(const FamilySpec &family, std::int64_t k, Exec exec = Exec::parallel);

RationalPolyhedron newton_okounkov_body(const FamilySpec &family);

struct StabilizationWitness {
    std::int64_t c_tested = 0;
    /// Vertex of the body outside (1/c) NP(I_c); the lexicographically
    /// largest such vertex.
    RationalVector vertex;
};

struct StabilizationReport {
    bool stabilized = false;
    std::optional<std::int64_t> c;
    std::optional<StabilizationWitness> witness;
    std::int64_t c_max = 0;
};

/// Smallest c <= c_max with (1/c) NP(I_c) equal to the body.
StabilizationReport stabilization_check(const FamilySpec &family, std::int64_t c_max);

/// mdc(body) + 1. Throws NotProvenNoetherian if no c <= c_max stabilizes.
std::size_t family_analytic_spread(const FamilySpec &family, std::int64_t c_max);

/// Compares (1/k) NP(I_k) with (1/k) NP of its integral closure for k <= 4,
/// and both against the body.
bool closure_family_body_equality(const FamilySpec &family);

} // namespace nok
