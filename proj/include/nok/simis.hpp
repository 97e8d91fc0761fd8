#pragma once

// Integral Hilbert bases of the cones over SP(I) and NP(I) at height 1, and
// the symbolic Rees algebra invariants they determine.

#include <optional>
#include <set>

#include "nok/bodies.hpp"

namespace nok {

/// (exponent, degree) in the (n+1)-dimensional cone.
struct HilbertElement {
    ExponentVector exponent;
    std::int64_t degree = 0;

    bool operator==(const HilbertElement &) const = default;
};

struct HilbertBasisReport {
    /// Degree >= 1 elements, by degree then lexicographically. The degree-0
    /// elements are always the unit vectors and are left out.
    std::vector<HilbertElement> elements;
    std::set<std::int64_t> degrees;
    std::int64_t sgt = 0;
    std::int64_t degree_bound_used = 0;
    std::int64_t theorem_bound = 0;
    bool exhaustive = false;
};

/// Degree >= 1 Hilbert basis of the cone over `p` up to degree `bound`.
std::vector<HilbertElement> cone_hilbert_basis(const RationalPolyhedron &p, std::int64_t bound,
                                               Exec exec = Exec::parallel);

/// Default bound max{l_s D - 1, D}.
HilbertBasisReport hilbert_basis(const ClassifiedIdeal &ideal,
                                 std::optional<std::int64_t> degree_bound = {},
                                 Exec exec = Exec::parallel);

std::int64_t sgt_exact(const ClassifiedIdeal &ideal, Exec exec = Exec::parallel);

/// I^(dk) = (I^(d))^k for every k <= k_max.
bool veronese_verify(const ClassifiedIdeal &ideal, std::int64_t d, std::int64_t k_max,
                     Exec exec = Exec::parallel);

struct SvdProbe {
    Integer candidate;
    Integer certified_upper;
    std::int64_t k_max = 0;
};

/// Smallest multiple of c in [c, max{(l_s - 1) c, c}] passing veronese_verify.
SvdProbe svd_probe(const ClassifiedIdeal &ideal, std::int64_t k_max, Exec exec = Exec::parallel);

struct NormalReesDegrees {
    std::set<std::int64_t> degrees;
    std::int64_t bound = 0;
};

/// Generator degrees of the normalized Rees algebra, searched up to
/// max{l(I) - 1, 1}.
NormalReesDegrees normal_rees_generator_degrees(const MonomialIdeal &ideal,
                                                Exec exec = Exec::parallel);

} // namespace nok
