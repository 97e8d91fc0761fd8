#pragma once

// Newton and symbolic polyhedra of monomial ideals, and the ideals they
// determine: symbolic powers, real powers, integral closures.

#include <memory>
#include <optional>

#include "nok/ideal.hpp"
#include "nok/polyhedron.hpp"

namespace nok {

enum class IdealKind { Squarefree, LinearPower, MPrimary, GeneralUnsupported };

std::string_view to_string(IdealKind kind);

/// A monomial ideal together with the class that decides how its symbolic
/// polyhedron is obtained. Squarefree and LinearPower carry a prime
/// decomposition. Polyhedra are computed on first use and shared by copies.
class ClassifiedIdeal {
  public:
    IdealKind kind() const noexcept { return kind_; }
    const MonomialIdeal &ideal() const noexcept { return ideal_; }
    std::size_t nvars() const noexcept { return ideal_.nvars(); }
    const std::optional<PrimeDecomposition> &decomposition() const noexcept { return decomposition_; }

    /// Squarefree, LinearPower or MPrimary.
    bool supports_sp() const noexcept { return kind_ != IdealKind::GeneralUnsupported; }
    /// Squarefree or LinearPower: symbolic powers are cut out by SP itself.
    bool linear_power_type() const noexcept {
        return kind_ == IdealKind::Squarefree || kind_ == IdealKind::LinearPower;
    }

    const RationalPolyhedron &newton() const;
    /// Throws UnsupportedIdealClass for GeneralUnsupported.
    const RationalPolyhedron &symbolic() const;

  private:
    friend ClassifiedIdeal classify(const MonomialIdeal &ideal);
    friend ClassifiedIdeal classify(const PrimeDecomposition &decomposition);

    ClassifiedIdeal(IdealKind kind, MonomialIdeal ideal, std::optional<PrimeDecomposition> dec);

    struct Cache;
    IdealKind kind_;
    MonomialIdeal ideal_;
    std::optional<PrimeDecomposition> decomposition_;
    std::shared_ptr<Cache> cache_;
};

/// Squarefree (non-unit) ideals get their minimal primes; ideals containing a
/// pure power of every variable are MPrimary; anything else is
/// GeneralUnsupported.
ClassifiedIdeal classify(const MonomialIdeal &ideal);
/// Explicit decompositions are LinearPower.
ClassifiedIdeal classify(const PrimeDecomposition &decomposition);

/// Throws UnsupportedIdealClass naming the supported classes.
void require_sp(const ClassifiedIdeal &ideal);
/// Same, for results that rely on SP cutting out symbolic powers exactly.
void require_linear_power(const ClassifiedIdeal &ideal);

RationalPolyhedron newton_polyhedron(const MonomialIdeal &ideal);
RationalPolyhedron symbolic_polyhedron(const ClassifiedIdeal &ideal);

/// x^a lies in the integral closure of I^k.
bool member_integral_closure(const MonomialIdeal &ideal, const ExponentVector &a, std::int64_t k);
/// x^a lies in I^(k).
bool member_symbolic(const ClassifiedIdeal &ideal, const ExponentVector &a, std::int64_t k);

/// Convex-combination certificate for a/k in the polyhedron, if it lies there.
std::optional<ConvexCertificate> scaled_membership(const RationalPolyhedron &p,
                                                   const ExponentVector &a, std::int64_t k);

/// Minimal generators of I^(k). MPrimary ideals return I^k.
MonomialIdeal symbolic_power(const ClassifiedIdeal &ideal, std::int64_t k, Exec exec = Exec::parallel);
/// Ideal of the lattice points of r * NP(I).
MonomialIdeal real_power(const MonomialIdeal &ideal, const Rational &r, Exec exec = Exec::parallel);
MonomialIdeal integral_closure(const MonomialIdeal &ideal, Exec exec = Exec::parallel);

bool np_equals_sp(const ClassifiedIdeal &ideal);

} // namespace nok
