#pragma once

// Monomial ideals in k[x_1, ..., x_n], stored as the antichain of minimal
// exponent vectors, plus linear-power decompositions I = cap_p p^{w_p}.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "nok/arith.hpp"

namespace nok {

using Exponent = std::int64_t;

class ExponentVector {
  public:
    ExponentVector() = default;
    explicit ExponentVector(std::size_t nvars) : entries_(nvars, 0) {}
    explicit ExponentVector(std::vector<Exponent> entries);
    ExponentVector(std::initializer_list<Exponent> entries)
        : ExponentVector(std::vector<Exponent>(entries)) {}

    std::size_t size() const noexcept { return entries_.size(); }
    Exponent operator[](std::size_t i) const { return entries_[i]; }
    std::span<const Exponent> entries() const noexcept { return entries_; }

    Exponent total_degree() const;
    bool is_squarefree() const;
    bool is_zero() const;

    /// x^this divides x^other.
    bool divides(const ExponentVector &other) const;

    ExponentVector operator+(const ExponentVector &other) const;
    ExponentVector lcm(const ExponentVector &other) const;

    RationalVector to_rational() const;

    auto operator<=>(const ExponentVector &) const = default;
    bool operator==(const ExponentVector &) const = default;

  private:
    std::vector<Exponent> entries_;
};

class MonomialIdeal {
  public:
    /// Minimalizes `gens`; throws EmptyGeneratorSet / DimensionMismatch.
    MonomialIdeal(std::size_t nvars, std::vector<ExponentVector> gens);

    static MonomialIdeal unit(std::size_t nvars);
    /// The prime ideal generated by the given variables.
    static MonomialIdeal prime(std::size_t nvars, const std::vector<std::size_t> &variables);

    std::size_t nvars() const noexcept { return nvars_; }
    /// Minimal generators in lexicographic order.
    const std::vector<ExponentVector> &generators() const noexcept { return gens_; }

    bool contains(const ExponentVector &monomial) const;
    bool contains(const MonomialIdeal &other) const;
    bool is_squarefree() const;
    bool is_unit() const;

    bool operator==(const MonomialIdeal &) const = default;

  private:
    std::size_t nvars_;
    std::vector<ExponentVector> gens_;
};

struct PrimeComponent {
    std::vector<std::size_t> variables; // sorted, zero-based
    Exponent multiplicity = 1;

    bool operator==(const PrimeComponent &) const = default;
};

class PrimeDecomposition {
  public:
    /// Drops components implied by others (superset of variables with
    /// smaller-or-equal multiplicity). Throws NotLinearPowerType when the
    /// remaining primes are not pairwise incomparable.
    PrimeDecomposition(std::size_t nvars, std::vector<PrimeComponent> components);

    std::size_t nvars() const noexcept { return nvars_; }
    const std::vector<PrimeComponent> &components() const noexcept { return components_; }

    bool operator==(const PrimeDecomposition &) const = default;

  private:
    std::size_t nvars_;
    std::vector<PrimeComponent> components_;
};

/// Canonical antichain of the componentwise-minimal elements.
std::vector<ExponentVector> minimalize(std::vector<ExponentVector> gens);
MonomialIdeal minimalize(std::size_t nvars, std::vector<ExponentVector> gens);

MonomialIdeal multiply(const MonomialIdeal &a, const MonomialIdeal &b);
MonomialIdeal power(const MonomialIdeal &ideal, std::int64_t k);
MonomialIdeal intersect(std::span<const MonomialIdeal> ideals);
MonomialIdeal intersect(const MonomialIdeal &a, const MonomialIdeal &b);

/// Minimal primes of a squarefree ideal: minimal vertex covers of the
/// hypergraph of generator supports.
PrimeDecomposition minimal_primes(const MonomialIdeal &ideal);

/// cap_p p^{w_p}.
MonomialIdeal expand_decomposition(const PrimeDecomposition &decomposition);

/// R cap I R_p for a monomial prime p: exponents outside p are zeroed.
MonomialIdeal saturate_to_prime(const MonomialIdeal &ideal, const std::vector<std::size_t> &prime);

} // namespace nok
