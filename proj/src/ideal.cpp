#include "nok/ideal.hpp"
#include "nok/errors.hpp"
#include "nok/kernels.hpp"

#include <algorithm>
#include <set>

namespace nok {

ExponentVector::ExponentVector(std::vector<Exponent> entries) : entries_(std::move(entries)) {
    for (auto e : entries_)
        if (e < 0)
            fail(ErrorKind::NonPositiveExponent, "exponent vectors must be nonnegative");
}

Exponent ExponentVector::total_degree() const {
    Exponent s = 0;
    for (auto e : entries_)
        s += e;
    return s;
}

bool ExponentVector::is_squarefree() const {
    return std::all_of(entries_.begin(), entries_.end(), [](Exponent e) { return e <= 1; });
}

bool ExponentVector::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](Exponent e) { return e == 0; });
}

bool ExponentVector::divides(const ExponentVector &other) const {
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] > other.entries_[i])
            return false;
    return true;
}

ExponentVector ExponentVector::operator+(const ExponentVector &other) const {
    if (size() != other.size())
        fail(ErrorKind::DimensionMismatch, "exponent vectors of different lengths");
    ExponentVector r(*this);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        r.entries_[i] += other.entries_[i];
    return r;
}

ExponentVector ExponentVector::lcm(const ExponentVector &other) const {
    if (size() != other.size())
        fail(ErrorKind::DimensionMismatch, "exponent vectors of different lengths");
    ExponentVector r(*this);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        r.entries_[i] = std::max(r.entries_[i], other.entries_[i]);
    return r;
}

RationalVector ExponentVector::to_rational() const {
    RationalVector v;
    v.reserve(entries_.size());
    for (auto e : entries_)
        v.emplace_back(static_cast<long>(e));
    return v;
}

std::vector<ExponentVector> minimalize(std::vector<ExponentVector> gens) {
    if (gens.empty())
        fail(ErrorKind::EmptyGeneratorSet, "a monomial ideal needs at least one generator");
    const auto n = gens.front().size();
    for (const auto &g : gens)
        if (g.size() != n)
            fail(ErrorKind::DimensionMismatch, "generators of different lengths");
    return minimal_elements(std::move(gens));
}

MonomialIdeal minimalize(std::size_t nvars, std::vector<ExponentVector> gens) {
    return MonomialIdeal(nvars, std::move(gens));
}

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<ExponentVector> gens) : nvars_(nvars) {
    if (nvars == 0)
        fail(ErrorKind::DimensionMismatch, "an ideal needs at least one variable");
    if (gens.empty())
        fail(ErrorKind::EmptyGeneratorSet, "the zero ideal is not supported");
    for (const auto &g : gens)
        if (g.size() != nvars)
            fail(ErrorKind::DimensionMismatch, "generator length differs from the variable count");
    gens_ = minimalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::unit(std::size_t nvars) {
    return MonomialIdeal(nvars, {ExponentVector(nvars)});
}

MonomialIdeal MonomialIdeal::prime(std::size_t nvars, const std::vector<std::size_t> &variables) {
    if (variables.empty())
        fail(ErrorKind::EmptyPrime, "a monomial prime needs at least one variable");
    std::vector<ExponentVector> gens;
    for (auto v : variables) {
        if (v >= nvars)
            fail(ErrorKind::DimensionMismatch, "variable index out of range");
        std::vector<Exponent> e(nvars, 0);
        e[v] = 1;
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(nvars, std::move(gens));
}

bool MonomialIdeal::contains(const ExponentVector &monomial) const {
    if (monomial.size() != nvars_)
        fail(ErrorKind::DimensionMismatch, "monomial length differs from the variable count");
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](const ExponentVector &g) { return g.divides(monomial); });
}

bool MonomialIdeal::contains(const MonomialIdeal &other) const {
    if (other.nvars_ != nvars_)
        fail(ErrorKind::DimensionMismatch, "ideals in different rings");
    return std::all_of(other.gens_.begin(), other.gens_.end(),
                       [&](const ExponentVector &g) { return contains(g); });
}

bool MonomialIdeal::is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const ExponentVector &g) { return g.is_squarefree(); });
}

bool MonomialIdeal::is_unit() const { return gens_.size() == 1 && gens_.front().is_zero(); }

PrimeDecomposition::PrimeDecomposition(std::size_t nvars, std::vector<PrimeComponent> components)
    : nvars_(nvars) {
    if (components.empty())
        fail(ErrorKind::EmptyList, "a decomposition needs at least one component");
    for (auto &c : components) {
        if (c.variables.empty())
            fail(ErrorKind::EmptyPrime, "a monomial prime needs at least one variable");
        if (c.multiplicity < 1)
            fail(ErrorKind::NonPositiveMultiplicity, "multiplicities must be positive");
        std::sort(c.variables.begin(), c.variables.end());
        c.variables.erase(std::unique(c.variables.begin(), c.variables.end()), c.variables.end());
        if (c.variables.back() >= nvars)
            fail(ErrorKind::DimensionMismatch, "variable index out of range");
    }
    auto subset = [](const PrimeComponent &a, const PrimeComponent &b) {
        return std::includes(b.variables.begin(), b.variables.end(), a.variables.begin(),
                             a.variables.end());
    };
    std::vector<char> dropped(components.size(), 0);
    for (std::size_t i = 0; i < components.size(); ++i)
        for (std::size_t j = 0; j < components.size() && !dropped[i]; ++j) {
            if (i == j || dropped[j])
                continue;
            if (subset(components[j], components[i]) &&
                components[j].multiplicity >= components[i].multiplicity)
                dropped[i] = 1;
        }
    for (std::size_t i = 0; i < components.size(); ++i)
        if (!dropped[i])
            components_.push_back(components[i]);
    for (const auto &a : components_)
        for (const auto &b : components_)
            if (&a != &b && subset(a, b))
                fail(ErrorKind::NotLinearPowerType,
                     "a component prime strictly contains another one (embedded component)");
    std::sort(components_.begin(), components_.end(),
              [](const PrimeComponent &a, const PrimeComponent &b) {
                  return a.variables < b.variables;
              });
}

MonomialIdeal multiply(const MonomialIdeal &a, const MonomialIdeal &b) {
    if (a.nvars() != b.nvars())
        fail(ErrorKind::DimensionMismatch, "ideals in different rings");
    std::vector<ExponentVector> prods;
    prods.reserve(a.generators().size() * b.generators().size());
    for (const auto &g : a.generators())
        for (const auto &h : b.generators())
            prods.push_back(g + h);
    return MonomialIdeal(a.nvars(), std::move(prods));
}

MonomialIdeal power(const MonomialIdeal &ideal, std::int64_t k) {
    if (k < 1)
        fail(ErrorKind::NonPositiveExponent, "ideal powers need k >= 1");
    MonomialIdeal result = ideal;
    MonomialIdeal base = ideal;
    std::int64_t rest = k - 1;
    while (rest > 0) {
        if (rest & 1)
            result = multiply(result, base);
        rest >>= 1;
        if (rest > 0)
            base = multiply(base, base);
    }
    return result;
}

MonomialIdeal intersect(const MonomialIdeal &a, const MonomialIdeal &b) {
    if (a.nvars() != b.nvars())
        fail(ErrorKind::DimensionMismatch, "ideals in different rings");
    std::vector<ExponentVector> lcms;
    lcms.reserve(a.generators().size() * b.generators().size());
    for (const auto &g : a.generators())
        for (const auto &h : b.generators())
            lcms.push_back(g.lcm(h));
    return MonomialIdeal(a.nvars(), std::move(lcms));
}

MonomialIdeal intersect(std::span<const MonomialIdeal> ideals) {
    if (ideals.empty())
        fail(ErrorKind::EmptyList, "cannot intersect an empty list of ideals");
    MonomialIdeal acc = ideals.front();
    for (std::size_t i = 1; i < ideals.size(); ++i)
        acc = intersect(acc, ideals[i]);
    return acc;
}

namespace {

using Mask = std::uint64_t;

void transversals(Mask chosen, const std::vector<Mask> &edges, std::set<Mask> &found) {
    auto open = std::find_if(edges.begin(), edges.end(), [&](Mask e) { return (e & chosen) == 0; });
    if (open == edges.end()) {
        found.insert(chosen);
        return;
    }
    for (Mask rest = *open; rest; rest &= rest - 1) {
        const Mask v = rest & (~rest + 1);
        const Mask next = chosen | v;
        // Every chosen vertex needs a private edge; adding vertices never
        // creates one, so a violation here prunes the whole subtree.
        bool ok = true;
        for (Mask s = next; s && ok; s &= s - 1) {
            const Mask u = s & (~s + 1);
            ok = std::any_of(edges.begin(), edges.end(), [&](Mask e) { return (e & next) == u; });
        }
        if (ok)
            transversals(next, edges, found);
    }
}

void compositions(std::size_t nvars, const std::vector<std::size_t> &vars, std::size_t pos,
                  Exponent remaining, std::vector<Exponent> &cur, std::vector<ExponentVector> &out) {
    if (pos + 1 == vars.size()) {
        cur[vars[pos]] = remaining;
        out.emplace_back(cur);
        cur[vars[pos]] = 0;
        return;
    }
    for (Exponent e = remaining; e >= 0; --e) {
        cur[vars[pos]] = e;
        compositions(nvars, vars, pos + 1, remaining - e, cur, out);
    }
    cur[vars[pos]] = 0;
}

MonomialIdeal prime_power(std::size_t nvars, const PrimeComponent &c) {
    std::vector<ExponentVector> gens;
    std::vector<Exponent> cur(nvars, 0);
    compositions(nvars, c.variables, 0, c.multiplicity, cur, gens);
    return MonomialIdeal(nvars, std::move(gens));
}

} // namespace

PrimeDecomposition minimal_primes(const MonomialIdeal &ideal) {
    if (!ideal.is_squarefree())
        fail(ErrorKind::NotSquarefree, "minimal primes are computed for squarefree ideals only");
    if (ideal.is_unit())
        fail(ErrorKind::UnitIdeal, "the unit ideal has no minimal primes");
    if (ideal.nvars() > 64)
        fail(ErrorKind::Overflow, "at most 64 variables are supported for prime enumeration");
    std::vector<Mask> edges;
    for (const auto &g : ideal.generators()) {
        Mask e = 0;
        for (std::size_t i = 0; i < g.size(); ++i)
            if (g[i])
                e |= Mask{1} << i;
        edges.push_back(e);
    }
    std::set<Mask> found;
    transversals(0, edges, found);
    std::vector<PrimeComponent> comps;
    for (auto m : found) {
        PrimeComponent c;
        for (std::size_t i = 0; i < ideal.nvars(); ++i)
            if (m >> i & 1)
                c.variables.push_back(i);
        comps.push_back(std::move(c));
    }
    return PrimeDecomposition(ideal.nvars(), std::move(comps));
}

MonomialIdeal expand_decomposition(const PrimeDecomposition &decomposition) {
    std::vector<MonomialIdeal> parts;
    for (const auto &c : decomposition.components())
        parts.push_back(prime_power(decomposition.nvars(), c));
    return intersect(parts);
}

MonomialIdeal saturate_to_prime(const MonomialIdeal &ideal, const std::vector<std::size_t> &prime) {
    if (prime.empty())
        fail(ErrorKind::EmptyPrime, "saturation needs a nonempty prime");
    std::vector<char> inside(ideal.nvars(), 0);
    for (auto v : prime) {
        if (v >= ideal.nvars())
            fail(ErrorKind::DimensionMismatch, "variable index out of range");
        inside[v] = 1;
    }
    std::vector<ExponentVector> gens;
    for (const auto &g : ideal.generators()) {
        std::vector<Exponent> e(g.entries().begin(), g.entries().end());
        for (std::size_t i = 0; i < e.size(); ++i)
            if (!inside[i])
                e[i] = 0;
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(ideal.nvars(), std::move(gens));
}

} // namespace nok
