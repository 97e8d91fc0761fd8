#include "nok/bodies.hpp"
#include "nok/errors.hpp"

#include <mutex>

namespace nok {

std::string_view to_string(IdealKind kind) {
    switch (kind) {
    case IdealKind::Squarefree:
        return "squarefree";
    case IdealKind::LinearPower:
        return "linear-power";
    case IdealKind::MPrimary:
        return "m-primary";
    case IdealKind::GeneralUnsupported:
        return "unsupported";
    }
    return "unknown";
}

struct ClassifiedIdeal::Cache {
    std::once_flag np_once, sp_once;
    std::optional<RationalPolyhedron> np, sp;
};

ClassifiedIdeal::ClassifiedIdeal(IdealKind kind, MonomialIdeal ideal,
                                 std::optional<PrimeDecomposition> dec)
    : kind_(kind), ideal_(std::move(ideal)), decomposition_(std::move(dec)),
      cache_(std::make_shared<Cache>()) {}

const RationalPolyhedron &ClassifiedIdeal::newton() const {
    std::call_once(cache_->np_once, [this] { cache_->np.emplace(newton_polyhedron(ideal_)); });
    return *cache_->np;
}

const RationalPolyhedron &ClassifiedIdeal::symbolic() const {
    require_sp(*this);
    std::call_once(cache_->sp_once, [this] {
        if (kind_ == IdealKind::MPrimary) {
            cache_->sp.emplace(newton());
            return;
        }
        const auto n = nvars();
        std::vector<HalfSpace> hs;
        for (const auto &c : decomposition_->components()) {
            IntVector normal(n, 0);
            for (auto v : c.variables)
                normal[v] = 1;
            hs.emplace_back(std::move(normal), Integer(c.multiplicity));
        }
        for (std::size_t j = 0; j < n; ++j)
            hs.push_back(HalfSpace::coordinate(n, j));
        cache_->sp.emplace(from_halfspaces(std::move(hs), n));
    });
    return *cache_->sp;
}

namespace {

bool has_all_pure_powers(const MonomialIdeal &ideal) {
    const auto n = ideal.nvars();
    std::vector<char> seen(n, 0);
    for (const auto &g : ideal.generators()) {
        std::size_t support = 0, where = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (g[i] > 0) {
                ++support;
                where = i;
            }
        if (support == 0)
            return true;
        if (support == 1)
            seen[where] = 1;
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

} // namespace

ClassifiedIdeal classify(const MonomialIdeal &ideal) {
    if (ideal.is_squarefree() && !ideal.is_unit())
        return ClassifiedIdeal(IdealKind::Squarefree, ideal, minimal_primes(ideal));
    if (has_all_pure_powers(ideal))
        return ClassifiedIdeal(IdealKind::MPrimary, ideal, std::nullopt);
    return ClassifiedIdeal(IdealKind::GeneralUnsupported, ideal, std::nullopt);
}

ClassifiedIdeal classify(const PrimeDecomposition &decomposition) {
    return ClassifiedIdeal(IdealKind::LinearPower, expand_decomposition(decomposition), decomposition);
}

void require_sp(const ClassifiedIdeal &ideal) {
    if (!ideal.supports_sp())
        fail(ErrorKind::UnsupportedIdealClass,
             "symbolic polyhedra are available for squarefree ideals, explicit linear-power "
             "decompositions, and ideals containing a pure power of every variable");
}

void require_linear_power(const ClassifiedIdeal &ideal) {
    if (!ideal.linear_power_type())
        fail(ErrorKind::UnsupportedIdealClass,
             "this result holds for squarefree ideals and explicit linear-power decompositions "
             "only; the input is " + std::string(to_string(ideal.kind())));
}

RationalPolyhedron newton_polyhedron(const MonomialIdeal &ideal) {
    return hull_up_set(ideal.generators(), ideal.nvars());
}

RationalPolyhedron symbolic_polyhedron(const ClassifiedIdeal &ideal) { return ideal.symbolic(); }

namespace {

RationalVector over(const ExponentVector &a, std::int64_t k) {
    if (k < 1)
        fail(ErrorKind::NonPositiveExponent, "powers need k >= 1");
    RationalVector v = a.to_rational();
    for (auto &x : v)
        x /= k;
    return v;
}

} // namespace

bool member_integral_closure(const MonomialIdeal &ideal, const ExponentVector &a, std::int64_t k) {
    if (a.size() != ideal.nvars())
        fail(ErrorKind::DimensionMismatch, "monomial length differs from the variable count");
    return contains(newton_polyhedron(ideal), over(a, k));
}

bool member_symbolic(const ClassifiedIdeal &ideal, const ExponentVector &a, std::int64_t k) {
    require_sp(ideal);
    if (a.size() != ideal.nvars())
        fail(ErrorKind::DimensionMismatch, "monomial length differs from the variable count");
    if (ideal.kind() == IdealKind::MPrimary)
        return power(ideal.ideal(), k).contains(a);
    return contains(ideal.symbolic(), over(a, k));
}

std::optional<ConvexCertificate> scaled_membership(const RationalPolyhedron &p,
                                                   const ExponentVector &a, std::int64_t k) {
    auto x = over(a, k);
    if (!contains(p, x))
        return std::nullopt;
    return membership_certificate(p, x);
}

MonomialIdeal symbolic_power(const ClassifiedIdeal &ideal, std::int64_t k, Exec exec) {
    require_sp(ideal);
    if (k < 1)
        fail(ErrorKind::NonPositiveExponent, "symbolic powers need k >= 1");
    if (ideal.kind() == IdealKind::MPrimary)
        return power(ideal.ideal(), k);
    auto pts = minimal_lattice_points(scale(ideal.symbolic(), Rational(k)), std::nullopt, exec);
    return MonomialIdeal(ideal.nvars(), std::move(pts));
}

MonomialIdeal real_power(const MonomialIdeal &ideal, const Rational &r, Exec exec) {
    if (r <= 0)
        fail(ErrorKind::NonPositiveExponent, "real powers need r > 0");
    auto pts = minimal_lattice_points(scale(newton_polyhedron(ideal), r), std::nullopt, exec);
    return MonomialIdeal(ideal.nvars(), std::move(pts));
}

MonomialIdeal integral_closure(const MonomialIdeal &ideal, Exec exec) {
    return real_power(ideal, Rational(1), exec);
}

bool np_equals_sp(const ClassifiedIdeal &ideal) {
    require_sp(ideal);
    return equal(ideal.newton(), ideal.symbolic());
}

} // namespace nok
