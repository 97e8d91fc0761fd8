#include "nok/families.hpp"
#include "nok/errors.hpp"

#include <algorithm>

namespace nok {

namespace {

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

} // namespace

std::string_view family_name(const FamilySpec &family) {
    return std::visit(overloaded{[](const PowerFamily &) { return "power"; },
                                 [](const SymbolicFamily &) { return "symbolic"; },
                                 [](const IntersectionFamily &) { return "intersection"; },
                                 [](const CeilingPowerFamily &) { return "ceiling"; }},
                      family);
}

std::size_t family_nvars(const FamilySpec &family) {
    return std::visit(overloaded{[](const PowerFamily &f) { return f.base.nvars(); },
                                 [](const SymbolicFamily &f) { return f.base.nvars(); },
                                 [](const IntersectionFamily &f) {
                                     return f.components.empty() ? std::size_t{0}
                                                                 : f.components.front().nvars();
                                 },
                                 [](const CeilingPowerFamily &f) { return f.base.nvars(); }},
                      family);
}

std::int64_t ceiling_exponent(const CeilingPowerFamily &family, std::int64_t k) {
    return to_int64(ceil(family.alpha * k + family.beta));
}

Rational ceiling_rate(const CeilingPowerFamily &family) {
    // ceil(alpha k + beta) - alpha k is periodic in k with period q, so every
    // ratio past the first period is a mediant of one inside it and alpha.
    const Integer q = family.alpha.get_den();
    Rational best = family.alpha;
    for (std::int64_t k = 1; k <= to_int64(q); ++k)
        best = std::min(best, make_rational(ceiling_exponent(family, k), k));
    return best;
}

void validate(const FamilySpec &family) {
    std::visit(overloaded{
                   [](const PowerFamily &) {},
                   [](const SymbolicFamily &f) { require_sp(f.base); },
                   [](const IntersectionFamily &f) {
                       if (f.components.empty())
                           fail(ErrorKind::EmptyList, "an intersection family needs components");
                       for (const auto &c : f.components)
                           if (c.nvars() != f.components.front().nvars())
                               fail(ErrorKind::DimensionMismatch,
                                    "intersection components live in different rings");
                   },
                   [](const CeilingPowerFamily &f) {
                       if (f.alpha <= 0)
                           fail(ErrorKind::NonPositiveExponent, "alpha must be positive");
                       if (ceiling_exponent(f, 1) < 1)
                           fail(ErrorKind::NonPositiveExponent,
                                "ceil(alpha + beta) must be at least 1");
                       // I_p I_q is in I_{p+q} iff e(p) + e(q) >= e(p+q); the
                       // defect is periodic in p and q with period q(alpha).
                       const auto period = to_int64(f.alpha.get_den());
                       for (std::int64_t p = 1; p <= period; ++p)
                           for (std::int64_t r = 1; r <= period; ++r)
                               if (ceiling_exponent(f, p) + ceiling_exponent(f, r) <
                                   ceiling_exponent(f, p + r))
                                   fail(ErrorKind::NotGradedFamily,
                                        "I_" + std::to_string(p) + " I_" + std::to_string(r) +
                                            " is not contained in I_" + std::to_string(p + r));
                   }},
               family);
}

MonomialIdeal member_ideal(const FamilySpec &family, std::int64_t k, Exec exec) {
    if (k < 1)
        fail(ErrorKind::NonPositiveExponent, "family members are indexed by k >= 1");
    return std::visit(
        overloaded{[&](const PowerFamily &f) { return power(f.base, k); },
                   [&](const SymbolicFamily &f) { return symbolic_power(f.base, k, exec); },
                   [&](const IntersectionFamily &f) {
                       std::vector<MonomialIdeal> powers;
                       for (const auto &c : f.components)
                           powers.push_back(power(c, k));
                       return intersect(powers);
                   },
                   [&](const CeilingPowerFamily &f) { return power(f.base, ceiling_exponent(f, k)); }},
        family);
}

RationalPolyhedron newton_okounkov_body(const FamilySpec &family) {
    validate(family);
    return std::visit(
        overloaded{[](const PowerFamily &f) { return newton_polyhedron(f.base); },
                   [](const SymbolicFamily &f) { return f.base.symbolic(); },
                   [](const IntersectionFamily &f) {
                       std::vector<RationalPolyhedron> ps;
                       for (const auto &c : f.components)
                           ps.push_back(newton_polyhedron(c));
                       return intersect_polyhedra(ps);
                   },
                   [](const CeilingPowerFamily &f) {
                       return scale(newton_polyhedron(f.base), ceiling_rate(f));
                   }},
        family);
}

namespace {

struct Trial {
    bool equal = false;
    std::optional<RationalVector> missing;
};

Trial try_c(const FamilySpec &family, const RationalPolyhedron &body, std::int64_t c) {
    auto scaled = scale(newton_polyhedron(member_ideal(family, c, Exec::serial)), Rational(1, c));
    Trial t;
    t.equal = equal(scaled, body);
    if (!t.equal) {
        for (const auto &v : body.vertices())
            if (!contains(scaled, v))
                t.missing = v;
    }
    return t;
}

} // namespace

StabilizationReport stabilization_check(const FamilySpec &family, std::int64_t c_max) {
    if (c_max < 1)
        fail(ErrorKind::NonPositiveExponent, "c_max must be at least 1");
    const auto body = newton_okounkov_body(family);
    StabilizationReport report;
    report.c_max = c_max;

    const std::int64_t chunk = std::max(1, num_threads());
    for (std::int64_t start = 1; start <= c_max; start += chunk) {
        const std::int64_t stop = std::min(c_max, start + chunk - 1);
        std::vector<Trial> trials(static_cast<std::size_t>(stop - start + 1));
        std::vector<std::exception_ptr> errors(trials.size());
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t c = start; c <= stop; ++c) {
            const auto slot = static_cast<std::size_t>(c - start);
            try {
                trials[slot] = try_c(family, body, c);
            } catch (...) {
                errors[slot] = std::current_exception();
            }
        }
        for (std::size_t i = 0; i < trials.size(); ++i) {
            if (errors[i])
                std::rethrow_exception(errors[i]);
            const std::int64_t c = start + static_cast<std::int64_t>(i);
            if (trials[i].equal) {
                report.stabilized = true;
                report.c = c;
                report.witness.reset();
                return report;
            }
            report.witness = StabilizationWitness{c, trials[i].missing.value_or(RationalVector{})};
        }
    }
    return report;
}

std::size_t family_analytic_spread(const FamilySpec &family, std::int64_t c_max) {
    const auto report = stabilization_check(family, c_max);
    if (!report.stabilized)
        fail(ErrorKind::NotProvenNoetherian,
             "the body did not stabilize for any c <= " + std::to_string(c_max) +
                 ", so the Rees algebra is not known to be Noetherian");
    return mdc(newton_okounkov_body(family)) + 1;
}

bool closure_family_body_equality(const FamilySpec &family) {
    const auto body = newton_okounkov_body(family);
    for (std::int64_t k = 1; k <= 4; ++k) {
        const auto member = member_ideal(family, k);
        const Rational inv(1, k);
        const auto direct = scale(newton_polyhedron(member), inv);
        const auto closed = scale(newton_polyhedron(integral_closure(member)), inv);
        if (!equal(direct, closed) || !is_subset(closed, body))
            return false;
    }
    return true;
}

} // namespace nok
