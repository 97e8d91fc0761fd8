#include "nok/simis.hpp"
#include "nok/errors.hpp"
#include "nok/invariants.hpp"

#include <algorithm>
#include <functional>

namespace nok {

namespace {

/// Sum of the `count` largest entries.
std::int64_t top_sum(std::vector<std::int64_t> values, std::size_t count) {
    std::sort(values.begin(), values.end(), std::greater<>());
    std::int64_t s = 0;
    for (std::size_t i = 0; i < values.size() && i < count; ++i)
        s += values[i];
    return s;
}

} // namespace

std::vector<HilbertElement> cone_hilbert_basis(const RationalPolyhedron &p, std::int64_t bound,
                                               Exec exec) {
    const std::size_t n = p.nvars();
    const std::size_t ell = mdc(p) + 1;

    // An irreducible (a, k) is sum mu_i (d_i v_i, d_i) + sum w_j (e_j, 0) with
    // every coefficient below 1 and at most ell vertices v_i taken from one
    // compact face, unless it is one of the (d_i v_i, d_i) itself. That caps
    // both a_j and k without changing the result.
    std::vector<std::vector<std::int64_t>> columns(n);
    std::vector<std::int64_t> denoms;
    for (const auto &v : p.vertices()) {
        const auto d = to_int64(denominator_lcm(v));
        denoms.push_back(d);
        for (std::size_t j = 0; j < n; ++j)
            columns[j].push_back(to_int64(Integer(v[j] * d)));
    }
    std::vector<Exponent> box(n);
    for (std::size_t j = 0; j < n; ++j)
        box[j] = top_sum(columns[j], ell);
    const std::int64_t degree_cap =
        std::max(top_sum(denoms, ell) - 1, *std::max_element(denoms.begin(), denoms.end()));

    const auto base = integer_up_set(p);
    std::vector<HilbertElement> accepted;
    for (std::int64_t k = 1; k <= std::min(bound, degree_cap); ++k) {
        auto set = base;
        for (auto &b : set.offsets)
            b *= k;
        auto limit = set.minimal_point_bound();
        for (std::size_t j = 0; j < n; ++j)
            limit[j] = std::min(limit[j], box[j]);

        // (a, k) reduces iff (a, k) - (b, j) lies in the cone for an accepted
        // (b, j) of lower degree.
        const PointFilter irreducible = [&](std::span<const Exponent> a) {
            for (const auto &h : accepted) {
                const auto diff = k - h.degree;
                bool below = true;
                for (std::size_t j = 0; j < n && below; ++j)
                    below = h.exponent[j] <= a[j];
                if (!below)
                    continue;
                bool inside = true;
                for (std::size_t f = 0; f < base.normals.size() && inside; ++f) {
                    std::int64_t s = 0;
                    for (std::size_t j = 0; j < n; ++j)
                        s += base.normals[f][j] * (a[j] - h.exponent[j]);
                    inside = s >= base.offsets[f] * diff;
                }
                if (inside)
                    return false;
            }
            return true;
        };
        for (auto &a : enumerate_minimal_points(set, limit, exec, irreducible))
            accepted.push_back(HilbertElement{std::move(a), k});
    }
    return accepted;
}

HilbertBasisReport hilbert_basis(const ClassifiedIdeal &ideal, std::optional<std::int64_t> degree_bound,
                                 Exec exec) {
    require_linear_power(ideal);
    const auto vc = vertex_constants(ideal);
    const auto ell_s = static_cast<std::int64_t>(symbolic_analytic_spread(ideal));
    const auto D = to_int64(vc.D);

    HilbertBasisReport r;
    r.theorem_bound = std::max(ell_s * D - 1, D);
    r.degree_bound_used = degree_bound.value_or(r.theorem_bound);
    if (r.degree_bound_used < 1)
        fail(ErrorKind::NonPositiveExponent, "the degree bound must be at least 1");
    r.exhaustive = r.degree_bound_used >= r.theorem_bound;
    r.elements = cone_hilbert_basis(ideal.symbolic(), r.degree_bound_used, exec);
    for (const auto &e : r.elements) {
        r.degrees.insert(e.degree);
        r.sgt = std::max(r.sgt, e.degree);
    }
    return r;
}

std::int64_t sgt_exact(const ClassifiedIdeal &ideal, Exec exec) {
    return hilbert_basis(ideal, std::nullopt, exec).sgt;
}

bool veronese_verify(const ClassifiedIdeal &ideal, std::int64_t d, std::int64_t k_max, Exec exec) {
    require_sp(ideal);
    if (d < 1 || k_max < 1)
        fail(ErrorKind::NonPositiveExponent, "d and k_max must be at least 1");
    const auto base = symbolic_power(ideal, d, exec);
    for (std::int64_t k = 2; k <= k_max; ++k)
        if (symbolic_power(ideal, d * k, exec) != power(base, k))
            return false;
    return true;
}

SvdProbe svd_probe(const ClassifiedIdeal &ideal, std::int64_t k_max, Exec exec) {
    const auto window = svd_bounds(ideal);
    SvdProbe probe;
    probe.certified_upper = window.upper;
    probe.k_max = k_max;
    for (Integer m = window.lower; m <= window.upper; m += window.lower)
        if (veronese_verify(ideal, to_int64(m), k_max, exec)) {
            probe.candidate = m;
            return probe;
        }
    fail(ErrorKind::NoCandidate, "no multiple of c in [" + to_string(window.lower) + ", " +
                                     to_string(window.upper) + "] passed the Veronese check");
}

NormalReesDegrees normal_rees_generator_degrees(const MonomialIdeal &ideal, Exec exec) {
    const auto np = newton_polyhedron(ideal);
    NormalReesDegrees out;
    out.bound = std::max<std::int64_t>(static_cast<std::int64_t>(mdc(np)), 1);
    for (const auto &e : cone_hilbert_basis(np, out.bound, exec))
        out.degrees.insert(e.degree);
    return out;
}

} // namespace nok
