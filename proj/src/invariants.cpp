#include "nok/invariants.hpp"
#include "nok/errors.hpp"

#include <algorithm>

namespace nok {

std::size_t analytic_spread(const MonomialIdeal &ideal) { return mdc(newton_polyhedron(ideal)) + 1; }

std::size_t symbolic_analytic_spread(const ClassifiedIdeal &ideal) {
    return mdc(ideal.symbolic()) + 1;
}

VertexConstants vertex_constants(const ClassifiedIdeal &ideal) {
    VertexConstants out;
    out.denoms = vertex_denominators(ideal.symbolic());
    out.c = 1;
    out.D = 1;
    for (const auto &d : out.denoms) {
        out.c = lcm(out.c, d);
        out.D = std::max(out.D, d);
    }
    return out;
}

bool verify_np_scaled_sp(const ClassifiedIdeal &ideal, std::int64_t d, NpSpRoute route) {
    require_sp(ideal);
    if (d < 1)
        fail(ErrorKind::NonPositiveExponent, "d must be at least 1");
    if (route == NpSpRoute::automatic)
        route = d <= 4 ? NpSpRoute::direct : NpSpRoute::vertex;
    if (route == NpSpRoute::direct) {
        const auto np = newton_polyhedron(symbolic_power(ideal, d));
        return equal(np, scale(ideal.symbolic(), Rational(d)));
    }
    // NP(I^(d)) is the hull of the lattice points of d SP, so it contains a
    // vertex of d SP exactly when that vertex is itself a lattice point.
    for (const auto &v : ideal.symbolic().vertices())
        for (const auto &x : v)
            if (Rational(x * d).get_den() != 1)
                return false;
    return true;
}

SvdBounds svd_bounds(const ClassifiedIdeal &ideal) {
    require_linear_power(ideal);
    const auto vc = vertex_constants(ideal);
    const auto ell_s = symbolic_analytic_spread(ideal);
    SvdBounds b;
    b.lower = vc.c;
    b.upper = Integer(static_cast<unsigned long>(ell_s - 1)) * vc.c;
    if (b.upper < vc.c) {
        b.upper = vc.c;
        b.clamped = true;
    }
    return b;
}

namespace {

Integer isqrt(const Integer &x) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

bool is_square(const Integer &x) { return mpz_perfect_square_p(x.get_mpz_t()) != 0; }

} // namespace

HadamardBound hadamard_bound(std::size_t nvars, std::size_t ell_s) {
    if (nvars == 0 || ell_s == 0)
        fail(ErrorKind::DimensionMismatch, "the Hadamard bound needs n >= 1 and l_s >= 1");
    HadamardBound hb;
    Integer num, den;
    mpz_ui_pow_ui(num.get_mpz_t(), nvars + 1, nvars + 1);
    mpz_ui_pow_ui(den.get_mpz_t(), 4, nvars);
    hb.h_squared = make_rational(num, den);

    const Integer l(static_cast<unsigned long>(ell_s));
    // floor(l sqrt(x)) = isqrt(floor(l^2 x)); for l >= 2 the maximum is l H - 1
    // because H >= 1.
    const Integer floor_lh = isqrt(floor(hb.h_squared * l * l));
    hb.floor_value = ell_s >= 2 ? floor_lh - 1 : floor_lh;

    const auto &a = hb.h_squared.get_num();
    const auto &b = hb.h_squared.get_den();
    if (is_square(a) && is_square(b)) {
        hb.h = Rational(isqrt(a), isqrt(b));
        hb.value = ell_s >= 2 ? Rational(l * *hb.h - 1) : *hb.h;
        hb.expression = to_string(*hb.value);
    } else if (ell_s >= 2) {
        hb.expression = to_string(l) + "*sqrt(" + to_string(hb.h_squared) + ")-1";
    } else {
        hb.expression = "sqrt(" + to_string(hb.h_squared) + ")";
    }
    return hb;
}

SgtBounds sgt_bounds(const ClassifiedIdeal &ideal) {
    require_linear_power(ideal);
    const auto vc = vertex_constants(ideal);
    const auto ell_s = symbolic_analytic_spread(ideal);
    const Integer l(static_cast<unsigned long>(ell_s));
    SgtBounds s;
    s.general = std::max<Integer>(l * vc.D - 1, vc.D);
    if (ideal.kind() == IdealKind::Squarefree && np_equals_sp(ideal))
        s.np_eq_sp = std::max<Integer>(l - 2, 1);
    s.hadamard = hadamard_bound(ideal.nvars(), ell_s);
    return s;
}

bool boundC_check(const ClassifiedIdeal &ideal, const std::set<std::int64_t> &hilbert_degrees) {
    const auto vc = vertex_constants(ideal);
    Integer l = 1;
    for (auto d : hilbert_degrees) {
        if (d < 1)
            return false;
        l = lcm(l, Integer(static_cast<long>(d)));
    }
    if (l % vc.c != 0)
        return false;
    for (const auto &d : vc.denoms)
        if (!hilbert_degrees.contains(to_int64(d)))
            return false;
    return true;
}

InvariantReport compute_invariants(const ClassifiedIdeal &ideal) {
    require_sp(ideal);
    InvariantReport r;
    r.ell = analytic_spread(ideal.ideal());
    r.ell_s = symbolic_analytic_spread(ideal);
    auto vc = vertex_constants(ideal);
    r.vertex_denoms = std::move(vc.denoms);
    r.c = vc.c;
    r.D = vc.D;
    if (ideal.linear_power_type()) {
        r.svd = svd_bounds(ideal);
        r.sgt = sgt_bounds(ideal);
    }
    return r;
}

} // namespace nok
