#pragma once

// Numeric invariants read off Newton and symbolic polyhedra.

#include <optional>
#include <set>
#include <string>

#include "nok/bodies.hpp"

namespace nok {

std::size_t analytic_spread(const MonomialIdeal &ideal);
std::size_t symbolic_analytic_spread(const ClassifiedIdeal &ideal);

struct VertexConstants {
    std::vector<Integer> denoms; // per SP vertex, in vertex order
    Integer c;                   // lcm
    Integer D;                   // max
};

VertexConstants vertex_constants(const ClassifiedIdeal &ideal);

enum class NpSpRoute {
    /// Expand I^(d), take its Newton polyhedron, compare with d SP.
    direct,
    /// NP(I^(d)) = d SP iff every vertex of d SP is a lattice point.
    vertex,
    /// direct for small d, vertex otherwise.
    automatic,
};

/// NP(I^(d)) = d SP(I).
bool verify_np_scaled_sp(const ClassifiedIdeal &ideal, std::int64_t d,
                         NpSpRoute route = NpSpRoute::automatic);

struct SvdBounds {
    Integer lower;
    Integer upper;
    /// (l_s - 1) c fell below c and was raised to c.
    bool clamped = false;
};

SvdBounds svd_bounds(const ClassifiedIdeal &ideal);

/// max{l_s H - 1, H} with H = (n+1)^((n+1)/2) / 2^n. H is the square root of
/// a rational and is irrational unless that rational is a square.
struct HadamardBound {
    Rational h_squared;
    std::optional<Rational> h;     // when rational
    std::optional<Rational> value; // when rational
    Integer floor_value;           // floor of the bound, always exact
    std::string expression;
};

HadamardBound hadamard_bound(std::size_t nvars, std::size_t ell_s);

struct SgtBounds {
    Integer general;                 // max{l_s D - 1, D}
    std::optional<Integer> np_eq_sp; // max{l_s - 2, 1}
    HadamardBound hadamard;
};

SgtBounds sgt_bounds(const ClassifiedIdeal &ideal);

/// c divides lcm(degrees), and every d_i is one of the degrees.
bool boundC_check(const ClassifiedIdeal &ideal, const std::set<std::int64_t> &hilbert_degrees);

struct InvariantReport {
    std::size_t ell = 0;
    std::optional<std::size_t> ell_s;
    std::vector<Integer> vertex_denoms;
    Integer c;
    Integer D;
    /// Present for squarefree and linear-power ideals.
    std::optional<SvdBounds> svd;
    std::optional<SgtBounds> sgt;
};

InvariantReport compute_invariants(const ClassifiedIdeal &ideal);

} // namespace nok
