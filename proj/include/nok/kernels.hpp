#pragma once

// Data-parallel inner loops. Each kernel has a serial reference path and an
// OpenMP path selected by `Exec`; both return identical, sorted results.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "nok/ideal.hpp"

namespace nok {

enum class Exec { serial, parallel };

/// Thread count used by Exec::parallel (0 = OpenMP default).
void set_num_threads(int n);
int num_threads();

/// Componentwise-minimal elements, deduplicated, in lexicographic order.
std::vector<ExponentVector> minimal_elements(std::vector<ExponentVector> points,
                                             Exec exec = Exec::parallel);

/// {x in Z^n_{>=0} : normals * x >= offsets} with nonnegative normals, in
/// machine integers for the lattice enumeration loops.
struct IntegerUpSet {
    std::size_t nvars = 0;
    std::vector<std::vector<std::int64_t>> normals;
    std::vector<std::int64_t> offsets;

    bool contains(std::span<const Exponent> x) const;
    /// a_j <= max_f ceil(b_f / N_fj) holds for every minimal lattice point.
    std::vector<Exponent> minimal_point_bound() const;
};

using PointFilter = std::function<bool(std::span<const Exponent>)>;

/// The <=-minimal lattice points of `set` inside the box [0, box]. Points
/// rejected by `keep` (when given) are dropped; `keep` must be thread-safe.
std::vector<ExponentVector> enumerate_minimal_points(const IntegerUpSet &set,
                                                     std::span<const Exponent> box,
                                                     Exec exec = Exec::parallel,
                                                     const PointFilter &keep = {});

} // namespace nok
