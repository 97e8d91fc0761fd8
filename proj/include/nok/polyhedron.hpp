#pragma once

// Exact rational up-set polyhedra P = conv(V) + R^n_{>=0}. Both
// representations are kept: irredundant primitive half-spaces and exact
// vertices. Rays are always the standard unit vectors.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nok/arith.hpp"
#include "nok/ideal.hpp"
#include "nok/kernels.hpp"

namespace nok {

/// {x : <normal, x> >= offset}, primitive (gcd of normal and offset is 1).
struct HalfSpace {
    IntVector normal;
    Integer offset;

    HalfSpace() = default;
    HalfSpace(IntVector normal, Integer offset);

    /// x_j >= 0 in n variables.
    static HalfSpace coordinate(std::size_t n, std::size_t j);

    bool satisfied_by(const RationalVector &x) const;
    bool tight_at(const RationalVector &x) const;
    Rational evaluate(const RationalVector &x) const;

    bool operator==(const HalfSpace &) const = default;
};

struct VRep {
    std::vector<RationalVector> vertices; // lexicographic order
    std::vector<IntVector> rays;          // primitive
};

/// A face given by its incidences; vertices and facets index into the owner.
struct FaceDescriptor {
    std::vector<std::size_t> tight_constraints; // indices into constraints()
    std::vector<std::size_t> vertices;
    std::size_t dim = 0;
    bool compact = false;
};

/// Cap on double-description intermediate rays (NOK_MAX_VERTICES).
void set_max_rays(std::size_t limit);
std::size_t max_rays();

class RationalPolyhedron {
  public:
    std::size_t nvars() const noexcept { return nvars_; }
    const std::vector<HalfSpace> &facets() const noexcept { return facets_; }
    const std::vector<RationalVector> &vertices() const noexcept { return vrep_.vertices; }
    const std::vector<IntVector> &rays() const noexcept { return vrep_.rays; }
    const VRep &vrep() const noexcept { return vrep_; }
    std::size_t dim() const noexcept { return nvars_; }

    /// Facets plus every coordinate half-space x_j >= 0 that is not already a
    /// facet. These are the valid inequalities used for face incidences.
    std::vector<HalfSpace> constraints() const;

    bool operator==(const RationalPolyhedron &) const = default;

  private:
    friend RationalPolyhedron from_halfspaces(std::vector<HalfSpace> hs, std::size_t n);
    RationalPolyhedron() = default;

    std::size_t nvars_ = 0;
    std::vector<HalfSpace> facets_;
    VRep vrep_;
};

/// conv(points) + R^n_{>=0}.
RationalPolyhedron hull_up_set(const std::vector<RationalVector> &points, std::size_t n);
RationalPolyhedron hull_up_set(const std::vector<ExponentVector> &points, std::size_t n);

/// Requires every x_i >= 0 (possibly as x_i >= b with b >= 0) and nonnegative
/// normals. Throws InfeasibleSystem, MissingOrthantConstraints, NotUpSet.
RationalPolyhedron from_halfspaces(std::vector<HalfSpace> hs, std::size_t n);

bool contains(const RationalPolyhedron &p, const RationalVector &x);
bool contains(const RationalPolyhedron &p, const ExponentVector &x);
/// P is a subset of Q.
bool is_subset(const RationalPolyhedron &p, const RationalPolyhedron &q);
bool equal(const RationalPolyhedron &p, const RationalPolyhedron &q);
RationalPolyhedron scale(const RationalPolyhedron &p, const Rational &t);
RationalPolyhedron intersect_polyhedra(std::span<const RationalPolyhedron> ps);

/// All compact faces, each once, found as closures of vertex sets.
std::vector<FaceDescriptor> compact_faces(const RationalPolyhedron &p);
/// Maximum dimension of a compact face.
std::size_t mdc(const RationalPolyhedron &p);

/// Affine dimension of a set of points.
std::size_t affine_dimension(const std::vector<RationalVector> &points);

struct PointDecomposition {
    RationalVector on_compact_face; // u
    RationalVector slack;           // w >= 0
    FaceDescriptor face;            // a compact face containing u
};

/// v = u + w with u on a compact face and w >= 0.
PointDecomposition decompose_point(const RationalPolyhedron &p, const RationalVector &v);

/// Convex weights over vertices of a compact face writing u exactly.
struct ConvexCertificate {
    std::vector<std::size_t> vertex_indices;
    std::vector<Rational> weights;
    RationalVector slack;
};

/// Certificate that x lies in P: x = sum lambda_i v_i + w, lambda a convex
/// combination of vertices of one compact face, w >= 0.
ConvexCertificate membership_certificate(const RationalPolyhedron &p, const RationalVector &x);

/// Integer form of P for lattice enumeration (offsets rounded up).
IntegerUpSet integer_up_set(const RationalPolyhedron &p);

/// <=-minimal points of P cap Z^n. With an explicit box smaller than the
/// derived bound, throws BoundTooSmall if a minimal point lies outside it.
std::vector<ExponentVector> minimal_lattice_points(const RationalPolyhedron &p,
                                                   std::optional<std::vector<Exponent>> box = {},
                                                   Exec exec = Exec::parallel);

/// Denominator lcm d_i for every vertex, in vertex order.
std::vector<Integer> vertex_denominators(const RationalPolyhedron &p);

} // namespace nok
