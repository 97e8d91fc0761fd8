#pragma once

// Text formats for ideals and families, and JSON serialization.
//
// Ideal files:
//   vars: x,y,z
//   gens: x*y, y*z, z*x          (or gens: [1,1,0], [0,1,1])
//   components: (x,y)^2, (y,z)^3
// Family files start with `family: power|symbolic|intersection|ceiling`,
// then `vars:` and one ideal line per component; ceiling adds `alpha:` and
// `beta:`. `#` starts a comment.

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "nok/families.hpp"
#include "nok/invariants.hpp"
#include "nok/simis.hpp"

namespace nok {

using Json = nlohmann::ordered_json;

struct IdealInput {
    std::vector<std::string> vars;
    ClassifiedIdeal ideal;
};

struct FamilyInput {
    std::vector<std::string> vars;
    FamilySpec family;
};

IdealInput parse_ideal(std::string_view text);
FamilyInput parse_family(std::string_view text);

/// `x^2*y`, `1`, or `[2,1,0]`.
ExponentVector parse_monomial(std::string_view text, const std::vector<std::string> &vars);

std::string read_file(const std::filesystem::path &path);

/// 64-bit FNV-1a, as 16 hex digits.
std::string fnv1a_digest(std::string_view bytes);

std::string format_monomial(const ExponentVector &a, const std::vector<std::string> &vars);
std::string format_vector(const RationalVector &v);
std::string format_vector(const ExponentVector &v);

// Rationals are reduced "p/q" strings ("p" for integers), and so are exact
// invariants such as c and D. Facet coefficients and exponents are JSON
// numbers (strings if they exceed 64 bits).
Json rational_json(const Rational &q);
Json integer_json(const Integer &z);
Rational rational_from_json(const Json &j);
Integer integer_from_json(const Json &j);

Json to_json(const RationalPolyhedron &p);
/// Rebuilds from the facets and checks the listed vertices agree.
RationalPolyhedron polyhedron_from_json(const Json &j);

Json to_json(const MonomialIdeal &ideal);
MonomialIdeal ideal_from_json(const Json &j);

Json to_json(const ConvexCertificate &cert, const RationalPolyhedron &p);
Json to_json(const HilbertBasisReport &report);
Json to_json(const InvariantReport &report);
Json to_json(const StabilizationReport &report);

} // namespace nok
