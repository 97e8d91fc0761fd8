#include "helpers.hpp"
#include "nok/io.hpp"
#include "properties.hpp"

using namespace nok;

namespace {

template <class F> std::pair<std::size_t, std::size_t> parse_position(F &&f) {
    try {
        f();
    } catch (const ParseError &e) {
        return {e.line(), e.column()};
    }
    return {0, 0};
}

} // namespace

TEST_CASE("ideal files") {
    const auto in = parse_ideal("# comment\nvars: x, y, z\ngens: x*y, y*z, [1,0,1]  # trailing\n");
    CHECK(in.vars == std::vector<std::string>{"x", "y", "z"});
    CHECK(in.ideal.kind() == IdealKind::Squarefree);
    CHECK(in.ideal.ideal() == MonomialIdeal(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}));

    const auto comps = parse_ideal("vars: x,y,z\ncomponents: (x,y)^2, (y,z)^3, (z,x)^4\n");
    CHECK(comps.ideal.kind() == IdealKind::LinearPower);
    CHECK(comps.ideal.decomposition()->components().size() == 3);
    CHECK(parse_ideal("vars: x,y\ngens: x^4, x*y^2, y^3").ideal.kind() == IdealKind::MPrimary);
    CHECK(parse_monomial("x^2*y", {"x", "y"}) == ExponentVector{2, 1});
    CHECK(parse_monomial("x*x", {"x", "y"}) == ExponentVector{2, 0});
    CHECK(parse_monomial("1", {"x", "y"}) == ExponentVector{0, 0});
    CHECK(parse_monomial("[3, 0]", {"x", "y"}) == ExponentVector{3, 0});
}

TEST_CASE("parse errors carry positions and kinds") {
    CHECK(error_kind([] { parse_ideal("vars: x,y\ngens: x*y, y*w"); }) == ErrorKind::UnknownVariable);
    CHECK(parse_position([] { parse_ideal("vars: x,y\ngens: x*y, y*w"); }) == std::pair<std::size_t, std::size_t>{2, 14});
    CHECK(error_kind([] { parse_ideal("vars: x,y\ncomponents: (x,y)^0"); }) == ErrorKind::NonPositiveMultiplicity);
    CHECK(error_kind([] { parse_ideal("vars: x,y\ncomponents: (x,y)^-2"); }) == ErrorKind::NonPositiveMultiplicity);
    CHECK(error_kind([] { parse_ideal("vars: x,y\ncomponents: (x,y"); }) == ErrorKind::ParseError);
    CHECK(error_kind([] { parse_ideal("gens: x"); }) == ErrorKind::ParseError);
    CHECK(error_kind([] { parse_ideal(""); }) == ErrorKind::ParseError);
    CHECK(error_kind([] { parse_ideal("vars: x,x\ngens: x"); }) == ErrorKind::ParseError);
    CHECK(error_kind([] { parse_ideal("vars: x,y\ngens: x^a"); }) == ErrorKind::ParseError);
    CHECK(error_kind([] { parse_ideal("vars: x,y\ngens: [1,2,3]"); }) == ErrorKind::ParseError);
    CHECK(error_kind([] { parse_ideal("vars: x,y\ngens: x,\n"); }) == ErrorKind::ParseError);
    CHECK(parse_position([] { parse_ideal("vars: x,y\n\nnonsense\n"); }) == std::pair<std::size_t, std::size_t>{3, 1});
    CHECK(error_kind([] { parse_ideal("vars: x,y\ngens: x\ngens: y"); }) == ErrorKind::ParseError);
    CHECK(error_kind([] { read_file("/nonexistent/file.nok"); }) == ErrorKind::EmptyInput);
}

TEST_CASE("family files") {
    const auto f = parse_family(read_file(props::fixture_path("families/ceiling.nok")));
    const auto *ceiling = std::get_if<CeilingPowerFamily>(&f.family);
    REQUIRE(ceiling != nullptr);
    CHECK(ceiling->alpha == Rational(1, 2));
    CHECK(ceiling->beta == 1);
    const auto meet = parse_family(read_file(props::fixture_path("families/intersection_triangle.nok")));
    CHECK(std::get<IntersectionFamily>(meet.family).components.size() == 3);
    CHECK(error_kind([] { parse_family("family: ceiling\nvars: x,y\ngens: x,y\nalpha: 3/4\nbeta: -1/2"); }) ==
          ErrorKind::NotGradedFamily);
    CHECK(error_kind([] { parse_family("family: ceiling\nvars: x\ngens: x\nalpha: 1/2"); }) == ErrorKind::ParseError);
    CHECK(error_kind([] { parse_family("family: weird\nvars: x\ngens: x"); }) == ErrorKind::ParseError);
    CHECK(error_kind([] { parse_family("family: power\nvars: x\ngens: x\ngens: x^2"); }) == ErrorKind::ParseError);
    CHECK(error_kind([] { parse_family("family: ceiling\nvars: x\ngens: x\nalpha: 1/0\nbeta: 0"); }) ==
          ErrorKind::ParseError);
}

TEST_CASE("digest and formatting") {
    CHECK(fnv1a_digest("") == "cbf29ce484222325");
    CHECK(fnv1a_digest("a") == "af63dc4c8601ec8c");
    CHECK(format_monomial(ExponentVector{2, 0, 1}, {"x", "y", "z"}) == "x^2*z");
    CHECK(format_monomial(ExponentVector{0, 0}, {"x", "y"}) == "1");
    CHECK(format_vector(rv({"1/2", "0"})) == "(1/2,0)");
}

TEST_CASE("JSON round trips") {
    for (const auto &f : props::supported_ideal_fixtures()) {
        INFO(f.name);
        const auto &sp = f.input.ideal.symbolic();
        const auto j = to_json(sp);
        CHECK(equal(polyhedron_from_json(j), sp));
        CHECK(polyhedron_from_json(Json::parse(j.dump())).vertices() == sp.vertices());
        const auto &ideal = f.input.ideal.ideal();
        CHECK(ideal_from_json(Json::parse(to_json(ideal).dump())) == ideal);
    }
    const auto j = to_json(props::load_ideal_fixture("triangle").ideal.symbolic());
    CHECK(j["vertices"][1][0] == "1/2");
    CHECK(j["facets"][0]["normal"].is_array());
    CHECK(rational_json(Rational(-3, 6)) == "-1/2");
    CHECK(rational_from_json(Json("7/3")) == Rational(7, 3));
    CHECK(integer_from_json(Json("30")) == 30);
    CHECK(error_kind([] { integer_from_json(Json("1/2")); }) == ErrorKind::ParseError);

    auto broken = j;
    broken["vertices"][0][0] = "5";
    CHECK(error_kind([&] { polyhedron_from_json(broken); }) == ErrorKind::ParseError);
    CHECK(error_kind([] { polyhedron_from_json(Json::object()); }) == ErrorKind::ParseError);
}

TEST_CASE("report serialization") {
    const auto tri = props::load_ideal_fixture("triangle");
    const auto inv = to_json(compute_invariants(tri.ideal));
    CHECK(inv["c"] == "2");
    CHECK(inv["D"] == "2");
    const auto hb = to_json(hilbert_basis(tri.ideal));
    CHECK(hb["sgt"] == 2);
    const auto st = to_json(stabilization_check(props::load_family_fixture("ceiling").family, 4));
    CHECK(st["stabilized"] == false);
}
