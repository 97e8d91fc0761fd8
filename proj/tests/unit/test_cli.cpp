#include "helpers.hpp"
#include "nok/cli.hpp"
#include "nok/io.hpp"
#include "nok/polyhedron.hpp"
#include "properties.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <sys/wait.h>

using namespace nok;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string ideal(const std::string &name) { return props::fixture_path("ideals/" + name + ".nok"); }
std::string family(const std::string &name) { return props::fixture_path("families/" + name + ".nok"); }

} // namespace

TEST_CASE("text reports") {
    auto r = run({"sp", ideal("triangle")});
    CHECK(r.code == 0);
    CHECK(r.out.find("vertices (4):") != std::string::npos);
    CHECK(r.out.find("(1/2,1/2,1/2)") != std::string::npos);
    r = run({"constants", ideal("c5cone")});
    CHECK(r.code == 0);
    CHECK(r.out.find("c: 30") != std::string::npos);
    r = run({"member", ideal("mprimary"), "--monomial", "x^3*y"});
    CHECK(r.code == 0);
    CHECK(r.out.find("in closure of I^1: yes") != std::string::npos);
    CHECK(r.out.find("in I^(1): no") != std::string::npos);
    r = run({"stabilize", family("ceiling"), "--cmax", "10"});
    CHECK(r.code == 0);
    CHECK(r.out.find("not stabilized up to 10") != std::string::npos);
    CHECK(r.out.find("witness vertex (1/2,0)") != std::string::npos);
    CHECK(r.out.find("note: ") != std::string::npos);
    r = run({"veronese", ideal("c5")});
    CHECK(r.code == 0);
    CHECK(r.out.find("svd candidate: 3") != std::string::npos);
    CHECK(r.out.find("note: bounded check, k_max=4") != std::string::npos);
}

TEST_CASE("JSON reports") {
    auto r = run({"--json", "symbolic-power", ideal("triangle"), "-k", "2"});
    REQUIRE(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["command"] == "symbolic-power");
    CHECK(j["options"]["k"] == 2);
    CHECK(j["input"]["digest"] == "fnv1a64:" + fnv1a_digest(read_file(ideal("triangle"))));
    CHECK(ideal_from_json(j["results"]["ideal"]) == MonomialIdeal(3, {{2, 2, 0}, {0, 2, 2}, {2, 0, 2}, {1, 1, 1}}));

    r = run({"--json", "np", ideal("triangle")});
    j = Json::parse(r.out);
    CHECK(equal(polyhedron_from_json(j["results"]["polyhedron"]), props::load_ideal_fixture("triangle").ideal.newton()));

    r = run({"--json", "hilbert", ideal("c5")});
    j = Json::parse(r.out);
    CHECK(j["results"]["hilbert_basis"]["sgt"] == 3);

    r = run({"--json", "family-body", family("ceiling")});
    j = Json::parse(r.out);
    CHECK(j["results"]["rate"] == "1/2");

    for (const auto &verb : {"np", "sp", "spread", "constants", "symbolic-power", "real-power", "hilbert",
                             "veronese", "normal-rees", "np-eq-sp"}) {
        INFO(verb);
        r = run({"--json", verb, ideal("triangle")});
        CHECK(r.code == 0);
        CHECK(Json::parse(r.out)["command"] == verb);
    }
    for (const auto &verb : {"family-body", "stabilize"}) {
        r = run({"--json", verb, family("symbolic_triangle")});
        CHECK(r.code == 0);
    }
}

TEST_CASE("output does not depend on the number of jobs") {
    const auto one = run({"--json", "--jobs", "1", "hilbert", ideal("c5cone")});
    const auto four = run({"--json", "--jobs", "4", "hilbert", ideal("c5cone")});
    CHECK(one.code == 0);
    CHECK(one.out == four.out);
    CHECK(Json::parse(one.out)["results"]["hilbert_basis"]["elements"].size() == 18);
    const auto s1 = run({"--json", "--jobs", "1", "stabilize", family("intersection_triangle")});
    const auto s3 = run({"--json", "--jobs", "3", "stabilize", family("intersection_triangle")});
    CHECK(s1.out == s3.out);
}

TEST_CASE("exit codes") {
    CHECK(run({"sp", "/nonexistent.nok"}).code == 2);
    CHECK(run({"frobnicate", ideal("triangle")}).code == 2);
    CHECK(run({"sp"}).code == 2);
    CHECK(run({"symbolic-power", ideal("triangle"), "-k", "0"}).code == 2);
    CHECK(run({"member", ideal("triangle"), "-m", "x*w"}).code == 2);
    CHECK(run({"real-power", ideal("triangle"), "-r", "abc"}).code == 2);
    CHECK(run({"real-power", ideal("triangle"), "-r", "-1"}).code == 1);
    auto r = run({"hilbert", ideal("unsupported")});
    CHECK(r.code == 1);
    CHECK(r.err.find("UnsupportedIdealClass") != std::string::npos);
    CHECK(run({"hilbert", ideal("mprimary")}).code == 1);
    CHECK(run({"spread", ideal("unsupported")}).code == 0);

    const auto previous = max_rays();
    ::setenv("NOK_MAX_VERTICES", "2", 1);
    CHECK(run({"sp", ideal("c5cone")}).code == 3);
    ::setenv("NOK_MAX_VERTICES", "zero", 1);
    CHECK(run({"sp", ideal("c5cone")}).code == 2);
    ::unsetenv("NOK_MAX_VERTICES");
    set_max_rays(previous);
    CHECK(run({"sp", ideal("c5cone")}).code == 0);
}

TEST_CASE("the installed binary reports through its exit status") {
    const std::string bin = NOK_CLI_PATH;
    const auto status = [&](const std::string &args) {
        const int raw = std::system((bin + " " + args + " > /dev/null 2>&1").c_str());
        return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    };
    CHECK(status("sp " + ideal("triangle")) == 0);
    CHECK(status("--json constants " + ideal("cfromsp1")) == 0);
    CHECK(status("hilbert " + ideal("unsupported")) == 1);
    CHECK(status("sp /nonexistent.nok") == 2);
    CHECK(std::system(("NOK_MAX_VERTICES=2 " + bin + " sp " + ideal("c5cone") + " > /dev/null 2>&1; test $? -eq 3").c_str()) == 0);
}
