#include "nok/cli.hpp"
#include "nok/errors.hpp"
#include "nok/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>

namespace nok {

namespace {

struct Options {
    std::string path;
    bool json = false;
    int jobs = 0;
    std::int64_t k = 1;
    std::string r = "1";
    std::string monomial;
    std::optional<std::int64_t> degree_bound;
    std::optional<std::int64_t> d;
    std::int64_t k_max = 4;
    std::int64_t c_max = 30;
};

struct Report {
    std::string command;
    std::string path;
    std::string digest;
    Json options = Json::object();
    Json results = Json::object();
    std::vector<std::string> notes;
    std::string text;
};

class InputError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::string facet_text(const HalfSpace &h, const std::vector<std::string> &vars) {
    std::string out;
    for (std::size_t j = 0; j < h.normal.size(); ++j) {
        if (h.normal[j] == 0)
            continue;
        if (!out.empty())
            out += " + ";
        if (h.normal[j] != 1)
            out += to_string(h.normal[j]) + "*";
        out += vars[j];
    }
    return out + " >= " + to_string(h.offset);
}

std::string polyhedron_text(const RationalPolyhedron &p, const std::vector<std::string> &vars) {
    std::string out = "vertices (" + std::to_string(p.vertices().size()) + "):\n";
    for (const auto &v : p.vertices())
        out += "  " + format_vector(v) + "\n";
    out += "facets (" + std::to_string(p.facets().size()) + "):\n";
    for (const auto &h : p.facets())
        out += "  " + facet_text(h, vars) + "\n";
    out += "mdc: " + std::to_string(mdc(p)) + "\n";
    return out;
}

std::string ideal_text(const MonomialIdeal &ideal, const std::vector<std::string> &vars) {
    std::string out = "generators (" + std::to_string(ideal.generators().size()) + "):\n";
    for (const auto &g : ideal.generators())
        out += "  " + format_monomial(g, vars) + "\n";
    return out;
}

std::string join_set(const std::set<std::int64_t> &s) {
    std::string out = "{";
    for (auto it = s.begin(); it != s.end(); ++it)
        out += (it == s.begin() ? "" : ",") + std::to_string(*it);
    return out + "}";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string load_text(const std::string &path) {
    try {
        return read_file(path);
    } catch (const Error &e) {
        throw InputError(e.what());
    }
}

IdealInput load_ideal(Report &rep) {
    const auto text = load_text(rep.path);
    rep.digest = fnv1a_digest(text);
    auto in = parse_ideal(text);
    rep.results["kind"] = std::string(to_string(in.ideal.kind()));
    rep.results["vars"] = in.vars;
    return in;
}

FamilyInput load_family(Report &rep) {
    const auto text = load_text(rep.path);
    rep.digest = fnv1a_digest(text);
    auto in = parse_family(text);
    rep.results["family"] = std::string(family_name(in.family));
    rep.results["vars"] = in.vars;
    return in;
}

using Verb = std::function<void(const Options &, Report &)>;

void verb_np(const Options &, Report &rep) {
    auto in = load_ideal(rep);
    const auto &p = in.ideal.newton();
    rep.results["polyhedron"] = to_json(p);
    rep.text = "Newton polyhedron\n" + polyhedron_text(p, in.vars);
}

void verb_sp(const Options &, Report &rep) {
    auto in = load_ideal(rep);
    const auto &p = in.ideal.symbolic();
    rep.results["polyhedron"] = to_json(p);
    rep.text = "symbolic polyhedron (" + std::string(to_string(in.ideal.kind())) + ")\n" +
               polyhedron_text(p, in.vars);
}

void verb_spread(const Options &, Report &rep) {
    auto in = load_ideal(rep);
    const auto ell = analytic_spread(in.ideal.ideal());
    rep.results["ell"] = ell;
    rep.text = "analytic spread: " + std::to_string(ell) + "\n";
    if (in.ideal.supports_sp()) {
        const auto ell_s = symbolic_analytic_spread(in.ideal);
        rep.results["ell_s"] = ell_s;
        rep.text += "symbolic analytic spread: " + std::to_string(ell_s) + "\n";
    } else {
        rep.notes.push_back("symbolic analytic spread skipped: unsupported ideal class");
    }
}

void verb_constants(const Options &, Report &rep) {
    auto in = load_ideal(rep);
    const auto r = compute_invariants(in.ideal);
    rep.results["invariants"] = to_json(r);
    std::string t;
    t += "ell: " + std::to_string(r.ell) + "\n";
    t += "ell_s: " + std::to_string(*r.ell_s) + "\n";
    t += "vertex denominators:";
    for (const auto &d : r.vertex_denoms)
        t += " " + to_string(d);
    t += "\nc: " + to_string(r.c) + "\nD: " + to_string(r.D) + "\n";
    if (r.svd) {
        t += "svd window: [" + to_string(r.svd->lower) + ", " + to_string(r.svd->upper) +
             "], multiples of c\n";
        if (r.svd->clamped)
            rep.notes.push_back("svd upper bound (l_s - 1) c raised to c because l_s = 1");
    }
    if (r.sgt) {
        t += "sgt bound: " + to_string(r.sgt->general) + "\n";
        if (r.sgt->np_eq_sp)
            t += "sgt bound (NP = SP, squarefree): " + to_string(*r.sgt->np_eq_sp) + "\n";
        t += "Hadamard-type bound: " + r.sgt->hadamard.expression + " (floor " +
             to_string(r.sgt->hadamard.floor_value) + ")\n";
    } else {
        rep.notes.push_back("svd and sgt bounds need a squarefree or linear-power ideal");
    }
    rep.text = std::move(t);
}

void verb_symbolic_power(const Options &o, Report &rep) {
    auto in = load_ideal(rep);
    rep.options["k"] = o.k;
    const auto ideal = symbolic_power(in.ideal, o.k);
    rep.results["ideal"] = to_json(ideal);
    rep.text = "symbolic power k = " + std::to_string(o.k) + "\n" + ideal_text(ideal, in.vars);
    if (in.ideal.kind() == IdealKind::MPrimary)
        rep.notes.push_back("m-primary input: the symbolic power is the ordinary power");
}

void verb_real_power(const Options &o, Report &rep) {
    auto in = load_ideal(rep);
    Rational r;
    try {
        r = parse_rational(o.r);
    } catch (const Error &e) {
        throw InputError(e.what());
    }
    rep.options["r"] = rational_json(r);
    const auto ideal = real_power(in.ideal.ideal(), r);
    rep.results["ideal"] = to_json(ideal);
    rep.text = "real power r = " + to_string(r) + "\n" + ideal_text(ideal, in.vars);
}

void verb_member(const Options &o, Report &rep) {
    auto in = load_ideal(rep);
    if (o.monomial.empty())
        throw InputError("member needs --monomial");
    const auto a = parse_monomial(o.monomial, in.vars);
    rep.options["monomial"] = format_monomial(a, in.vars);
    rep.options["k"] = o.k;

    const auto closure = scaled_membership(in.ideal.newton(), a, o.k);
    rep.results["integral_closure"] = closure.has_value();
    if (closure)
        rep.results["integral_closure_certificate"] = to_json(*closure, in.ideal.newton());
    std::string t = format_monomial(a, in.vars) + " in closure of I^" + std::to_string(o.k) + ": " +
                    yes_no(closure.has_value()) + "\n";
    if (in.ideal.supports_sp()) {
        const bool sym = member_symbolic(in.ideal, a, o.k);
        rep.results["symbolic"] = sym;
        if (sym && in.ideal.linear_power_type())
            rep.results["symbolic_certificate"] =
                to_json(*scaled_membership(in.ideal.symbolic(), a, o.k), in.ideal.symbolic());
        t += format_monomial(a, in.vars) + " in I^(" + std::to_string(o.k) + "): " + yes_no(sym) + "\n";
    } else {
        rep.notes.push_back("symbolic membership skipped: unsupported ideal class");
    }
    rep.text = std::move(t);
}

void verb_hilbert(const Options &o, Report &rep) {
    auto in = load_ideal(rep);
    if (o.degree_bound)
        rep.options["degree_bound"] = *o.degree_bound;
    const auto hb = hilbert_basis(in.ideal, o.degree_bound);
    rep.results["hilbert_basis"] = to_json(hb);
    std::string t = "Hilbert basis (" + std::to_string(hb.elements.size()) + " elements, degree >= 1)\n";
    for (const auto &e : hb.elements)
        t += "  " + format_vector(e.exponent) + " degree " + std::to_string(e.degree) + "\n";
    t += "degrees: " + join_set(hb.degrees) + "\n";
    t += "sgt: " + std::to_string(hb.sgt) + "\n";
    t += "degree bound used: " + std::to_string(hb.degree_bound_used) + " (theorem bound " +
         std::to_string(hb.theorem_bound) + ")\n";
    if (!hb.exhaustive)
        rep.notes.push_back("degree bound below the theorem bound: basis and sgt may be incomplete");
    rep.text = std::move(t);
}

void verb_veronese(const Options &o, Report &rep) {
    auto in = load_ideal(rep);
    rep.options["k_max"] = o.k_max;
    rep.notes.push_back("bounded check, k_max=" + std::to_string(o.k_max));
    if (o.d) {
        rep.options["d"] = *o.d;
        const bool ok = veronese_verify(in.ideal, *o.d, o.k_max);
        rep.results["holds"] = ok;
        rep.text = "I^(" + std::to_string(*o.d) + "k) = (I^(" + std::to_string(*o.d) +
                   "))^k for k <= " + std::to_string(o.k_max) + ": " + yes_no(ok) + "\n";
        return;
    }
    const auto probe = svd_probe(in.ideal, o.k_max);
    rep.results["candidate"] = integer_json(probe.candidate);
    rep.results["certified_upper"] = integer_json(probe.certified_upper);
    rep.text = "svd candidate: " + to_string(probe.candidate) + "\nsvd upper bound: " +
               to_string(probe.certified_upper) + "\n";
}

void verb_normal_rees(const Options &, Report &rep) {
    auto in = load_ideal(rep);
    const auto r = normal_rees_generator_degrees(in.ideal.ideal());
    rep.results["degrees"] = r.degrees;
    rep.results["degree_bound"] = r.bound;
    rep.text = "normalized Rees algebra generator degrees: " + join_set(r.degrees) +
               " (searched up to " + std::to_string(r.bound) + ")\n";
}

void verb_family_body(const Options &, Report &rep) {
    auto in = load_family(rep);
    const auto body = newton_okounkov_body(in.family);
    rep.results["body"] = to_json(body);
    if (const auto *c = std::get_if<CeilingPowerFamily>(&in.family))
        rep.results["rate"] = rational_json(ceiling_rate(*c));
    rep.text = "Newton-Okounkov body (" + std::string(family_name(in.family)) + " family)\n" +
               polyhedron_text(body, in.vars);
}

void verb_stabilize(const Options &o, Report &rep) {
    auto in = load_family(rep);
    rep.options["c_max"] = o.c_max;
    const auto r = stabilization_check(in.family, o.c_max);
    rep.results["stabilization"] = to_json(r);
    if (r.stabilized) {
        rep.text = "stabilized at c = " + std::to_string(*r.c) + "\n";
        rep.notes.push_back("(1/c) NP(I_c) equals the body, so the Rees algebra is Noetherian");
    } else {
        rep.text = "not stabilized up to " + std::to_string(o.c_max) + "\n";
        if (r.witness)
            rep.text += "witness vertex " + format_vector(r.witness->vertex) + " outside (1/" +
                        std::to_string(r.witness->c_tested) + ") NP(I_" +
                        std::to_string(r.witness->c_tested) + ")\n";
        rep.notes.push_back("a finite search cannot show a Rees algebra is not Noetherian");
    }
}

void verb_np_eq_sp(const Options &, Report &rep) {
    auto in = load_ideal(rep);
    const bool eq = np_equals_sp(in.ideal);
    rep.results["np_equals_sp"] = eq;
    rep.text = "NP(I) = SP(I): " + yes_no(eq) + "\n";
}

void emit(const Report &rep, bool json, std::ostream &out) {
    if (json) {
        Json j;
        j["command"] = rep.command;
        j["input"] = Json{{"path", rep.path}, {"digest", "fnv1a64:" + rep.digest}};
        j["options"] = rep.options;
        j["results"] = rep.results;
        j["notes"] = rep.notes;
        out << j.dump(2) << "\n";
        return;
    }
    out << rep.text;
    for (const auto &n : rep.notes)
        out << "note: " << n << "\n";
}

int exit_code(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::UnknownVariable:
    case ErrorKind::NonPositiveMultiplicity:
        return 2;
    case ErrorKind::VertexLimitExceeded:
        return 3;
    default:
        return 1;
    }
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Newton-Okounkov bodies and symbolic invariants of monomial ideals", "nok"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json, "emit a JSON report");
    app.add_option("--jobs", o.jobs, "worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);

    const std::vector<std::tuple<std::string, std::string, Verb>> verbs = {
        {"np", "Newton polyhedron", verb_np},
        {"sp", "symbolic polyhedron", verb_sp},
        {"spread", "analytic and symbolic analytic spread", verb_spread},
        {"constants", "vertex constants c, D and the svd/sgt bounds", verb_constants},
        {"symbolic-power", "minimal generators of I^(k)", verb_symbolic_power},
        {"real-power", "minimal generators of the r-th real power", verb_real_power},
        {"member", "membership in closures of powers and symbolic powers", verb_member},
        {"hilbert", "Hilbert basis of the cone over SP", verb_hilbert},
        {"veronese", "bounded Veronese check, or svd probe without -d", verb_veronese},
        {"normal-rees", "generator degrees of the normalized Rees algebra", verb_normal_rees},
        {"family-body", "Newton-Okounkov body of a graded family", verb_family_body},
        {"stabilize", "search for c with (1/c) NP(I_c) equal to the body", verb_stabilize},
        {"np-eq-sp", "whether NP(I) = SP(I)", verb_np_eq_sp},
    };
    std::map<std::string, CLI::App *> subs;
    for (const auto &[name, help, fn] : verbs) {
        auto *sub = app.add_subcommand(name, help);
        sub->add_option("file", o.path, "input file")->required();
        subs[name] = sub;
    }
    subs["symbolic-power"]->add_option("-k", o.k, "power")->check(CLI::PositiveNumber);
    subs["real-power"]->add_option("-r", o.r, "positive rational exponent p/q");
    subs["member"]->add_option("--monomial,-m", o.monomial, "monomial such as x^2*y or [2,1,0]");
    subs["member"]->add_option("-k", o.k, "power")->check(CLI::PositiveNumber);
    subs["hilbert"]->add_option("--degree-bound", o.degree_bound, "largest degree searched")
        ->check(CLI::PositiveNumber);
    subs["veronese"]->add_option("-d", o.d, "Veronese degree")->check(CLI::PositiveNumber);
    subs["veronese"]->add_option("--kmax", o.k_max, "largest k checked")->check(CLI::PositiveNumber);
    subs["stabilize"]->add_option("--cmax", o.c_max, "largest c tried")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "nok: " << e.what() << "\n";
        return 2;
    }

    if (const char *env = std::getenv("NOK_MAX_VERTICES")) {
        try {
            const long long limit = std::stoll(env);
            if (limit < 1)
                throw std::invalid_argument("limit");
            set_max_rays(static_cast<std::size_t>(limit));
        } catch (const std::exception &) {
            err << "nok: NOK_MAX_VERTICES must be a positive integer\n";
            return 2;
        }
    }
    set_num_threads(o.jobs);

    for (const auto &[name, help, fn] : verbs) {
        if (!subs[name]->parsed())
            continue;
        Report rep;
        rep.command = name;
        rep.path = o.path;
        try {
            fn(o, rep);
        } catch (const InputError &e) {
            err << "nok " << name << ": " << e.what() << "\n";
            return 2;
        } catch (const Error &e) {
            err << "nok " << name << ": " << e.what() << "\n";
            return exit_code(e.kind());
        }
        emit(rep, o.json, out);
        return 0;
    }
    return 2;
}

} // namespace nok
