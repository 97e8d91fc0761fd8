#include "nok/io.hpp"
#include "nok/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace nok {

namespace {

struct Line {
    std::size_t number = 0;
    std::size_t value_column = 0; // 1-based column where the value starts
    std::string key;
    std::string value;
};

[[noreturn]] void parse_fail(std::size_t line, std::size_t column, const std::string &what,
                             ErrorKind kind = ErrorKind::ParseError) {
    throw ParseError(kind, line, column, what);
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    while (!text.empty()) {
        ++number;
        const auto nl = text.find('\n');
        std::string_view raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        std::size_t start = 0;
        while (start < raw.size() && is_space(raw[start]))
            ++start;
        if (start == raw.size())
            continue;
        const auto colon = raw.find(':');
        if (colon == std::string_view::npos)
            parse_fail(number, start + 1, "expected 'key: value'");
        Line l;
        l.number = number;
        std::string_view key = raw.substr(start, colon - start);
        while (!key.empty() && is_space(key.back()))
            key.remove_suffix(1);
        l.key = std::string(key);
        std::size_t v = colon + 1;
        while (v < raw.size() && is_space(raw[v]))
            ++v;
        std::string_view value = raw.substr(v);
        while (!value.empty() && is_space(value.back()))
            value.remove_suffix(1);
        l.value = std::string(value);
        l.value_column = v + 1;
        out.push_back(std::move(l));
    }
    return out;
}

struct Item {
    std::string text;
    std::size_t column;
};

// Top-level comma split, respecting () and [].
std::vector<Item> split_items(const Line &line) {
    std::vector<Item> out;
    int depth = 0;
    std::size_t begin = 0;
    auto flush = [&](std::size_t end) {
        std::size_t b = begin;
        while (b < end && is_space(line.value[b]))
            ++b;
        std::size_t e = end;
        while (e > b && is_space(line.value[e - 1]))
            --e;
        if (b == e)
            parse_fail(line.number, line.value_column + b, "empty list item");
        out.push_back({line.value.substr(b, e - b), line.value_column + b});
    };
    for (std::size_t i = 0; i < line.value.size(); ++i) {
        const char c = line.value[i];
        if (c == '(' || c == '[')
            ++depth;
        else if (c == ')' || c == ']')
            --depth;
        else if (c == ',' && depth == 0) {
            flush(i);
            begin = i + 1;
        }
        if (depth < 0)
            parse_fail(line.number, line.value_column + i, "unbalanced bracket");
    }
    if (depth != 0)
        parse_fail(line.number, line.value_column + line.value.size(), "unbalanced bracket");
    flush(line.value.size());
    return out;
}

bool is_identifier(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

std::int64_t parse_count(std::string_view s, std::size_t line, std::size_t column) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
        parse_fail(line, column, "expected a nonnegative integer, got '" + std::string(s) + "'");
    if (s.size() > 15)
        parse_fail(line, column, "integer too large", ErrorKind::Overflow);
    return std::stoll(std::string(s));
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front()))
        s.remove_prefix(1);
    while (!s.empty() && is_space(s.back()))
        s.remove_suffix(1);
    return s;
}

std::size_t variable_index(const std::vector<std::string> &vars, std::string_view name,
                           std::size_t line, std::size_t column) {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name)
            return i;
    parse_fail(line, column, "unknown variable '" + std::string(name) + "'", ErrorKind::UnknownVariable);
}

ExponentVector parse_monomial_at(std::string_view text, const std::vector<std::string> &vars,
                                 std::size_t line, std::size_t column) {
    text = trim(text);
    const auto n = vars.size();
    if (!text.empty() && text.front() == '[') {
        if (text.back() != ']')
            parse_fail(line, column, "unterminated exponent vector");
        std::vector<Exponent> e;
        std::string_view body = text.substr(1, text.size() - 2);
        std::size_t offset = 1;
        while (true) {
            const auto comma = body.find(',');
            auto part = body.substr(0, comma);
            e.push_back(parse_count(trim(part), line, column + offset));
            if (comma == std::string_view::npos)
                break;
            offset += comma + 1;
            body = body.substr(comma + 1);
        }
        if (e.size() != n)
            parse_fail(line, column,
                       "exponent vector has " + std::to_string(e.size()) + " entries, expected " +
                           std::to_string(n));
        return ExponentVector(std::move(e));
    }
    std::vector<Exponent> e(n, 0);
    if (text == "1")
        return ExponentVector(std::move(e));
    std::size_t pos = 0;
    while (true) {
        auto star = text.find('*', pos);
        auto factor = text.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos);
        const std::size_t fcol = column + pos;
        auto caret = factor.find('^');
        auto name = trim(factor.substr(0, caret));
        if (!is_identifier(name))
            parse_fail(line, fcol, "expected a variable name, got '" + std::string(factor) + "'");
        Exponent power = 1;
        if (caret != std::string_view::npos) {
            power = parse_count(trim(factor.substr(caret + 1)), line, fcol + caret + 1);
            if (power < 1)
                parse_fail(line, fcol + caret + 1, "exponents must be at least 1");
        }
        e[variable_index(vars, name, line, fcol)] += power;
        if (star == std::string_view::npos)
            break;
        pos = star + 1;
    }
    return ExponentVector(std::move(e));
}

std::vector<std::string> parse_vars(const Line &line) {
    std::vector<std::string> vars;
    for (const auto &item : split_items(line)) {
        if (!is_identifier(item.text))
            parse_fail(line.number, item.column, "invalid variable name '" + item.text + "'");
        if (std::find(vars.begin(), vars.end(), item.text) != vars.end())
            parse_fail(line.number, item.column, "duplicate variable '" + item.text + "'");
        vars.push_back(item.text);
    }
    return vars;
}

MonomialIdeal parse_gens(const Line &line, const std::vector<std::string> &vars) {
    std::vector<ExponentVector> gens;
    for (const auto &item : split_items(line))
        gens.push_back(parse_monomial_at(item.text, vars, line.number, item.column));
    return MonomialIdeal(vars.size(), std::move(gens));
}

PrimeDecomposition parse_components(const Line &line, const std::vector<std::string> &vars) {
    std::vector<PrimeComponent> comps;
    for (const auto &item : split_items(line)) {
        std::string_view t = item.text;
        if (t.front() != '(')
            parse_fail(line.number, item.column, "expected '(' starting a prime component");
        const auto close = t.find(')');
        if (close == std::string_view::npos)
            parse_fail(line.number, item.column, "unterminated prime component");
        PrimeComponent c;
        std::string_view inner = t.substr(1, close - 1);
        std::size_t offset = 1;
        while (true) {
            const auto comma = inner.find(',');
            auto name = trim(inner.substr(0, comma));
            if (name.empty())
                parse_fail(line.number, item.column + offset, "empty prime component");
            c.variables.push_back(variable_index(vars, name, line.number, item.column + offset));
            if (comma == std::string_view::npos)
                break;
            offset += comma + 1;
            inner = inner.substr(comma + 1);
        }
        std::sort(c.variables.begin(), c.variables.end());
        c.variables.erase(std::unique(c.variables.begin(), c.variables.end()), c.variables.end());
        auto rest = trim(t.substr(close + 1));
        if (!rest.empty()) {
            if (rest.front() != '^')
                parse_fail(line.number, item.column + close + 1, "expected '^' after a component");
            if (trim(rest.substr(1)).starts_with('-'))
                parse_fail(line.number, item.column + close + 2, "multiplicities must be positive",
                           ErrorKind::NonPositiveMultiplicity);
            c.multiplicity = parse_count(trim(rest.substr(1)), line.number, item.column + close + 2);
            if (c.multiplicity < 1)
                parse_fail(line.number, item.column + close + 2, "multiplicities must be positive",
                           ErrorKind::NonPositiveMultiplicity);
        }
        comps.push_back(std::move(c));
    }
    return PrimeDecomposition(vars.size(), std::move(comps));
}

const Line &first_line(const std::vector<Line> &lines) {
    if (lines.empty())
        parse_fail(1, 1, "empty input");
    return lines.front();
}

Rational parse_rational_at(const Line &line) {
    try {
        return parse_rational(line.value);
    } catch (const Error &e) {
        parse_fail(line.number, line.value_column, "invalid rational '" + line.value + "'");
    }
}

} // namespace

ExponentVector parse_monomial(std::string_view text, const std::vector<std::string> &vars) {
    return parse_monomial_at(text, vars, 1, 1);
}

IdealInput parse_ideal(std::string_view text) {
    const auto lines = split_lines(text);
    const auto &head = first_line(lines);
    if (head.key != "vars")
        parse_fail(head.number, 1, "the first line must be 'vars:'");
    auto vars = parse_vars(head);
    if (lines.size() < 2)
        parse_fail(head.number, 1, "missing 'gens:' or 'components:' line");
    if (lines.size() > 2)
        parse_fail(lines[2].number, 1, "an ideal file holds exactly one ideal");
    const auto &body = lines[1];
    if (body.key == "gens")
        return IdealInput{vars, classify(parse_gens(body, vars))};
    if (body.key == "components")
        return IdealInput{vars, classify(parse_components(body, vars))};
    parse_fail(body.number, 1, "expected 'gens:' or 'components:', got '" + body.key + "'");
}

FamilyInput parse_family(std::string_view text) {
    const auto lines = split_lines(text);
    const auto &head = first_line(lines);
    if (head.key != "family")
        parse_fail(head.number, 1, "the first line must be 'family:'");
    const std::string kind = head.value;
    if (kind != "power" && kind != "symbolic" && kind != "intersection" && kind != "ceiling")
        parse_fail(head.number, head.value_column, "unknown family kind '" + kind + "'");
    if (lines.size() < 2 || lines[1].key != "vars")
        parse_fail(lines.size() < 2 ? head.number : lines[1].number, 1, "expected 'vars:'");
    auto vars = parse_vars(lines[1]);

    std::vector<ClassifiedIdeal> ideals;
    std::optional<Rational> alpha, beta;
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const auto &l = lines[i];
        if (l.key == "gens")
            ideals.push_back(classify(parse_gens(l, vars)));
        else if (l.key == "components")
            ideals.push_back(classify(parse_components(l, vars)));
        else if (l.key == "alpha" && kind == "ceiling" && !alpha)
            alpha = parse_rational_at(l);
        else if (l.key == "beta" && kind == "ceiling" && !beta)
            beta = parse_rational_at(l);
        else
            parse_fail(l.number, 1, "unexpected key '" + l.key + "'");
    }
    const std::size_t last = lines.back().number;
    if (ideals.empty())
        parse_fail(last, 1, "a family needs an ideal line");
    if (kind != "intersection" && ideals.size() != 1)
        parse_fail(last, 1, "a " + kind + " family takes exactly one ideal");

    auto build = [&]() -> FamilySpec {
        if (kind == "power")
            return PowerFamily{ideals.front().ideal()};
        if (kind == "symbolic")
            return SymbolicFamily{ideals.front()};
        if (kind == "intersection") {
            IntersectionFamily f;
            for (const auto &c : ideals)
                f.components.push_back(c.ideal());
            return f;
        }
        if (!alpha || !beta)
            parse_fail(last, 1, "a ceiling family needs 'alpha:' and 'beta:'");
        return CeilingPowerFamily{ideals.front().ideal(), *alpha, *beta};
    };
    FamilySpec spec = build();
    validate(spec);
    return FamilyInput{std::move(vars), std::move(spec)};
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(ErrorKind::EmptyInput, "cannot read '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fnv1a_digest(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string format_monomial(const ExponentVector &a, const std::vector<std::string> &vars) {
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += vars[i];
        if (a[i] > 1)
            out += '^' + std::to_string(a[i]);
    }
    return out.empty() ? "1" : out;
}

std::string format_vector(const RationalVector &v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + to_string(v[i]);
    return out + ")";
}

std::string format_vector(const ExponentVector &v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + std::to_string(v[i]);
    return out + ")";
}

Json rational_json(const Rational &q) { return to_string(q); }

Json integer_json(const Integer &z) { return to_string(z); }

Rational rational_from_json(const Json &j) {
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (!j.is_string())
        fail(ErrorKind::ParseError, "expected a rational string");
    return parse_rational(j.get<std::string>());
}

Integer integer_from_json(const Json &j) {
    const Rational q = rational_from_json(j);
    if (q.get_den() != 1)
        fail(ErrorKind::ParseError, "expected an integer, got " + to_string(q));
    return q.get_num();
}

namespace {

Json small_integer(const Integer &z) {
    if (mpz_fits_slong_p(z.get_mpz_t()))
        return z.get_si();
    return to_string(z);
}

Json int_vector(const IntVector &v) {
    Json a = Json::array();
    for (const auto &x : v)
        a.push_back(small_integer(x));
    return a;
}

Json rational_vector(const RationalVector &v) {
    Json a = Json::array();
    for (const auto &x : v)
        a.push_back(rational_json(x));
    return a;
}

Json exponent_vector(const ExponentVector &v) {
    Json a = Json::array();
    for (auto x : v.entries())
        a.push_back(x);
    return a;
}

} // namespace

Json to_json(const RationalPolyhedron &p) {
    Json j;
    j["nvars"] = p.nvars();
    Json facets = Json::array();
    for (const auto &h : p.facets())
        facets.push_back(Json{{"normal", int_vector(h.normal)}, {"offset", small_integer(h.offset)}});
    j["facets"] = std::move(facets);
    Json vs = Json::array();
    for (const auto &v : p.vertices())
        vs.push_back(rational_vector(v));
    j["vertices"] = std::move(vs);
    Json rs = Json::array();
    for (const auto &r : p.rays())
        rs.push_back(int_vector(r));
    j["rays"] = std::move(rs);
    j["mdc"] = mdc(p);
    return j;
}

RationalPolyhedron polyhedron_from_json(const Json &j) {
    try {
        const auto n = j.at("nvars").get<std::size_t>();
        std::vector<HalfSpace> hs;
        for (const auto &f : j.at("facets")) {
            IntVector normal;
            for (const auto &x : f.at("normal"))
                normal.push_back(integer_from_json(x));
            hs.emplace_back(std::move(normal), integer_from_json(f.at("offset")));
        }
        auto p = from_halfspaces(std::move(hs), n);
        std::vector<RationalVector> vs;
        for (const auto &v : j.at("vertices")) {
            RationalVector x;
            for (const auto &c : v)
                x.push_back(rational_from_json(c));
            vs.push_back(std::move(x));
        }
        if (vs != p.vertices())
            fail(ErrorKind::ParseError, "listed vertices disagree with the facets");
        return p;
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorKind::ParseError, std::string("malformed polyhedron JSON: ") + e.what());
    }
}

Json to_json(const MonomialIdeal &ideal) {
    Json gens = Json::array();
    for (const auto &g : ideal.generators())
        gens.push_back(exponent_vector(g));
    return Json{{"nvars", ideal.nvars()}, {"gens", std::move(gens)}};
}

MonomialIdeal ideal_from_json(const Json &j) {
    try {
        std::vector<ExponentVector> gens;
        for (const auto &g : j.at("gens"))
            gens.emplace_back(g.get<std::vector<Exponent>>());
        return MonomialIdeal(j.at("nvars").get<std::size_t>(), std::move(gens));
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorKind::ParseError, std::string("malformed ideal JSON: ") + e.what());
    }
}

Json to_json(const ConvexCertificate &cert, const RationalPolyhedron &p) {
    Json terms = Json::array();
    for (std::size_t i = 0; i < cert.vertex_indices.size(); ++i)
        terms.push_back(Json{{"vertex", rational_vector(p.vertices()[cert.vertex_indices[i]])},
                             {"weight", rational_json(cert.weights[i])}});
    return Json{{"terms", std::move(terms)}, {"slack", rational_vector(cert.slack)}};
}

Json to_json(const HilbertBasisReport &report) {
    Json elements = Json::array();
    for (const auto &e : report.elements)
        elements.push_back(Json{{"exponent", exponent_vector(e.exponent)}, {"degree", e.degree}});
    return Json{{"elements", std::move(elements)},
                {"count", report.elements.size()},
                {"degrees", report.degrees},
                {"sgt", report.sgt},
                {"degree_bound_used", report.degree_bound_used},
                {"theorem_bound", report.theorem_bound},
                {"exhaustive", report.exhaustive}};
}

Json to_json(const InvariantReport &r) {
    Json j;
    j["ell"] = r.ell;
    if (r.ell_s)
        j["ell_s"] = *r.ell_s;
    Json denoms = Json::array();
    for (const auto &d : r.vertex_denoms)
        denoms.push_back(integer_json(d));
    j["vertex_denoms"] = std::move(denoms);
    j["c"] = integer_json(r.c);
    j["D"] = integer_json(r.D);
    if (r.svd) {
        j["svd_lower"] = integer_json(r.svd->lower);
        j["svd_upper"] = integer_json(r.svd->upper);
        j["svd_upper_clamped"] = r.svd->clamped;
    }
    if (r.sgt) {
        j["sgt_upper"] = integer_json(r.sgt->general);
        if (r.sgt->np_eq_sp)
            j["sgt_upper_np_eq_sp"] = integer_json(*r.sgt->np_eq_sp);
        const auto &h = r.sgt->hadamard;
        Json hj;
        hj["expression"] = h.expression;
        hj["h_squared"] = rational_json(h.h_squared);
        if (h.value)
            hj["value"] = rational_json(*h.value);
        hj["floor"] = integer_json(h.floor_value);
        j["hadamard_bound"] = std::move(hj);
    }
    return j;
}

Json to_json(const StabilizationReport &r) {
    Json j;
    j["stabilized"] = r.stabilized;
    j["c_max"] = r.c_max;
    if (r.c)
        j["c"] = *r.c;
    if (r.witness)
        j["witness"] = Json{{"c_tested", r.witness->c_tested},
                            {"vertex", rational_vector(r.witness->vertex)}};
    return j;
}

} // namespace nok
