#include "nok/arith.hpp"
#include "nok/errors.hpp"

#include <algorithm>
#include <cctype>

namespace nok {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::EmptyGeneratorSet: return "EmptyGeneratorSet";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonPositiveExponent: return "NonPositiveExponent";
    case ErrorKind::EmptyList: return "EmptyList";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::EmptyPrime: return "EmptyPrime";
    case ErrorKind::UnitIdeal: return "UnitIdeal";
    case ErrorKind::NotLinearPowerType: return "NotLinearPowerType";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::InfeasibleSystem: return "InfeasibleSystem";
    case ErrorKind::MissingOrthantConstraints: return "MissingOrthantConstraints";
    case ErrorKind::NotUpSet: return "NotUpSet";
    case ErrorKind::NonPositiveScale: return "NonPositiveScale";
    case ErrorKind::NoVertices: return "NoVertices";
    case ErrorKind::PointNotInPolyhedron: return "PointNotInPolyhedron";
    case ErrorKind::BoundTooSmall: return "BoundTooSmall";
    case ErrorKind::UnsupportedIdealClass: return "UnsupportedIdealClass";
    case ErrorKind::NotProvenNoetherian: return "NotProvenNoetherian";
    case ErrorKind::NotGradedFamily: return "NotGradedFamily";
    case ErrorKind::NoCandidate: return "NoCandidate";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::VertexLimitExceeded: return "VertexLimitExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::NonPositiveMultiplicity: return "NonPositiveMultiplicity";
    }
    return "Unknown";
}

Rational make_rational(const Integer &num, const Integer &den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational &q) {
    Rational c(q);
    c.canonicalize();
    if (c.get_den() == 1)
        return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_string(const Integer &z) { return z.get_str(); }

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

} // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    auto slash = text.find('/');
    auto num = text.substr(0, slash);
    auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
        den.front() == '+')
        fail(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
    std::string n(num);
    if (n.front() == '+')
        n.erase(0, 1);
    Integer d{std::string(den)};
    if (d == 0)
        fail(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    Rational q(Integer(n), d);
    q.canonicalize();
    return q;
}

Integer lcm(const Integer &a, const Integer &b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer gcd(const Integer &a, const Integer &b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer ceil(const Rational &q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer floor(const Rational &q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

std::int64_t to_int64(const Integer &z) {
    static_assert(sizeof(long) == sizeof(std::int64_t));
    if (!mpz_fits_slong_p(z.get_mpz_t()))
        fail(ErrorKind::Overflow, "integer " + z.get_str() + " does not fit in 64 bits");
    return z.get_si();
}

Integer denominator_lcm(const RationalVector &v) {
    Integer d = 1;
    for (const auto &q : v)
        d = lcm(d, q.get_den());
    return d;
}

void make_primitive(IntVector &v) {
    Integer g = 0;
    for (const auto &x : v)
        g = gcd(g, x);
    if (g > 1)
        for (auto &x : v)
            x /= g;
}

int compare(const RationalVector &a, const RationalVector &b) {
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0)
            return c < 0 ? -1 : 1;
    }
    return a.size() < b.size() ? -1 : (a.size() > b.size() ? 1 : 0);
}

int compare(const IntVector &a, const IntVector &b) {
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0)
            return c < 0 ? -1 : 1;
    }
    return a.size() < b.size() ? -1 : (a.size() > b.size() ? 1 : 0);
}

// Bareiss elimination; every intermediate value stays integral.
std::size_t rank(std::vector<IntVector> rows) {
    if (rows.empty())
        return 0;
    const std::size_t cols = rows.front().size();
    std::size_t r = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][c] == 0)
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                rows[i][j] = rows[r][c] * rows[i][j] - rows[i][c] * rows[r][j];
                mpz_divexact(rows[i][j].get_mpz_t(), rows[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            rows[i][c] = 0;
        }
        prev = rows[r][c];
        ++r;
    }
    return r;
}

IntVector clear_denominators(const RationalVector &v) {
    Integer d = denominator_lcm(v);
    IntVector out;
    out.reserve(v.size());
    for (const auto &q : v)
        out.emplace_back(Integer(q * d));
    return out;
}

} // namespace nok
