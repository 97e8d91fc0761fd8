#include "helpers.hpp"
#include "nok/ideal.hpp"
#include "oracles.hpp"

#include <random>

using namespace nok;

namespace {

// Every monomial of [0, box]^n, as exponent vectors.
std::vector<ExponentVector> box_monomials(std::size_t n, Exponent box) {
    std::vector<ExponentVector> out;
    std::vector<Exponent> a(n, 0);
    while (true) {
        out.emplace_back(a);
        std::size_t j = 0;
        while (j < n && a[j] == box)
            a[j++] = 0;
        if (j == n)
            return out;
        ++a[j];
    }
}

} // namespace

TEST_CASE("exponent vector arithmetic") {
    const ExponentVector a{2, 0, 1}, b{1, 1, 1};
    CHECK(a.total_degree() == 3);
    CHECK((a + b) == ExponentVector{3, 1, 2});
    CHECK(a.lcm(b) == ExponentVector{2, 1, 1});
    CHECK(ExponentVector{1, 0, 1}.divides(a));
    CHECK_FALSE(b.divides(a));
    CHECK(b.is_squarefree());
    CHECK_FALSE(a.is_squarefree());
    CHECK(error_kind([] { ExponentVector{1, -1}; }) == ErrorKind::NonPositiveExponent);
}

TEST_CASE("ideals keep minimal generators in sorted order") {
    const MonomialIdeal I(2, {{2, 1}, {1, 1}, {0, 3}, {1, 1}});
    CHECK(I.generators() == std::vector<ExponentVector>{{0, 3}, {1, 1}});
    CHECK(I.contains(ExponentVector{5, 1}));
    CHECK_FALSE(I.contains(ExponentVector{5, 0}));
    CHECK(MonomialIdeal::unit(3).is_unit());
    CHECK(MonomialIdeal::prime(3, {0, 2}).generators() == std::vector<ExponentVector>{{0, 0, 1}, {1, 0, 0}});
    CHECK(error_kind([] { MonomialIdeal(2, {}); }) == ErrorKind::EmptyGeneratorSet);
    CHECK(error_kind([] { MonomialIdeal(2, {{1, 0, 0}}); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("products, powers and intersections agree with membership") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + trial % 2;
        const MonomialIdeal I(n, oracle::random_generators(rng, n, 3, 2));
        const MonomialIdeal J(n, oracle::random_generators(rng, n, 2, 2));
        const auto prod = multiply(I, J);
        const auto meet = intersect(I, J);
        const auto sq = power(I, 2);
        for (const auto &m : box_monomials(n, 4)) {
            CHECK(meet.contains(m) == (I.contains(m) && J.contains(m)));
            bool divisible = false;
            for (const auto &g : I.generators())
                for (const auto &h : J.generators())
                    divisible = divisible || (g + h).divides(m);
            CHECK(prod.contains(m) == divisible);
            CHECK(sq.contains(m) == oracle::dominates_sum_of(
                                        I.generators(),
                                        std::vector<std::int64_t>(m.entries().begin(), m.entries().end()), 2));
        }
        for (const auto &g : I.generators())
            for (const auto &h : J.generators())
                CHECK(prod.contains(g + h));
        for (const auto &p : prod.generators()) {
            bool split = false;
            for (const auto &g : I.generators())
                for (const auto &h : J.generators())
                    split = split || (g + h) == p;
            CHECK(split);
        }
    }
}

TEST_CASE("minimal primes of squarefree ideals are the minimal covers") {
    const MonomialIdeal triangle(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    const auto primes = minimal_primes(triangle);
    std::vector<std::vector<std::size_t>> vars;
    for (const auto &c : primes.components()) {
        CHECK(c.multiplicity == 1);
        vars.push_back(c.variables);
    }
    std::sort(vars.begin(), vars.end());
    auto covers = oracle::minimal_covers(triangle);
    std::sort(covers.begin(), covers.end());
    CHECK(vars == covers);
    CHECK(expand_decomposition(primes) == triangle);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        auto gens = oracle::random_generators(rng, 4, 3, 1);
        const MonomialIdeal I(4, gens);
        if (I.is_unit())
            continue;
        auto got = minimal_primes(I);
        std::vector<std::vector<std::size_t>> found;
        for (const auto &c : got.components())
            found.push_back(c.variables);
        std::sort(found.begin(), found.end());
        auto expected = oracle::minimal_covers(I);
        std::sort(expected.begin(), expected.end());
        CHECK(found == expected);
        CHECK(expand_decomposition(got) == I);
    }
    CHECK(error_kind([] { minimal_primes(MonomialIdeal(2, {{2, 0}})); }) == ErrorKind::NotSquarefree);
    CHECK(error_kind([] { minimal_primes(MonomialIdeal::unit(2)); }) == ErrorKind::UnitIdeal);
}

TEST_CASE("prime decompositions are validated") {
    const PrimeDecomposition d(3, {{{0, 1}, 2}, {{1, 2}, 3}, {{0, 2}, 4}});
    const auto expanded = expand_decomposition(d);
    const std::vector<MonomialIdeal> parts{power(MonomialIdeal::prime(3, {0, 1}), 2),
                                           power(MonomialIdeal::prime(3, {1, 2}), 3),
                                           power(MonomialIdeal::prime(3, {0, 2}), 4)};
    CHECK(expanded == intersect(parts));
    // (x,y)^1 contains (x)^3 and is dropped.
    CHECK(PrimeDecomposition(2, {{{0}, 3}, {{0, 1}, 1}}).components().size() == 1);
    CHECK(error_kind([] { PrimeDecomposition(2, {{{0}, 2}, {{0, 1}, 3}}); }) == ErrorKind::NotLinearPowerType);
    CHECK(error_kind([] { PrimeDecomposition(2, {{{0}, 0}}); }) == ErrorKind::NonPositiveMultiplicity);
    CHECK(error_kind([] { PrimeDecomposition(2, {{{}, 1}}); }) == ErrorKind::EmptyPrime);
    CHECK(error_kind([] { PrimeDecomposition(2, {{{3}, 1}}); }) == ErrorKind::DimensionMismatch);
    CHECK(error_kind([] { PrimeDecomposition(2, {}); }) == ErrorKind::EmptyList);
}

TEST_CASE("saturation at a prime keeps the primary component") {
    const auto I = expand_decomposition(PrimeDecomposition(3, {{{0, 1}, 2}, {{1, 2}, 3}, {{0, 2}, 4}}));
    CHECK(saturate_to_prime(I, {0, 1}) == power(MonomialIdeal::prime(3, {0, 1}), 2));
    CHECK(saturate_to_prime(I, {1, 2}) == power(MonomialIdeal::prime(3, {1, 2}), 3));
    CHECK(error_kind([&] { saturate_to_prime(I, {}); }) == ErrorKind::EmptyPrime);
}
