#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace oracle {

namespace {

// Calls f on every k-subset of {0..m-1} (as sorted index vectors).
void for_each_subset(std::size_t m, std::size_t k, const std::function<void(const std::vector<std::size_t> &)> &f) {
    if (k > m)
        return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == m - k + i - 1)
            --i;
        if (i == 0)
            return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

Integer gcd_of(const std::vector<Integer> &v, const Integer &extra) {
    Integer g = abs(extra);
    for (const auto &x : v) {
        Integer t;
        mpz_gcd(t.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        g = t;
    }
    return g;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<Vec> &a, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
        std::size_t p = row;
        while (p < a.size() && a[p][col] == 0)
            ++p;
        if (p == a.size())
            continue;
        std::swap(a[p], a[row]);
        const Rational inv = 1 / a[row][col];
        for (auto &x : a[row])
            x *= inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][col] == 0)
                continue;
            const Rational f = a[r][col];
            for (std::size_t c = 0; c < a[r].size(); ++c)
                a[r][c] -= f * a[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

bool Inequality::operator<(const Inequality &o) const {
    if (normal != o.normal)
        return normal < o.normal;
    return offset < o.offset;
}

Inequality make_inequality(std::vector<Integer> normal, Integer offset) {
    const Integer g = gcd_of(normal, offset);
    if (g > 1) {
        for (auto &x : normal)
            x /= g;
        offset /= g;
    }
    return Inequality{std::move(normal), std::move(offset)};
}

Rational evaluate(const Inequality &h, const Vec &x) {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        s += h.normal[i] * x[i];
    return s;
}

std::optional<Vec> solve(std::vector<Vec> a, Vec b) {
    const std::size_t n = b.size();
    for (std::size_t i = 0; i < n; ++i)
        a[i].push_back(b[i]);
    const auto pivots = rref(a, n);
    if (pivots.size() != n)
        return std::nullopt;
    Vec x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = a[i][n];
    return x;
}

std::optional<Vec> null_vector(std::vector<Vec> a, std::size_t cols) {
    const auto pivots = rref(a, cols);
    if (cols - pivots.size() != 1)
        return std::nullopt;
    std::size_t free_col = 0;
    while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end())
        ++free_col;
    Vec x(cols, Rational(0));
    x[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = -a[r][free_col];
    return x;
}

Points basic_feasible_points(const std::vector<Inequality> &hs, std::size_t n) {
    std::set<Vec> found;
    for_each_subset(hs.size(), n, [&](const std::vector<std::size_t> &idx) {
        std::vector<Vec> a;
        Vec b;
        for (auto i : idx) {
            Vec row;
            for (const auto &x : hs[i].normal)
                row.emplace_back(x);
            a.push_back(std::move(row));
            b.emplace_back(hs[i].offset);
        }
        auto x = solve(std::move(a), std::move(b));
        if (!x)
            return;
        for (const auto &h : hs)
            if (evaluate(h, *x) < h.offset)
                return;
        found.insert(*x);
    });
    return Points(found.begin(), found.end());
}

std::set<Inequality> valid_hyperplanes(const Points &s, std::size_t n) {
    // Generators 0..|s|-1 are points, the rest unit rays.
    const std::size_t m = s.size() + n;
    std::set<Inequality> out;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Integer> e(n, 0);
        e[j] = 1;
        out.insert(make_inequality(std::move(e), 0));
    }
    for_each_subset(m, n, [&](const std::vector<std::size_t> &idx) {
        if (idx.front() >= s.size())
            return;
        std::vector<Vec> rows;
        for (auto g : idx) {
            Vec row(n + 1, Rational(0));
            if (g < s.size()) {
                for (std::size_t j = 0; j < n; ++j)
                    row[j] = s[g][j];
                row[n] = -1;
            } else {
                row[g - s.size()] = 1;
            }
            rows.push_back(std::move(row));
        }
        auto v = null_vector(std::move(rows), n + 1);
        if (!v)
            return;
        for (int sign : {1, -1}) {
            Vec c(v->begin(), v->end());
            for (auto &x : c)
                x *= sign;
            const Rational beta = c[n];
            c.pop_back();
            if (std::any_of(c.begin(), c.end(), [](const Rational &x) { return x < 0; }))
                continue;
            if (std::all_of(c.begin(), c.end(), [](const Rational &x) { return x == 0; }))
                continue;
            bool valid = true;
            for (const auto &p : s) {
                Rational val = 0;
                for (std::size_t j = 0; j < n; ++j)
                    val += c[j] * p[j];
                if (val < beta) {
                    valid = false;
                    break;
                }
            }
            if (!valid)
                continue;
            Integer den = 1;
            for (const auto &x : c)
                mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), beta.get_den_mpz_t());
            std::vector<Integer> normal;
            for (const auto &x : c)
                normal.emplace_back(Rational(x * den).get_num());
            out.insert(make_inequality(std::move(normal), Rational(beta * den).get_num()));
        }
    });
    return out;
}

Points hull_vertices(const Points &s_in, std::size_t n) {
    std::set<Vec> uniq(s_in.begin(), s_in.end());
    Points s(uniq.begin(), uniq.end());
    Points out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        Points rest;
        for (std::size_t j = 0; j < s.size(); ++j)
            if (j != i)
                rest.push_back(s[j]);
        if (rest.empty()) {
            out.push_back(s[i]);
            continue;
        }
        for (const auto &h : valid_hyperplanes(rest, n))
            if (evaluate(h, s[i]) < h.offset) {
                out.push_back(s[i]);
                break;
            }
    }
    return out;
}

bool satisfies(const std::vector<Inequality> &hs, const std::vector<std::int64_t> &x, std::int64_t scale) {
    for (const auto &h : hs) {
        Integer v = 0;
        for (std::size_t i = 0; i < x.size(); ++i)
            v += h.normal[i] * Integer(static_cast<long>(x[i]));
        if (v < h.offset * Integer(static_cast<long>(scale)))
            return false;
    }
    return std::all_of(x.begin(), x.end(), [](std::int64_t v) { return v >= 0; });
}

namespace {

// Visits every point of [0, box]^n.
void for_each_box_point(std::size_t n, std::int64_t box,
                        const std::function<void(const std::vector<std::int64_t> &)> &f) {
    std::vector<std::int64_t> x(n, 0);
    while (true) {
        f(x);
        std::size_t i = 0;
        while (i < n && x[i] == box)
            x[i++] = 0;
        if (i == n)
            return;
        ++x[i];
    }
}

bool leq(const std::vector<std::int64_t> &a, const std::vector<std::int64_t> &b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

} // namespace

std::vector<nok::ExponentVector> box_minimal_points(const std::vector<Inequality> &hs, std::size_t n,
                                                    std::int64_t box, std::int64_t scale) {
    std::vector<std::vector<std::int64_t>> feasible;
    for_each_box_point(n, box, [&](const std::vector<std::int64_t> &x) {
        if (satisfies(hs, x, scale))
            feasible.push_back(x);
    });
    std::vector<nok::ExponentVector> out;
    for (const auto &p : feasible) {
        bool minimal = true;
        for (const auto &q : feasible)
            if (q != p && leq(q, p)) {
                minimal = false;
                break;
            }
        if (minimal)
            out.emplace_back(p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<std::size_t>> minimal_covers(const nok::MonomialIdeal &ideal) {
    const std::size_t n = ideal.nvars();
    std::vector<std::uint64_t> supports;
    for (const auto &g : ideal.generators()) {
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (g[i] > 0)
                m |= std::uint64_t{1} << i;
        supports.push_back(m);
    }
    auto covers = [&](std::uint64_t mask) {
        return std::all_of(supports.begin(), supports.end(),
                           [&](std::uint64_t s) { return (s & mask) != 0; });
    };
    std::vector<std::vector<std::size_t>> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        if (!covers(mask))
            continue;
        bool minimal = true;
        for (std::size_t i = 0; i < n && minimal; ++i)
            if ((mask >> i & 1) && covers(mask & ~(std::uint64_t{1} << i)))
                minimal = false;
        if (!minimal)
            continue;
        std::vector<std::size_t> c;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1)
                c.push_back(i);
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Inequality> symbolic_inequalities(std::size_t n,
                                              const std::vector<nok::PrimeComponent> &components) {
    std::vector<Inequality> out;
    for (const auto &c : components) {
        std::vector<Integer> normal(n, 0);
        for (auto v : c.variables)
            normal[v] = 1;
        out.push_back(make_inequality(std::move(normal), Integer(static_cast<long>(c.multiplicity))));
    }
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Integer> e(n, 0);
        e[j] = 1;
        out.push_back(make_inequality(std::move(e), 0));
    }
    return out;
}

bool dominates_sum_of(const std::vector<nok::ExponentVector> &gens, const std::vector<std::int64_t> &target,
                      std::int64_t m) {
    std::function<bool(std::size_t, std::int64_t, std::vector<std::int64_t> &)> go =
        [&](std::size_t first, std::int64_t left, std::vector<std::int64_t> &residual) {
            if (left == 0)
                return true;
            for (std::size_t g = first; g < gens.size(); ++g) {
                bool fits = true;
                for (std::size_t i = 0; i < residual.size(); ++i)
                    if (gens[g][i] > residual[i]) {
                        fits = false;
                        break;
                    }
                if (!fits)
                    continue;
                for (std::size_t i = 0; i < residual.size(); ++i)
                    residual[i] -= gens[g][i];
                const bool ok = go(g, left - 1, residual);
                for (std::size_t i = 0; i < residual.size(); ++i)
                    residual[i] += gens[g][i];
                if (ok)
                    return true;
            }
            return false;
        };
    std::vector<std::int64_t> residual(target);
    return go(0, m, residual);
}

bool HilbertPoint::operator<(const HilbertPoint &o) const {
    if (k != o.k)
        return k < o.k;
    return a < o.a;
}

std::vector<HilbertPoint> brute_force_hilbert(const std::vector<Inequality> &hs, std::size_t n,
                                              std::int64_t max_degree, std::int64_t box) {
    const std::int64_t side = box + 1;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i)
        total *= static_cast<std::size_t>(side);
    auto index = [&](const std::vector<std::int64_t> &x) {
        std::size_t id = 0;
        for (std::size_t i = n; i-- > 0;)
            id = id * static_cast<std::size_t>(side) + static_cast<std::size_t>(x[i]);
        return id;
    };
    // inside[j][x]: x lies in j * P.
    std::vector<std::vector<char>> inside(static_cast<std::size_t>(max_degree + 1),
                                          std::vector<char>(total, 0));
    for_each_box_point(n, box, [&](const std::vector<std::int64_t> &x) {
        for (std::int64_t j = 0; j <= max_degree; ++j)
            inside[static_cast<std::size_t>(j)][index(x)] = satisfies(hs, x, j);
    });

    std::vector<HilbertPoint> out;
    for_each_box_point(n, box, [&](const std::vector<std::int64_t> &a) {
        const auto ia = index(a);
        for (std::int64_t k = 1; k <= max_degree; ++k) {
            if (!inside[static_cast<std::size_t>(k)][ia])
                continue;
            bool reducible = false;
            std::vector<std::int64_t> b(n, 0), rest(a);
            // Walk every b <= a.
            while (!reducible) {
                const bool b_zero = std::all_of(b.begin(), b.end(), [](std::int64_t v) { return v == 0; });
                const auto ib = index(b), ir = index(rest);
                for (std::int64_t j = 0; j <= k && !reducible; ++j) {
                    if ((j == 0 && b_zero) || (j == k && b == a))
                        continue;
                    if (inside[static_cast<std::size_t>(j)][ib] &&
                        inside[static_cast<std::size_t>(k - j)][ir])
                        reducible = true;
                }
                std::size_t i = 0;
                while (i < n && b[i] == a[i]) {
                    b[i] = 0;
                    rest[i] = a[i];
                    ++i;
                }
                if (i == n)
                    break;
                ++b[i];
                --rest[i];
            }
            if (!reducible)
                out.push_back(HilbertPoint{a, k});
        }
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<nok::ExponentVector> random_generators(std::mt19937_64 &rng, std::size_t n, std::size_t count,
                                                   std::int64_t max_exp) {
    std::uniform_int_distribution<std::int64_t> dist(0, max_exp);
    std::vector<nok::ExponentVector> out;
    while (out.size() < count) {
        std::vector<std::int64_t> e(n);
        for (auto &x : e)
            x = dist(rng);
        if (std::all_of(e.begin(), e.end(), [](std::int64_t v) { return v == 0; }))
            continue;
        out.emplace_back(std::move(e));
    }
    return out;
}

} // namespace oracle
