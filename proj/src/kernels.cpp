#include "nok/kernels.hpp"
#include "nok/errors.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nok {

namespace {

std::atomic<int> g_threads{0};

bool dominated_by(const ExponentVector &q, const ExponentVector &p) { return q.divides(p); }

std::vector<ExponentVector> sorted_unique(std::vector<ExponentVector> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

} // namespace

void set_num_threads(int n) {
    g_threads = n;
#ifdef _OPENMP
    if (n > 0)
        omp_set_num_threads(n);
#endif
}

int num_threads() {
#ifdef _OPENMP
    return g_threads > 0 ? g_threads.load() : omp_get_max_threads();
#else
    return 1;
#endif
}

std::vector<ExponentVector> minimal_elements(std::vector<ExponentVector> points, Exec exec) {
    points = sorted_unique(std::move(points));
    if (points.size() < 2)
        return points;

    // A dominating point has strictly smaller total degree, so sorting by degree
    // bounds the candidates each point must be checked against.
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<Exponent> degree(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        degree[i] = points[i].total_degree();
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return degree[a] < degree[b]; });

    std::vector<char> keep(points.size(), 1);
    const auto count = static_cast<std::int64_t>(order.size());

    if (exec == Exec::serial) {
        std::vector<std::size_t> kept;
        for (std::int64_t pos = 0; pos < count; ++pos) {
            const auto &p = points[order[pos]];
            bool dominated = false;
            for (auto q : kept)
                if (degree[q] < degree[order[pos]] && dominated_by(points[q], p)) {
                    dominated = true;
                    break;
                }
            if (dominated)
                keep[order[pos]] = 0;
            else
                kept.push_back(order[pos]);
        }
    } else {
#pragma omp parallel for schedule(dynamic, 64)
        for (std::int64_t pos = 0; pos < count; ++pos) {
            const auto idx = order[pos];
            const auto &p = points[idx];
            for (std::int64_t other = 0; other < pos; ++other) {
                const auto q = order[other];
                if (degree[q] >= degree[idx])
                    break;
                if (dominated_by(points[q], p)) {
                    keep[idx] = 0;
                    break;
                }
            }
        }
    }

    std::vector<ExponentVector> out;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (keep[i])
            out.push_back(std::move(points[i]));
    return out;
}

bool IntegerUpSet::contains(std::span<const Exponent> x) const {
    for (auto v : x)
        if (v < 0)
            return false;
    for (std::size_t f = 0; f < normals.size(); ++f) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < nvars; ++j)
            s += normals[f][j] * x[j];
        if (s < offsets[f])
            return false;
    }
    return true;
}

std::vector<Exponent> IntegerUpSet::minimal_point_bound() const {
    std::vector<Exponent> bound(nvars, 0);
    for (std::size_t f = 0; f < normals.size(); ++f)
        for (std::size_t j = 0; j < nvars; ++j) {
            const auto nj = normals[f][j];
            if (nj <= 0 || offsets[f] <= 0)
                continue;
            bound[j] = std::max<Exponent>(bound[j], (offsets[f] + nj - 1) / nj);
        }
    return bound;
}

namespace {

// Depth-first enumeration over coordinates 0..n-2; the last coordinate is set
// to its least feasible value. Branches are cut as soon as an assigned
// positive coordinate can no longer be tight-ish on any facet, which is
// monotone in every later choice.
class MinimalPointSearch {
  public:
    MinimalPointSearch(const IntegerUpSet &set, std::span<const Exponent> box, const PointFilter &keep)
        : set_(set), box_(box), keep_(keep), n_(set.nvars), m_(set.normals.size()) {
        // involved_[j]: facets with a positive coefficient on coordinate j.
        involved_.resize(n_);
        for (std::size_t f = 0; f < m_; ++f)
            for (std::size_t j = 0; j < n_; ++j)
                if (set.normals[f][j] > 0)
                    involved_[j].push_back(f);
    }

    void run_from(Exponent first, std::vector<ExponentVector> &out) const {
        std::vector<Exponent> x(n_, 0);
        std::vector<std::int64_t> partial(m_, 0);
        if (n_ == 1) {
            finish(x, partial, out);
            return;
        }
        x[0] = first;
        for (std::size_t f = 0; f < m_; ++f)
            partial[f] = set_.normals[f][0] * first;
        if (first > 0 && !can_stay_minimal(0, partial))
            return;
        descend(1, x, partial, out);
    }

  private:
    bool can_stay_minimal(std::size_t j, const std::vector<std::int64_t> &partial) const {
        for (auto f : involved_[j])
            if (partial[f] < set_.offsets[f] + set_.normals[f][j])
                return true;
        return false;
    }

    bool assigned_still_minimal(std::size_t upto, const std::vector<Exponent> &x,
                                const std::vector<std::int64_t> &partial) const {
        for (std::size_t j = 0; j <= upto; ++j)
            if (x[j] > 0 && !can_stay_minimal(j, partial))
                return false;
        return true;
    }

    void descend(std::size_t i, std::vector<Exponent> &x, std::vector<std::int64_t> &partial,
                 std::vector<ExponentVector> &out) const {
        if (i + 1 == n_) {
            finish(x, partial, out);
            return;
        }
        for (Exponent v = 0; v <= box_[i]; ++v) {
            x[i] = v;
            if (v > 0) {
                for (auto f : involved_[i])
                    partial[f] += set_.normals[f][i];
                if (!assigned_still_minimal(i, x, partial))
                    break;
            }
            descend(i + 1, x, partial, out);
        }
        for (auto f : involved_[i])
            partial[f] -= set_.normals[f][i] * x[i];
        x[i] = 0;
    }

    void finish(std::vector<Exponent> &x, const std::vector<std::int64_t> &partial,
                std::vector<ExponentVector> &out) const {
        const std::size_t last = n_ - 1;
        Exponent need = 0;
        for (std::size_t f = 0; f < m_; ++f) {
            const auto coef = set_.normals[f][last];
            const auto deficit = set_.offsets[f] - partial[f];
            if (coef == 0) {
                if (deficit > 0)
                    return;
            } else if (deficit > 0) {
                need = std::max<Exponent>(need, (deficit + coef - 1) / coef);
            }
        }
        if (need > box_[last])
            return;
        x[last] = need;
        std::vector<std::int64_t> total(partial);
        for (auto f : involved_[last])
            total[f] += set_.normals[f][last] * need;
        for (std::size_t j = 0; j < n_; ++j)
            if (x[j] > 0) {
                bool tight = false;
                for (auto f : involved_[j])
                    if (total[f] - set_.normals[f][j] < set_.offsets[f]) {
                        tight = true;
                        break;
                    }
                if (!tight) {
                    x[last] = 0;
                    return;
                }
            }
        if (!keep_ || keep_(x))
            out.emplace_back(std::vector<Exponent>(x));
        x[last] = 0;
    }

    const IntegerUpSet &set_;
    std::span<const Exponent> box_;
    const PointFilter &keep_;
    std::size_t n_;
    std::size_t m_;
    std::vector<std::vector<std::size_t>> involved_;
};

void check_magnitudes(const IntegerUpSet &set, std::span<const Exponent> box) {
    // Partial sums are bounded by sum_j N_fj * box_j; keep them far from overflow.
    constexpr std::int64_t limit = std::int64_t{1} << 60;
    for (std::size_t f = 0; f < set.normals.size(); ++f) {
        __int128 s = 0;
        for (std::size_t j = 0; j < set.nvars; ++j) {
            if (set.normals[f][j] < 0)
                fail(ErrorKind::NotUpSet, "negative coefficient in lattice enumeration");
            s += static_cast<__int128>(set.normals[f][j]) * (box[j] + 1);
        }
        if (s > limit || set.offsets[f] > limit || set.offsets[f] < -limit)
            fail(ErrorKind::Overflow, "lattice enumeration coefficients too large");
    }
}

} // namespace

std::vector<ExponentVector> enumerate_minimal_points(const IntegerUpSet &set,
                                                     std::span<const Exponent> box, Exec exec,
                                                     const PointFilter &keep) {
    if (box.size() != set.nvars)
        fail(ErrorKind::DimensionMismatch, "box dimension differs from the polyhedron's");
    if (set.nvars == 0)
        return {};
    check_magnitudes(set, box);
    MinimalPointSearch search(set, box, keep);

    std::vector<ExponentVector> out;
    const std::int64_t firsts = set.nvars == 1 ? 1 : box[0] + 1;
    if (exec == Exec::serial || firsts == 1) {
        for (std::int64_t v = 0; v < firsts; ++v)
            search.run_from(v, out);
    } else {
        std::vector<std::vector<ExponentVector>> buckets(static_cast<std::size_t>(firsts));
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t v = 0; v < firsts; ++v)
            search.run_from(v, buckets[static_cast<std::size_t>(v)]);
        for (auto &b : buckets)
            out.insert(out.end(), std::make_move_iterator(b.begin()),
                       std::make_move_iterator(b.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace nok
