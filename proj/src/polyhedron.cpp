#include "nok/polyhedron.hpp"
#include "nok/errors.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <set>

namespace nok {

namespace {

std::atomic<std::size_t> g_max_rays{10000};

Rational dot(const IntVector &a, const RationalVector &x) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0)
            s += a[i] * x[i];
    return s;
}

Integer dot(const IntVector &a, const IntVector &x) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * x[i];
    return s;
}

bool less_halfspace(const HalfSpace &a, const HalfSpace &b) {
    int c = compare(a.normal, b.normal);
    if (c != 0)
        return c < 0;
    return a.offset < b.offset;
}

// ---------------------------------------------------------------------------
// Double description on {y >= 0, rows * y >= 0}.

class Bits {
  public:
    explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
    void set(std::size_t i) {
        if (i / 64 >= words_.size())
            words_.resize(i / 64 + 1, 0);
        words_[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    Bits operator&(const Bits &o) const {
        Bits r;
        r.words_.resize(std::min(words_.size(), o.words_.size()));
        for (std::size_t i = 0; i < r.words_.size(); ++i)
            r.words_[i] = words_[i] & o.words_[i];
        return r;
    }
    bool contains(const Bits &o) const {
        for (std::size_t i = 0; i < o.words_.size(); ++i) {
            const std::uint64_t mine = i < words_.size() ? words_[i] : 0;
            if ((o.words_[i] & ~mine) != 0)
                return false;
        }
        return true;
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

  private:
    std::vector<std::uint64_t> words_;
};

struct DdRay {
    IntVector y;
    Bits zeros;
};

std::vector<IntVector> cone_extreme_rays(std::vector<IntVector> rows, std::size_t d) {
    std::stable_sort(rows.begin(), rows.end(), [](const IntVector &a, const IntVector &b) {
        auto nz = [](const IntVector &v) {
            return std::count_if(v.begin(), v.end(), [](const Integer &x) { return x != 0; });
        };
        return nz(a) < nz(b);
    });

    std::vector<DdRay> rays;
    for (std::size_t i = 0; i < d; ++i) {
        DdRay r{IntVector(d, 0), Bits(d)};
        r.y[i] = 1;
        for (std::size_t j = 0; j < d; ++j)
            if (j != i)
                r.zeros.set(j);
        rays.push_back(std::move(r));
    }

    const std::size_t limit = g_max_rays.load();
    for (std::size_t idx = 0; idx < rows.size(); ++idx) {
        const auto &row = rows[idx];
        const std::size_t cidx = d + idx;
        std::vector<Integer> val(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(row, rays[i].y);
            if (val[i] > 0)
                pos.push_back(i);
            else if (val[i] < 0)
                neg.push_back(i);
        }
        if (neg.empty()) {
            for (std::size_t i = 0; i < rays.size(); ++i)
                if (val[i] == 0)
                    rays[i].zeros.set(cidx);
            continue;
        }

        std::vector<DdRay> next;
        for (auto p : pos)
            for (auto q : neg) {
                Bits common = rays[p].zeros & rays[q].zeros;
                if (common.count() + 2 < d)
                    continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
                    if (r != p && r != q && rays[r].zeros.contains(common))
                        adjacent = false;
                if (!adjacent)
                    continue;
                DdRay nr{IntVector(d), common};
                for (std::size_t k = 0; k < d; ++k)
                    nr.y[k] = val[p] * rays[q].y[k] - val[q] * rays[p].y[k];
                make_primitive(nr.y);
                nr.zeros.set(cidx);
                next.push_back(std::move(nr));
            }
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (val[i] > 0) {
                next.push_back(std::move(rays[i]));
            } else if (val[i] == 0) {
                rays[i].zeros.set(cidx);
                next.push_back(std::move(rays[i]));
            }
        }
        rays = std::move(next);
        if (rays.size() > limit)
            fail(ErrorKind::VertexLimitExceeded,
                 "double description exceeded " + std::to_string(limit) + " rays");
    }

    std::vector<IntVector> out;
    out.reserve(rays.size());
    for (auto &r : rays)
        out.push_back(std::move(r.y));
    return out;
}

} // namespace

void set_max_rays(std::size_t limit) { g_max_rays = limit; }
std::size_t max_rays() { return g_max_rays.load(); }

HalfSpace::HalfSpace(IntVector normal_, Integer offset_)
    : normal(std::move(normal_)), offset(std::move(offset_)) {
    IntVector all(normal);
    all.push_back(offset);
    Integer g = 0;
    for (const auto &x : all)
        g = gcd(g, x);
    if (g > 1) {
        for (auto &x : normal)
            x /= g;
        offset /= g;
    }
}

HalfSpace HalfSpace::coordinate(std::size_t n, std::size_t j) {
    IntVector e(n, 0);
    e[j] = 1;
    return HalfSpace(std::move(e), 0);
}

Rational HalfSpace::evaluate(const RationalVector &x) const { return dot(normal, x); }

bool HalfSpace::satisfied_by(const RationalVector &x) const { return evaluate(x) >= offset; }

bool HalfSpace::tight_at(const RationalVector &x) const { return evaluate(x) == offset; }

std::vector<HalfSpace> RationalPolyhedron::constraints() const {
    std::vector<HalfSpace> out = facets_;
    for (std::size_t j = 0; j < nvars_; ++j) {
        auto c = HalfSpace::coordinate(nvars_, j);
        if (std::find(out.begin(), out.end(), c) == out.end())
            out.push_back(std::move(c));
    }
    return out;
}

RationalPolyhedron from_halfspaces(std::vector<HalfSpace> hs, std::size_t n) {
    if (n == 0)
        fail(ErrorKind::DimensionMismatch, "polyhedra need at least one coordinate");
    std::vector<char> orthant(n, 0);
    std::vector<HalfSpace> cleaned;
    for (auto &h : hs) {
        if (h.normal.size() != n)
            fail(ErrorKind::DimensionMismatch, "half-space normal has the wrong length");
        h = HalfSpace(h.normal, h.offset);
        bool zero = true;
        for (const auto &a : h.normal) {
            if (a < 0)
                fail(ErrorKind::NotUpSet, "half-space normals must be nonnegative");
            if (a != 0)
                zero = false;
        }
        if (zero) {
            if (h.offset > 0)
                fail(ErrorKind::InfeasibleSystem, "constraint 0 >= positive offset");
            continue;
        }
        std::size_t support = 0, where = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (h.normal[j] != 0) {
                ++support;
                where = j;
            }
        if (support == 1 && h.offset >= 0)
            orthant[where] = 1;
        cleaned.push_back(std::move(h));
    }
    for (std::size_t j = 0; j < n; ++j)
        if (!orthant[j])
            fail(ErrorKind::MissingOrthantConstraints,
                 "no constraint implies x_" + std::to_string(j + 1) + " >= 0");
    std::sort(cleaned.begin(), cleaned.end(), less_halfspace);
    cleaned.erase(std::unique(cleaned.begin(), cleaned.end()), cleaned.end());

    // Homogenize with y = (t, x): <a, x> - b t >= 0.
    std::vector<IntVector> rows;
    for (const auto &h : cleaned) {
        IntVector row;
        row.reserve(n + 1);
        row.push_back(-h.offset);
        row.insert(row.end(), h.normal.begin(), h.normal.end());
        rows.push_back(std::move(row));
    }
    auto cone = cone_extreme_rays(rows, n + 1);

    RationalPolyhedron p;
    p.nvars_ = n;
    for (const auto &y : cone) {
        if (y[0] > 0) {
            RationalVector v(n);
            for (std::size_t j = 0; j < n; ++j) {
                v[j] = make_rational(y[j + 1], y[0]);
            }
            p.vrep_.vertices.push_back(std::move(v));
        } else {
            IntVector r(y.begin() + 1, y.end());
            make_primitive(r);
            p.vrep_.rays.push_back(std::move(r));
        }
    }
    if (p.vrep_.vertices.empty())
        fail(ErrorKind::InfeasibleSystem, "the half-space system has no solution");
    std::sort(p.vrep_.vertices.begin(), p.vrep_.vertices.end(),
              [](const RationalVector &a, const RationalVector &b) { return compare(a, b) < 0; });
    std::sort(p.vrep_.rays.begin(), p.vrep_.rays.end(),
              [](const IntVector &a, const IntVector &b) { return compare(a, b) < 0; });

    // A constraint is a facet iff the cone generators it is tight on span a
    // hyperplane of R^{n+1}.
    std::vector<HalfSpace> candidates = cleaned;
    for (std::size_t j = 0; j < n; ++j)
        candidates.push_back(HalfSpace::coordinate(n, j));
    std::sort(candidates.begin(), candidates.end(), less_halfspace);
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (auto &h : candidates) {
        std::vector<IntVector> tight;
        for (const auto &y : cone) {
            Integer s = -h.offset * y[0];
            for (std::size_t j = 0; j < n; ++j)
                s += h.normal[j] * y[j + 1];
            if (s == 0)
                tight.push_back(y);
        }
        if (tight.size() >= n && rank(tight) == n)
            p.facets_.push_back(std::move(h));
    }
    return p;
}

namespace {

std::vector<RationalVector> minimal_rational_points(std::vector<RationalVector> pts) {
    std::sort(pts.begin(), pts.end(),
              [](const RationalVector &a, const RationalVector &b) { return compare(a, b) < 0; });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<RationalVector> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < pts.size() && !dominated; ++j) {
            if (i == j)
                continue;
            bool le = true;
            for (std::size_t k = 0; k < pts[i].size() && le; ++k)
                le = pts[j][k] <= pts[i][k];
            dominated = le;
        }
        if (!dominated)
            out.push_back(pts[i]);
    }
    return out;
}

} // namespace

RationalPolyhedron hull_up_set(const std::vector<RationalVector> &points, std::size_t n) {
    if (points.empty())
        fail(ErrorKind::EmptyInput, "hull of an empty point set");
    for (const auto &p : points) {
        if (p.size() != n)
            fail(ErrorKind::DimensionMismatch, "point has the wrong dimension");
        for (const auto &x : p)
            if (x < 0)
                fail(ErrorKind::NotUpSet, "points must lie in the nonnegative orthant");
    }
    auto pts = minimal_rational_points(points);

    std::vector<HalfSpace> hs;
    for (std::size_t j = 0; j < n; ++j)
        hs.push_back(HalfSpace::coordinate(n, j));
    if (pts.size() == 1) {
        for (std::size_t j = 0; j < n; ++j) {
            IntVector e(n, 0);
            e[j] = pts[0][j].get_den();
            hs.emplace_back(std::move(e), pts[0][j].get_num());
        }
        return from_halfspaces(std::move(hs), n);
    }

    // Valid inequalities <c, x> >= beta with c, beta >= 0 form the cone
    // {(c, beta) >= 0 : <c, p> - beta >= 0 for all p}; its extreme rays
    // contain every facet.
    std::vector<IntVector> rows;
    for (const auto &p : pts) {
        const Integer den = denominator_lcm(p);
        IntVector row;
        for (const auto &x : p)
            row.emplace_back(Integer(x * den));
        row.push_back(-den);
        rows.push_back(std::move(row));
    }
    for (auto &y : cone_extreme_rays(rows, n + 1)) {
        Integer beta = y.back();
        y.pop_back();
        bool zero = std::all_of(y.begin(), y.end(), [](const Integer &a) { return a == 0; });
        if (!zero)
            hs.emplace_back(std::move(y), std::move(beta));
    }
    return from_halfspaces(std::move(hs), n);
}

RationalPolyhedron hull_up_set(const std::vector<ExponentVector> &points, std::size_t n) {
    std::vector<RationalVector> pts;
    pts.reserve(points.size());
    for (const auto &p : points)
        pts.push_back(p.to_rational());
    return hull_up_set(pts, n);
}

bool contains(const RationalPolyhedron &p, const RationalVector &x) {
    if (x.size() != p.nvars())
        fail(ErrorKind::DimensionMismatch, "point has the wrong dimension");
    return std::all_of(p.facets().begin(), p.facets().end(),
                       [&](const HalfSpace &h) { return h.satisfied_by(x); });
}

bool contains(const RationalPolyhedron &p, const ExponentVector &x) {
    return contains(p, x.to_rational());
}

bool is_subset(const RationalPolyhedron &p, const RationalPolyhedron &q) {
    if (p.nvars() != q.nvars())
        fail(ErrorKind::DimensionMismatch, "polyhedra of different dimensions");
    for (const auto &v : p.vertices())
        if (!contains(q, v))
            return false;
    for (const auto &r : p.rays())
        for (const auto &h : q.facets())
            if (dot(h.normal, r) < 0)
                return false;
    return true;
}

bool equal(const RationalPolyhedron &p, const RationalPolyhedron &q) {
    return is_subset(p, q) && is_subset(q, p);
}

RationalPolyhedron scale(const RationalPolyhedron &p, const Rational &t) {
    if (t <= 0)
        fail(ErrorKind::NonPositiveScale, "scale factors must be positive");
    std::vector<HalfSpace> hs;
    for (const auto &h : p.facets()) {
        IntVector a(h.normal);
        for (auto &x : a)
            x *= t.get_den();
        hs.emplace_back(std::move(a), Integer(h.offset * t.get_num()));
    }
    for (std::size_t j = 0; j < p.nvars(); ++j)
        hs.push_back(HalfSpace::coordinate(p.nvars(), j));
    auto out = from_halfspaces(std::move(hs), p.nvars());
    return out;
}

RationalPolyhedron intersect_polyhedra(std::span<const RationalPolyhedron> ps) {
    if (ps.empty())
        fail(ErrorKind::EmptyList, "cannot intersect an empty list of polyhedra");
    const auto n = ps.front().nvars();
    std::vector<HalfSpace> hs;
    for (const auto &p : ps) {
        if (p.nvars() != n)
            fail(ErrorKind::DimensionMismatch, "polyhedra of different dimensions");
        hs.insert(hs.end(), p.facets().begin(), p.facets().end());
    }
    for (std::size_t j = 0; j < n; ++j)
        hs.push_back(HalfSpace::coordinate(n, j));
    return from_halfspaces(std::move(hs), n);
}

std::size_t affine_dimension(const std::vector<RationalVector> &points) {
    if (points.size() < 2)
        return 0;
    std::vector<IntVector> diffs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        RationalVector d(points[i]);
        for (std::size_t k = 0; k < d.size(); ++k)
            d[k] -= points[0][k];
        diffs.push_back(clear_denominators(d));
    }
    return rank(std::move(diffs));
}

namespace {

struct Incidence {
    std::vector<HalfSpace> constraints;
    std::vector<std::vector<char>> tight; // [vertex][constraint]

    explicit Incidence(const RationalPolyhedron &p) : constraints(p.constraints()) {
        for (const auto &v : p.vertices()) {
            std::vector<char> row(constraints.size());
            for (std::size_t c = 0; c < constraints.size(); ++c)
                row[c] = constraints[c].tight_at(v);
            tight.push_back(std::move(row));
        }
    }

    bool covers_all_columns(const std::vector<std::size_t> &cs, std::size_t n) const {
        for (std::size_t j = 0; j < n; ++j) {
            bool hit = false;
            for (auto c : cs)
                if (constraints[c].normal[j] > 0) {
                    hit = true;
                    break;
                }
            if (!hit)
                return false;
        }
        return true;
    }

    // Smallest face containing the vertex set `w`.
    FaceDescriptor closure(const std::vector<char> &w, const RationalPolyhedron &p) const {
        FaceDescriptor f;
        for (std::size_t c = 0; c < constraints.size(); ++c) {
            bool all = true;
            for (std::size_t v = 0; v < w.size() && all; ++v)
                if (w[v] && !tight[v][c])
                    all = false;
            if (all)
                f.tight_constraints.push_back(c);
        }
        for (std::size_t v = 0; v < tight.size(); ++v) {
            bool all = true;
            for (auto c : f.tight_constraints)
                if (!tight[v][c]) {
                    all = false;
                    break;
                }
            if (all)
                f.vertices.push_back(v);
        }
        f.compact = covers_all_columns(f.tight_constraints, p.nvars());
        return f;
    }
};

std::vector<RationalVector> pick(const RationalPolyhedron &p, const std::vector<std::size_t> &idx) {
    std::vector<RationalVector> out;
    for (auto i : idx)
        out.push_back(p.vertices()[i]);
    return out;
}

} // namespace

std::vector<FaceDescriptor> compact_faces(const RationalPolyhedron &p) {
    if (p.vertices().empty())
        fail(ErrorKind::NoVertices, "polyhedron has no vertices");
    Incidence inc(p);
    const std::size_t nv = p.vertices().size();
    std::set<std::vector<std::size_t>> seen;
    std::deque<FaceDescriptor> queue;
    std::vector<FaceDescriptor> out;

    auto consider = [&](FaceDescriptor f) {
        if (!f.compact || !seen.insert(f.vertices).second)
            return;
        f.dim = affine_dimension(pick(p, f.vertices));
        queue.push_back(f);
        out.push_back(std::move(f));
    };
    for (std::size_t v = 0; v < nv; ++v) {
        std::vector<char> w(nv, 0);
        w[v] = 1;
        consider(inc.closure(w, p));
    }
    while (!queue.empty()) {
        FaceDescriptor f = std::move(queue.front());
        queue.pop_front();
        std::vector<char> w(nv, 0);
        for (auto v : f.vertices)
            w[v] = 1;
        for (std::size_t u = 0; u < nv; ++u) {
            if (w[u])
                continue;
            w[u] = 1;
            consider(inc.closure(w, p));
            w[u] = 0;
        }
    }
    std::sort(out.begin(), out.end(), [](const FaceDescriptor &a, const FaceDescriptor &b) {
        return a.dim != b.dim ? a.dim < b.dim : a.vertices < b.vertices;
    });
    return out;
}

std::size_t mdc(const RationalPolyhedron &p) {
    std::size_t best = 0;
    for (const auto &f : compact_faces(p))
        best = std::max(best, f.dim);
    return best;
}

PointDecomposition decompose_point(const RationalPolyhedron &p, const RationalVector &v) {
    // The sliding loop compares exactly, which needs canonical fractions.
    RationalVector u(v);
    for (auto &x : u)
        x.canonicalize();
    if (!contains(p, u))
        fail(ErrorKind::PointNotInPolyhedron, "point to decompose lies outside the polyhedron");
    const auto cons = p.constraints();
    const std::size_t n = p.nvars();
    RationalVector w(n, Rational(0));

    for (;;) {
        std::vector<std::size_t> tight;
        for (std::size_t c = 0; c < cons.size(); ++c)
            if (cons[c].tight_at(u))
                tight.push_back(c);
        std::size_t uncovered = n;
        for (std::size_t j = 0; j < n && uncovered == n; ++j) {
            bool hit = false;
            for (auto c : tight)
                if (cons[c].normal[j] > 0) {
                    hit = true;
                    break;
                }
            if (!hit)
                uncovered = j;
        }
        if (uncovered == n) {
            PointDecomposition out{u, w, {}};
            out.face.tight_constraints = tight;
            for (std::size_t i = 0; i < p.vertices().size(); ++i) {
                bool all = true;
                for (auto c : tight)
                    if (!cons[c].tight_at(p.vertices()[i])) {
                        all = false;
                        break;
                    }
                if (all)
                    out.face.vertices.push_back(i);
            }
            out.face.compact = true;
            out.face.dim = affine_dimension(pick(p, out.face.vertices));
            return out;
        }
        // Slide along -e_j until the first constraint involving x_j is hit;
        // the coordinate half-space x_j >= 0 is among them.
        const auto j = uncovered;
        std::optional<Rational> step;
        for (const auto &c : cons) {
            if (c.normal[j] <= 0)
                continue;
            Rational room = (c.evaluate(u) - c.offset) / Rational(c.normal[j]);
            if (!step || room < *step)
                step = room;
        }
        u[j] -= *step;
        w[j] += *step;
    }
}

namespace {

void caratheodory(const RationalPolyhedron &p, const std::vector<HalfSpace> &cons,
                  const RationalVector &u, const Rational &scale_factor,
                  std::vector<std::pair<std::size_t, Rational>> &acc) {
    std::vector<std::size_t> tight;
    for (std::size_t c = 0; c < cons.size(); ++c)
        if (cons[c].tight_at(u))
            tight.push_back(c);
    std::vector<std::size_t> face;
    for (std::size_t i = 0; i < p.vertices().size(); ++i) {
        bool all = std::all_of(tight.begin(), tight.end(),
                               [&](std::size_t c) { return cons[c].tight_at(p.vertices()[i]); });
        if (all)
            face.push_back(i);
    }
    const auto &v0 = p.vertices()[face.front()];
    if (v0 == u) {
        acc.emplace_back(face.front(), scale_factor);
        return;
    }
    RationalVector d(u);
    for (std::size_t k = 0; k < d.size(); ++k)
        d[k] -= v0[k];
    std::optional<Rational> reach;
    for (const auto &c : cons) {
        Rational slope = c.evaluate(d);
        if (slope >= 0)
            continue;
        Rational s = (c.evaluate(v0) - c.offset) / -slope;
        if (!reach || s < *reach)
            reach = s;
    }
    // A compact face always stops the ray from v0 through u.
    const Rational s = *reach;
    RationalVector far(v0);
    for (std::size_t k = 0; k < far.size(); ++k)
        far[k] += s * d[k];
    acc.emplace_back(face.front(), scale_factor * (1 - 1 / s));
    caratheodory(p, cons, far, scale_factor / s, acc);
}

} // namespace

ConvexCertificate membership_certificate(const RationalPolyhedron &p, const RationalVector &x) {
    auto dec = decompose_point(p, x);
    const auto cons = p.constraints();
    std::vector<std::pair<std::size_t, Rational>> acc;
    caratheodory(p, cons, dec.on_compact_face, Rational(1), acc);
    std::sort(acc.begin(), acc.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    ConvexCertificate cert;
    for (auto &[idx, wgt] : acc) {
        if (wgt == 0)
            continue;
        if (!cert.vertex_indices.empty() && cert.vertex_indices.back() == idx) {
            cert.weights.back() += wgt;
        } else {
            cert.vertex_indices.push_back(idx);
            cert.weights.push_back(wgt);
        }
    }
    cert.slack = dec.slack;
    return cert;
}

IntegerUpSet integer_up_set(const RationalPolyhedron &p) {
    IntegerUpSet s;
    s.nvars = p.nvars();
    for (const auto &h : p.facets()) {
        std::vector<std::int64_t> row;
        for (const auto &a : h.normal)
            row.push_back(to_int64(a));
        s.normals.push_back(std::move(row));
        s.offsets.push_back(to_int64(h.offset));
    }
    return s;
}

std::vector<ExponentVector> minimal_lattice_points(const RationalPolyhedron &p,
                                                   std::optional<std::vector<Exponent>> box,
                                                   Exec exec) {
    const auto set = integer_up_set(p);
    const auto derived = set.minimal_point_bound();
    auto points = enumerate_minimal_points(set, derived, exec);
    if (box) {
        if (box->size() != p.nvars())
            fail(ErrorKind::DimensionMismatch, "box has the wrong dimension");
        for (const auto &pt : points)
            for (std::size_t j = 0; j < pt.size(); ++j)
                if (pt[j] > (*box)[j])
                    fail(ErrorKind::BoundTooSmall,
                         "a minimal lattice point exceeds the box in coordinate " +
                             std::to_string(j + 1));
    }
    return points;
}

std::vector<Integer> vertex_denominators(const RationalPolyhedron &p) {
    std::vector<Integer> out;
    for (const auto &v : p.vertices())
        out.push_back(denominator_lcm(v));
    return out;
}

} // namespace nok
