#include "nefkit/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <boost/dynamic_bitset.hpp>

namespace nefkit {

namespace {

// Affine chart: a unimodular change of coordinates mapping the polytope's
// affine span onto the first k coordinates.  Local coordinates of an
// on-span lattice point are again lattice points (the direction lattice is
// saturated), so hulls and enumerations can be done full-dimensionally.
struct Chart {
    int d = 0;
    int k = 0;
    Vec base;
    IntMatrix V;  // d x d unimodular, t_full = (p - base) * V
    IntMatrix W;  // V^{-1}, ambient = base + t * firstKRows(W)

    Vec toLocal(const Vec& p) const {
        Vec diff = sub(p, base);
        Vec t(static_cast<std::size_t>(k));
        for (int j = 0; j < d; ++j) {
            Int s = 0;
            for (int i = 0; i < d; ++i) s += diff[i] * V.at(i, j);
            if (j < k)
                t[j] = s;
            else if (s != 0)
                throw InternalError("Chart::toLocal: point off the affine span");
        }
        return t;
    }

    Vec toAmbient(const Vec& t) const {
        Vec p = base;
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < d; ++i) p[i] += t[j] * W.at(j, i);
        return p;
    }

    // n with <n, x - base> = <u, local(x)> on the span.
    Vec normalToAmbient(const Vec& u) const {
        Vec n(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) {
            Int s = 0;
            for (int j = 0; j < k; ++j) s += V.at(i, j) * u[j];
            n[i] = s;
        }
        return n;
    }

    // u with <u, local(x)> = <n, x - base>.
    Vec normalToLocal(const Vec& n) const {
        Vec u(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j) u[j] = dot(n, W.row(j));
        return u;
    }
};

Chart makeChart(const std::vector<Vec>& pts, int d) {
    Chart c;
    c.d = d;
    c.base = *std::min_element(pts.begin(), pts.end());
    std::vector<Vec> dirs;
    for (const Vec& p : pts)
        if (p != c.base) dirs.push_back(sub(p, c.base));
    if (dirs.empty()) {
        c.k = 0;
        c.V = IntMatrix::identity(d);
        c.W = IntMatrix::identity(d);
        return c;
    }
    SmithResult s = smithNormalForm(IntMatrix::fromRows(dirs, d));
    int k = 0;
    for (const Int& x : s.diagonal)
        if (x != 0) ++k;
    c.k = k;
    c.V = s.right;
    c.W = inverseUnimodular(s.right);
    return c;
}

int dimOfPointSet(const std::vector<Vec>& pts, int d) {
    if (pts.empty()) return -1;
    std::vector<Vec> dirs;
    for (std::size_t i = 1; i < pts.size(); ++i) dirs.push_back(sub(pts[i], pts[0]));
    if (dirs.empty()) return 0;
    return static_cast<int>(rank(IntMatrix::fromRows(dirs, d)));
}

std::vector<Vec> dedupSorted(std::vector<Vec> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

}  // namespace

std::vector<Vec> extremeRaysOfCone(const std::vector<Vec>& ineqs, int n) {
    const std::size_t m = ineqs.size();

    // pick n linearly independent inequalities for the simplicial start
    std::vector<std::size_t> chosen;
    std::vector<RatVec> echelon;  // reduced rows
    for (std::size_t i = 0; i < m && chosen.size() < static_cast<std::size_t>(n); ++i) {
        RatVec r(ineqs[i].begin(), ineqs[i].end());
        for (const RatVec& e : echelon) {
            std::size_t p = 0;
            while (p < e.size() && e[p] == 0) ++p;
            if (p < e.size() && r[p] != 0) {
                Rational f = r[p] / e[p];
                for (std::size_t j = p; j < r.size(); ++j) r[j] -= f * e[j];
            }
        }
        if (std::any_of(r.begin(), r.end(), [](const Rational& x) { return x != 0; })) {
            echelon.push_back(r);
            chosen.push_back(i);
        }
    }
    if (chosen.size() < static_cast<std::size_t>(n))
        throw InternalError("extremeRaysOfCone: cone is not pointed");

    IntMatrix a0(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a0.at(i, j) = ineqs[chosen[i]][j];
    Int d0 = det(a0);
    Int ad0 = abs(d0);

    struct Ray {
        Vec v;
        boost::dynamic_bitset<> tight;
    };
    std::vector<Ray> rays;
    for (int j = 0; j < n; ++j) {
        RatVec e(n, Rational(0));
        e[j] = 1;
        auto x = solveRational(a0, e);
        Vec v(n);
        for (int i = 0; i < n; ++i) {
            Rational xi = (*x)[i] * ad0;
            if (denominator(xi) != 1) throw InternalError("extremeRaysOfCone: adjugate not integral");
            v[i] = numerator(xi);
        }
        Ray r{primitive(std::move(v)), boost::dynamic_bitset<>(m)};
        for (int i = 0; i < n; ++i)
            if (i != j) r.tight.set(chosen[i]);
        rays.push_back(std::move(r));
    }

    std::vector<char> isChosen(m, 0);
    for (std::size_t i : chosen) isChosen[i] = 1;

    for (std::size_t gi = 0; gi < m; ++gi) {
        if (isChosen[gi]) continue;
        const Vec& a = ineqs[gi];
        std::vector<Int> val(rays.size());
        bool anyNeg = false;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            val[r] = dot(a, rays[r].v);
            if (val[r] == 0) rays[r].tight.set(gi);
            if (val[r] < 0) anyNeg = true;
        }
        if (!anyNeg) continue;

        std::vector<Ray> next;
        for (std::size_t r = 0; r < rays.size(); ++r)
            if (val[r] >= 0) next.push_back(rays[r]);

        for (std::size_t p = 0; p < rays.size(); ++p) {
            if (val[p] <= 0) continue;
            for (std::size_t q = 0; q < rays.size(); ++q) {
                if (val[q] >= 0) continue;
                boost::dynamic_bitset<> t = rays[p].tight & rays[q].tight;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size(); ++r) {
                    if (r == p || r == q) continue;
                    if (t.is_subset_of(rays[r].tight)) {
                        adjacent = false;
                        break;
                    }
                }
                if (!adjacent) continue;
                Vec w(n);
                for (int i = 0; i < n; ++i) w[i] = val[p] * rays[q].v[i] - val[q] * rays[p].v[i];
                w = primitive(std::move(w));
                t.set(gi);
                bool dup = false;
                for (const Ray& r : next)
                    if (r.v == w) {
                        dup = true;
                        break;
                    }
                if (!dup) next.push_back(Ray{std::move(w), std::move(t)});
            }
        }
        rays = std::move(next);
    }

    std::vector<Vec> out;
    out.reserve(rays.size());
    for (Ray& r : rays) out.push_back(std::move(r.v));
    std::sort(out.begin(), out.end());
    return out;
}

LatticePolytope hullFromVertices(const std::vector<Vec>& points, int ambientDim) {
    if (points.empty()) throw InputError("hullFromVertices: no points");
    for (const Vec& p : points)
        if (static_cast<int>(p.size()) != ambientDim)
            throw InputError("hullFromVertices: point dimension mismatch");

    std::vector<Vec> pts = dedupSorted(points);
    LatticePolytope poly;
    poly.ambientDim = ambientDim;

    Chart chart = makeChart(pts, ambientDim);
    poly.intrinsicDim = chart.k;

    // span equations from the trailing columns of the chart matrix
    for (int j = chart.k; j < ambientDim; ++j) {
        Vec nrm(static_cast<std::size_t>(ambientDim));
        for (int i = 0; i < ambientDim; ++i) nrm[i] = chart.V.at(i, j);
        poly.spanEq.emplace_back(nrm, dot(nrm, chart.base));
    }
    std::sort(poly.spanEq.begin(), poly.spanEq.end());

    if (chart.k == 0) {
        poly.vertices = {pts[0]};
        return poly;
    }

    std::vector<Vec> local;
    local.reserve(pts.size());
    for (const Vec& p : pts) local.push_back(chart.toLocal(p));

    // facets of conv(local) = extreme rays of {(a0,u) : a0 + <u,q> >= 0}
    std::vector<Vec> ineqs;
    ineqs.reserve(local.size());
    for (const Vec& q : local) {
        Vec row(static_cast<std::size_t>(chart.k + 1));
        row[0] = 1;
        for (int j = 0; j < chart.k; ++j) row[j + 1] = q[j];
        ineqs.push_back(std::move(row));
    }
    std::vector<Vec> facetRays = extremeRaysOfCone(ineqs, chart.k + 1);

    std::vector<std::pair<Vec, Int>> localFacets;  // (u, a0)
    for (const Vec& ray : facetRays) {
        Vec u(ray.begin() + 1, ray.end());
        if (gcdOf(u) == 0) throw InternalError("hullFromVertices: degenerate facet ray");
        localFacets.emplace_back(std::move(u), ray[0]);
    }

    // vertices: points whose active facet normals span the chart
    std::vector<std::size_t> vertexIdx;
    for (std::size_t i = 0; i < local.size(); ++i) {
        std::vector<Vec> active;
        for (const auto& [u, a0] : localFacets)
            if (dot(u, local[i]) == -a0) active.push_back(u);
        if (static_cast<int>(active.size()) >= chart.k &&
            static_cast<int>(rank(IntMatrix::fromRows(active, chart.k))) == chart.k)
            vertexIdx.push_back(i);
    }
    for (std::size_t i : vertexIdx) poly.vertices.push_back(pts[i]);
    std::sort(poly.vertices.begin(), poly.vertices.end());
    if (poly.vertices.empty()) throw InternalError("hullFromVertices: no vertices found");

    for (const auto& [u, a0] : localFacets) {
        Vec n = chart.normalToAmbient(u);
        poly.facets.push_back(HalfSpace{n, a0 - dot(n, chart.base)});
    }
    std::sort(poly.facets.begin(), poly.facets.end(),
              [](const HalfSpace& x, const HalfSpace& y) {
                  return std::tie(x.normal, x.offset) < std::tie(y.normal, y.offset);
              });
    return poly;
}

LatticePolytope originPolytope(int ambientDim) {
    return hullFromVertices({Vec(static_cast<std::size_t>(ambientDim), Int(0))}, ambientDim);
}

PointEnumeration enumerateLatticePoints(const LatticePolytope& p) {
    PointEnumeration out;
    if (p.intrinsicDim == 0) {
        out.all = p.vertices;
        out.interior = p.vertices;  // a point is its own relative interior
        return out;
    }
    Chart chart = makeChart(p.vertices, p.ambientDim);
    const int k = chart.k;

    std::vector<Vec> local;
    for (const Vec& v : p.vertices) local.push_back(chart.toLocal(v));

    struct LocalFacet {
        Vec u;
        Int a0;
    };
    std::vector<LocalFacet> facets;
    for (const HalfSpace& h : p.facets)
        facets.push_back(LocalFacet{chart.normalToLocal(h.normal), h.offset + dot(h.normal, chart.base)});

    Vec lo(local[0]), hi(local[0]);
    for (const Vec& q : local)
        for (int j = 0; j < k; ++j) {
            if (q[j] < lo[j]) lo[j] = q[j];
            if (q[j] > hi[j]) hi[j] = q[j];
        }

    // maxTail[f][depth]: largest achievable contribution of coordinates >= depth
    std::vector<std::vector<Int>> maxTail(facets.size(), std::vector<Int>(k + 1, Int(0)));
    for (std::size_t f = 0; f < facets.size(); ++f)
        for (int depth = k - 1; depth >= 0; --depth) {
            const Int& c = facets[f].u[depth];
            maxTail[f][depth] = maxTail[f][depth + 1] + (c >= 0 ? c * hi[depth] : c * lo[depth]);
        }

    Vec t(static_cast<std::size_t>(k));
    std::vector<Int> partial(facets.size());
    for (std::size_t f = 0; f < facets.size(); ++f) partial[f] = facets[f].a0;

    auto recurse = [&](auto&& self, int depth) -> void {
        if (depth == k) {
            bool strict = true;
            for (const Int& g : partial) {
                if (g < 0) return;
                if (g == 0) strict = false;
            }
            Vec amb = chart.toAmbient(t);
            out.all.push_back(amb);
            if (strict) out.interior.push_back(std::move(amb));
            return;
        }
        std::vector<Int> saved = partial;
        for (Int c = lo[depth]; c <= hi[depth]; ++c) {
            t[depth] = c;
            bool feasible = true;
            for (std::size_t f = 0; f < facets.size(); ++f) {
                partial[f] = saved[f] + facets[f].u[depth] * c;
                if (partial[f] + maxTail[f][depth + 1] < 0) feasible = false;
            }
            if (feasible) self(self, depth + 1);
        }
        partial = saved;
    };
    recurse(recurse, 0);

    std::sort(out.all.begin(), out.all.end());
    std::sort(out.interior.begin(), out.interior.end());
    return out;
}

std::vector<Vec> latticePoints(const LatticePolytope& p) { return enumerateLatticePoints(p).all; }

Int latticePointCount(const LatticePolytope& p) {
    return Int(enumerateLatticePoints(p).all.size());
}

std::vector<Vec> interiorLatticePoints(const LatticePolytope& p) {
    return enumerateLatticePoints(p).interior;
}

Int interiorLatticePointCount(const LatticePolytope& p) {
    return Int(enumerateLatticePoints(p).interior.size());
}

Int bValue(const LatticePolytope& p) {
    Int ls = interiorLatticePointCount(p);
    return (p.intrinsicDim % 2 == 0) ? ls : -ls;
}

bool contains(const LatticePolytope& p, const Vec& x) {
    for (const auto& [n, c] : p.spanEq)
        if (dot(n, x) != c) return false;
    for (const HalfSpace& h : p.facets)
        if (dot(h.normal, x) < -h.offset) return false;
    if (p.intrinsicDim == 0) return x == p.vertices[0];
    return true;
}

bool containsRelInterior(const LatticePolytope& p, const Vec& x) {
    if (p.intrinsicDim == 0) return x == p.vertices[0];
    for (const auto& [n, c] : p.spanEq)
        if (dot(n, x) != c) return false;
    for (const HalfSpace& h : p.facets)
        if (dot(h.normal, x) <= -h.offset) return false;
    return true;
}

LatticePolytope minkowskiSum(const LatticePolytope& p, const LatticePolytope& q) {
    if (p.ambientDim != q.ambientDim) throw InputError("minkowskiSum: ambient dimension mismatch");
    std::vector<Vec> sums;
    sums.reserve(p.vertices.size() * q.vertices.size());
    for (const Vec& a : p.vertices)
        for (const Vec& b : q.vertices) sums.push_back(add(a, b));
    return hullFromVertices(sums, p.ambientDim);
}

LatticePolytope minkowskiSumAll(const std::vector<LatticePolytope>& ps, int ambientDim) {
    if (ps.empty()) return originPolytope(ambientDim);
    LatticePolytope acc = ps[0];
    for (std::size_t i = 1; i < ps.size(); ++i) acc = minkowskiSum(acc, ps[i]);
    return acc;
}

LatticePolytope scale(const LatticePolytope& p, const Int& k) {
    if (k < 0) throw InputError("scale: negative factor");
    if (k == 0) return originPolytope(p.ambientDim);
    std::vector<Vec> pts;
    for (const Vec& v : p.vertices) pts.push_back(scaled(v, k));
    return hullFromVertices(pts, p.ambientDim);
}

LatticePolytope translate(const LatticePolytope& p, const Vec& t) {
    std::vector<Vec> pts;
    for (const Vec& v : p.vertices) pts.push_back(add(v, t));
    return hullFromVertices(pts, p.ambientDim);
}

Int supportValue(const LatticePolytope& p, const Vec& y) {
    Int best = -dot(p.vertices[0], y);
    for (std::size_t i = 1; i < p.vertices.size(); ++i) {
        Int v = -dot(p.vertices[i], y);
        if (v > best) best = v;
    }
    return best;
}

std::vector<RatVec> verticesFromHalfspaces(const std::vector<HalfSpace>& hs, int d) {
    std::vector<Vec> ineqs;
    for (const HalfSpace& h : hs) {
        Vec row(static_cast<std::size_t>(d + 1));
        row[0] = h.offset;
        for (int j = 0; j < d; ++j) row[j + 1] = h.normal[j];
        ineqs.push_back(std::move(row));
    }
    Vec nonneg(static_cast<std::size_t>(d + 1), Int(0));
    nonneg[0] = 1;
    ineqs.push_back(std::move(nonneg));

    std::vector<RatVec> verts;
    for (const Vec& ray : extremeRaysOfCone(ineqs, d + 1)) {
        if (ray[0] == 0) throw InternalError("verticesFromHalfspaces: unbounded region");
        RatVec v(static_cast<std::size_t>(d));
        for (int j = 0; j < d; ++j) v[j] = Rational(ray[j + 1], ray[0]);
        verts.push_back(std::move(v));
    }
    return verts;
}

std::optional<SummandWitness> isMinkowskiSummand(const LatticePolytope& part,
                                                 const LatticePolytope& whole) {
    if (part.ambientDim != whole.ambientDim)
        throw InputError("isMinkowskiSummand: ambient dimension mismatch");
    if (whole.intrinsicDim != whole.ambientDim)
        throw PreconditionError("isMinkowskiSummand: whole is not full-dimensional");

    // support function of `part` must be linear on each maximal normal cone
    // of `whole`, i.e. each vertex of `whole` selects one vertex of `part`
    std::vector<Vec> selected;
    for (const Vec& v : whole.vertices) {
        std::vector<const HalfSpace*> active;
        for (const HalfSpace& h : whole.facets)
            if (dot(h.normal, v) == -h.offset) active.push_back(&h);
        bool found = false;
        for (const Vec& w : part.vertices) {
            bool all = true;
            for (const HalfSpace* h : active)
                if (dot(w, h->normal) != -supportValue(part, h->normal)) {
                    all = false;
                    break;
                }
            if (all) {
                found = true;
                selected.push_back(w);
                break;
            }
        }
        if (!found) return std::nullopt;
    }

    // the complement's candidate vertex over v is mu*v - p(v); the smallest mu
    // placing every candidate inside every complement halfspace always works
    Int bound = 1;
    for (std::size_t vi = 0; vi < whole.vertices.size(); ++vi) {
        const Vec& v = whole.vertices[vi];
        const Vec& p = selected[vi];
        for (const HalfSpace& h : whole.facets) {
            Int coeff = dot(v, h.normal) + h.offset;
            if (coeff == 0) continue;  // active facet: p minimizes there already
            Int rhs = dot(p, h.normal) + supportValue(part, h.normal);
            Int need = (rhs + coeff - 1) / coeff;  // ceil, rhs >= 0
            if (need > bound) bound = need;
        }
    }

    for (Int mu = 1; mu <= bound; ++mu) {
        std::vector<HalfSpace> hs;
        bool infeasible = false;
        for (const HalfSpace& h : whole.facets) {
            Int c = mu * h.offset - supportValue(part, h.normal);
            hs.push_back(HalfSpace{h.normal, c});
        }
        std::vector<RatVec> verts = verticesFromHalfspaces(hs, whole.ambientDim);
        if (verts.empty()) continue;
        std::vector<Vec> ipts;
        for (const RatVec& v : verts) {
            Vec w(v.size());
            for (std::size_t j = 0; j < v.size(); ++j) {
                if (denominator(v[j]) != 1) {
                    infeasible = true;
                    break;
                }
                w[j] = numerator(v[j]);
            }
            if (infeasible) break;
            ipts.push_back(std::move(w));
        }
        if (infeasible) continue;
        LatticePolytope comp = hullFromVertices(ipts, whole.ambientDim);
        if (minkowskiSum(part, comp) == scale(whole, mu))
            return SummandWitness{mu, std::move(comp)};
    }
    return std::nullopt;
}

PolarDual polarDual(const LatticePolytope& p) {
    if (p.intrinsicDim != p.ambientDim)
        throw PreconditionError("polarDual: polytope is not full-dimensional");
    PolarDual out;
    out.latticeFlag = true;
    for (const HalfSpace& h : p.facets) {
        if (h.offset <= 0) throw PreconditionError("polarDual: 0 is not strictly interior");
        RatVec v(h.normal.size());
        for (std::size_t j = 0; j < h.normal.size(); ++j) v[j] = Rational(h.normal[j], h.offset);
        out.vertices.push_back(std::move(v));
        if (h.offset != 1) out.latticeFlag = false;
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    return out;
}

LatticePolytope polarDualLattice(const LatticePolytope& p) {
    PolarDual d = polarDual(p);
    if (!d.latticeFlag) throw InternalError("polarDualLattice: dual is not a lattice polytope");
    std::vector<Vec> pts;
    for (const RatVec& v : d.vertices) {
        Vec w(v.size());
        for (std::size_t j = 0; j < v.size(); ++j) w[j] = numerator(v[j]);
        pts.push_back(std::move(w));
    }
    return hullFromVertices(pts, p.ambientDim);
}

bool isReflexive(const LatticePolytope& p) {
    if (p.intrinsicDim != p.ambientDim || p.facets.empty()) return false;
    for (const HalfSpace& h : p.facets)
        if (h.offset != 1) return false;
    return true;
}

std::vector<Vec> Face::vertexList() const {
    std::vector<Vec> out;
    for (std::size_t i : vertexSubset) out.push_back(parent.vertices[i]);
    return out;
}

LatticePolytope Face::asPolytope() const {
    return hullFromVertices(vertexList(), parent.ambientDim);
}

Face faceInDirection(const LatticePolytope& p, const Vec& y) {
    Int best = dot(p.vertices[0], y);
    for (std::size_t i = 1; i < p.vertices.size(); ++i) {
        Int v = dot(p.vertices[i], y);
        if (v < best) best = v;
    }
    Face f;
    f.parent = p;
    f.supportingDirection = y;
    std::vector<Vec> sel;
    for (std::size_t i = 0; i < p.vertices.size(); ++i)
        if (dot(p.vertices[i], y) == best) {
            f.vertexSubset.push_back(i);
            sel.push_back(p.vertices[i]);
        }
    f.dim = dimOfPointSet(sel, p.ambientDim);
    return f;
}

std::vector<Face> allFaces(const LatticePolytope& p) {
    const std::size_t m = p.vertices.size();
    std::vector<std::vector<std::size_t>> activeSet(p.facets.size());
    for (std::size_t fi = 0; fi < p.facets.size(); ++fi)
        for (std::size_t i = 0; i < m; ++i)
            if (dot(p.vertices[i], p.facets[fi].normal) == -p.facets[fi].offset)
                activeSet[fi].push_back(i);

    std::vector<std::size_t> full(m);
    for (std::size_t i = 0; i < m; ++i) full[i] = i;

    std::set<std::vector<std::size_t>> seen;
    std::vector<std::vector<std::size_t>> queue{full};
    seen.insert(full);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        std::vector<std::size_t> cur = queue[qi];
        for (const auto& as : activeSet) {
            std::vector<std::size_t> inter;
            std::set_intersection(cur.begin(), cur.end(), as.begin(), as.end(),
                                  std::back_inserter(inter));
            if (!inter.empty() && seen.insert(inter).second) queue.push_back(inter);
        }
    }

    std::vector<Face> faces;
    for (const auto& subset : seen) {
        Face f;
        f.parent = p;
        f.vertexSubset = subset;
        if (subset == full) {
            f.supportingDirection = Vec(static_cast<std::size_t>(p.ambientDim), Int(0));
        } else {
            Vec dir(static_cast<std::size_t>(p.ambientDim), Int(0));
            for (std::size_t fi = 0; fi < p.facets.size(); ++fi)
                if (std::includes(activeSet[fi].begin(), activeSet[fi].end(), subset.begin(),
                                  subset.end()))
                    dir = add(dir, p.facets[fi].normal);
            f.supportingDirection = std::move(dir);
        }
        std::vector<Vec> sel;
        for (std::size_t i : subset) sel.push_back(p.vertices[i]);
        f.dim = dimOfPointSet(sel, p.ambientDim);
        faces.push_back(std::move(f));
    }
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
        return std::tie(a.dim, a.vertexSubset) < std::tie(b.dim, b.vertexSubset);
    });
    return faces;
}

std::vector<Face> facesOfDim(const LatticePolytope& p, int k) {
    std::vector<Face> out;
    for (Face& f : allFaces(p))
        if (f.dim == k) out.push_back(std::move(f));
    return out;
}

Face dualFace(const LatticePolytope& p, const Face& f) {
    if (!isReflexive(p)) throw PreconditionError("dualFace: polytope is not reflexive");
    if (f.vertexSubset.empty()) throw PreconditionError("dualFace: empty face");
    if (f.vertexSubset.size() == p.vertices.size())
        throw PreconditionError("dualFace: whole polytope has no dual face");

    LatticePolytope dual = polarDualLattice(p);
    Face g;
    g.parent = dual;
    std::vector<Vec> sel;
    for (std::size_t j = 0; j < dual.vertices.size(); ++j) {
        bool all = true;
        for (std::size_t i : f.vertexSubset)
            if (dot(p.vertices[i], dual.vertices[j]) != -1) {
                all = false;
                break;
            }
        if (all) {
            g.vertexSubset.push_back(j);
            sel.push_back(dual.vertices[j]);
        }
    }
    if (g.vertexSubset.empty()) throw InternalError("dualFace: empty dual face");
    Vec dir(static_cast<std::size_t>(p.ambientDim), Int(0));
    for (std::size_t i : f.vertexSubset) dir = add(dir, p.vertices[i]);
    g.supportingDirection = std::move(dir);
    g.dim = dimOfPointSet(sel, p.ambientDim);
    if (f.dim + g.dim != p.ambientDim - 1)
        throw InternalError("dualFace: dimension identity violated");
    return g;
}

std::vector<Vec> boundaryLatticePoints(const LatticePolytope& p) {
    if (!isReflexive(p)) throw PreconditionError("boundaryLatticePoints: polytope is not reflexive");
    PointEnumeration pe = enumerateLatticePoints(p);
    Vec zero(static_cast<std::size_t>(p.ambientDim), Int(0));
    if (pe.interior != std::vector<Vec>{zero})
        throw InternalError("boundaryLatticePoints: reflexive polytope with interior != {0}");
    std::vector<Vec> out;
    for (Vec& v : pe.all)
        if (v != zero) out.push_back(std::move(v));
    return out;
}

Face minimalFaceContaining(const LatticePolytope& p, const Vec& v) {
    if (!contains(p, v)) throw PreconditionError("minimalFaceContaining: point outside polytope");
    std::vector<std::size_t> activeFacets;
    for (std::size_t fi = 0; fi < p.facets.size(); ++fi)
        if (dot(p.facets[fi].normal, v) == -p.facets[fi].offset) activeFacets.push_back(fi);
    if (activeFacets.empty())
        throw PreconditionError("minimalFaceContaining: point in the relative interior");

    Face f;
    f.parent = p;
    Vec dir(static_cast<std::size_t>(p.ambientDim), Int(0));
    std::vector<Vec> sel;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        bool onAll = true;
        for (std::size_t fi : activeFacets)
            if (dot(p.vertices[i], p.facets[fi].normal) != -p.facets[fi].offset) {
                onAll = false;
                break;
            }
        if (onAll) {
            f.vertexSubset.push_back(i);
            sel.push_back(p.vertices[i]);
        }
    }
    for (std::size_t fi : activeFacets) dir = add(dir, p.facets[fi].normal);
    f.supportingDirection = std::move(dir);
    f.dim = dimOfPointSet(sel, p.ambientDim);
    if (f.vertexSubset.empty()) throw InternalError("minimalFaceContaining: no face vertices");
    return f;
}

std::string polytopeKey(const LatticePolytope& p) {
    std::ostringstream os;
    os << p.ambientDim << ":";
    for (const Vec& v : p.vertices) os << toString(v);
    return os.str();
}

}  // namespace nefkit
