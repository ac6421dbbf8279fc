#include "nefkit/nefpart.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace nefkit {

namespace {

bool partLess(const LatticePolytope& a, const LatticePolytope& b) {
    return std::tie(a.intrinsicDim, a.vertices) < std::tie(b.intrinsicDim, b.vertices);
}

Vec zeroVec(int d) { return Vec(static_cast<std::size_t>(d), Int(0)); }

std::vector<Vec> allPartVertices(const std::vector<LatticePolytope>& ps) {
    std::vector<Vec> out;
    for (const LatticePolytope& p : ps)
        out.insert(out.end(), p.vertices.begin(), p.vertices.end());
    return out;
}

}  // namespace

NefPartition validate(std::vector<LatticePolytope> parts) {
    if (parts.empty()) throw InputError("validate: no parts");
    const int d = parts[0].ambientDim;
    for (const LatticePolytope& p : parts)
        if (p.ambientDim != d) throw InputError("validate: mixed ambient dimensions");
    std::sort(parts.begin(), parts.end(), partLess);

    NefPartition np;
    np.parts = std::move(parts);
    np.delta = minkowskiSumAll(np.parts, d);
    if (!isReflexive(np.delta)) throw NotReflexiveError();
    np.deltaStar = polarDualLattice(np.delta);

    const int r = np.r();
    const std::size_t n = np.deltaStar.vertices.size();
    np.phi = IntMatrix(r, n);
    for (int j = 0; j < r; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            Int v = supportValue(np.parts[j], np.deltaStar.vertices[i]);
            if (v != 0 && v != 1)
                throw NotNefError(j + 1, static_cast<int>(i) + 1, v.str());
            np.phi.at(j, i) = v;
        }
    for (std::size_t i = 0; i < n; ++i) {
        Int colSum = 0;
        for (int j = 0; j < r; ++j) colSum += np.phi.at(j, i);
        if (colSum != 1) throw InternalError("validate: phi column sum != 1 on a reflexive sum");
    }

    for (int j = 0; j < r; ++j) {
        std::vector<Vec> gens{zeroVec(d)};
        for (std::size_t i = 0; i < n; ++i)
            if (np.phi.at(j, i) == 1) gens.push_back(np.deltaStar.vertices[i]);
        np.nablas.push_back(hullFromVertices(gens, d));
    }
    return np;
}

NefPartition dualPartition(const NefPartition& np) {
    NefPartition dual;
    try {
        dual = validate(np.nablas);
    } catch (const PreconditionError& e) {
        throw InternalError(std::string("dualPartition: dual side failed validation: ") + e.what());
    }
    // nabla* = Conv{Delta_1,...,Delta_r} and Delta* = Conv{nabla_1,...,nabla_r}
    LatticePolytope convParts = hullFromVertices(allPartVertices(np.parts), np.d());
    if (!(dual.deltaStar == convParts))
        throw InternalError("dualPartition: nabla* != Conv{Delta_j}");
    LatticePolytope convNablas = hullFromVertices(allPartVertices(np.nablas), np.d());
    if (!(np.deltaStar == convNablas))
        throw InternalError("dualPartition: Delta* != Conv{nabla_j}");
    return dual;
}

std::vector<NefPartition> enumeratePartitions(const LatticePolytope& delta, int r) {
    if (!isReflexive(delta)) throw NotReflexiveError();
    if (r < 1) throw InputError("enumeratePartitions: r must be positive");
    const int d = delta.ambientDim;
    LatticePolytope deltaStar = polarDualLattice(delta);
    const std::size_t n = deltaStar.vertices.size();

    // part polytope from the set of dual vertices it supports at level 1
    std::map<unsigned long, std::optional<LatticePolytope>> partCache;
    auto reconstruct = [&](unsigned long mask) -> const std::optional<LatticePolytope>& {
        auto it = partCache.find(mask);
        if (it != partCache.end()) return it->second;
        std::vector<HalfSpace> hs;
        for (std::size_t i = 0; i < n; ++i)
            hs.push_back(HalfSpace{deltaStar.vertices[i], Int((mask >> i) & 1u)});
        std::optional<LatticePolytope> result;
        std::vector<RatVec> verts = verticesFromHalfspaces(hs, d);
        if (!verts.empty()) {
            std::vector<Vec> ipts;
            bool integral = true;
            for (const RatVec& v : verts) {
                Vec w(v.size());
                for (std::size_t c = 0; c < v.size(); ++c) {
                    if (denominator(v[c]) != 1) {
                        integral = false;
                        break;
                    }
                    w[c] = numerator(v[c]);
                }
                if (!integral) break;
                ipts.push_back(std::move(w));
            }
            if (integral) result = hullFromVertices(ipts, d);
        }
        return partCache.emplace(mask, std::move(result)).first->second;
    };

    std::vector<NefPartition> out;
    std::set<std::string> seen;
    std::vector<int> assign(n, 0);
    auto tryAssignment = [&]() {
        std::vector<unsigned long> masks(r, 0);
        for (std::size_t i = 0; i < n; ++i) masks[assign[i]] |= (1ul << i);
        for (unsigned long m : masks)
            if (m == 0) return;  // empty part
        std::vector<LatticePolytope> parts;
        for (unsigned long m : masks) {
            const auto& p = reconstruct(m);
            if (!p) return;
            parts.push_back(*p);
        }
        if (!(minkowskiSumAll(parts, d) == delta)) return;
        NefPartition np;
        try {
            np = validate(parts);
        } catch (const PreconditionError&) {
            return;
        }
        std::string key;
        for (const LatticePolytope& p : np.parts) key += polytopeKey(p) + "|";
        if (seen.insert(key).second) out.push_back(std::move(np));
    };
    auto recurse = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            tryAssignment();
            return;
        }
        for (int j = 0; j < r; ++j) {
            assign[i] = j;
            self(self, i + 1);
        }
    };
    recurse(recurse, 0);
    return out;
}

std::vector<Face> facesAtBoundaryPoint(const NefPartition& np, const Vec& v) {
    if (!contains(np.deltaStar, v) || v == zeroVec(np.d()))
        throw PreconditionError("facesAtBoundaryPoint: v is not a boundary lattice point of Delta*");

    std::vector<Face> faces;
    for (const LatticePolytope& p : np.parts) faces.push_back(faceInDirection(p, v));

    Face gamma = minimalFaceContaining(np.deltaStar, v);
    LatticePolytope gammaStar = dualFace(np.deltaStar, gamma).asPolytope();
    std::vector<LatticePolytope> facePolys;
    for (const Face& f : faces) facePolys.push_back(f.asPolytope());
    if (!(minkowskiSumAll(facePolys, np.d()) == gammaStar))
        throw InternalError("facesAtBoundaryPoint: sum of Delta_j(v) != dual face of Gamma(v)");
    return faces;
}

SupportSets supportSets(const NefPartition& np) {
    SupportSets s;
    std::set<Vec> dualBoundary;
    for (Vec& v : boundaryLatticePoints(np.deltaStar)) dualBoundary.insert(std::move(v));
    for (const LatticePolytope& nb : np.nablas) {
        std::vector<Vec> pts;
        for (Vec& v : latticePoints(nb))
            if (dualBoundary.count(v)) pts.push_back(std::move(v));
        s.nablaZero.push_back(std::move(pts));
    }

    LatticePolytope nabla = minkowskiSumAll(np.nablas, np.d());
    LatticePolytope nablaStar = polarDualLattice(nabla);
    std::set<Vec> nablaStarBoundary;
    for (Vec& v : boundaryLatticePoints(nablaStar)) nablaStarBoundary.insert(std::move(v));
    for (const LatticePolytope& p : np.parts) {
        std::vector<Vec> pts;
        for (Vec& v : latticePoints(p))
            if (nablaStarBoundary.count(v)) pts.push_back(std::move(v));
        s.deltaZero.push_back(std::move(pts));
    }
    return s;
}

DecompositionReport decompose(const NefPartition& np) {
    const int r = np.r();
    const int d = np.d();

    auto interiorCountOf = [&](const std::vector<int>& subset) {
        std::vector<LatticePolytope> ps;
        for (int j : subset) ps.push_back(np.parts[j]);
        return interiorLatticePointCount(minkowskiSumAll(ps, d));
    };

    std::vector<int> remaining(r);
    for (int j = 0; j < r; ++j) remaining[j] = j;
    std::vector<std::vector<int>> groups;
    while (!remaining.empty()) {
        std::vector<int> found;
        for (std::size_t size = 1; size <= remaining.size() && found.empty(); ++size) {
            // subsets of `remaining` of the given size, lexicographic
            std::vector<std::size_t> pick(size);
            for (std::size_t i = 0; i < size; ++i) pick[i] = i;
            for (;;) {
                std::vector<int> subset;
                for (std::size_t i : pick) subset.push_back(remaining[i]);
                if (interiorCountOf(subset) == 1) {
                    found = subset;
                    break;
                }
                std::size_t pos = size;
                while (pos > 0 && pick[pos - 1] == remaining.size() - size + pos - 1) --pos;
                if (pos == 0) break;
                ++pick[pos - 1];
                for (std::size_t i = pos; i < size; ++i) pick[i] = pick[i - 1] + 1;
            }
        }
        if (found.empty()) throw InternalError("decompose: no subset with interior point found");
        groups.push_back(found);
        std::vector<int> rest;
        for (int j : remaining)
            if (std::find(found.begin(), found.end(), j) == found.end()) rest.push_back(j);
        remaining = std::move(rest);
    }

    DecompositionReport rep;
    std::vector<Vec> allBasisRows;
    int dimSum = 0;
    for (const std::vector<int>& g : groups) {
        DecompositionComponent comp;
        for (int j : g) comp.indexSubset.push_back(j + 1);
        std::vector<LatticePolytope> ps;
        for (int j : g) ps.push_back(np.parts[j]);
        comp.componentPolytope = minkowskiSumAll(ps, d);

        // saturated basis of M cap span(component); the span is linear since
        // 0 is a relative-interior point of the component
        std::vector<Vec> dirs;
        const Vec& base = comp.componentPolytope.vertices[0];
        for (const Vec& v : comp.componentPolytope.vertices) dirs.push_back(sub(v, base));
        SmithResult s = smithNormalForm(IntMatrix::fromRows(dirs, d));
        int k = 0;
        for (const Int& x : s.diagonal)
            if (x != 0) ++k;
        if (k != comp.componentPolytope.intrinsicDim)
            throw InternalError("decompose: span rank mismatch");
        IntMatrix w = inverseUnimodular(s.right);
        comp.componentLatticeBasis = IntMatrix(k, d);
        for (int i = 0; i < k; ++i)
            for (int c = 0; c < d; ++c) comp.componentLatticeBasis.at(i, c) = w.at(i, c);
        for (int i = 0; i < k; ++i) allBasisRows.push_back(comp.componentLatticeBasis.row(i));
        dimSum += k;
        rep.components.push_back(std::move(comp));
    }
    if (dimSum != d) throw InternalError("decompose: component dimensions do not sum to d");

    auto idx = latticeIndex(IntMatrix::fromRows(allBasisRows, d));
    if (!idx) throw InternalError("decompose: component lattices do not span");
    rep.sublatticeIndex = *idx;
    rep.splitsOverZ = (rep.sublatticeIndex == 1);
    return rep;
}

}  // namespace nefkit
