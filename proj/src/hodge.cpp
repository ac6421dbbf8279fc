#include "nefkit/hodge.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "nefkit/generators.hpp"

namespace nefkit {

namespace {

// memoized (l, l*) keyed by the canonical vertex serialization
std::pair<Int, Int> counts(const LatticePolytope& p) {
    static std::map<std::string, std::pair<Int, Int>> cache;
    std::string key = polytopeKey(p);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    PointEnumeration pe = enumerateLatticePoints(p);
    auto val = std::make_pair(Int(pe.all.size()), Int(pe.interior.size()));
    cache.emplace(std::move(key), val);
    return val;
}

Int lOf(const LatticePolytope& p) { return counts(p).first; }
Int lStarOf(const LatticePolytope& p) { return counts(p).second; }
Int bOf(const LatticePolytope& p) {
    Int ls = lStarOf(p);
    return (p.intrinsicDim % 2 == 0) ? ls : -ls;
}

int popcount(unsigned mask) {
    int c = 0;
    while (mask) {
        c += static_cast<int>(mask & 1u);
        mask >>= 1;
    }
    return c;
}

LatticePolytope maskedSum(const std::vector<LatticePolytope>& ps, unsigned mask, int d,
                          const LatticePolytope* extra = nullptr) {
    std::vector<LatticePolytope> sel;
    if (extra) sel.push_back(*extra);
    for (std::size_t j = 0; j < ps.size(); ++j)
        if (mask & (1u << j)) sel.push_back(ps[j]);
    return minkowskiSumAll(sel, d);
}

int subsetDim(const std::vector<LatticePolytope>& ps, unsigned mask, int d) {
    return maskedSum(ps, mask, d).intrinsicDim;
}

}  // namespace

bool kIndependent(const std::vector<LatticePolytope>& polys, int k) {
    const int d = polys.empty() ? 0 : polys[0].ambientDim;
    for (unsigned mask = 1; mask < (1u << polys.size()); ++mask)
        if (subsetDim(polys, mask, d) < popcount(mask) + k - 1) return false;
    return true;
}

int maxIndependence(const std::vector<LatticePolytope>& polys) {
    const int d = polys.empty() ? 0 : polys[0].ambientDim;
    int best = d + 1;
    for (unsigned mask = 1; mask < (1u << polys.size()); ++mask)
        best = std::min(best, subsetDim(polys, mask, d) - popcount(mask) + 1);
    return std::max(best, 0);
}

std::string verdictName(CIVerdict v) {
    switch (v) {
        case CIVerdict::empty: return "empty";
        case CIVerdict::twoPoints: return "twoPoints";
        case CIVerdict::genusOneCurve: return "genusOneCurve";
        case CIVerdict::calabiYau: return "calabiYau";
        case CIVerdict::nonemptyUnclassified: return "nonemptyUnclassified";
    }
    return "?";
}

CIStatus ciStatus(const std::vector<LatticePolytope>& parts) {
    if (parts.empty()) throw InputError("ciStatus: no parts");
    const int d = parts[0].ambientDim;
    const int r = static_cast<int>(parts.size());

    CIStatus st;
    st.maxIndependence = maxIndependence(parts);
    if (st.maxIndependence < 1) {
        st.verdict = CIVerdict::empty;
        return st;
    }

    bool corHypotheses = true;
    for (const LatticePolytope& p : parts)
        if (p.intrinsicDim == 0) corHypotheses = false;
    LatticePolytope sum = minkowskiSumAll(parts, d);
    if (lStarOf(sum) != 1) corHypotheses = false;
    for (unsigned mask = 1; corHypotheses && mask + 1 < (1u << r); ++mask)
        if (lStarOf(maskedSum(parts, mask, d)) != 0) corHypotheses = false;

    if (!corHypotheses) {
        st.verdict = CIVerdict::nonemptyUnclassified;
        return st;
    }

    int dim = sum.intrinsicDim;
    if (dim == r)
        st.verdict = CIVerdict::twoPoints;
    else if (dim == r + 1)
        st.verdict = CIVerdict::genusOneCurve;
    else if (dim >= r + 2) {
        st.verdict = CIVerdict::calabiYau;
        try {
            st.hVector = ePolynomial(validate(parts)).coefficients;
        } catch (const PreconditionError&) {
            // not a nef-partition: classification stands, no h-vector
        }
    } else
        st.verdict = CIVerdict::empty;
    return st;
}

EPolynomial ePolynomial(const NefPartition& np) {
    const int d = np.d();
    const int r = np.r();
    EPolynomial e;
    e.coefficients.assign(d - r + 1, Int(0));
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        LatticePolytope s = maskedSum(np.parts, mask, d);
        Int ls = lStarOf(s);
        if (ls == 0) continue;
        int q = s.intrinsicDim - popcount(mask);
        if (q < 0 || q > d - r) throw InternalError("ePolynomial: exponent out of range");
        e.coefficients[q] += ls;
    }
    return e;
}

Int chiMinusZ(const NefPartition& np, int i) {
    if (i < 1 || i > np.r()) throw InputError("chiMinusZ: part index out of range");
    const LatticePolytope& di = np.parts[i - 1];
    Int total = 0;
    for (unsigned mask = 0; mask < (1u << np.r()); ++mask) {
        Int term = bOf(maskedSum(np.parts, mask, np.d(), &di));
        total += (popcount(mask) % 2 == 0) ? term : -term;
    }
    return total;
}

namespace {

std::vector<LatticePolytope> slicePolytopes(const NefPartition& np, const Vec& v) {
    std::vector<LatticePolytope> fs;
    for (const LatticePolytope& p : np.parts) fs.push_back(faceInDirection(p, v).asPolytope());
    return fs;
}

// sum over subsets satisfying `keep` of (-1)^{|J|} b(sum of faces); the
// empty subset contributes b({0}) = +1 when kept.
Int signedFaceSum(const std::vector<LatticePolytope>& fs, int d,
                  const std::function<bool(unsigned)>& keep) {
    Int total = 0;
    for (unsigned mask = 0; mask < (1u << fs.size()); ++mask) {
        if (!keep(mask)) continue;
        Int term = bOf(maskedSum(fs, mask, d));
        total += (popcount(mask) % 2 == 0) ? term : -term;
    }
    return total;
}

}  // namespace

Int chiDivisorSlice(const NefPartition& np, const Vec& v) {
    if (!contains(np.deltaStar, v) || v == Vec(static_cast<std::size_t>(np.d()), Int(0)))
        throw PreconditionError("chiDivisorSlice: v is not a boundary lattice point of Delta*");
    return signedFaceSum(slicePolytopes(np, v), np.d(), [](unsigned) { return true; });
}

ChiReport chiOmega1(const NefPartition& np, bool strictVertexMode) {
    const int d = np.d();
    const int r = np.r();
    if (d - r < 1) throw PreconditionError("chiOmega1: requires d - r >= 1");

    EPolynomial e = ePolynomial(np);
    Int eAtMinusOne = 0;
    for (std::size_t q = 0; q < e.coefficients.size(); ++q)
        eAtMinusOne += (q % 2 == 0) ? e.coefficients[q] : -e.coefficients[q];

    ChiReport rep;
    rep.termChiOd = Int(d) * eAtMinusOne;
    rep.termDeltaSums = 0;
    for (int i = 1; i <= r; ++i) rep.termDeltaSums -= chiMinusZ(np, i);

    std::vector<Vec> dualBoundary = boundaryLatticePoints(np.deltaStar);
    Int direct = rep.termChiOd + rep.termDeltaSums;
    rep.termVertexNotInJ = 0;
    rep.termVertexInJ = 0;
    Int directSlices = 0;
    for (const Vec& v : dualBoundary) {
        std::vector<LatticePolytope> fs = slicePolytopes(np, v);
        directSlices -= signedFaceSum(fs, d, [](unsigned) { return true; });

        // owners: parts whose nabla has the minimal face of v as a face;
        // a face of Delta* contained in nabla_i is automatically a face of it
        std::vector<Vec> gammaVerts = minimalFaceContaining(np.deltaStar, v).vertexList();
        std::vector<int> owners;
        for (int i = 0; i < r; ++i) {
            bool all = true;
            for (const Vec& gv : gammaVerts)
                if (!contains(np.nablas[i], gv)) {
                    all = false;
                    break;
                }
            if (all) owners.push_back(i);
        }
        if (owners.empty())
            throw InternalError("chiOmega1: dual boundary point owned by no nabla");
        if (!strictVertexMode) owners.resize(1);
        for (int i : owners) {
            rep.termVertexNotInJ -=
                signedFaceSum(fs, d, [i](unsigned mask) { return !(mask & (1u << i)); });
            rep.termVertexInJ -=
                signedFaceSum(fs, d, [i](unsigned mask) { return (mask & (1u << i)) != 0; });
        }
    }

    Int regrouped = rep.termChiOd + rep.termDeltaSums + rep.termVertexNotInJ + rep.termVertexInJ;
    if (!strictVertexMode) {
        if (regrouped != direct + directSlices)
            throw InternalError("chiOmega1: regrouped terms disagree with the direct route");
        rep.chiOmega1 = direct + directSlices;
        rep.vertexAssignmentMode = "canonical";
    } else {
        rep.chiOmega1 = regrouped;
        rep.vertexAssignmentMode = "strict";
    }
    return rep;
}

std::vector<std::string> interiorCorrespondenceCheck(const NefPartition& np) {
    const int d = np.d();
    const int r = np.r();
    std::vector<std::string> violations;
    SupportSets ss = supportSets(np);

    auto note = [&](const std::string& what, int i, unsigned mask, const Vec& w) {
        std::ostringstream os;
        os << what << " at i=" << (i + 1) << " J-mask=" << mask << " w=" << toString(w);
        violations.push_back(os.str());
    };
    auto nablaFaceSum = [&](const Vec& w, unsigned mask, const int* withI) {
        std::vector<LatticePolytope> sel;
        if (withI) sel.push_back(faceInDirection(np.nablas[*withI], w).asPolytope());
        for (int j = 0; j < r; ++j)
            if (!(mask & (1u << j))) sel.push_back(faceInDirection(np.nablas[j], w).asPolytope());
        return minkowskiSumAll(sel, d);
    };
    auto inDeltaZero = [&](int i, const Vec& w) {
        const auto& dz = ss.deltaZero[i];
        return std::binary_search(dz.begin(), dz.end(), w);
    };
    Vec zero(static_cast<std::size_t>(d), Int(0));

    for (int i = 0; i < r; ++i) {
        for (unsigned mask = 0; mask < (1u << r); ++mask) {
            if (!(mask & (1u << i))) continue;

            // first correspondence: interior points of Delta_i + sum_J Delta_j
            LatticePolytope lambda = maskedSum(np.parts, mask, d, &np.parts[i]);
            std::vector<Vec> candidates = latticePoints(lambda);
            candidates.insert(candidates.end(), ss.deltaZero[i].begin(), ss.deltaZero[i].end());
            std::sort(candidates.begin(), candidates.end());
            candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
            for (const Vec& w : candidates) {
                bool lhs = (w != zero) && containsRelInterior(lambda, w);
                LatticePolytope nsum;
                bool rhs = inDeltaZero(i, w);
                if (rhs || lhs) nsum = nablaFaceSum(w, mask, nullptr);
                rhs = rhs && containsRelInterior(nsum, zero);
                if (lhs != rhs) note("interior correspondence (sums)", i, mask, w);
                else if (lhs && lambda.intrinsicDim + nsum.intrinsicDim != d)
                    note("dimension formula (sums)", i, mask, w);
            }

            // second correspondence: interior points of sum_J Delta_j(v)
            for (const Vec& v : ss.nablaZero[i]) {
                std::vector<LatticePolytope> sel;
                for (int j = 0; j < r; ++j)
                    if (mask & (1u << j))
                        sel.push_back(faceInDirection(np.parts[j], v).asPolytope());
                LatticePolytope lam = minkowskiSumAll(sel, d);
                std::vector<Vec> cands = latticePoints(lam);
                cands.insert(cands.end(), ss.deltaZero[i].begin(), ss.deltaZero[i].end());
                std::sort(cands.begin(), cands.end());
                cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
                for (const Vec& w : cands) {
                    bool lhs = containsRelInterior(lam, w);
                    LatticePolytope nsum;
                    bool rhs = inDeltaZero(i, w);
                    if (rhs || lhs) nsum = nablaFaceSum(w, mask, &i);
                    rhs = rhs && containsRelInterior(nsum, v);
                    if (lhs != rhs) note("interior correspondence (slices)", i, mask, w);
                    else if (lhs && lam.intrinsicDim + nsum.intrinsicDim != d - 1)
                        note("dimension formula (slices)", i, mask, w);
                }
            }
        }
    }
    return violations;
}

HodgeReport hodgeOneAmple(const NefPartition& np) {
    const int d = np.d();
    const int r = np.r();
    if (d - r < 3) throw PreconditionError("hodgeOneAmple: requires d - r >= 3");
    for (int i = 0; i < r; ++i) {
        if (np.parts[i].intrinsicDim != d)
            throw PreconditionError("hodgeOneAmple: part " + std::to_string(i + 1) +
                                    " is not full-dimensional");
        if (!isMinkowskiSummand(np.parts[i], np.delta) ||
            !isMinkowskiSummand(np.delta, np.parts[i]))
            throw PreconditionError("hodgeOneAmple: part " + std::to_string(i + 1) +
                                    " and the sum are not Minkowski summands of each other");
    }

    // per-part bracket over ALL subsets (the empty term is l*(Delta_i))
    Int fullBrackets = 0;
    for (int i = 0; i < r; ++i)
        for (unsigned mask = 0; mask < (1u << r); ++mask) {
            Int term = lStarOf(maskedSum(np.parts, mask, d, &np.parts[i]));
            fullBrackets += ((r - popcount(mask)) % 2 == 0) ? term : -term;
        }

    // per-face data: interior count of the face and its nonempty-subset bracket
    struct FaceData {
        int dim;
        Int lStar;
        Int bracket;
    };
    std::vector<FaceData> faceData;
    bool terminal = true;
    for (const Face& theta : allFaces(np.deltaStar)) {
        if (theta.vertexSubset.size() == np.deltaStar.vertices.size()) continue;
        Vec dir(static_cast<std::size_t>(d), Int(0));
        for (const Vec& tv : theta.vertexList()) dir = add(dir, tv);
        std::vector<LatticePolytope> thetaStars;
        for (const LatticePolytope& p : np.parts)
            thetaStars.push_back(faceInDirection(p, dir).asPolytope());
        Int bracket = 0;
        for (unsigned mask = 1; mask < (1u << r); ++mask) {
            Int term = lStarOf(maskedSum(thetaStars, mask, d));
            bracket += ((r - popcount(mask)) % 2 == 0) ? term : -term;
        }
        Int ls = lStarOf(theta.asPolytope());
        if (theta.dim >= 1 && ls != 0) terminal = false;
        faceData.push_back(FaceData{theta.dim, ls, bracket});
    }

    Int cardLow = 0;
    for (const Vec& v : boundaryLatticePoints(np.deltaStar))
        if (minimalFaceContaining(np.deltaStar, v).dim <= d - r - 1) ++cardLow;

    HodgeReport rep;
    rep.hOneQ.assign(d - r + 1, Int(0));
    for (const FaceData& f : faceData) {
        if (f.dim == 0) rep.hOneQ[d - r - 1] -= f.bracket;
        if (f.dim == 1) rep.hOneQ[d - r - 1] += f.lStar * f.bracket;
        if (f.dim == d - r - 1) rep.hOneQ[1] += f.lStar * f.bracket;
        for (int k = 2; k <= d - r - 2; ++k)
            if (f.dim == d - r - k - 1) rep.hOneQ[k] += f.lStar * f.bracket;
    }
    rep.hOneQ[d - r - 1] += fullBrackets - d;
    rep.hOneQ[1] += cardLow - d;

    for (const Int& h : rep.hOneQ)
        if (h < 0) throw InternalError("hodgeOneAmple: negative Hodge number");
    Int alternating = 0;
    for (int q = 0; q <= d - r; ++q)
        alternating += (q % 2 == 0) ? rep.hOneQ[q] : -rep.hOneQ[q];
    if (alternating != chiOmega1(np).chiOmega1)
        throw InternalError("hodgeOneAmple: alternating sum disagrees with chi(Omega^1)");

    rep.formulaUsed = terminal ? "ampleTerminal" : "amplePullback";
    rep.preconditionNotes =
        "face dimensions and the low-dimensional point count are read on the dual polytope; "
        "face brackets omit the empty index subset";
    return rep;
}

HodgeReport hodgeOneHypersurface(const LatticePolytope& delta) {
    if (!isReflexive(delta)) throw PreconditionError("hodgeOneHypersurface: delta is not reflexive");
    const int d = delta.ambientDim;
    if (d < 4) throw PreconditionError("hodgeOneHypersurface: requires d >= 4");

    LatticePolytope deltaStar = polarDualLattice(delta);
    struct FaceData {
        int dim;       // of the face of Delta*
        Int lStar;     // of the face
        Int lStarDual; // of the dual face in Delta
    };
    std::vector<FaceData> faceData;
    for (const Face& theta : allFaces(deltaStar)) {
        if (theta.vertexSubset.size() == deltaStar.vertices.size()) continue;
        faceData.push_back(FaceData{theta.dim, lStarOf(theta.asPolytope()),
                                    lStarOf(dualFace(deltaStar, theta).asPolytope())});
    }

    HodgeReport rep;
    rep.hOneQ.assign(d, Int(0));  // entry p is h^{p,1}, p = 0..d-1
    rep.hOneQ[1] = lOf(deltaStar) - d - 1;
    rep.hOneQ[d - 2] = lOf(delta) - d - 1;
    for (const FaceData& f : faceData) {
        if (f.dim == d - 1) rep.hOneQ[1] -= f.lStar;
        if (f.dim == d - 2) rep.hOneQ[1] += f.lStar * f.lStarDual;
        if (f.dim == 0) rep.hOneQ[d - 2] -= f.lStarDual;
        if (f.dim == 1) rep.hOneQ[d - 2] += f.lStar * f.lStarDual;
        for (int p = 2; p <= d - 3; ++p)
            if (f.dim == d - p - 1) rep.hOneQ[p] += f.lStar * f.lStarDual;
    }

    for (const Int& h : rep.hOneQ)
        if (h < 0) throw InternalError("hodgeOneHypersurface: negative Hodge number");
    Int alternating = 0;
    for (int q = 0; q < d; ++q)
        alternating += (q % 2 == 0) ? rep.hOneQ[q] : -rep.hOneQ[q];
    if (alternating != chiOmega1(validate({delta})).chiOmega1)
        throw InternalError("hodgeOneHypersurface: alternating sum disagrees with chi(Omega^1)");

    rep.formulaUsed = "hypersurface";
    rep.preconditionNotes = "entry q is h^{q,1}";
    return rep;
}

std::pair<HodgeReport, HodgeReport> pdMirrorHodge(const std::vector<int>& degrees) {
    const int r = static_cast<int>(degrees.size());
    const int d = std::accumulate(degrees.begin(), degrees.end(), 0) - 1;
    if (d - r < 3) throw PreconditionError("pdMirrorHodge: requires d - r >= 3");

    NefPartition np = validate(genPdParts(degrees));
    HodgeReport vRep = hodgeOneAmple(np);

    HodgeReport wRep;
    wRep.hOneQ.assign(vRep.hOneQ.rbegin(), vRep.hOneQ.rend());
    wRep.formulaUsed = "pdMirror";
    wRep.preconditionNotes = "mirror of the ample-case report, coefficients reversed";

    // independent count: h^{d-r-1} of the mirror = -d + sum(l(nabla_i) - 1)
    Int indep = -Int(d);
    for (const LatticePolytope& nb : np.nablas) indep += lOf(nb) - 1;
    if (wRep.hOneQ[d - r - 1] != indep || indep != 1)
        throw InternalError("pdMirrorHodge: mirror h^{d-r-1} disagrees with the lattice count");

    Int chiV = chiOmega1(np).chiOmega1;
    Int chiW = chiOmega1(dualPartition(np)).chiOmega1;
    if (chiV != (((d - r) % 2 == 0) ? chiW : -chiW))
        throw InternalError("pdMirrorHodge: chi duality violated");

    return {std::move(vRep), std::move(wRep)};
}

}  // namespace nefkit
