#include "nefkit/generators.hpp"

#include <numeric>

namespace nefkit {

LatticePolytope stdSimplex(int d) {
    std::vector<Vec> pts{Vec(static_cast<std::size_t>(d), Int(0))};
    for (int i = 0; i < d; ++i) {
        Vec e(static_cast<std::size_t>(d), Int(0));
        e[i] = 1;
        pts.push_back(std::move(e));
    }
    return hullFromVertices(pts, d);
}

std::vector<LatticePolytope> genPdParts(const std::vector<int>& degrees) {
    if (degrees.empty()) throw PreconditionError("genPdParts: no degrees");
    for (int di : degrees)
        if (di < 2) throw PreconditionError("genPdParts: degrees must be >= 2");
    const int r = static_cast<int>(degrees.size());
    const int d = std::accumulate(degrees.begin(), degrees.end(), 0) - 1;

    // coordinate blocks: part j < r-1 owns degrees[j] coordinates, the last
    // part owns degrees[r-1] - 1; the blocks partition {0,...,d-1}, so the
    // translations sum to (1,...,1) and the parts to (d+1)*Simplex - 1
    std::vector<LatticePolytope> parts;
    int offset = 0;
    for (int j = 0; j < r; ++j) {
        int blockLen = (j == r - 1) ? degrees[j] - 1 : degrees[j];
        Vec t(static_cast<std::size_t>(d), Int(0));
        for (int c = offset; c < offset + blockLen; ++c) t[c] = -1;
        offset += blockLen;
        parts.push_back(translate(scale(stdSimplex(d), degrees[j]), t));
    }
    return parts;
}

std::vector<LatticePolytope> genProductParts(const std::vector<LatticePolytope>& factors) {
    if (factors.empty()) throw PreconditionError("genProductParts: no factors");
    int d = 0;
    for (const LatticePolytope& f : factors) {
        if (!isReflexive(f)) throw PreconditionError("genProductParts: factor is not reflexive");
        d += f.ambientDim;
    }
    std::vector<LatticePolytope> parts;
    int offset = 0;
    for (const LatticePolytope& f : factors) {
        std::vector<Vec> pts;
        for (const Vec& v : f.vertices) {
            Vec w(static_cast<std::size_t>(d), Int(0));
            for (int c = 0; c < f.ambientDim; ++c) w[offset + c] = v[c];
            pts.push_back(std::move(w));
        }
        parts.push_back(hullFromVertices(pts, d));
        offset += f.ambientDim;
    }
    return parts;
}

std::vector<LatticePolytope> genDiamondSplitParts() {
    return {hullFromVertices({{-1, 0}, {0, -1}}, 2), hullFromVertices({{0, 0}, {1, 1}}, 2)};
}

std::vector<LatticePolytope> genHalfLatticeParts() {
    // Basis change from {f_1..f_4} with lattice Z^4 + Z*(1/2,1/2,1/2,1/2)
    // to {f_1, f_2, f_3, h}: p -> (p1-p4, p2-p4, p3-p4, 2*p4).  The two
    // diamonds conv{+-f1,+-f2} and conv{+-f3,+-f4} become:
    LatticePolytope d1 = hullFromVertices({{1, 0, 0, 0}, {-1, 0, 0, 0}, {0, 1, 0, 0}, {0, -1, 0, 0}}, 4);
    LatticePolytope d2 = hullFromVertices(
        {{0, 0, 1, 0}, {0, 0, -1, 0}, {-1, -1, -1, 2}, {1, 1, 1, -2}}, 4);
    return {d1, d2};
}

LatticePolytope diamond2d() {
    return hullFromVertices({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, 2);
}

LatticePolytope square2d() {
    return hullFromVertices({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}, 2);
}

LatticePolytope triangle2d() {
    return hullFromVertices({{1, 0}, {0, 1}, {-1, -1}}, 2);
}

}  // namespace nefkit
