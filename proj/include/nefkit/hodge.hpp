// Invariant formulas for Calabi-Yau complete intersections attached to
// nef-partitions: independence/classification of the intersection, the
// E-polynomial of h^{0,q}, Euler characteristics of the twisted structure
// sheaves and of the sheaf of 1-forms, the (1,q) Hodge-number formulas in
// the ample cases, and the projective-space mirror formulas.

#ifndef NEFKIT_HODGE_HPP
#define NEFKIT_HODGE_HPP

#include <string>
#include <utility>
#include <vector>

#include "nefkit/nefpart.hpp"

namespace nefkit {

// No n-element subfamily has dim(sum) < n + k - 1.
bool kIndependent(const std::vector<LatticePolytope>& polys, int k);

// Largest k for which the family is k-independent (0 when not even
// 1-independent).
int maxIndependence(const std::vector<LatticePolytope>& polys);

enum class CIVerdict { empty, twoPoints, genusOneCurve, calabiYau, nonemptyUnclassified };

std::string verdictName(CIVerdict v);

struct CIStatus {
    CIVerdict verdict = CIVerdict::empty;
    int maxIndependence = 0;
    std::vector<Int> hVector;  // E-polynomial coefficients when applicable
};

CIStatus ciStatus(const std::vector<LatticePolytope>& parts);

// E(Delta, t) = sum over J of l*(sum of the chosen parts) t^{dim - |J|};
// coefficient q is h^q of the structure sheaf.
struct EPolynomial {
    std::vector<Int> coefficients;  // c_0 .. c_{d-r}
};

EPolynomial ePolynomial(const NefPartition& np);

// chi of O(-Z_i), i is 1-based.
Int chiMinusZ(const NefPartition& np, int i);

// chi of the structure sheaf of the divisor slice at a boundary lattice
// point v of the dual polytope.
Int chiDivisorSlice(const NefPartition& np, const Vec& v);

struct ChiReport {
    Int chiOmega1;
    // the four summands of the regrouped formula
    Int termChiOd;          // d * E(Delta, -1)
    Int termDeltaSums;      // signed b-values over Delta_i + subset sums
    Int termVertexNotInJ;   // per assigned dual vertex, subsets avoiding i
    Int termVertexInJ;      // per assigned dual vertex, subsets containing i
    std::string vertexAssignmentMode;  // "canonical" | "strict"
};

// Requires d - r >= 1.  In canonical mode every boundary lattice point of
// the dual is assigned to the least part whose nabla has the point's
// minimal face as a face, and the four terms provably resum the direct
// route (asserted).  In strict mode points shared between several nablas
// are counted once per containing nabla, and chiOmega1 is the sum of the
// four terms under that literal reading.
ChiReport chiOmega1(const NefPartition& np, bool strictVertexMode = false);

// Brute-force verification of the two interior-point correspondences and
// their dimension formulas; returns human-readable violations (expected
// empty).
std::vector<std::string> interiorCorrespondenceCheck(const NefPartition& np);

struct HodgeReport {
    std::vector<Int> hOneQ;  // h^{1,q} for q = 0..d-r
    std::string formulaUsed;  // "hypersurface" | "amplePullback" | "ampleTerminal" | "pdMirror"
    std::string preconditionNotes;
};

// Requires d - r >= 3 and every part mutually a Minkowski summand with the
// sum (equal normal fans).
HodgeReport hodgeOneAmple(const NefPartition& np);

// r = 1 formulas; requires delta reflexive of dimension >= 4.  Entry q of
// hOneQ is h^{q,1}.
HodgeReport hodgeOneHypersurface(const LatticePolytope& delta);

// Builds the P^d partition for the given degrees, computes the ample-case
// report, and returns it together with its mirror (coefficients reversed),
// cross-checked against the independent count -d + sum(l(nabla_i) - 1) and
// the chi duality.
std::pair<HodgeReport, HodgeReport> pdMirrorHodge(const std::vector<int>& degrees);

}  // namespace nefkit

#endif
