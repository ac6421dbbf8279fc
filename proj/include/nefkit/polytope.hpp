// Exact lattice-polytope geometry: hulls, dual descriptions, lattice-point
// enumeration, Minkowski operations, faces, polar duality, reflexivity.
//
// A polytope carries both an irredundant vertex description and an
// irredundant facet description relative to its affine span; lower
// dimensional polytopes additionally carry the span equations.  All
// outputs are canonically ordered (lexicographic), so equal polytopes
// compare equal componentwise.

#ifndef NEFKIT_POLYTOPE_HPP
#define NEFKIT_POLYTOPE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "nefkit/errors.hpp"
#include "nefkit/exactmath.hpp"

namespace nefkit {

// {x : <x, normal> >= -offset}, normal primitive.
struct HalfSpace {
    Vec normal;
    Int offset;
    bool operator==(const HalfSpace&) const = default;
};

struct LatticePolytope {
    int ambientDim = 0;
    std::vector<Vec> vertices;              // irredundant, sorted lex
    std::vector<HalfSpace> facets;          // irredundant, relative to the span
    std::vector<std::pair<Vec, Int>> spanEq;  // <x,n> = c cutting out the affine span
    int intrinsicDim = 0;

    bool operator==(const LatticePolytope& o) const {
        return ambientDim == o.ambientDim && vertices == o.vertices;
    }
};

// A face is the argmin set of a supporting direction; the whole polytope is
// the face of direction 0.
struct Face {
    LatticePolytope parent;
    std::vector<std::size_t> vertexSubset;  // indices into parent.vertices, sorted
    Vec supportingDirection;
    int dim = 0;

    std::vector<Vec> vertexList() const;
    LatticePolytope asPolytope() const;
};

LatticePolytope hullFromVertices(const std::vector<Vec>& points, int ambientDim);

// Convenience: the single-point polytope {0}.
LatticePolytope originPolytope(int ambientDim);

struct PointEnumeration {
    std::vector<Vec> all;       // lattice points, sorted lex
    std::vector<Vec> interior;  // relative-interior lattice points, sorted lex
};

PointEnumeration enumerateLatticePoints(const LatticePolytope& p);
std::vector<Vec> latticePoints(const LatticePolytope& p);
Int latticePointCount(const LatticePolytope& p);           // l(p)
std::vector<Vec> interiorLatticePoints(const LatticePolytope& p);
Int interiorLatticePointCount(const LatticePolytope& p);   // l*(p)
Int bValue(const LatticePolytope& p);                      // (-1)^dim * l*(p)

bool contains(const LatticePolytope& p, const Vec& x);
bool containsRelInterior(const LatticePolytope& p, const Vec& x);

LatticePolytope minkowskiSum(const LatticePolytope& p, const LatticePolytope& q);
// Sum over a family; the empty family yields {0}.
LatticePolytope minkowskiSumAll(const std::vector<LatticePolytope>& ps, int ambientDim);
LatticePolytope scale(const LatticePolytope& p, const Int& k);
LatticePolytope translate(const LatticePolytope& p, const Vec& t);

struct SummandWitness {
    Int mu;
    LatticePolytope complement;  // mu*whole = part + complement
};

// Witness present iff the support function of `part` is linear on every
// maximal normal cone of `whole`; mu is the least positive multiplier
// admitting a lattice complement, verified by reconstruction.
std::optional<SummandWitness> isMinkowskiSummand(const LatticePolytope& part,
                                                 const LatticePolytope& whole);

// a = -min_{x in p} <x, y>
Int supportValue(const LatticePolytope& p, const Vec& y);

struct PolarDual {
    std::vector<RatVec> vertices;  // facet normals of p scaled by 1/offset
    bool latticeFlag = false;
};

// Requires p full-dimensional with 0 strictly interior.
PolarDual polarDual(const LatticePolytope& p);
// The dual as a lattice polytope; throws InternalError unless latticeFlag.
LatticePolytope polarDualLattice(const LatticePolytope& p);

bool isReflexive(const LatticePolytope& p);

Face faceInDirection(const LatticePolytope& p, const Vec& y);

// All faces (including the whole polytope, excluding the empty face).
std::vector<Face> allFaces(const LatticePolytope& p);
std::vector<Face> facesOfDim(const LatticePolytope& p, int k);

// Dual face on the polar side; p must be reflexive, f a proper face.
Face dualFace(const LatticePolytope& p, const Face& f);

// V(p) = boundary lattice points; p must be reflexive.
std::vector<Vec> boundaryLatticePoints(const LatticePolytope& p);

// The unique face with v in its relative interior; errors if v is outside
// or in the relative interior of p.
Face minimalFaceContaining(const LatticePolytope& p, const Vec& v);

// Vertices of the bounded region {x : <x, n_i> >= -c_i}; empty result
// means infeasible.  Throws InternalError when the region is unbounded.
std::vector<RatVec> verticesFromHalfspaces(const std::vector<HalfSpace>& hs, int d);

// Extreme rays of the pointed cone {y : <a,y> >= 0 for a in ineqs},
// primitive and sorted lex.  Throws InternalError if the cone is not pointed.
std::vector<Vec> extremeRaysOfCone(const std::vector<Vec>& ineqs, int n);

// Canonical serialization of the vertex set, usable as a cache key.
std::string polytopeKey(const LatticePolytope& p);

}  // namespace nefkit

#endif
