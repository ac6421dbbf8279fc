// Nef-partitions of reflexive polytopes: validation, the dual partition,
// enumeration, irreducible decomposition, and the face/point sets feeding
// the invariant formulas.

#ifndef NEFKIT_NEFPART_HPP
#define NEFKIT_NEFPART_HPP

#include <vector>

#include "nefkit/polytope.hpp"

namespace nefkit {

struct NefPartition {
    LatticePolytope delta;               // reflexive Minkowski sum of the parts
    std::vector<LatticePolytope> parts;  // canonical order: (dim, vertex list)
    LatticePolytope deltaStar;
    IntMatrix phi;                       // phi.at(j, i) = supportValue(parts[j], e_i)
    std::vector<LatticePolytope> nablas;

    int r() const { return static_cast<int>(parts.size()); }
    int d() const { return delta.ambientDim; }
};

// Checks reflexivity of the sum and the 0/1 support-value condition at the
// vertices of the dual, then assembles the partition.  Parts are put into
// canonical order first, so permutation-equivalent inputs agree.
NefPartition validate(std::vector<LatticePolytope> parts);

// The partition {nabla_1, ..., nabla_r} of the dual polytope; asserts both
// convex-hull identities relating the two sides.
NefPartition dualPartition(const NefPartition& np);

// All nef-partitions of a reflexive polytope into r parts, up to part
// permutation (canonical order, duplicates removed).
std::vector<NefPartition> enumeratePartitions(const LatticePolytope& delta, int r);

// The faces Delta_j(v) for a boundary lattice point v of the dual; asserts
// that their Minkowski sum is the dual face of the minimal face containing v.
std::vector<Face> facesAtBoundaryPoint(const NefPartition& np, const Vec& v);

struct SupportSets {
    std::vector<std::vector<Vec>> nablaZero;  // nabla_i cap V(delta*)
    std::vector<std::vector<Vec>> deltaZero;  // delta_i cap V(nabla*)
};

SupportSets supportSets(const NefPartition& np);

struct DecompositionComponent {
    std::vector<int> indexSubset;  // part indices, 1-based, sorted
    LatticePolytope componentPolytope;
    IntMatrix componentLatticeBasis;  // rows generate M cap span(component)
};

struct DecompositionReport {
    std::vector<DecompositionComponent> components;
    Int sublatticeIndex;
    bool splitsOverZ = false;
};

// Finest partition of the parts into subsets whose Minkowski sum has 0 in
// its relative interior; the sublattice index measures how far the
// component lattices are from summing to the whole lattice.
DecompositionReport decompose(const NefPartition& np);

}  // namespace nefkit

#endif
