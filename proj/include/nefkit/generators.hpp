// Deterministic corpus generators: projective-space degree partitions,
// products of reflexives, the diamond non-example, and the half-lattice
// direct-sum example.

#ifndef NEFKIT_GENERATORS_HPP
#define NEFKIT_GENERATORS_HPP

#include <vector>

#include "nefkit/polytope.hpp"

namespace nefkit {

// conv{0, e_1, ..., e_d}
LatticePolytope stdSimplex(int d);

// Parts d_i*Simplex translated so their sum is the reflexive anticanonical
// polytope of P^d, d = sum(degrees) - 1.  Requires every degree >= 2.
std::vector<LatticePolytope> genPdParts(const std::vector<int>& degrees);

// Each reflexive factor embedded into its own coordinate block; the sum is
// the product polytope.
std::vector<LatticePolytope> genProductParts(const std::vector<LatticePolytope>& factors);

// The 2-dim diamond split that fails the 0/1 support condition.
std::vector<LatticePolytope> genDiamondSplitParts();

// Two 2-dim diamonds spanning complementary planes of a rank-4 lattice
// containing the half-sum vector, written in a basis where the lattice is
// Z^4; the component lattices then sum to an index-2 sublattice.
std::vector<LatticePolytope> genHalfLatticeParts();

// 2-dim reflexive helpers for product corpora.
LatticePolytope diamond2d();
LatticePolytope square2d();
LatticePolytope triangle2d();  // anticanonical triangle of P^2

}  // namespace nefkit

#endif
