// Exact rational arithmetic and integer linear algebra kernel.
//
// Everything downstream (polytope geometry, nef-partitions, Hodge-number
// formulas) is computed over these types; there is no floating point
// anywhere in the library.

#ifndef NEFKIT_EXACTMATH_HPP
#define NEFKIT_EXACTMATH_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace nefkit {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using Vec = std::vector<Int>;       // lattice vector
using RatVec = std::vector<Rational>;

Int dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scaled(const Vec& a, const Int& k);
Int gcdOf(const Vec& a);
// Divides by the gcd of the entries (no-op on the zero vector).
Vec primitive(Vec a);

// Dense row-major matrix of arbitrary-precision integers.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Int> data;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    Int& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    Vec row(std::size_t i) const;

    static IntMatrix identity(std::size_t n);
    static IntMatrix fromRows(const std::vector<Vec>& rowsIn, std::size_t cols);

    bool operator==(const IntMatrix& o) const = default;
};

IntMatrix mul(const IntMatrix& a, const IntMatrix& b);
Int det(const IntMatrix& a);

// Exact rank over the rationals (fraction-free Bareiss elimination).
std::size_t rank(const IntMatrix& m);

// One exact solution of m·x = rhs if consistent (free variables set to 0).
std::optional<RatVec> solveRational(const IntMatrix& m, const RatVec& rhs);

// left·m·right = diag(diagonal), transforms unimodular,
// diagonal nonnegative with d1 | d2 | ... (zeros trailing).
struct SmithResult {
    std::vector<Int> diagonal;
    IntMatrix left;
    IntMatrix right;
};

SmithResult smithNormalForm(const IntMatrix& m);

// Index of the row span of `generators` in Z^cols; nullopt when the span
// has rank < cols ("infinite index").
std::optional<Int> latticeIndex(const IntMatrix& generators);

// Inverse of a unimodular integer matrix (throws if |det| != 1).
IntMatrix inverseUnimodular(const IntMatrix& m);

std::string toString(const Vec& v);

}  // namespace nefkit

#endif
