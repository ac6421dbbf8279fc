#include "nefkit/exactmath.hpp"

#include <sstream>
#include <stdexcept>

namespace nefkit {

Int dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec scaled(const Vec& a, const Int& k) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
    return r;
}

Int gcdOf(const Vec& a) {
    Int g = 0;
    for (const Int& x : a) g = boost::multiprecision::gcd(g, x);
    return g;
}

Vec primitive(Vec a) {
    Int g = gcdOf(a);
    if (g > 1)
        for (Int& x : a) x /= g;
    return a;
}

Vec IntMatrix::row(std::size_t i) const {
    return Vec(data.begin() + i * cols, data.begin() + (i + 1) * cols);
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::fromRows(const std::vector<Vec>& rowsIn, std::size_t cols) {
    IntMatrix m(rowsIn.size(), cols);
    for (std::size_t i = 0; i < rowsIn.size(); ++i) {
        if (rowsIn[i].size() != cols) throw std::invalid_argument("fromRows: ragged input");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rowsIn[i][j];
    }
    return m;
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("mul: shape mismatch");
    IntMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

namespace {

// Bareiss fraction-free elimination; returns rank and, when square and
// requested, the determinant.
std::size_t bareiss(IntMatrix a, Int* detOut) {
    std::size_t r = 0;
    Int prev = 1;
    int sign = 1;
    for (std::size_t col = 0; col < a.cols && r < a.rows; ++col) {
        std::size_t piv = r;
        while (piv < a.rows && a.at(piv, col) == 0) ++piv;
        if (piv == a.rows) continue;
        if (piv != r) {
            for (std::size_t j = 0; j < a.cols; ++j) std::swap(a.at(piv, j), a.at(r, j));
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < a.rows; ++i) {
            for (std::size_t j = col + 1; j < a.cols; ++j)
                a.at(i, j) = (a.at(r, col) * a.at(i, j) - a.at(i, col) * a.at(r, j)) / prev;
            a.at(i, col) = 0;
        }
        prev = a.at(r, col);
        ++r;
    }
    if (detOut) {
        if (a.rows != a.cols) throw std::invalid_argument("det: not square");
        *detOut = (r < a.rows) ? Int(0) : Int(sign * prev);
    }
    return r;
}

}  // namespace

Int det(const IntMatrix& a) {
    Int d;
    bareiss(a, &d);
    return d;
}

std::size_t rank(const IntMatrix& m) { return bareiss(m, nullptr); }

std::optional<RatVec> solveRational(const IntMatrix& m, const RatVec& rhs) {
    if (rhs.size() != m.rows) throw std::invalid_argument("solveRational: rhs length mismatch");
    std::vector<RatVec> a(m.rows, RatVec(m.cols + 1));
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) a[i][j] = Rational(m.at(i, j));
        a[i][m.cols] = rhs[i];
    }
    std::vector<std::size_t> pivotCol;
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols && r < m.rows; ++col) {
        std::size_t piv = r;
        while (piv < m.rows && a[piv][col] == 0) ++piv;
        if (piv == m.rows) continue;
        std::swap(a[piv], a[r]);
        Rational p = a[r][col];
        for (std::size_t j = col; j <= m.cols; ++j) a[r][j] /= p;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (std::size_t j = col; j <= m.cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivotCol.push_back(col);
        ++r;
    }
    for (std::size_t i = r; i < m.rows; ++i)
        if (a[i][m.cols] != 0) return std::nullopt;
    RatVec x(m.cols, Rational(0));
    for (std::size_t i = 0; i < r; ++i) x[pivotCol[i]] = a[i][m.cols];
    return x;
}

SmithResult smithNormalForm(const IntMatrix& m) {
    IntMatrix a = m;
    IntMatrix left = IntMatrix::identity(m.rows);
    IntMatrix right = IntMatrix::identity(m.cols);

    auto swapRows = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < a.cols; ++k) std::swap(a.at(i, k), a.at(j, k));
        for (std::size_t k = 0; k < left.cols; ++k) std::swap(left.at(i, k), left.at(j, k));
    };
    auto swapCols = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < a.rows; ++k) std::swap(a.at(k, i), a.at(k, j));
        for (std::size_t k = 0; k < right.rows; ++k) std::swap(right.at(k, i), right.at(k, j));
    };
    auto addRow = [&](std::size_t dst, std::size_t src, const Int& f) {  // row dst += f*row src
        for (std::size_t k = 0; k < a.cols; ++k) a.at(dst, k) += f * a.at(src, k);
        for (std::size_t k = 0; k < left.cols; ++k) left.at(dst, k) += f * left.at(src, k);
    };
    auto addCol = [&](std::size_t dst, std::size_t src, const Int& f) {  // col dst += f*col src
        for (std::size_t k = 0; k < a.rows; ++k) a.at(k, dst) += f * a.at(k, src);
        for (std::size_t k = 0; k < right.rows; ++k) right.at(k, dst) += f * right.at(k, src);
    };
    auto negateRow = [&](std::size_t i) {
        for (std::size_t k = 0; k < a.cols; ++k) a.at(i, k) = -a.at(i, k);
        for (std::size_t k = 0; k < left.cols; ++k) left.at(i, k) = -left.at(i, k);
    };

    std::size_t n = std::min(a.rows, a.cols);
    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // pick the nonzero entry of smallest magnitude in the trailing block
            std::size_t pi = a.rows, pj = a.cols;
            for (std::size_t i = t; i < a.rows; ++i)
                for (std::size_t j = t; j < a.cols; ++j)
                    if (a.at(i, j) != 0 &&
                        (pi == a.rows || abs(a.at(i, j)) < abs(a.at(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == a.rows) { t = n; break; }  // trailing block zero; done
            if (pi != t) swapRows(pi, t);
            if (pj != t) swapCols(pj, t);

            bool clean = true;
            for (std::size_t i = t + 1; i < a.rows; ++i)
                if (a.at(i, t) != 0) {
                    addRow(i, t, -(a.at(i, t) / a.at(t, t)));
                    if (a.at(i, t) != 0) clean = false;
                }
            for (std::size_t j = t + 1; j < a.cols; ++j)
                if (a.at(t, j) != 0) {
                    addCol(j, t, -(a.at(t, j) / a.at(t, t)));
                    if (a.at(t, j) != 0) clean = false;
                }
            if (!clean) continue;

            // enforce divisibility of the pivot into the trailing block
            bool divides = true;
            for (std::size_t i = t + 1; i < a.rows && divides; ++i)
                for (std::size_t j = t + 1; j < a.cols && divides; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        addRow(t, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (t >= n) break;
    }

    for (std::size_t t = 0; t < n; ++t)
        if (a.at(t, t) < 0) negateRow(t);

    SmithResult res;
    res.diagonal.resize(n);
    for (std::size_t t = 0; t < n; ++t) res.diagonal[t] = a.at(t, t);
    res.left = std::move(left);
    res.right = std::move(right);
    return res;
}

std::optional<Int> latticeIndex(const IntMatrix& generators) {
    if (rank(generators) < generators.cols) return std::nullopt;
    SmithResult s = smithNormalForm(generators);
    Int idx = 1;
    for (const Int& d : s.diagonal)
        if (d != 0) idx *= d;
    return idx;
}

IntMatrix inverseUnimodular(const IntMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("inverseUnimodular: not square");
    Int d = det(m);
    if (d != 1 && d != -1) throw std::invalid_argument("inverseUnimodular: not unimodular");
    std::size_t n = m.rows;
    IntMatrix inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        RatVec e(n, Rational(0));
        e[j] = 1;
        auto x = solveRational(m, e);
        if (!x) throw std::logic_error("inverseUnimodular: inconsistent");
        for (std::size_t i = 0; i < n; ++i) {
            const Rational& v = (*x)[i];
            if (denominator(v) != 1) throw std::logic_error("inverseUnimodular: non-integer inverse");
            inv.at(i, j) = numerator(v);
        }
    }
    return inv;
}

std::string toString(const Vec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << ")";
    return os.str();
}

}  // namespace nefkit
