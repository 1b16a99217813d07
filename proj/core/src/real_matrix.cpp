#include "dualperron/real_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "dualperron/errors.hpp"

namespace dualperron {

namespace {

void require_same_shape(const RealMatrix& a, const RealMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("matrix shapes do not agree");
}

} // namespace

RealMatrix operator+(const RealMatrix& a, const RealMatrix& b) {
    require_same_shape(a, b);
    RealMatrix c = a;
    for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] += b.data()[i];
    return c;
}

RealMatrix operator-(const RealMatrix& a, const RealMatrix& b) {
    require_same_shape(a, b);
    RealMatrix c = a;
    for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] -= b.data()[i];
    return c;
}

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionError("matrix product dimensions do not agree");
    RealMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

RealMatrix operator*(double c, const RealMatrix& a) {
    RealMatrix r = a;
    for (double& v : r.data()) v *= c;
    return r;
}

RealVector operator*(const RealMatrix& a, const RealVector& x) {
    if (a.cols() != x.size())
        throw DimensionError("matrix-vector dimensions do not agree");
    RealVector y(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

RealMatrix transpose(const RealMatrix& a) {
    RealMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

double frobenius_norm(const RealMatrix& a) {
    double acc = 0.0;
    for (double v : a.data()) acc += v * v;
    return std::sqrt(acc);
}

double max_abs_entry(const RealMatrix& a) {
    double m = 0.0;
    for (double v : a.data()) m = std::max(m, std::abs(v));
    return m;
}

bool all_finite(const RealMatrix& a) {
    return std::all_of(a.data().begin(), a.data().end(),
                       [](double v) { return std::isfinite(v); });
}

double dot(const RealVector& x, const RealVector& y) {
    if (x.size() != y.size())
        throw DimensionError("vector lengths do not agree");
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
    return acc;
}

double norm2(const RealVector& x) { return std::sqrt(dot(x, x)); }

namespace {

// In-place elimination with partial pivoting on [a | rhs columns].
// rhs has a.rows() rows and any number of columns, stored as a RealMatrix.
RealMatrix eliminate(RealMatrix a, RealMatrix rhs) {
    const std::size_t n = a.rows();
    if (a.cols() != n || rhs.rows() != n)
        throw DimensionError("elimination needs a square system");
    const double pivot_floor = 1e-12 * max_abs_entry(a);

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
        if (std::abs(a(pivot, col)) <= pivot_floor)
            throw SingularError("matrix is numerically singular");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(pivot, j));
            for (std::size_t j = 0; j < rhs.cols(); ++j) std::swap(rhs(col, j), rhs(pivot, j));
        }
        const double inv = 1.0 / a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a(r, col) * inv;
            if (f == 0.0) continue;
            a(r, col) = 0.0;
            for (std::size_t j = col + 1; j < n; ++j) a(r, j) -= f * a(col, j);
            for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(r, j) -= f * rhs(col, j);
        }
    }

    // Back substitution.
    RealMatrix x(n, rhs.cols());
    for (std::size_t jc = 0; jc < rhs.cols(); ++jc) {
        for (std::size_t ir = n; ir-- > 0;) {
            double acc = rhs(ir, jc);
            for (std::size_t j = ir + 1; j < n; ++j) acc -= a(ir, j) * x(j, jc);
            x(ir, jc) = acc / a(ir, ir);
        }
    }
    return x;
}

} // namespace

RealVector gaussian_solve(RealMatrix a, RealVector b) {
    const std::size_t n = a.rows();
    if (b.size() != n)
        throw DimensionError("right-hand side length does not match");
    RealMatrix rhs(n, 1);
    for (std::size_t i = 0; i < n; ++i) rhs(i, 0) = b[i];
    RealMatrix x = eliminate(std::move(a), std::move(rhs));
    RealVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = x(i, 0);
    return v;
}

RealMatrix gaussian_inverse(const RealMatrix& a) {
    if (a.rows() != a.cols())
        throw DimensionError("inverse needs a square matrix");
    return eliminate(a, RealMatrix::identity(a.rows()));
}

} // namespace dualperron
