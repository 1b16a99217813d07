#include "dualperron/dual_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <utility>

#include "dualperron/errors.hpp"

namespace dualperron {

std::ostream& operator<<(std::ostream& os, const DualNumber& a) {
    os << a.s() << (a.d() < 0.0 ? " - " : " + ") << std::abs(a.d()) << "e";
    return os;
}

namespace {

bool finite_vec(const RealVector& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

bool is_zero(const RealVector& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
}

} // namespace

DualVector::DualVector(RealVector s_part, RealVector d_part)
    : s(std::move(s_part)), d(std::move(d_part)) {
    if (s.empty() || s.size() != d.size())
        throw DimensionError("dual vector parts must share a length of at least 1");
    if (!finite_vec(s) || !finite_vec(d))
        throw OverflowError("dual vector has non-finite entries");
}

DualVector DualVector::from_real(RealVector s_part) {
    RealVector zeros(s_part.size(), 0.0);
    return DualVector(std::move(s_part), std::move(zeros));
}

bool DualVector::appreciable() const { return !is_zero(s); }

DualMatrix::DualMatrix(RealMatrix s_part, RealMatrix d_part)
    : s(std::move(s_part)), d(std::move(d_part)) {
    if (s.rows() == 0 || s.rows() != s.cols())
        throw DimensionError("dual matrix must be square with dimension at least 1");
    if (d.rows() != s.rows() || d.cols() != s.cols())
        throw DimensionError("dual matrix parts must share their shape");
    if (!all_finite(s) || !all_finite(d))
        throw OverflowError("dual matrix has non-finite entries");
}

DualMatrix DualMatrix::from_real(RealMatrix s_part) {
    RealMatrix zeros(s_part.rows(), s_part.cols());
    return DualMatrix(std::move(s_part), std::move(zeros));
}

DualMatrix DualMatrix::identity(std::size_t n) {
    return DualMatrix(RealMatrix::identity(n), RealMatrix(n, n));
}

DualMatrix transpose(const DualMatrix& a) {
    return DualMatrix(transpose(a.s), transpose(a.d));
}

DualNumber vec_norm2(const DualVector& x) {
    if (x.appreciable()) {
        const double ns = norm2(x.s);
        return DualNumber(ns, dot(x.s, x.d) / ns);
    }
    return DualNumber(norm2(x.d), 0.0);
}

DualVector normalize(const DualVector& x) {
    const std::size_t n = x.size();
    if (x.appreciable()) {
        const double ns = norm2(x.s);
        const double ip = dot(x.s, x.d);
        RealVector ys(n), yd(n);
        for (std::size_t i = 0; i < n; ++i) {
            ys[i] = x.s[i] / ns;
            yd[i] = x.d[i] / ns - x.s[i] * ip / (ns * ns * ns);
        }
        return DualVector(std::move(ys), std::move(yd));
    }
    if (!is_zero(x.d)) {
        const double nd = norm2(x.d);
        RealVector ys(n);
        for (std::size_t i = 0; i < n; ++i) ys[i] = x.d[i] / nd;
        return DualVector(std::move(ys), RealVector(n, 0.0));
    }
    throw InvalidInputError("cannot normalize the zero dual vector");
}

DualVector matvec(const DualMatrix& a, const DualVector& x) {
    if (a.size() != x.size())
        throw DimensionError("matrix and vector dimensions do not agree");
    RealVector ys = a.s * x.s;
    RealVector yd = a.s * x.d;
    RealVector yd2 = a.d * x.s;
    for (std::size_t i = 0; i < yd.size(); ++i) yd[i] += yd2[i];
    return DualVector(std::move(ys), std::move(yd));
}

DualMatrix matmul(const DualMatrix& a, const DualMatrix& b) {
    if (a.size() != b.size())
        throw DimensionError("matrix product dimensions do not agree");
    return DualMatrix(a.s * b.s, a.s * b.d + a.d * b.s);
}

DualMatrix matpow(const DualMatrix& a, unsigned k) {
    DualMatrix acc = DualMatrix::identity(a.size());
    for (unsigned i = 0; i < k; ++i) acc = matmul(acc, a);
    return acc;
}

DualMatrix inverse(const DualMatrix& a) {
    RealMatrix sinv = gaussian_inverse(a.s);
    RealMatrix dpart = -1.0 * (sinv * a.d * sinv);
    return DualMatrix(std::move(sinv), std::move(dpart));
}

double fr_norm(const DualMatrix& a) {
    const double fs = frobenius_norm(a.s);
    const double fd = frobenius_norm(a.d);
    return std::sqrt(fs * fs + fd * fd);
}

std::pair<double, double> entrywise_max_abs(const DualMatrix& a) {
    return {max_abs_entry(a.s), max_abs_entry(a.d)};
}

} // namespace dualperron
