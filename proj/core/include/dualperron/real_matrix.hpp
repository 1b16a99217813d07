#pragma once

#include <cstddef>
#include <vector>

namespace dualperron {

using RealVector = std::vector<double>;

/// Dense real matrix, row-major.
class RealMatrix {
public:
    RealMatrix() = default;

    RealMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    static RealMatrix identity(std::size_t n) {
        RealMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    const std::vector<double>& data() const { return a_; }
    std::vector<double>& data() { return a_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> a_;
};

RealMatrix operator+(const RealMatrix& a, const RealMatrix& b);
RealMatrix operator-(const RealMatrix& a, const RealMatrix& b);
RealMatrix operator*(const RealMatrix& a, const RealMatrix& b);
RealMatrix operator*(double c, const RealMatrix& a);
RealVector operator*(const RealMatrix& a, const RealVector& x);

RealMatrix transpose(const RealMatrix& a);

double frobenius_norm(const RealMatrix& a);
double max_abs_entry(const RealMatrix& a);
bool all_finite(const RealMatrix& a);

double dot(const RealVector& x, const RealVector& y);
double norm2(const RealVector& x);

/// Solve A v = b by Gaussian elimination with partial pivoting.
///
/// A pivot whose magnitude falls at or below
/// 1e-12 * (largest |entry| of the initial matrix) declares the system
/// singular (SingularError).
RealVector gaussian_solve(RealMatrix a, RealVector b);

/// Inverse via Gaussian elimination with partial pivoting; same pivot
/// threshold as gaussian_solve.
RealMatrix gaussian_inverse(const RealMatrix& a);

} // namespace dualperron
