#pragma once

#include <cstddef>
#include <utility>

#include "dualperron/dual_number.hpp"
#include "dualperron/real_matrix.hpp"

namespace dualperron {

/// Dense vector over dual numbers, stored as a pair of real vectors
/// x = x_s + x_d*eps. Both parts share the same length (>= 1) and all
/// entries are finite; violations throw at construction.
struct DualVector {
    RealVector s;
    RealVector d;

    DualVector() = default;
    DualVector(RealVector s_part, RealVector d_part);

    /// Lift a real vector (dual part zero).
    static DualVector from_real(RealVector s_part);

    std::size_t size() const { return s.size(); }

    /// True when the standard part is not the zero vector.
    bool appreciable() const;

    DualNumber operator[](std::size_t i) const { return DualNumber(s[i], d[i]); }
};

/// Dense square matrix over dual numbers, A = A_s + A_d*eps.
/// Both parts are square with the same dimension (>= 1), entries finite.
struct DualMatrix {
    RealMatrix s;
    RealMatrix d;

    DualMatrix() = default;
    DualMatrix(RealMatrix s_part, RealMatrix d_part);

    static DualMatrix from_real(RealMatrix s_part);
    static DualMatrix identity(std::size_t n);

    std::size_t size() const { return s.rows(); }
};

DualMatrix transpose(const DualMatrix& a);

/// 2-norm of a dual vector:
///   (||x_s||, x_s^T x_d / ||x_s||)   if x_s != 0,
///   (||x_d||, 0)                     otherwise.
DualNumber vec_norm2(const DualVector& x);

/// Normalize x to a unit dual vector (||y_s|| = 1 and y_s^T y_d = 0).
/// For the non-appreciable branch the dual part is set to zero.
/// Throws InvalidInputError on the zero vector.
DualVector normalize(const DualVector& x);

/// y = A x with y_s = A_s x_s and y_d = A_s x_d + A_d x_s.
DualVector matvec(const DualMatrix& a, const DualVector& x);

/// C = A B with C_s = A_s B_s and C_d = A_s B_d + A_d B_s.
DualMatrix matmul(const DualMatrix& a, const DualMatrix& b);

/// A^k by repeated dual multiplication; A^0 is the identity.
/// Satisfies (A^k)_s = A_s^k and
/// (A^k)_d = sum_{p=0}^{k-1} A_s^p A_d A_s^{k-1-p}.
DualMatrix matpow(const DualMatrix& a, unsigned k);

/// A^{-1} = A_s^{-1} - A_s^{-1} A_d A_s^{-1} eps.
/// Throws SingularError when the standard part is numerically singular.
DualMatrix inverse(const DualMatrix& a);

/// Combined Frobenius magnitude sqrt(||A_s||_F^2 + ||A_d||_F^2);
/// zero exactly when A is the zero matrix.
double fr_norm(const DualMatrix& a);

/// (max |entry of A_s|, max |entry of A_d|).
std::pair<double, double> entrywise_max_abs(const DualMatrix& a);

} // namespace dualperron
