#pragma once

#include <Eigen/Dense>

#include "uscal/error.hpp"

namespace uscal {

/// Dense double matrix, row-major storage. Small sizes only (a few hundred
/// entries); all operations take inputs by value semantics and never mutate
/// their arguments.
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Relative singular-value cutoff used when none is supplied.
inline constexpr double kDefaultRankTol = 1e-10;

bool all_finite(const Mat& a) noexcept;

/// Matrix product with explicit shape and finiteness checks.
/// Throws errc::dimension_mismatch / errc::not_finite.
Mat matmul(const Mat& a, const Mat& b);

/// Moore-Penrose pseudo-inverse via SVD. Singular values below
/// rank_tol * sigma_max are treated as zero. Reduces to the exact inverse
/// for square nonsingular inputs and to the least-squares solution operator
/// for full-rank rectangular ones.
Mat generalized_inverse(const Mat& a, double rank_tol = kDefaultRankTol);

struct RankInfo {
    int rank = 0;
    double condition = 0.0; // sigma_max / smallest retained sigma; inf when rank == 0
};

/// Numerical rank and conditioning under the given relative cutoff.
RankInfo rank_and_condition(const Mat& a, double rank_tol = kDefaultRankTol);

} // namespace uscal
