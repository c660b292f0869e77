#include "uscal/linalg.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <Eigen/SVD>

namespace uscal {

bool all_finite(const Mat& a) noexcept {
    return a.allFinite();
}

namespace {

void require_finite(const Mat& a, const char* what) {
    if (!all_finite(a)) {
        raise(errc::not_finite, std::string(what) + " contains NaN or Inf entries");
    }
}

Eigen::JacobiSVD<Mat> compute_svd(const Mat& a, unsigned options) {
    Eigen::JacobiSVD<Mat> svd(a, options);
    if (svd.info() != Eigen::Success) {
        raise(errc::svd_failure, "singular value decomposition did not converge");
    }
    return svd;
}

} // namespace

Mat matmul(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) {
        raise(errc::dimension_mismatch,
              "matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                  " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    require_finite(a, "matmul: left operand");
    require_finite(b, "matmul: right operand");
    Mat c = a * b;
    require_finite(c, "matmul: product");
    return c;
}

Mat generalized_inverse(const Mat& a, double rank_tol) {
    if (a.size() == 0) {
        raise(errc::invalid_argument, "generalized_inverse: empty matrix");
    }
    if (!(rank_tol > 0.0)) {
        raise(errc::invalid_argument, "generalized_inverse: rank_tol must be positive");
    }
    require_finite(a, "generalized_inverse: input");

    const auto svd = compute_svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sigma = svd.singularValues();
    const double cutoff = rank_tol * sigma(0);

    Eigen::VectorXd inv_sigma = Eigen::VectorXd::Zero(sigma.size());
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
        if (sigma(i) > cutoff) {
            inv_sigma(i) = 1.0 / sigma(i);
        }
    }
    Mat pinv = svd.matrixV() * inv_sigma.asDiagonal() * svd.matrixU().transpose();
    require_finite(pinv, "generalized_inverse: result");
    return pinv;
}

RankInfo rank_and_condition(const Mat& a, double rank_tol) {
    if (a.size() == 0) {
        raise(errc::invalid_argument, "rank_and_condition: empty matrix");
    }
    require_finite(a, "rank_and_condition: input");

    const auto svd = compute_svd(a, 0);
    const auto& sigma = svd.singularValues();
    const double cutoff = rank_tol * sigma(0);

    RankInfo info;
    double smallest_retained = 0.0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
        if (sigma(i) > cutoff && sigma(i) > 0.0) {
            ++info.rank;
            smallest_retained = sigma(i); // singular values are sorted descending
        }
    }
    info.condition = info.rank > 0 ? sigma(0) / smallest_retained
                                   : std::numeric_limits<double>::infinity();
    return info;
}

} // namespace uscal
