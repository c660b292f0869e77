#pragma once

#include <utility>
#include <vector>

#include "uscal/linalg.hpp"

namespace uscal {

/// Pixel position in the US image. Origin is the top point of the image
/// centre line, v grows downwards; u may be negative.
struct ImagePoint {
    double u = 0.0;
    double v = 0.0;
};

/// Point in the depth-camera (world) frame, millimetres. The camera's
/// optical centre is the origin.
struct WorldPoint {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// One needle-tip observation recorded simultaneously in the US image and in
/// the depth camera.
struct PointPair {
    ImagePoint image;
    WorldPoint world;
};

using PointPairSet = std::vector<PointPair>;

/// Rigid 4x4 transform from the US-probe frame to the depth-camera frame.
/// Bottom row is exactly [0,0,0,1] and the rotation block is orthonormal;
/// both are validated on construction. The rig's bracket geometry gives a
/// pure translation, but probe mounts with rotation are supported.
class ExtrinsicTransform {
public:
    ExtrinsicTransform(); // identity

    static ExtrinsicTransform identity();
    static ExtrinsicTransform translation(double x_mm, double y_mm, double z_mm);

    /// Validates shape, bottom row, finiteness and rotation orthonormality
    /// (within 1e-9). Throws errc::invalid_argument on violation.
    static ExtrinsicTransform from_matrix(const Mat& m);

    const Mat& matrix() const noexcept { return m_; }

    /// Closed-form rigid inverse: [R t; 0 1]^-1 = [R' -R't; 0 1].
    Mat inverse() const;

private:
    Mat m_;
};

/// 4x3 affine map from homogeneous US-image pixels [u,v,1] to the probe
/// frame; columns are the mm-per-pixel axes and the origin offset. For a
/// coplanar rig the third row is ~0 and the fourth ~[0,0,1]; that structure
/// is validated, not enforced (see validate_intrinsic_structure).
class IntrinsicMatrix {
public:
    IntrinsicMatrix(); // zero scales, homogeneous fourth row

    static IntrinsicMatrix from_matrix(const Mat& m); // must be finite 4x3

    const Mat& matrix() const noexcept { return m_; }

private:
    Mat m_;
};

struct SolveDiagnostics {
    int rank = 0;                    // numerical rank of the pixel matrix
    double condition = 0.0;          // its conditioning
    double residual_frobenius = 0.0; // mm, fit residual in the probe frame
};

/// A solved (or externally supplied) image-to-world mapping.
/// total == extrinsic.matrix() * intrinsic.matrix() always.
struct Calibration {
    ExtrinsicTransform extrinsic;
    IntrinsicMatrix intrinsic;
    Mat total; // 4x3
    SolveDiagnostics diagnostics;

    static Calibration from_parts(const ExtrinsicTransform& extrinsic,
                                  const IntrinsicMatrix& intrinsic);
};

struct SolveOptions {
    double rank_tol = kDefaultRankTol;
    /// Zero the third row and pin the fourth to [0,0,1] after solving,
    /// for strictly coplanar rigs. Off by default so the solved structure
    /// can be inspected instead of masked.
    bool enforce_planar = false;
};

/// Stacks the correspondences column-wise: {4xn homogeneous world matrix,
/// 3xn homogeneous pixel matrix}, input order preserved.
std::pair<Mat, Mat> build_point_matrices(const PointPairSet& pairs);

/// Solves the intrinsic matrix from >= 3 non-collinear correspondences:
///   intrinsic = inverse(extrinsic) * world_mat * pinv(pixel_mat)
/// For n > 3 this is the unique Frobenius-norm least-squares minimiser.
/// Throws errc::rank_deficient when the pixels are collinear.
Calibration solve_intrinsic(const PointPairSet& pairs,
                            const ExtrinsicTransform& extrinsic,
                            const SolveOptions& options = {});

/// Maps a pixel through the calibration. The homogeneous component of the
/// result must be 1 within 1e-6, otherwise the calibration is corrupt and
/// errc::degenerate is thrown.
WorldPoint map_image_to_world(const Calibration& cal, ImagePoint p);

struct StructureReport {
    double row3_max_abs = 0.0; // should be ~0 for coplanar data
    double row4_max_dev = 0.0; // max deviation from [0,0,1]
    double tol_mm = 0.0;
    bool compliant = false;
};

/// Default structure tolerance, sub-pixel at the rig's ~0.35 mm/px scale.
inline constexpr double kDefaultStructureTol = 0.1;

StructureReport validate_intrinsic_structure(const IntrinsicMatrix& m,
                                             double tol_mm = kDefaultStructureTol);

/// Subset of pairs by 1-based indices (the data files' "No" column).
PointPairSet select_pairs(const PointPairSet& pairs, const std::vector<int>& one_based);

/// Complement of a 1-based index subset, order preserved.
PointPairSet exclude_pairs(const PointPairSet& pairs, const std::vector<int>& one_based);

} // namespace uscal
