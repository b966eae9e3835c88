// Copyright (c) 2026 timesift contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <string>
#include <vector>

namespace timesift {

// Frame camera interior orientation: focal and principal point in pixels,
// Brown-style radial (k1..k4) and tangential (p1, p2) distortion applied in
// normalized coordinates, plus affinity terms b1, b2 acting on the row
// coordinate. With all distortion and affinity terms zero this is a pinhole.
struct CameraIntrinsics {
  double f = 1.0;
  double cx = 0.0, cy = 0.0;  // principal point offset from the image center
  double b1 = 0.0, b2 = 0.0;
  double k1 = 0.0, k2 = 0.0, k3 = 0.0, k4 = 0.0;
  double p1 = 0.0, p2 = 0.0;
  int sensor_width = 1;
  int sensor_height = 1;

  // Geometric image center in pixel-center coordinates.
  double center_u() const { return 0.5 * (sensor_width - 1); }
  double center_v() const { return 0.5 * (sensor_height - 1); }

  void validate() const;  // throws InvalidArgumentError
};

// Parameter vector layout shared by the adjuster and the Jacobian code.
enum IntrinsicsParam {
  kParamF = 0,
  kParamCx,
  kParamCy,
  kParamB1,
  kParamB2,
  kParamK1,
  kParamK2,
  kParamK3,
  kParamK4,
  kParamP1,
  kParamP2,
  kIntrinsicsParamCount
};

using IntrinsicsVector = Eigen::Matrix<double, kIntrinsicsParamCount, 1>;

IntrinsicsVector intrinsics_to_vector(const CameraIntrinsics& intr);
void vector_to_intrinsics(const IntrinsicsVector& v, CameraIntrinsics& intr);

// Exterior orientation. rotation maps world directions into the camera frame;
// the camera looks along +z, x right, y down.
struct CameraPose {
  Eigen::Vector3d center = Eigen::Vector3d::Zero();
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();

  void validate(double tol = 1e-9) const;  // orthonormal, det +1
};

// Rodrigues exponential map for axis-angle increments.
Eigen::Matrix3d so3_exp(const Eigen::Vector3d& w);

struct ProjectionJacobians {
  Eigen::Matrix<double, 2, 3> d_point;
  // Pose columns: rotation increment (left-multiplied in the camera frame),
  // then camera center.
  Eigen::Matrix<double, 2, 6> d_pose;
  Eigen::Matrix<double, 2, kIntrinsicsParamCount> d_intrinsics;
};

// Projects a ground point; throws BehindCameraError for non-positive depth.
// Pass jac to also get analytic derivatives.
Eigen::Vector2d project(const CameraIntrinsics& intr, const CameraPose& pose,
                        const Eigen::Vector3d& point, ProjectionJacobians* jac = nullptr);

struct Ray {
  Eigen::Vector3d origin;
  Eigen::Vector3d direction;  // unit length

  Eigen::Vector3d point_at(double t) const { return origin + t * direction; }
};

// Inverts the projection for one pixel. Distortion is inverted by fixed-point
// iteration; non-convergence after 50 rounds throws DistortionInversionError.
Ray backproject_ray(const CameraIntrinsics& intr, const CameraPose& pose,
                    const Eigen::Vector2d& pixel);

struct TriangulationObservation {
  CameraIntrinsics intrinsics;
  CameraPose pose;
  Eigen::Vector2d pixel;
};

struct TriangulationResult {
  Eigen::Vector3d point;
  double rmse_px = 0.0;
};

// Least-squares intersection of >= 2 observation rays, refined on reprojection
// error. Parallel rays (within 1e-8 rad) throw DegenerateGeometryError.
TriangulationResult triangulate(const std::vector<TriangulationObservation>& observations);

// Focal in pixels from lens focal length and film scan pitch.
double focal_pixels(double focal_mm, double scan_pitch_um);

// Text table IO: one record per camera model, all interior parameters.
struct NamedIntrinsics {
  std::string label;
  CameraIntrinsics intrinsics;
};

void write_camera_file(const std::filesystem::path& path,
                       const std::vector<NamedIntrinsics>& cameras);
std::vector<NamedIntrinsics> read_camera_file(const std::filesystem::path& path);

}  // namespace timesift
