#pragma once

#include "mvf/matrix.hpp"

#include <vector>

namespace mvf {

// An SPD matrix read as an ellipsoid: eigenvalues (ascending) are the axis
// lengths, rows of `axes` the corresponding unit axes (a rotation).
struct EllipsoidFrame {
  double t = 0.0;
  Vector eigenvalues;
  Matrix axes;
};

EllipsoidFrame ellipsoid_frame(double t, const Matrix& spd);

struct EllipsoidDemo {
  Matrix start;  // diag(9, 4, 1)
  Matrix end;    // start rotated by 90 degrees about z
  std::vector<EllipsoidFrame> rotation;    // spectral conjugation operator
  std::vector<EllipsoidFrame> riemannian;  // SPD geodesic
};

// 11 frames, t = 0, 0.1, ..., 1.
EllipsoidDemo ellipsoid_demo(std::size_t frames = 11);

}  // namespace mvf
