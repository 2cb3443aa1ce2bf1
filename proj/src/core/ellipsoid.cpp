#include "mvf/ellipsoid.hpp"

#include "mvf/decompositions.hpp"
#include "mvf/geodesic.hpp"
#include "mvf/product_operators.hpp"

namespace mvf {

EllipsoidFrame ellipsoid_frame(double t, const Matrix& spd) {
  const Factorization f = spectral_sorted(spd);
  return {t, f.factors[1].matrix.diagonal(), f.factors[2].matrix};
}

EllipsoidDemo ellipsoid_demo(std::size_t frames) {
  EllipsoidDemo demo;
  demo.start = Vector((Vector(3) << 9.0, 4.0, 1.0).finished()).asDiagonal();
  Matrix r(3, 3);
  r << 0, -1, 0,
       1, 0, 0,
       0, 0, 1;
  demo.end = r.transpose() * demo.start * r;

  const ParamSamples samples({0.0, 1.0}, {demo.start, demo.end}, ClassTag::SPD);
  const Curve rotation = spectral_conjugation_operator(OperatorSpec::geodesic_piecewise(),
                                                       OperatorSpec::geodesic_piecewise(), samples);
  const Geodesic riemannian = geodesic(ClassTag::SPD, demo.start, demo.end);
  for (double t : uniform_grid(0.0, 1.0, frames)) {
    demo.rotation.push_back(ellipsoid_frame(t, rotation(t)));
    demo.riemannian.push_back(ellipsoid_frame(t, riemannian(t)));
  }
  return demo;
}

}  // namespace mvf
