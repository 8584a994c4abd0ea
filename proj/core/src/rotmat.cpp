#include "rotfuse/rotmat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rotfuse/error.hpp"

namespace rotfuse {

RotMatValidation validate(const RotMat& r, double tol) {
  RotMatValidation v;
  for (double e : r.m)
    if (!std::isfinite(e)) {
      v.ortho_residual = v.det_error = std::numeric_limits<double>::infinity();
      return v;
    }

  const RotMat g = r.transposed() * r;
  double res = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      res = std::max(res, std::abs(g(i, j) - (i == j ? 1.0 : 0.0)));
  v.ortho_residual = res;

  const double det = r(0, 0) * (r(1, 1) * r(2, 2) - r(1, 2) * r(2, 1)) -
                     r(0, 1) * (r(1, 0) * r(2, 2) - r(1, 2) * r(2, 0)) +
                     r(0, 2) * (r(1, 0) * r(2, 1) - r(1, 1) * r(2, 0));
  v.det_error = std::abs(det - 1.0);

  v.ok = v.ortho_residual <= tol && v.det_error <= tol;
  return v;
}

void require_valid(const RotMat& r, double tol) {
  const RotMatValidation v = validate(r, tol);
  if (!v.ok)
    throw DomainError("matrix is not a rotation: orthogonality residual " +
                      std::to_string(v.ortho_residual) + ", det error " +
                      std::to_string(v.det_error));
}

}  // namespace rotfuse
