#include "g2u/geometry.hpp"

#include <cmath>

#include "g2u/errors.hpp"

namespace g2u {

StraightGeometry make_geometry(const Vec2& start_m, const Vec2& end_m,
                               double altitude_m) {
  const double dx = end_m[0] - start_m[0];
  const double dy = end_m[1] - start_m[1];
  const double length = std::hypot(dx, dy);
  if (!(length > 0.0))
    throw ConfigError("straight leg endpoints coincide; a leg needs two distinct points");

  StraightGeometry g;
  g.start_m = start_m;
  g.end_m = end_m;
  g.length_m = length;
  g.direction = {dx / length, dy / length};
  g.start_along_m = start_m[0] * g.direction[0] + start_m[1] * g.direction[1];
  const double start_norm_sq = start_m[0] * start_m[0] + start_m[1] * start_m[1];
  g.eff_height_sq_m2 =
      start_norm_sq - g.start_along_m * g.start_along_m + altitude_m * altitude_m;
  return g;
}

}  // namespace g2u
