#pragma once

#include "g2u/params.hpp"

namespace g2u {

// Derived constants of a straight constant-speed leg from start_m to end_m,
// with the ground terminal at the origin. Along-track coordinates z run from
// start_along_m at the start to start_along_m + length_m at the end; z = 0 is
// the point of closest horizontal approach to the terminal.
struct StraightGeometry {
  Vec2 start_m;
  Vec2 end_m;
  double length_m;          // leg length D
  Vec2 direction;           // unit vector from start to end
  double start_along_m;     // along-track coordinate of the start
  double eff_height_sq_m2;  // altitude^2 plus squared cross-track offset of the terminal
};

// Throws ConfigError when the endpoints coincide.
StraightGeometry make_geometry(const Vec2& start_m, const Vec2& end_m,
                               double altitude_m);

}  // namespace g2u
