#pragma once

#include <string_view>
#include <vector>

#include "sscurv/geometry.hpp"

namespace sscurv {

/// Built-in geometries:
///   example1  [k1,k3] = -k1, [k2,k3] = -k2, g = id, xi = k3
///   h2xr      [e1,e2] = -e1, g = id, xi = e3 (hyperbolic plane times a line)
///   flat      abelian, g = id, xi = e3
/// Throws InputError for an unknown name.
GeometrySpec builtin(std::string_view name);

const std::vector<std::string_view>& builtin_names();

}  // namespace sscurv
