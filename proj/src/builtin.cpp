#include "sscurv/builtin.hpp"

#include "sscurv/error.hpp"

namespace sscurv {

namespace {

GeometrySpec make(std::string name, std::string label, const std::vector<BracketEntry>& brackets) {
  constexpr int kDim = 3;
  GeometrySpec spec;
  spec.name = std::move(name);
  spec.label = std::move(label);
  spec.frame = FrameAlgebra::from_brackets(kDim, brackets);
  spec.metric = MetricFrame::identity(kDim);
  spec.distinguished = DistinguishedField::from(basis_vector(kDim, 2), spec.metric);
  return spec;
}

}  // namespace

GeometrySpec builtin(std::string_view name) {
  if (name == "example1") return make("example1", "k", {{0, 2, 0, Rat(-1)}, {1, 2, 1, Rat(-1)}});
  if (name == "h2xr") return make("h2xr", "e", {{0, 1, 0, Rat(-1)}});
  if (name == "flat") return make("flat", "e", {});
  throw InputError("unknown builtin geometry '" + std::string(name) + "' (known: example1, h2xr, flat)");
}

const std::vector<std::string_view>& builtin_names() {
  static const std::vector<std::string_view> names = {"example1", "h2xr", "flat"};
  return names;
}

}  // namespace sscurv
