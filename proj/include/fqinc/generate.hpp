#ifndef FQINC_GENERATE_HPP_
#define FQINC_GENERATE_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "fqinc/incidence.hpp"

namespace fqinc {

namespace shape {
struct Random {
  std::uint64_t n;
};
struct Full {};
// q points on a seed-chosen line (d = 2).
struct Line {};
// n points of a seed-chosen circle with nonzero radius (d = 2).
struct CircleSubset {
  std::uint64_t n;
};
// {(i, j, 0, ..., 0) : i < a, j < b}; needs d >= 2.
struct Grid {
  std::uint64_t a;
  std::uint64_t b;
};
}  // namespace shape

using GeneratorShape =
    std::variant<shape::Random, shape::Full, shape::Line, shape::CircleSubset, shape::Grid>;

// "random:N", "full", "line", "circle:N", "grid:AxB".
GeneratorShape parse_shape(std::string_view text);
std::string to_string(const GeneratorShape& s);

// Deterministic in (space, seed, shape). Points come out in key order.
PointSet generate(const Space& space, std::uint64_t seed, const GeneratorShape& shape);

// n distinct spheres drawn uniformly, in key order.
SphereFamily random_spheres(const Space& space, std::uint64_t seed, std::uint64_t n);

}  // namespace fqinc

#endif  // FQINC_GENERATE_HPP_
