#ifndef FQINC_IO_HPP_
#define FQINC_IO_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include "fqinc/incidence.hpp"

namespace fqinc {

// Flat text format:
//
//   q=5 d=2 kind=points
//   1 2        # one object per line, canonical residues
//   4 0
//
// Spheres carry d + 1 values: center coordinates, then lambda. `#` starts a
// comment; blank lines are ignored.
using ObjectFile = std::variant<PointSet, SphereFamily>;

// When `expected` is set, the header must name the same (q, d).
ObjectFile read_objects(std::istream& in, const std::optional<Space>& expected = std::nullopt,
                        const std::string& source = "<input>");
ObjectFile read_file(const std::string& path, const std::optional<Space>& expected = std::nullopt);

PointSet read_points_file(const std::string& path,
                          const std::optional<Space>& expected = std::nullopt);
SphereFamily read_spheres_file(const std::string& path,
                               const std::optional<Space>& expected = std::nullopt);

void write_points(std::ostream& out, const PointSet& points);
void write_spheres(std::ostream& out, const SphereFamily& spheres);
void write_file(const std::string& path, const ObjectFile& objects);

}  // namespace fqinc

#endif  // FQINC_IO_HPP_
