#ifndef FQINC_GEOMETRY_HPP_
#define FQINC_GEOMETRY_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fqinc/field.hpp"

namespace fqinc {

using Residue = std::uint32_t;
using Coords = std::vector<Residue>;

// The ambient (q, d) context shared by points, spheres and the sets built
// from them. q^(d+1) must fit in 63 bits so that every point and sphere has
// an integer key.
class Space {
 public:
  Space(const FieldSpec& field, unsigned dim);

  const FieldSpec& field() const noexcept { return field_; }
  std::uint64_t q() const noexcept { return field_.order(); }
  unsigned dim() const noexcept { return dim_; }
  // q^d
  std::uint64_t point_count() const noexcept { return point_count_; }
  // q^(d+1): one sphere per (center, lambda) pair.
  std::uint64_t sphere_count() const noexcept { return point_count_ * field_.order(); }

  // Mixed-radix key of a coordinate vector of length d (or d+1).
  std::uint64_t encode(std::span<const Residue> coords) const noexcept;
  Coords decode(std::uint64_t key, unsigned length) const;

  friend bool operator==(const Space&, const Space&) = default;

 private:
  FieldSpec field_;
  unsigned dim_;
  std::uint64_t point_count_;
};

void require_same_space(const Space& a, const Space& b);

class Point {
 public:
  // Coordinates are reduced mod q; length must equal d.
  Point(const Space& space, std::span<const std::int64_t> coords);
  Point(const Space& space, std::initializer_list<std::int64_t> coords);
  static Point from_residues(const Space& space, Coords coords);
  static Point origin(const Space& space);

  const Space& space() const noexcept { return space_; }
  unsigned dim() const noexcept { return space_.dim(); }
  std::span<const Residue> coords() const noexcept { return coords_; }
  FieldElement coord(unsigned i) const;
  std::uint64_t key() const noexcept { return space_.encode(coords_); }

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point& a, const Point& b) { return a.key() <=> b.key(); }

 private:
  Point(const Space& space, Coords coords, int /*tag*/);

  Space space_;
  Coords coords_;
};

// The sphere S(center, lambda) = {x : ||x - center|| = lambda}. Identity is
// the parameter pair, never the point set; lambda = 0 is a sphere too.
class Sphere {
 public:
  Sphere(const Point& center, const FieldElement& lambda);

  const Point& center() const noexcept { return center_; }
  const FieldElement& lambda() const noexcept { return lambda_; }
  const Space& space() const noexcept { return center_.space(); }
  // center key * q + lambda
  std::uint64_t key() const noexcept;

  friend bool operator==(const Sphere&, const Sphere&) = default;
  friend auto operator<=>(const Sphere& a, const Sphere& b) { return a.key() <=> b.key(); }

 private:
  Point center_;
  FieldElement lambda_;
};

// A vector of F_q^k. Used for the lifted paraboloid
// A = {(a, a_1^2 + ... + a_d^2)} in F_q^(d+1) and for general sumset work.
class FqVector {
 public:
  FqVector(const FieldSpec& field, Coords coords);
  FqVector(const FieldSpec& field, std::initializer_list<std::int64_t> coords);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return coords_.size(); }
  std::span<const Residue> coords() const noexcept { return coords_; }
  bool is_zero() const noexcept;

  friend bool operator==(const FqVector&, const FqVector&) = default;
  friend bool operator<(const FqVector& a, const FqVector& b) { return a.coords_ < b.coords_; }

 private:
  FieldSpec field_;
  Coords coords_;
};

using LiftedVector = FqVector;

FqVector operator+(const FqVector& a, const FqVector& b);
FqVector operator-(const FqVector& a, const FqVector& b);

// Quadratic distance sum (x_i - y_i)^2; residue-level form for hot loops.
std::uint64_t squared_distance(const FieldSpec& field, std::span<const Residue> x,
                               std::span<const Residue> y) noexcept;
std::uint64_t squared_norm(const FieldSpec& field, std::span<const Residue> x) noexcept;

FieldElement distance(const Point& x, const Point& y);
bool sphere_contains(const Sphere& s, const Point& p);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 50'000'000;

// Materializes a sphere by scanning F_q^d in key order.
std::vector<Point> sphere_points(const Sphere& s,
                                 std::uint64_t budget = kDefaultEnumerationBudget);

// (p, sum p_i^2)
LiftedVector lift(const Point& p);
// Membership in A: last coordinate equals the sum of squares of the rest.
bool lifted_contains(const LiftedVector& v);

// d = 2 only. A triple with a repeated point counts as collinear.
bool collinear(const Point& p1, const Point& p2, const Point& p3);

// The unique circle through three distinct non-collinear points of F_q^2,
// or nullopt for collinear or repeated input. Solves the 2x2 linear system
// obtained by subtracting the first circle equation from the other two.
std::optional<Sphere> circle_through(const Point& p1, const Point& p2, const Point& p3);

// Residue-level solver behind circle_through: {a, b, lambda} for the circle
// (x - a)^2 + (y - b)^2 = lambda, or nullopt when the determinant vanishes.
std::optional<std::array<std::uint64_t, 3>> solve_circle(const FieldSpec& field,
                                                         std::span<const Residue> p1,
                                                         std::span<const Residue> p2,
                                                         std::span<const Residue> p3) noexcept;

}  // namespace fqinc

#endif  // FQINC_GEOMETRY_HPP_
