#ifndef FQINC_INCIDENCE_HPP_
#define FQINC_INCIDENCE_HPP_

#include <cstdint>
#include <map>
#include <set>
#include <unordered_set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fqinc/geometry.hpp"

namespace fqinc {

using BigInt = boost::multiprecision::cpp_int;

// Duplicate-free set of points of one (q, d) space, kept in insertion order.
class PointSet {
 public:
  explicit PointSet(const Space& space) : space_(space) {}
  PointSet(const Space& space, const std::vector<Point>& points);

  // Throws Error(duplicate) on a repeated point.
  void add(const Point& p);
  bool contains(const Point& p) const { return keys_.contains(p.key()); }

  const Space& space() const noexcept { return space_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  static PointSet full(const Space& space);

  // Equal as sets.
  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.space_ == b.space_ && a.keys_ == b.keys_;
  }

 private:
  Space space_;
  std::vector<Point> points_;
  std::unordered_set<std::uint64_t> keys_;
};

// Duplicate-free family of spheres keyed by (center, lambda).
class SphereFamily {
 public:
  explicit SphereFamily(const Space& space) : space_(space) {}

  void add(const Sphere& s);
  bool contains(const Sphere& s) const { return keys_.contains(s.key()); }

  const Space& space() const noexcept { return space_; }
  std::size_t size() const noexcept { return spheres_.size(); }
  bool empty() const noexcept { return spheres_.empty(); }
  const Sphere& operator[](std::size_t i) const { return spheres_[i]; }
  auto begin() const noexcept { return spheres_.begin(); }
  auto end() const noexcept { return spheres_.end(); }

  // All q^(d+1) spheres in key order.
  static SphereFamily all(const Space& space);

  friend bool operator==(const SphereFamily& a, const SphereFamily& b) {
    return a.space_ == b.space_ && a.keys_ == b.keys_;
  }

 private:
  Space space_;
  std::vector<Sphere> spheres_;
  std::unordered_set<std::uint64_t> keys_;
};

// Duplicate-free subset of F_q^k.
class VectorSet {
 public:
  VectorSet(const FieldSpec& field, unsigned dim) : field_(field), dim_(dim) {}

  void add(const FqVector& v);
  bool contains(const FqVector& v) const { return keys_.contains(v); }

  const FieldSpec& field() const noexcept { return field_; }
  unsigned dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return vectors_.size(); }
  auto begin() const noexcept { return vectors_.begin(); }
  auto end() const noexcept { return vectors_.end(); }

  // The whole group F_q^k.
  static VectorSet full(const FieldSpec& field, unsigned dim);

 private:
  FieldSpec field_;
  unsigned dim_;
  std::vector<FqVector> vectors_;
  std::set<FqVector> keys_;
};

// B = {(p, 0) : p in P}
VectorSet lift_points(const PointSet& points);
// C = {(center, -lambda) : S(center, lambda) in S}
VectorSet lift_spheres(const SphereFamily& spheres);
// The paraboloid A = {lift(a) : a in F_q^d}
VectorSet paraboloid(const Space& space);

enum class Engine { naive, bucketed, lifted };

// I(P, S) = |{(p, s) : p on s}|. All engines are exact and agree.
//   naive    every (p, s) pair
//   bucketed spheres grouped by center; one distance histogram per center
//   lifted   |{(b, c) in B x C : b - c in A}| over the lifted sets
std::uint64_t count_incidences(const PointSet& points, const SphereFamily& spheres,
                               Engine engine);

// |{(b, c) in B x C : b - c in A}| for arbitrary B, C in F_q^(d+1).
std::uint64_t lifted_pair_count(const VectorSet& b, const VectorSet& c);

// Sparse r_{A+B} (or r_{A-B}); only positive counts are stored, in
// lexicographic order of the vector.
class RepFunction {
 public:
  RepFunction(const FieldSpec& field, unsigned dim) : field_(field), dim_(dim) {}

  void bump(const FqVector& x) { ++counts_[x]; }
  std::uint64_t at(const FqVector& x) const;
  std::uint64_t total() const;
  std::size_t support_size() const noexcept { return counts_.size(); }

  const FieldSpec& field() const noexcept { return field_; }
  unsigned dim() const noexcept { return dim_; }
  auto begin() const noexcept { return counts_.begin(); }
  auto end() const noexcept { return counts_.end(); }

 private:
  FieldSpec field_;
  unsigned dim_;
  std::map<FqVector, std::uint64_t> counts_;
};

RepFunction rep_sum(const VectorSet& a, const VectorSet& b);
RepFunction rep_diff(const VectorSet& a, const VectorSet& b);

enum class EnergySide { lhs, rhs };

// lhs: sum_x r_{A+B}(x)^2; rhs: sum_x r_{A-A}(x) r_{B-B}(x).
BigInt additive_energy(const VectorSet& a, const VectorSet& b, EnergySide side);

enum class DiffMode { closed, brute };

// r_{A-A}(x) for the paraboloid A in F_q^(d+1), d = x.size() - 1.
// closed: q^d at 0, 0 on the vertical axis x = (0, ..., 0, t != 0), and
// q^(d-1) elsewhere.
std::uint64_t lifted_diff_count(const FqVector& x, DiffMode mode);

}  // namespace fqinc

#endif  // FQINC_INCIDENCE_HPP_
