#include "fqinc/incidence.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "fqinc/error.hpp"

namespace fqinc {

PointSet::PointSet(const Space& space, const std::vector<Point>& points) : space_(space) {
  for (const Point& p : points) add(p);
}

void PointSet::add(const Point& p) {
  require_same_space(space_, p.space());
  if (!keys_.insert(p.key()).second) {
    throw Error(ErrorCode::duplicate, "duplicate point in point set");
  }
  points_.push_back(p);
}

PointSet PointSet::full(const Space& space) {
  PointSet out(space);
  out.points_.reserve(space.point_count());
  for (std::uint64_t key = 0; key < space.point_count(); ++key) {
    out.add(Point::from_residues(space, space.decode(key, space.dim())));
  }
  return out;
}

void SphereFamily::add(const Sphere& s) {
  require_same_space(space_, s.space());
  if (!keys_.insert(s.key()).second) {
    throw Error(ErrorCode::duplicate, "duplicate sphere in family");
  }
  spheres_.push_back(s);
}

SphereFamily SphereFamily::all(const Space& space) {
  SphereFamily out(space);
  out.spheres_.reserve(space.sphere_count());
  for (std::uint64_t c = 0; c < space.point_count(); ++c) {
    Point center = Point::from_residues(space, space.decode(c, space.dim()));
    for (std::uint64_t lambda = 0; lambda < space.q(); ++lambda) {
      out.add(Sphere(center, FieldElement(space.field(), lambda)));
    }
  }
  return out;
}

void VectorSet::add(const FqVector& v) {
  if (v.field() != field_ || v.size() != dim_) {
    throw Error(ErrorCode::context_mismatch, "vector of dimension " + std::to_string(v.size()) +
                                                 " added to a set in dimension " +
                                                 std::to_string(dim_));
  }
  if (!keys_.insert(v).second) {
    throw Error(ErrorCode::duplicate, "duplicate vector in set");
  }
  vectors_.push_back(v);
}

VectorSet VectorSet::full(const FieldSpec& field, unsigned dim) {
  Space ambient(field, dim);
  VectorSet out(field, dim);
  for (std::uint64_t key = 0; key < ambient.point_count(); ++key) {
    out.add(FqVector(field, ambient.decode(key, dim)));
  }
  return out;
}

VectorSet lift_points(const PointSet& points) {
  const Space& space = points.space();
  VectorSet out(space.field(), space.dim() + 1);
  for (const Point& p : points) {
    Coords c(p.coords().begin(), p.coords().end());
    c.push_back(0);
    out.add(FqVector(space.field(), std::move(c)));
  }
  return out;
}

VectorSet lift_spheres(const SphereFamily& spheres) {
  const Space& space = spheres.space();
  VectorSet out(space.field(), space.dim() + 1);
  for (const Sphere& s : spheres) {
    Coords c(s.center().coords().begin(), s.center().coords().end());
    c.push_back(static_cast<Residue>(space.field().neg(s.lambda().value())));
    out.add(FqVector(space.field(), std::move(c)));
  }
  return out;
}

VectorSet paraboloid(const Space& space) {
  VectorSet out(space.field(), space.dim() + 1);
  for (std::uint64_t key = 0; key < space.point_count(); ++key) {
    out.add(lift(Point::from_residues(space, space.decode(key, space.dim()))));
  }
  return out;
}

namespace {

std::uint64_t count_naive(const PointSet& points, const SphereFamily& spheres) {
  const FieldSpec& field = points.space().field();
  std::uint64_t total = 0;
  for (const Point& p : points) {
    for (const Sphere& s : spheres) {
      if (squared_distance(field, p.coords(), s.center().coords()) == s.lambda().value()) {
        ++total;
      }
    }
  }
  return total;
}

std::uint64_t count_bucketed(const PointSet& points, const SphereFamily& spheres) {
  const FieldSpec& field = points.space().field();
  // center key -> lambdas on that center, first-seen order
  std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> by_center;
  std::vector<const Point*> centers;
  for (const Sphere& s : spheres) {
    auto [it, fresh] = by_center.try_emplace(s.center().key());
    if (fresh) centers.push_back(&s.center());
    it->second.push_back(s.lambda().value());
  }
  std::vector<std::uint64_t> histogram(field.order());
  std::uint64_t total = 0;
  for (const Point* center : centers) {
    std::fill(histogram.begin(), histogram.end(), 0);
    for (const Point& p : points) {
      ++histogram[squared_distance(field, p.coords(), center->coords())];
    }
    for (std::uint64_t lambda : by_center.at(center->key())) total += histogram[lambda];
  }
  return total;
}

}  // namespace

std::uint64_t lifted_pair_count(const VectorSet& b, const VectorSet& c) {
  if (b.field() != c.field() || b.dim() != c.dim()) {
    throw Error(ErrorCode::context_mismatch, "lifted sets live in different groups");
  }
  const FieldSpec& field = b.field();
  const unsigned k = b.dim();
  Coords diff(k);
  std::uint64_t total = 0;
  for (const FqVector& bv : b) {
    for (const FqVector& cv : c) {
      for (unsigned i = 0; i < k; ++i) {
        diff[i] = static_cast<Residue>(field.sub(bv.coords()[i], cv.coords()[i]));
      }
      std::span<const Residue> dv(diff);
      if (squared_norm(field, dv.first(k - 1)) == dv.back()) ++total;
    }
  }
  return total;
}

std::uint64_t count_incidences(const PointSet& points, const SphereFamily& spheres,
                               Engine engine) {
  require_same_space(points.space(), spheres.space());
  if (points.empty() || spheres.empty()) return 0;
  switch (engine) {
    case Engine::naive:
      return count_naive(points, spheres);
    case Engine::bucketed:
      return count_bucketed(points, spheres);
    case Engine::lifted:
      return lifted_pair_count(lift_points(points), lift_spheres(spheres));
  }
  throw Error(ErrorCode::invalid_argument, "unknown incidence engine");
}

std::uint64_t RepFunction::at(const FqVector& x) const {
  auto it = counts_.find(x);
  return it == counts_.end() ? 0 : it->second;
}

std::uint64_t RepFunction::total() const {
  std::uint64_t sum = 0;
  for (const auto& [x, n] : counts_) sum += n;
  return sum;
}

namespace {

void require_same_group(const VectorSet& a, const VectorSet& b) {
  if (a.field() != b.field() || a.dim() != b.dim()) {
    throw Error(ErrorCode::context_mismatch,
                "sets live in F_" + std::to_string(a.field().order()) + "^" +
                    std::to_string(a.dim()) + " and F_" + std::to_string(b.field().order()) +
                    "^" + std::to_string(b.dim()));
  }
}

}  // namespace

RepFunction rep_sum(const VectorSet& a, const VectorSet& b) {
  require_same_group(a, b);
  RepFunction r(a.field(), a.dim());
  for (const FqVector& x : a) {
    for (const FqVector& y : b) r.bump(x + y);
  }
  return r;
}

RepFunction rep_diff(const VectorSet& a, const VectorSet& b) {
  require_same_group(a, b);
  RepFunction r(a.field(), a.dim());
  for (const FqVector& x : a) {
    for (const FqVector& y : b) r.bump(x - y);
  }
  return r;
}

BigInt additive_energy(const VectorSet& a, const VectorSet& b, EnergySide side) {
  require_same_group(a, b);
  BigInt energy = 0;
  if (side == EnergySide::lhs) {
    for (const auto& [x, n] : rep_sum(a, b)) energy += BigInt(n) * n;
    return energy;
  }
  RepFunction raa = rep_diff(a, a);
  RepFunction rbb = rep_diff(b, b);
  for (const auto& [x, n] : raa) {
    std::uint64_t m = rbb.at(x);
    if (m != 0) energy += BigInt(n) * m;
  }
  return energy;
}

std::uint64_t lifted_diff_count(const FqVector& x, DiffMode mode) {
  if (x.size() < 2) {
    throw Error(ErrorCode::invalid_argument, "lifted vectors have at least 2 coordinates");
  }
  const unsigned d = static_cast<unsigned>(x.size() - 1);
  Space space(x.field(), d);
  if (mode == DiffMode::closed) {
    if (x.is_zero()) return space.point_count();
    auto c = x.coords();
    for (unsigned i = 0; i < d; ++i) {
      if (c[i] != 0) return space.point_count() / space.q();
    }
    return 0;
  }
  // a ranges over A; b = a - x must also lie in A.
  const FieldSpec& field = x.field();
  std::uint64_t total = 0;
  Coords b(d + 1);
  for (std::uint64_t key = 0; key < space.point_count(); ++key) {
    Coords a = space.decode(key, d);
    a.push_back(static_cast<Residue>(squared_norm(field, a)));
    for (unsigned i = 0; i <= d; ++i) {
      b[i] = static_cast<Residue>(field.sub(a[i], x.coords()[i]));
    }
    std::span<const Residue> bv(b);
    if (squared_norm(field, bv.first(d)) == bv.back()) ++total;
  }
  return total;
}

}  // namespace fqinc
