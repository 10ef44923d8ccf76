#include "fqinc/fqinc.h"

#include <cstring>
#include <new>
#include <string>

#include "fqinc/error.hpp"
#include "fqinc/generate.hpp"
#include "fqinc/io.hpp"
#include "fqinc/report_json.hpp"
#include "fqinc/sweeps.hpp"
#include "fqinc/theorems.hpp"

struct fqinc_space {
  fqinc::Space value;
};

struct fqinc_point_set {
  fqinc::PointSet value;
};

struct fqinc_sphere_family {
  fqinc::SphereFamily value;
};

struct fqinc_report {
  fqinc::Verdict verdict;
  std::string json;
};

namespace {

thread_local std::string last_error;

fqinc_status status_of(fqinc::ErrorCode code) {
  using fqinc::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument:
      return FQINC_ERR_INVALID_ARGUMENT;
    case ErrorCode::context_mismatch:
      return FQINC_ERR_CONTEXT_MISMATCH;
    case ErrorCode::budget_exceeded:
      return FQINC_ERR_BUDGET_EXCEEDED;
    case ErrorCode::parse_error:
      return FQINC_ERR_PARSE;
    case ErrorCode::io_error:
      return FQINC_ERR_IO;
    case ErrorCode::duplicate:
      return FQINC_ERR_DUPLICATE;
  }
  return FQINC_ERR_INTERNAL;
}

fqinc_status fail(fqinc_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
fqinc_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return FQINC_OK;
  } catch (const fqinc::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(FQINC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(FQINC_ERR_INTERNAL, e.what());
  }
}

#define FQINC_REQUIRE(ptr)                                                  \
  do {                                                                      \
    if ((ptr) == nullptr) return fail(FQINC_ERR_NULL_ARGUMENT, #ptr " is NULL"); \
  } while (0)

fqinc::Engine engine_of(fqinc_engine e) {
  switch (e) {
    case FQINC_ENGINE_NAIVE:
      return fqinc::Engine::naive;
    case FQINC_ENGINE_BUCKETED:
      return fqinc::Engine::bucketed;
    case FQINC_ENGINE_LIFTED:
      return fqinc::Engine::lifted;
  }
  throw fqinc::Error(fqinc::ErrorCode::invalid_argument, "unknown engine");
}

fqinc::Coords residues(const fqinc::Space& space, const uint64_t* coords, size_t n) {
  if (n != space.dim()) {
    throw fqinc::Error(fqinc::ErrorCode::invalid_argument,
                       "expected " + std::to_string(space.dim()) + " coordinates, got " +
                           std::to_string(n));
  }
  fqinc::Coords out;
  for (size_t i = 0; i < n; ++i) {
    if (coords[i] >= space.q()) {
      throw fqinc::Error(fqinc::ErrorCode::invalid_argument,
                         "coordinate " + std::to_string(coords[i]) + " out of range for q=" +
                             std::to_string(space.q()));
    }
    out.push_back(static_cast<fqinc::Residue>(coords[i]));
  }
  return out;
}

fqinc::Rational checked_rational(int64_t num, int64_t den) {
  fqinc::Rational r{num, den};
  if (!r.in_open_unit_interval()) {
    throw fqinc::Error(fqinc::ErrorCode::invalid_argument,
                       "parameter " + std::to_string(num) + "/" + std::to_string(den) +
                           " must lie strictly between 0 and 1");
  }
  return r;
}

template <typename Report>
fqinc_report* make_report(const Report& r) {
  return new fqinc_report{r.verdict(), fqinc::to_json(r).dump()};
}

}  // namespace

extern "C" {

const char* fqinc_last_error(void) { return last_error.c_str(); }

const char* fqinc_status_name(fqinc_status status) {
  switch (status) {
    case FQINC_OK:
      return "ok";
    case FQINC_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case FQINC_ERR_CONTEXT_MISMATCH:
      return "context mismatch";
    case FQINC_ERR_BUDGET_EXCEEDED:
      return "budget exceeded";
    case FQINC_ERR_PARSE:
      return "parse error";
    case FQINC_ERR_IO:
      return "i/o error";
    case FQINC_ERR_DUPLICATE:
      return "duplicate";
    case FQINC_ERR_BUFFER_TOO_SMALL:
      return "buffer too small";
    case FQINC_ERR_NULL_ARGUMENT:
      return "null argument";
    case FQINC_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* fqinc_version(void) { return "1.0.0"; }

fqinc_status fqinc_parse_rational(const char* text, int64_t* num, int64_t* den) {
  FQINC_REQUIRE(text);
  FQINC_REQUIRE(num);
  FQINC_REQUIRE(den);
  return guarded([&] {
    fqinc::Rational r = fqinc::Rational::parse(text);
    *num = r.num;
    *den = r.den;
  });
}

fqinc_status fqinc_space_create(uint64_t q, uint32_t d, fqinc_space** out) {
  FQINC_REQUIRE(out);
  return guarded([&] { *out = new fqinc_space{fqinc::Space(fqinc::FieldSpec(q), d)}; });
}

void fqinc_space_destroy(fqinc_space* space) { delete space; }

uint64_t fqinc_space_q(const fqinc_space* space) { return space ? space->value.q() : 0; }

uint32_t fqinc_space_d(const fqinc_space* space) { return space ? space->value.dim() : 0; }

fqinc_status fqinc_point_set_create(const fqinc_space* space, fqinc_point_set** out) {
  FQINC_REQUIRE(space);
  FQINC_REQUIRE(out);
  return guarded([&] { *out = new fqinc_point_set{fqinc::PointSet(space->value)}; });
}

fqinc_status fqinc_point_set_add(fqinc_point_set* set, const uint64_t* coords, size_t n) {
  FQINC_REQUIRE(set);
  FQINC_REQUIRE(coords);
  return guarded([&] {
    const fqinc::Space& space = set->value.space();
    set->value.add(fqinc::Point::from_residues(space, residues(space, coords, n)));
  });
}

size_t fqinc_point_set_size(const fqinc_point_set* set) { return set ? set->value.size() : 0; }

fqinc_status fqinc_point_set_get(const fqinc_point_set* set, size_t index, uint64_t* coords,
                                 size_t n) {
  FQINC_REQUIRE(set);
  FQINC_REQUIRE(coords);
  if (index >= set->value.size()) {
    return fail(FQINC_ERR_INVALID_ARGUMENT, "point index " + std::to_string(index) + " out of range");
  }
  const auto c = set->value[index].coords();
  if (n < c.size()) return fail(FQINC_ERR_BUFFER_TOO_SMALL, "coordinate buffer too small");
  for (size_t i = 0; i < c.size(); ++i) coords[i] = c[i];
  last_error.clear();
  return FQINC_OK;
}

fqinc_status fqinc_point_set_generate(const fqinc_space* space, const char* shape, uint64_t seed,
                                      fqinc_point_set** out) {
  FQINC_REQUIRE(space);
  FQINC_REQUIRE(shape);
  FQINC_REQUIRE(out);
  return guarded([&] {
    *out = new fqinc_point_set{fqinc::generate(space->value, seed, fqinc::parse_shape(shape))};
  });
}

fqinc_status fqinc_point_set_read(const char* path, const fqinc_space* expected,
                                  fqinc_point_set** out) {
  FQINC_REQUIRE(path);
  FQINC_REQUIRE(out);
  return guarded([&] {
    std::optional<fqinc::Space> want;
    if (expected) want = expected->value;
    *out = new fqinc_point_set{fqinc::read_points_file(path, want)};
  });
}

fqinc_status fqinc_point_set_write(const fqinc_point_set* set, const char* path) {
  FQINC_REQUIRE(set);
  FQINC_REQUIRE(path);
  return guarded([&] { fqinc::write_file(path, set->value); });
}

fqinc_status fqinc_point_set_space(const fqinc_point_set* set, fqinc_space** out) {
  FQINC_REQUIRE(set);
  FQINC_REQUIRE(out);
  return guarded([&] { *out = new fqinc_space{set->value.space()}; });
}

void fqinc_point_set_destroy(fqinc_point_set* set) { delete set; }

fqinc_status fqinc_sphere_family_create(const fqinc_space* space, fqinc_sphere_family** out) {
  FQINC_REQUIRE(space);
  FQINC_REQUIRE(out);
  return guarded([&] { *out = new fqinc_sphere_family{fqinc::SphereFamily(space->value)}; });
}

fqinc_status fqinc_sphere_family_add(fqinc_sphere_family* family, const uint64_t* center, size_t n,
                                     uint64_t lambda) {
  FQINC_REQUIRE(family);
  FQINC_REQUIRE(center);
  return guarded([&] {
    const fqinc::Space& space = family->value.space();
    if (lambda >= space.q()) {
      throw fqinc::Error(fqinc::ErrorCode::invalid_argument,
                         "lambda " + std::to_string(lambda) + " out of range");
    }
    fqinc::Point c = fqinc::Point::from_residues(space, residues(space, center, n));
    family->value.add(fqinc::Sphere(c, fqinc::FieldElement(space.field(), lambda)));
  });
}

size_t fqinc_sphere_family_size(const fqinc_sphere_family* family) {
  return family ? family->value.size() : 0;
}

fqinc_status fqinc_sphere_family_get(const fqinc_sphere_family* family, size_t index,
                                     uint64_t* center, size_t n, uint64_t* lambda) {
  FQINC_REQUIRE(family);
  FQINC_REQUIRE(center);
  FQINC_REQUIRE(lambda);
  if (index >= family->value.size()) {
    return fail(FQINC_ERR_INVALID_ARGUMENT, "sphere index " + std::to_string(index) + " out of range");
  }
  const fqinc::Sphere& s = family->value[index];
  const auto c = s.center().coords();
  if (n < c.size()) return fail(FQINC_ERR_BUFFER_TOO_SMALL, "coordinate buffer too small");
  for (size_t i = 0; i < c.size(); ++i) center[i] = c[i];
  *lambda = s.lambda().value();
  last_error.clear();
  return FQINC_OK;
}

fqinc_status fqinc_sphere_family_all(const fqinc_space* space, fqinc_sphere_family** out) {
  FQINC_REQUIRE(space);
  FQINC_REQUIRE(out);
  return guarded([&] { *out = new fqinc_sphere_family{fqinc::SphereFamily::all(space->value)}; });
}

fqinc_status fqinc_sphere_family_random(const fqinc_space* space, uint64_t count, uint64_t seed,
                                        fqinc_sphere_family** out) {
  FQINC_REQUIRE(space);
  FQINC_REQUIRE(out);
  return guarded(
      [&] { *out = new fqinc_sphere_family{fqinc::random_spheres(space->value, seed, count)}; });
}

fqinc_status fqinc_sphere_family_read(const char* path, const fqinc_space* expected,
                                      fqinc_sphere_family** out) {
  FQINC_REQUIRE(path);
  FQINC_REQUIRE(out);
  return guarded([&] {
    std::optional<fqinc::Space> want;
    if (expected) want = expected->value;
    *out = new fqinc_sphere_family{fqinc::read_spheres_file(path, want)};
  });
}

fqinc_status fqinc_sphere_family_write(const fqinc_sphere_family* family, const char* path) {
  FQINC_REQUIRE(family);
  FQINC_REQUIRE(path);
  return guarded([&] { fqinc::write_file(path, family->value); });
}

void fqinc_sphere_family_destroy(fqinc_sphere_family* family) { delete family; }

fqinc_status fqinc_count_incidences(const fqinc_point_set* points,
                                    const fqinc_sphere_family* spheres, fqinc_engine engine,
                                    uint64_t* out) {
  FQINC_REQUIRE(points);
  FQINC_REQUIRE(spheres);
  FQINC_REQUIRE(out);
  return guarded(
      [&] { *out = fqinc::count_incidences(points->value, spheres->value, engine_of(engine)); });
}

fqinc_status fqinc_pinned_cover(const fqinc_point_set* points, const uint64_t* pin, size_t n,
                                fqinc_sphere_family** out) {
  FQINC_REQUIRE(points);
  FQINC_REQUIRE(pin);
  FQINC_REQUIRE(out);
  return guarded([&] {
    const fqinc::Space& space = points->value.space();
    fqinc::Point p = fqinc::Point::from_residues(space, residues(space, pin, n));
    *out = new fqinc_sphere_family{fqinc::pinned_cover(points->value, p)};
  });
}

fqinc_status fqinc_determined_circles(const fqinc_point_set* points, fqinc_sphere_family** out) {
  FQINC_REQUIRE(points);
  FQINC_REQUIRE(out);
  return guarded(
      [&] { *out = new fqinc_sphere_family{fqinc::determined_circles(points->value)}; });
}

fqinc_status fqinc_rich_circles(const fqinc_point_set* points, uint64_t min_points,
                                fqinc_sphere_family** out) {
  FQINC_REQUIRE(points);
  FQINC_REQUIRE(out);
  return guarded(
      [&] { *out = new fqinc_sphere_family{fqinc::rich_circles(points->value, min_points)}; });
}

fqinc_status fqinc_check_main(const fqinc_point_set* points, const fqinc_sphere_family* spheres,
                              fqinc_engine engine, fqinc_report** out) {
  FQINC_REQUIRE(points);
  FQINC_REQUIRE(spheres);
  FQINC_REQUIRE(out);
  return guarded([&] {
    fqinc::IncidenceReport r = fqinc::check_main(points->value, spheres->value, engine_of(engine));
    *out = new fqinc_report{r.status, fqinc::to_json(r).dump()};
  });
}

fqinc_status fqinc_check_pinned_average(const fqinc_point_set* points, int64_t num, int64_t den,
                                        fqinc_report** out) {
  FQINC_REQUIRE(points);
  FQINC_REQUIRE(out);
  return guarded([&] {
    auto r = fqinc::check_pinned_average(points->value, checked_rational(num, den));
    *out = new fqinc_report{r.verdict(), fqinc::to_json(r, points->value).dump()};
  });
}

fqinc_status fqinc_check_pinned_fraction(const fqinc_point_set* points, int64_t num, int64_t den,
                                         fqinc_report** out) {
  FQINC_REQUIRE(points);
  FQINC_REQUIRE(out);
  return guarded([&] {
    auto r = fqinc::check_pinned_fraction(points->value, checked_rational(num, den));
    *out = new fqinc_report{r.verdict(), fqinc::to_json(r, points->value).dump()};
  });
}

fqinc_status fqinc_check_beck(const fqinc_point_set* points, fqinc_report** out) {
  FQINC_REQUIRE(points);
  FQINC_REQUIRE(out);
  return guarded([&] { *out = make_report(fqinc::check_beck(points->value)); });
}

fqinc_status fqinc_sweep_lifted_diff(const fqinc_space* space, fqinc_report** out) {
  FQINC_REQUIRE(space);
  FQINC_REQUIRE(out);
  return guarded([&] { *out = make_report(fqinc::sweep_lifted_diff(space->value)); });
}

fqinc_status fqinc_run_identity_trials(const fqinc_space* space, uint64_t trials, uint64_t seed,
                                       fqinc_report** out) {
  FQINC_REQUIRE(space);
  FQINC_REQUIRE(out);
  return guarded([&] {
    *out = make_report(
        fqinc::run_identity_trials(space->value.field(), space->value.dim(), trials, seed));
  });
}

fqinc_verdict fqinc_report_verdict(const fqinc_report* report) {
  if (!report) return FQINC_VERDICT_VIOLATED;
  switch (report->verdict) {
    case fqinc::Verdict::holds:
      return FQINC_VERDICT_HOLDS;
    case fqinc::Verdict::vacuous:
      return FQINC_VERDICT_VACUOUS;
    case fqinc::Verdict::violated:
      return FQINC_VERDICT_VIOLATED;
  }
  return FQINC_VERDICT_VIOLATED;
}

fqinc_status fqinc_report_json(const fqinc_report* report, char* buf, size_t cap, size_t* needed) {
  FQINC_REQUIRE(report);
  const size_t size = report->json.size() + 1;
  if (needed) *needed = size;
  if (cap < size) {
    return fail(FQINC_ERR_BUFFER_TOO_SMALL,
                "report needs " + std::to_string(size) + " bytes, buffer has " + std::to_string(cap));
  }
  FQINC_REQUIRE(buf);
  std::memcpy(buf, report->json.c_str(), size);
  last_error.clear();
  return FQINC_OK;
}

void fqinc_report_destroy(fqinc_report* report) { delete report; }

}  // extern "C"
