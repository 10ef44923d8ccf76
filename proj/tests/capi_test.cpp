#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "fqinc/fqinc.h"
#include "json.hpp"

namespace {

std::string report_json(const fqinc_report* r) {
  size_t needed = 0;
  EXPECT_EQ(fqinc_report_json(r, nullptr, 0, &needed), FQINC_ERR_BUFFER_TOO_SMALL);
  std::string buf(needed, '\0');
  EXPECT_EQ(fqinc_report_json(r, buf.data(), buf.size(), &needed), FQINC_OK);
  buf.resize(needed - 1);
  return buf;
}

struct Plane {
  fqinc_space* space = nullptr;
  explicit Plane(uint64_t q, uint32_t d = 2) { EXPECT_EQ(fqinc_space_create(q, d, &space), FQINC_OK); }
  ~Plane() { fqinc_space_destroy(space); }
};

}  // namespace

TEST(CApi, SpaceLifecycleAndErrors) {
  fqinc_space* s = nullptr;
  ASSERT_EQ(fqinc_space_create(5, 2, &s), FQINC_OK);
  EXPECT_EQ(fqinc_space_q(s), 5u);
  EXPECT_EQ(fqinc_space_d(s), 2u);
  fqinc_space_destroy(s);
  fqinc_space_destroy(nullptr);

  fqinc_space* bad = nullptr;
  EXPECT_EQ(fqinc_space_create(2, 2, &bad), FQINC_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(bad, nullptr);
  EXPECT_NE(std::string(fqinc_last_error()).find("characteristic 2 excluded"), std::string::npos);
  EXPECT_EQ(fqinc_space_create(9, 2, &bad), FQINC_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(fqinc_space_create(5, 2, nullptr), FQINC_ERR_NULL_ARGUMENT);

  EXPECT_STREQ(fqinc_status_name(FQINC_ERR_DUPLICATE), "duplicate");
  EXPECT_STRNE(fqinc_version(), "");
}

TEST(CApi, PointSetOperations) {
  Plane p(5);
  fqinc_point_set* ps = nullptr;
  ASSERT_EQ(fqinc_point_set_create(p.space, &ps), FQINC_OK);
  const uint64_t a[2] = {1, 2};
  const uint64_t out_of_range[2] = {1, 5};
  EXPECT_EQ(fqinc_point_set_add(ps, a, 2), FQINC_OK);
  EXPECT_EQ(fqinc_point_set_add(ps, a, 2), FQINC_ERR_DUPLICATE);
  EXPECT_EQ(fqinc_point_set_add(ps, a, 3), FQINC_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(fqinc_point_set_add(ps, out_of_range, 2), FQINC_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(fqinc_point_set_add(ps, nullptr, 2), FQINC_ERR_NULL_ARGUMENT);
  EXPECT_EQ(fqinc_point_set_size(ps), 1u);

  uint64_t got[2] = {9, 9};
  EXPECT_EQ(fqinc_point_set_get(ps, 0, got, 2), FQINC_OK);
  EXPECT_EQ(got[0], 1u);
  EXPECT_EQ(got[1], 2u);
  EXPECT_EQ(fqinc_point_set_get(ps, 1, got, 2), FQINC_ERR_INVALID_ARGUMENT);

  fqinc_space* back = nullptr;
  ASSERT_EQ(fqinc_point_set_space(ps, &back), FQINC_OK);
  EXPECT_EQ(fqinc_space_q(back), 5u);
  fqinc_space_destroy(back);
  fqinc_point_set_destroy(ps);
}

TEST(CApi, IncidencesAndFiles) {
  Plane p(3);
  fqinc_point_set* full = nullptr;
  fqinc_sphere_family* all = nullptr;
  ASSERT_EQ(fqinc_point_set_generate(p.space, "full", 1, &full), FQINC_OK);
  ASSERT_EQ(fqinc_sphere_family_all(p.space, &all), FQINC_OK);
  EXPECT_EQ(fqinc_sphere_family_size(all), 27u);
  for (fqinc_engine e : {FQINC_ENGINE_NAIVE, FQINC_ENGINE_BUCKETED, FQINC_ENGINE_LIFTED}) {
    uint64_t n = 0;
    EXPECT_EQ(fqinc_count_incidences(full, all, e, &n), FQINC_OK);
    EXPECT_EQ(n, 81u);
  }
  EXPECT_EQ(fqinc_count_incidences(full, all, static_cast<fqinc_engine>(7), nullptr),
            FQINC_ERR_NULL_ARGUMENT);
  uint64_t n = 0;
  EXPECT_EQ(fqinc_count_incidences(full, all, static_cast<fqinc_engine>(7), &n),
            FQINC_ERR_INVALID_ARGUMENT);

  const auto path = (std::filesystem::temp_directory_path() / "fqinc_capi_points.txt").string();
  ASSERT_EQ(fqinc_point_set_write(full, path.c_str()), FQINC_OK);
  fqinc_point_set* again = nullptr;
  ASSERT_EQ(fqinc_point_set_read(path.c_str(), p.space, &again), FQINC_OK);
  EXPECT_EQ(fqinc_point_set_size(again), 9u);
  Plane other(5);
  fqinc_point_set* wrong = nullptr;
  EXPECT_EQ(fqinc_point_set_read(path.c_str(), other.space, &wrong), FQINC_ERR_CONTEXT_MISMATCH);
  EXPECT_EQ(fqinc_point_set_read("/nonexistent/x.txt", nullptr, &wrong), FQINC_ERR_IO);
  std::filesystem::remove(path);

  fqinc_point_set_destroy(again);
  fqinc_point_set_destroy(full);
  fqinc_sphere_family_destroy(all);
}

TEST(CApi, ReportsAndJsonBuffer) {
  Plane p(5);
  fqinc_point_set* full = nullptr;
  ASSERT_EQ(fqinc_point_set_generate(p.space, "full", 1, &full), FQINC_OK);
  fqinc_report* r = nullptr;
  ASSERT_EQ(fqinc_check_beck(full, &r), FQINC_OK);
  EXPECT_EQ(fqinc_report_verdict(r), FQINC_VERDICT_HOLDS);
  auto j = nlohmann::json::parse(report_json(r));
  EXPECT_EQ(j["determined_count"], 125);
  EXPECT_EQ(j["bound"], 56);

  size_t needed = 0;
  char tiny[4];
  EXPECT_EQ(fqinc_report_json(r, tiny, sizeof tiny, &needed), FQINC_ERR_BUFFER_TOO_SMALL);
  EXPECT_GT(needed, sizeof tiny);
  fqinc_report_destroy(r);

  fqinc_report* pinned = nullptr;
  EXPECT_EQ(fqinc_check_pinned_average(full, 3, 2, &pinned), FQINC_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(pinned, nullptr);
  ASSERT_EQ(fqinc_check_pinned_fraction(full, 4, 5, &pinned), FQINC_OK);
  EXPECT_EQ(fqinc_report_verdict(pinned), FQINC_VERDICT_HOLDS);
  fqinc_report_destroy(pinned);

  int64_t num = 0, den = 0;
  EXPECT_EQ(fqinc_parse_rational("4/5", &num, &den), FQINC_OK);
  EXPECT_EQ(num, 4);
  EXPECT_EQ(den, 5);
  EXPECT_EQ(fqinc_parse_rational("4/", &num, &den), FQINC_ERR_PARSE);

  fqinc_report* sweep = nullptr;
  ASSERT_EQ(fqinc_sweep_lifted_diff(p.space, &sweep), FQINC_OK);
  EXPECT_EQ(fqinc_report_verdict(sweep), FQINC_VERDICT_HOLDS);
  fqinc_report_destroy(sweep);

  fqinc_point_set_destroy(full);
}

TEST(CApi, DimensionAndShapeErrors) {
  Plane p3(3, 3);
  fqinc_point_set* full = nullptr;
  ASSERT_EQ(fqinc_point_set_generate(p3.space, "full", 1, &full), FQINC_OK);
  fqinc_report* r = nullptr;
  EXPECT_EQ(fqinc_check_beck(full, &r), FQINC_ERR_INVALID_ARGUMENT);
  EXPECT_STRNE(fqinc_last_error(), "");
  fqinc_point_set_destroy(full);

  fqinc_point_set* g = nullptr;
  EXPECT_EQ(fqinc_point_set_generate(p3.space, "bogus", 1, &g), FQINC_ERR_PARSE);
}
