#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <set>
#include <sstream>

#include "fqinc/error.hpp"
#include "fqinc/generate.hpp"
#include "fqinc/io.hpp"
#include "fqinc/rng.hpp"
#include "fqinc/theorems.hpp"

using namespace fqinc;

namespace {

Space plane(std::uint64_t q) { return Space(make_field(q), 2); }

ObjectFile parse(const std::string& text, const std::optional<Space>& expected = std::nullopt) {
  std::istringstream in(text);
  return read_objects(in, expected, "test");
}

Error error_of(const std::string& text, const std::optional<Space>& expected = std::nullopt) {
  try {
    parse(text, expected);
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return Error(ErrorCode::io_error, "");
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST(Rng, BelowStaysInRange) {
  Rng rng(123);
  for (std::uint64_t n : {1u, 2u, 3u, 7u, 1000u}) {
    for (int i = 0; i < 2000; ++i) ASSERT_LT(rng.below(n), n);
  }
}

TEST(Rng, EngineSequenceIsTheStandardOne) {
  // The standard fixes the 10000th output of a default-seeded mt19937_64.
  Rng rng(std::mt19937_64::default_seed);
  std::uint64_t v = 0;
  for (int i = 0; i < 10000; ++i) v = rng.next();
  EXPECT_EQ(v, 9981545732273789042ull);
}

TEST(Rng, SampleIsDistinctSortedAndDeterministic) {
  for (std::uint64_t k : {0u, 1u, 10u, 50u}) {
    auto a = Rng(9).sample(50, k);
    auto b = Rng(9).sample(50, k);
    EXPECT_EQ(a, b);
    ASSERT_EQ(a.size(), k);
    EXPECT_TRUE(std::is_sorted(a.begin(), a.end()));
    EXPECT_EQ(std::set<std::uint64_t>(a.begin(), a.end()).size(), k);
    for (auto v : a) EXPECT_LT(v, 50u);
  }
  EXPECT_THROW(Rng(1).sample(5, 6), Error);
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
}

TEST(Generate, ShapeParsing) {
  EXPECT_EQ(to_string(parse_shape("random:12")), "random:12");
  EXPECT_EQ(to_string(parse_shape("full")), "full");
  EXPECT_EQ(to_string(parse_shape("line")), "line");
  EXPECT_EQ(to_string(parse_shape("circle:4")), "circle:4");
  EXPECT_EQ(to_string(parse_shape("grid:2x3")), "grid:2x3");
  for (const char* bad : {"", "random", "random:x", "grid:2", "blob", "circle:-1"}) {
    EXPECT_THROW(parse_shape(bad), Error) << bad;
  }
}

TEST(Generate, Examples) {
  Space f3 = plane(3);
  EXPECT_EQ(generate(f3, 1, shape::Full{}).size(), 9u);

  Space f5 = plane(5);
  PointSet line = generate(f5, 1, shape::Line{});
  ASSERT_EQ(line.size(), 5u);
  EXPECT_EQ(determined_circles(line).size(), 0u);
  for (std::size_t i = 2; i < line.size(); ++i) EXPECT_TRUE(collinear(line[0], line[1], line[i]));

  PointSet a = generate(f5, 42, shape::Random{12});
  PointSet b = generate(f5, 42, shape::Random{12});
  ASSERT_EQ(a.size(), 12u);
  EXPECT_TRUE(std::equal(a.begin(), a.end(), b.begin(), b.end()));
  EXPECT_FALSE(a == generate(f5, 43, shape::Random{12}));
  EXPECT_THROW(generate(f5, 1, shape::Random{26}), Error);

  PointSet grid = generate(Space(make_field(5), 3), 1, shape::Grid{2, 3});
  EXPECT_EQ(grid.size(), 6u);
  for (const Point& p : grid) EXPECT_EQ(p.coords()[2], 0u);
  EXPECT_THROW(generate(Space(make_field(5), 1), 1, shape::Grid{2, 2}), Error);
}

TEST(Generate, CircleSubsetLiesOnOneCircle) {
  Space f7 = plane(7);
  PointSet c = generate(f7, 8, shape::CircleSubset{6});
  ASSERT_EQ(c.size(), 6u);
  EXPECT_EQ(rich_circles(c, 6).size(), 1u);
  EXPECT_THROW(generate(f7, 8, shape::CircleSubset{9}), Error);
}

TEST(Generate, RandomSpheres) {
  Space f5 = plane(5);
  SphereFamily a = random_spheres(f5, 3, 40);
  EXPECT_EQ(a.size(), 40u);
  EXPECT_TRUE(a == random_spheres(f5, 3, 40));
  EXPECT_THROW(random_spheres(f5, 3, 126), Error);
}

TEST(Io, ParsesPointsAndSpheres) {
  auto pts = std::get<PointSet>(parse("q=5 d=2 kind=points\n# comment\n1 2\n\n4 0  # trailing\n"));
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts[1], Point(plane(5), {4, 0}));

  auto sph = std::get<SphereFamily>(parse("q=5 d=2 kind=spheres\n0 0 1\n1 1 0\n"));
  ASSERT_EQ(sph.size(), 2u);
  EXPECT_EQ(sph[0].lambda().value(), 1u);
}

TEST(Io, OutOfRangeCoordinate) {
  Error e = error_of("q=5 d=2 kind=points\n1 7\n");
  EXPECT_EQ(e.code(), ErrorCode::parse_error);
  EXPECT_TRUE(contains(e.what(), "coordinate 7 out of range for q=5")) << e.what();
  EXPECT_TRUE(contains(e.what(), "test:2:")) << e.what();
}

TEST(Io, DuplicateReportsBothLines) {
  Error e = error_of("q=5 d=2 kind=points\n1 2\n3 3\n1 2\n");
  EXPECT_EQ(e.code(), ErrorCode::duplicate);
  EXPECT_TRUE(contains(e.what(), "duplicate at line 4 (first seen at line 2)")) << e.what();

  Error s = error_of("q=5 d=2 kind=spheres\n1 2 3\n1 2 3\n");
  EXPECT_EQ(s.code(), ErrorCode::duplicate);
}

TEST(Io, HeaderMismatchAndMalformedInput) {
  EXPECT_EQ(error_of("q=7 d=2 kind=points\n1 2\n", plane(5)).code(), ErrorCode::context_mismatch);
  EXPECT_EQ(error_of("q=5 d=3 kind=points\n1 2 3\n", plane(5)).code(), ErrorCode::context_mismatch);
  EXPECT_EQ(error_of("").code(), ErrorCode::parse_error);
  EXPECT_EQ(error_of("q=5 d=2\n").code(), ErrorCode::parse_error);
  EXPECT_EQ(error_of("q=5 d=2 kind=lines\n").code(), ErrorCode::parse_error);
  EXPECT_EQ(error_of("q=5 d=2 kind=points\n1\n").code(), ErrorCode::parse_error);
  EXPECT_EQ(error_of("q=5 d=2 kind=points\n1 2 3\n").code(), ErrorCode::parse_error);
  EXPECT_EQ(error_of("q=5 d=2 kind=points\n1 x\n").code(), ErrorCode::parse_error);
  EXPECT_EQ(error_of("q=5 d=2 kind=points\n-1 2\n").code(), ErrorCode::parse_error);
  EXPECT_EQ(error_of("q=4 d=2 kind=points\n").code(), ErrorCode::parse_error);
  EXPECT_THROW(read_file("/nonexistent/fqinc/points.txt"), Error);
}

TEST(IoProperties, RoundTrip) {
  const auto dir = std::filesystem::temp_directory_path();
  for (std::uint64_t q : {3u, 5u, 11u}) {
    for (unsigned d : {1u, 2u, 3u}) {
      Space s(make_field(q), d);
      for (int trial = 0; trial < 5; ++trial) {
        const std::uint64_t seed = derive_seed(q * 100 + d, trial);
        PointSet p = generate(s, seed, shape::Random{1 + seed % std::min<std::uint64_t>(s.point_count(), 30)});
        std::ostringstream out;
        write_points(out, p);
        auto back = std::get<PointSet>(parse(out.str(), s));
        ASSERT_TRUE(back == p);
        ASSERT_TRUE(std::equal(back.begin(), back.end(), p.begin(), p.end()));

        SphereFamily fam = random_spheres(s, seed, 1 + seed % std::min<std::uint64_t>(s.sphere_count(), 20));
        const auto path = (dir / ("fqinc_rt_" + std::to_string(seed) + ".txt")).string();
        write_file(path, fam);
        SphereFamily again = read_spheres_file(path, s);
        std::filesystem::remove(path);
        ASSERT_TRUE(again == fam);
      }
    }
  }
}
