// Acceptance suite: one PASS/FAIL line per criterion. All checks are exact;
// there are no floating-point tolerances anywhere in this file.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "fqinc/generate.hpp"
#include "fqinc/rng.hpp"
#include "fqinc/sweeps.hpp"
#include "fqinc/theorems.hpp"
#include "oracle.hpp"

using namespace fqinc;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first few failures of a criterion.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) first_ += (first_.empty() ? "" : "; ") + what;
  }
  Outcome done(const std::string& summary) const {
    std::ostringstream os;
    os << summary << " (" << checks_ << " checks";
    if (failures_ > 0) os << ", " << failures_ << " failed: " << first_;
    os << ")";
    return {failures_ == 0, os.str()};
  }

 private:
  std::uint64_t checks_ = 0;
  std::uint64_t failures_ = 0;
  std::string first_;
};

std::string cfg(std::uint64_t q, unsigned d) {
  return "q=" + std::to_string(q) + " d=" + std::to_string(d);
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

const std::array<std::uint64_t, 5> kGridQ = {3, 5, 7, 11, 13};
const std::array<unsigned, 2> kGridD = {2, 3};

// Random nonempty (P, S) of moderate size for one configuration.
std::pair<PointSet, SphereFamily> random_instance(const Space& s, std::uint64_t seed) {
  Rng rng(seed);
  const std::uint64_t np = 1 + rng.below(std::min<std::uint64_t>(s.point_count(), 300));
  const std::uint64_t ns = 1 + rng.below(std::min<std::uint64_t>(s.sphere_count(), 500));
  PointSet p = generate(s, rng.next(), shape::Random{np});
  SphereFamily fam = random_spheres(s, rng.next(), ns);
  return {std::move(p), std::move(fam)};
}

Outcome main_bound() {
  Tally t;
  std::uint64_t random_reports = 0, structured_reports = 0, stream = 0;
  for (auto q : kGridQ) {
    for (auto d : kGridD) {
      Space s(make_field(q), d);
      for (int i = 0; i < 100; ++i) {
        auto [p, fam] = random_instance(s, derive_seed(kSeed, stream++));
        IncidenceReport r = check_main(p, fam);
        t.expect(r.status == Verdict::holds, cfg(q, d) + " random #" + std::to_string(i));
        ++random_reports;
      }
      // Full space against every sphere.
      t.expect(check_main(PointSet::full(s), SphereFamily::all(s)).status == Verdict::holds,
               cfg(q, d) + " full");
      ++structured_reports;
      // Pinned covers and single spheres over random P.
      for (int i = 0; i < 10; ++i) {
        Rng rng(derive_seed(kSeed + 1, stream++));
        PointSet p = generate(s, rng.next(), shape::Random{1 + rng.below(std::min<std::uint64_t>(s.point_count(), 300))});
        const Point& pin = p[rng.below(p.size())];
        t.expect(check_main(p, pinned_cover(p, pin)).status == Verdict::holds, cfg(q, d) + " cover");
        SphereFamily single(s);
        single.add(random_spheres(s, rng.next(), 1)[0]);
        t.expect(check_main(p, single).status == Verdict::holds, cfg(q, d) + " single");
        structured_reports += 2;
      }
    }
  }
  return t.done(std::to_string(random_reports) + " random and " + std::to_string(structured_reports) +
                " structured reports hold");
}

Outcome exact_main_term() {
  Tally t;
  for (std::uint64_t q : {3u, 5u, 7u}) {
    for (unsigned d : {2u, 3u}) {
      Space s(make_field(q), d);
      IncidenceReport r = check_main(PointSet::full(s), SphereFamily::all(s));
      t.expect(r.incidences == ipow(q, 2 * d), cfg(q, d) + " I");
      t.expect(r.deviation_sq == 0, cfg(q, d) + " deviation");
      t.expect(r.theta == 0.0, cfg(q, d) + " theta");
      t.expect(r.status == Verdict::holds, cfg(q, d) + " status");
    }
  }
  return t.done("I = q^(2d) and theta = 0 for the full space");
}

Outcome lifted_diff_lemma() {
  Tally t;
  std::uint64_t vectors = 0;
  for (std::uint64_t q : {3u, 5u, 7u}) {
    for (unsigned d = 1; d <= 3; ++d) {
      // Independent histogram of a - a' over the paraboloid, in plain integers.
      const long lq = static_cast<long>(q);
      std::vector<oracle::Vec> a;
      for (auto x : oracle::all_vectors(lq, d)) {
        long n = 0;
        for (long c : x) n += c * c;
        x.push_back(oracle::mod(n, lq));
        a.push_back(x);
      }
      std::map<oracle::Vec, std::uint64_t> hist;
      for (const auto& u : a) {
        for (const auto& v : a) {
          oracle::Vec diff(d + 1);
          for (unsigned i = 0; i <= d; ++i) diff[i] = oracle::mod(u[i] - v[i], lq);
          ++hist[diff];
        }
      }

      Space lifted(make_field(q), d + 1);
      std::uint64_t max_nonzero = 0, at_zero = 0;
      for (const auto& x : oracle::all_vectors(lq, d + 1)) {
        Coords c(x.begin(), x.end());
        FqVector v(lifted.field(), c);
        const std::uint64_t closed = lifted_diff_count(v, DiffMode::closed);
        const std::uint64_t brute = lifted_diff_count(v, DiffMode::brute);
        auto it = hist.find(x);
        const std::uint64_t expected = it == hist.end() ? 0 : it->second;
        t.expect(closed == brute && brute == expected, cfg(q, d) + " x mismatch");
        if (v.is_zero()) {
          at_zero = closed;
        } else {
          max_nonzero = std::max(max_nonzero, closed);
        }
        ++vectors;
      }
      t.expect(at_zero == ipow(q, d), cfg(q, d) + " value at 0");
      t.expect(max_nonzero == ipow(q, d - 1), cfg(q, d) + " max");

      LiftedDiffSweep sweep = sweep_lifted_diff(Space(make_field(q), d));
      t.expect(sweep.verdict() == Verdict::holds, cfg(q, d) + " sweep");
    }
  }
  return t.done(std::to_string(vectors) + " vectors: closed form = brute force, r(0) = q^d, max = q^(d-1)");
}

Outcome identities() {
  Tally t;
  std::uint64_t trials = 0;
  for (std::uint64_t q : {3u, 5u, 7u}) {
    for (unsigned k = 1; k <= 4; ++k) {
      IdentityTrials r = run_identity_trials(make_field(q), k, 100, derive_seed(kSeed, q * 10 + k));
      t.expect(r.trials == 100 && r.mass_failures == 0 && r.energy_failures == 0,
               "q=" + std::to_string(q) + " k=" + std::to_string(k));
      trials += r.trials;
    }
  }
  return t.done(std::to_string(trials) + " trials: sum r = |A||B| and energy lhs = rhs");
}

Outcome engine_agreement() {
  Tally t;
  std::uint64_t instances = 0, stream = 0;
  for (auto q : kGridQ) {
    for (auto d : kGridD) {
      Space s(make_field(q), d);
      for (int i = 0; i < 200; ++i) {
        auto [p, fam] = random_instance(s, derive_seed(kSeed + 5, stream++));
        const auto naive = count_incidences(p, fam, Engine::naive);
        const auto bucketed = count_incidences(p, fam, Engine::bucketed);
        const auto lifted = count_incidences(p, fam, Engine::lifted);
        t.expect(naive == bucketed && bucketed == lifted, cfg(q, d) + " #" + std::to_string(i));
        ++instances;
      }
    }
  }
  return t.done(std::to_string(instances) + " instances, three engines identical");
}

Outcome circle_solver() {
  Tally t;
  std::uint64_t triples = 0;
  for (std::uint64_t q : {3u, 5u, 7u}) {
    const long lq = static_cast<long>(q);
    Space s(make_field(q), 2);
    auto pts = oracle::all_vectors(lq, 2);
    auto point = [&](const oracle::Vec& v) { return Point(s, {v[0], v[1]}); };
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        for (std::size_t k = j + 1; k < pts.size(); ++k) {
          ++triples;
          auto got = circle_through(point(pts[i]), point(pts[j]), point(pts[k]));
          if (oracle::collinear(pts[i], pts[j], pts[k], lq)) {
            t.expect(!got.has_value(), "collinear triple solved");
            continue;
          }
          auto scan = oracle::circles_containing(lq, {pts[i], pts[j], pts[k]});
          t.expect(scan.size() == 1 && got.has_value() &&
                       *got == Sphere(Point(s, {scan[0][0], scan[0][1]}),
                                      FieldElement(s.field(), static_cast<std::uint64_t>(scan[0][2]))),
                   "q=" + std::to_string(q) + " triple mismatch");
        }
      }
    }
  }
  return t.done(std::to_string(triples) + " triples match the exhaustive circle scan");
}

Outcome beck() {
  Tally t;
  for (std::uint64_t q : {5u, 7u, 11u, 13u}) {
    Space s(make_field(q), 2);
    const std::uint64_t bound = (4 * q * q * q + 8) / 9;
    for (int i = 0; i < 20; ++i) {
      PointSet p = generate(s, derive_seed(kSeed + 7, q * 100 + i), shape::Random{5 * q});
      BeckReport r = check_beck(p);
      const std::string tag = "q=" + std::to_string(q) + " #" + std::to_string(i);
      t.expect(r.bound == bound, tag + " bound");
      t.expect(r.determined_count >= bound, tag + " determined");
      // poor < 5 q^3 / 9
      t.expect(9 * r.poor_circle_count < 5 * q * q * q, tag + " poor circles");
      t.expect(r.cross_check_agrees && r.verdict() == Verdict::holds, tag + " verdict");
    }
    // A line never determines a circle.
    t.expect(determined_circles(generate(s, derive_seed(kSeed + 8, q), shape::Line{})).empty(),
             "q=" + std::to_string(q) + " line");
  }
  t.expect(determined_circles(PointSet::full(Space(make_field(5), 2))).size() == 125, "full q=5");
  t.expect(determined_circles(PointSet::full(Space(make_field(7), 2))).size() == 294, "full q=7");
  for (std::uint64_t q : {7u, 11u}) {
    Space s(make_field(q), 2);
    Sphere c(Point(s, {1, 2}), FieldElement(s.field(), 3));
    PointSet on(s, sphere_points(c));
    SphereFamily det = determined_circles(on);
    t.expect(on.size() == q + 1 && det.size() == 1 && det[0] == c,
             "q=" + std::to_string(q) + " circle example");
  }
  return t.done("random |P| = 5q meet ceil(4q^3/9) with < 5q^3/9 poor circles; 125, 294, line 0, circle 1");
}

// Smallest n with n^2 num^2 >= (den - num) den q^(d+1) (average) or
// n^2 num^4 >= (den^2 - num^2) den^2 q^(d+1) (fraction).
std::uint64_t threshold(bool fraction, std::uint64_t q, unsigned d, std::uint64_t num, std::uint64_t den) {
  const std::uint64_t qd = ipow(q, d + 1);
  std::uint64_t n = 1;
  for (;; ++n) {
    if (fraction) {
      if (n * n * num * num * num * num >= (den * den - num * num) * den * den * qd) return n;
    } else if (n * n * num * num >= (den - num) * den * qd) {
      return n;
    }
  }
}

Outcome pinned() {
  Tally t;
  struct Case {
    bool fraction;
    std::uint64_t q;
    unsigned d;
    std::int64_t num, den;
    std::uint64_t min_size;
  };
  const std::array<Case, 6> cases = {{
      {false, 13, 2, 1, 2, 67},
      {false, 7, 2, 1, 2, 27},
      {false, 5, 3, 1, 2, 36},
      {true, 5, 2, 4, 5, 11},
      {true, 13, 2, 4, 5, 44},
      {true, 13, 2, 1, 2, 163},
  }};
  std::string sizes;
  for (const Case& c : cases) {
    const std::uint64_t min_size = threshold(c.fraction, c.q, c.d, c.num, c.den);
    const std::string tag = std::string(c.fraction ? "fraction" : "average") + " " + cfg(c.q, c.d) +
                            " " + std::to_string(c.num) + "/" + std::to_string(c.den);
    t.expect(min_size == c.min_size, tag + " threshold " + std::to_string(min_size));
    sizes += (sizes.empty() ? "" : ", ") + std::to_string(min_size);
    Space s(make_field(c.q), c.d);
    for (int i = 0; i < 20; ++i) {
      Rng rng(derive_seed(kSeed + 9, c.q * 1000 + c.d * 100 + static_cast<std::uint64_t>(c.num) * 10 + i));
      const std::uint64_t n = min_size + rng.below(s.point_count() - min_size + 1);
      PointSet p = generate(s, rng.next(), shape::Random{n});
      PinnedReport r = c.fraction ? check_pinned_fraction(p, Rational{c.num, c.den})
                                  : check_pinned_average(p, Rational{c.num, c.den});
      t.expect(r.hypothesis_met && r.conclusion_holds && r.verdict() == Verdict::holds,
               tag + " |P|=" + std::to_string(n));
    }
  }
  return t.done("six configurations, minimum |P| " + sizes);
}

Outcome reproducibility() {
  Tally t;
  const std::vector<std::string> runs = {
      "incidence --q 7 --d 3 --shape random:60 --spheres random:300 --seed 11",
      "incidence --q 5 --d 2 --shape full --spheres all",
      "lemma-raa --q 5 --d 2",
      "identities --q 7 --d 3 --trials 50 --seed 12",
      "pinned --q 13 --d 2 --shape random:100 --seed 13 --epsilon 1/2 --alpha 4/5",
      "beck --q 7 --d 2 --shape random:35 --seed 14",
      "gen --q 11 --d 2 --shape circle:8 --seed 15",
  };
  for (const auto& args : runs) {
    auto a = cli::run(args);
    auto b = cli::run(args);
    t.expect(a.exit_code == 0 && !a.out.empty(), args + " (exit " + std::to_string(a.exit_code) + ")");
    t.expect(a.out == b.out && a.exit_code == b.exit_code, args + " differs");
  }
  return t.done(std::to_string(runs.size()) + " CLI invocations byte-identical across two runs");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"main incidence bound", main_bound},
      {"exact main term", exact_main_term},
      {"r_{A-A} lemma", lifted_diff_lemma},
      {"sum and energy identities", identities},
      {"engine agreement", engine_agreement},
      {"circle solver", circle_solver},
      {"circles determined by 5q points", beck},
      {"pinned distance corollaries", pinned},
      {"reproducibility", reproducibility},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %zu %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
