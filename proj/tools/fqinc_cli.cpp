// fqinc command line: theorem checks over F_q with machine-readable reports.
//
//   fqinc beck --q 5 --d 2 --shape full
//   fqinc incidence --q 7 --d 3 --shape random:40 --spheres random:200 --seed 9
//   fqinc gen --q 5 --d 2 --shape random:12 --seed 42 --out p.txt
//
// Exit status: 0 when every check holds or is vacuous, 1 when a checker
// reports "violated", 2 on usage or validation errors.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fqinc/fqinc.h"
#include "json.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(fqinc_status status) {
  if (status != FQINC_OK) {
    throw UsageError(std::string(fqinc_status_name(status)) + ": " + fqinc_last_error());
  }
}

struct SpaceDeleter {
  void operator()(fqinc_space* p) const { fqinc_space_destroy(p); }
};
struct PointSetDeleter {
  void operator()(fqinc_point_set* p) const { fqinc_point_set_destroy(p); }
};
struct FamilyDeleter {
  void operator()(fqinc_sphere_family* p) const { fqinc_sphere_family_destroy(p); }
};
struct ReportDeleter {
  void operator()(fqinc_report* p) const { fqinc_report_destroy(p); }
};
using SpacePtr = std::unique_ptr<fqinc_space, SpaceDeleter>;
using PointSetPtr = std::unique_ptr<fqinc_point_set, PointSetDeleter>;
using FamilyPtr = std::unique_ptr<fqinc_sphere_family, FamilyDeleter>;
using ReportPtr = std::unique_ptr<fqinc_report, ReportDeleter>;

struct RunConfig {
  std::string command;
  std::optional<std::uint64_t> q;
  std::optional<std::uint32_t> d;
  std::uint64_t seed = 1;
  std::string points_path;
  std::string spheres = "all";
  std::string shape;
  std::string epsilon = "1/2";
  std::string alpha = "1/2";
  std::uint64_t trials = 100;
  std::string format = "json";
  std::string out;
};

SpacePtr make_space(const RunConfig& cfg) {
  if (!cfg.q || !cfg.d) throw UsageError("--q and --d are required for " + cfg.command);
  fqinc_space* raw = nullptr;
  check(fqinc_space_create(*cfg.q, *cfg.d, &raw));
  return SpacePtr(raw);
}

struct Resolved {
  SpacePtr space;
  PointSetPtr points;
};

// Points come from --points, else from --shape (default "full").
Resolved resolve_points(const RunConfig& cfg, ordered_json& params) {
  Resolved r;
  fqinc_point_set* raw = nullptr;
  if (!cfg.points_path.empty()) {
    SpacePtr expected;
    if (cfg.q || cfg.d) expected = make_space(cfg);
    check(fqinc_point_set_read(cfg.points_path.c_str(), expected.get(), &raw));
    r.points.reset(raw);
    fqinc_space* sp = nullptr;
    check(fqinc_point_set_space(r.points.get(), &sp));
    r.space.reset(sp);
    params["points"] = cfg.points_path;
  } else {
    r.space = make_space(cfg);
    const std::string shape = cfg.shape.empty() ? "full" : cfg.shape;
    check(fqinc_point_set_generate(r.space.get(), shape.c_str(), cfg.seed, &raw));
    r.points.reset(raw);
    params["shape"] = shape;
  }
  return r;
}

FamilyPtr resolve_spheres(const RunConfig& cfg, const fqinc_space* space, ordered_json& params) {
  fqinc_sphere_family* raw = nullptr;
  params["spheres"] = cfg.spheres;
  if (cfg.spheres == "all") {
    check(fqinc_sphere_family_all(space, &raw));
  } else if (cfg.spheres.rfind("random:", 0) == 0) {
    std::uint64_t n = 0;
    try {
      std::size_t used = 0;
      n = std::stoull(cfg.spheres.substr(7), &used);
      if (used != cfg.spheres.size() - 7) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw UsageError("bad --spheres value \"" + cfg.spheres + "\"");
    }
    // A separate stream so that points and spheres drawn from one seed differ.
    check(fqinc_sphere_family_random(space, n, cfg.seed ^ 0x5bd1e995u, &raw));
  } else {
    check(fqinc_sphere_family_read(cfg.spheres.c_str(), space, &raw));
  }
  return FamilyPtr(raw);
}

ordered_json rational_json(const std::string& text) {
  std::int64_t num = 0, den = 1;
  check(fqinc_parse_rational(text.c_str(), &num, &den));
  if (!(num > 0 && num < den)) throw UsageError("parameter " + text + " must lie in (0, 1)");
  return ordered_json{{"num", num}, {"den", den}};
}

struct Outcome {
  ordered_json results;
  fqinc_verdict verdict;
};

ordered_json report_json(const fqinc_report* report) {
  size_t needed = 0;
  fqinc_report_json(report, nullptr, 0, &needed);
  std::string buf(needed, '\0');
  check(fqinc_report_json(report, buf.data(), buf.size(), &needed));
  buf.resize(needed - 1);
  return ordered_json::parse(buf);
}

fqinc_verdict combine(fqinc_verdict a, fqinc_verdict b) {
  if (a == FQINC_VERDICT_VIOLATED || b == FQINC_VERDICT_VIOLATED) return FQINC_VERDICT_VIOLATED;
  if (a == FQINC_VERDICT_HOLDS || b == FQINC_VERDICT_HOLDS) return FQINC_VERDICT_HOLDS;
  return FQINC_VERDICT_VACUOUS;
}

const char* verdict_name(fqinc_verdict v) {
  switch (v) {
    case FQINC_VERDICT_HOLDS:
      return "holds";
    case FQINC_VERDICT_VACUOUS:
      return "vacuous";
    case FQINC_VERDICT_VIOLATED:
      return "violated";
  }
  return "violated";
}

Outcome run_incidence(const RunConfig& cfg, Resolved& ctx, ordered_json& params) {
  FamilyPtr spheres = resolve_spheres(cfg, ctx.space.get(), params);
  fqinc_report* raw = nullptr;
  check(fqinc_check_main(ctx.points.get(), spheres.get(), FQINC_ENGINE_BUCKETED, &raw));
  ReportPtr report(raw);
  Outcome o{report_json(report.get()), fqinc_report_verdict(report.get())};

  ordered_json engines;
  std::vector<std::uint64_t> counts;
  for (auto [engine, name] : {std::pair{FQINC_ENGINE_NAIVE, "naive"},
                              std::pair{FQINC_ENGINE_BUCKETED, "bucketed"},
                              std::pair{FQINC_ENGINE_LIFTED, "lifted"}}) {
    std::uint64_t n = 0;
    check(fqinc_count_incidences(ctx.points.get(), spheres.get(), engine, &n));
    engines[name] = n;
    counts.push_back(n);
  }
  const bool agree = counts[0] == counts[1] && counts[1] == counts[2];
  o.results["engines"] = engines;
  o.results["engines_agree"] = agree;
  if (!agree) o.verdict = FQINC_VERDICT_VIOLATED;
  return o;
}

Outcome run_pinned(const RunConfig& cfg, Resolved& ctx, ordered_json& params) {
  params["epsilon"] = rational_json(cfg.epsilon);
  params["alpha"] = rational_json(cfg.alpha);
  Outcome o{ordered_json::object(), FQINC_VERDICT_VACUOUS};
  fqinc_report* raw = nullptr;
  check(fqinc_check_pinned_average(ctx.points.get(), params["epsilon"]["num"],
                                   params["epsilon"]["den"], &raw));
  ReportPtr average(raw);
  check(fqinc_check_pinned_fraction(ctx.points.get(), params["alpha"]["num"],
                                    params["alpha"]["den"], &raw));
  ReportPtr fraction(raw);
  o.results["average"] = report_json(average.get());
  o.results["fraction"] = report_json(fraction.get());
  o.verdict = combine(fqinc_report_verdict(average.get()), fqinc_report_verdict(fraction.get()));
  return o;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out, std::ios::binary);
  if (!out || !(out << text)) throw UsageError("cannot write " + cfg.out);
}

void flatten(const std::string& prefix, const ordered_json& j,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      flatten(prefix.empty() ? key : prefix + "." + key, value, rows);
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(prefix + "." + std::to_string(i), j[i], rows);
  } else {
    rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

std::string render(const RunConfig& cfg, const ordered_json& report) {
  if (cfg.format == "json") return report.dump(2) + "\n";
  std::vector<std::pair<std::string, std::string>> rows;
  flatten("", report, rows);
  std::ostringstream os;
  if (cfg.format == "csv") {
    os << "key,value\n";
    for (const auto& [k, v] : rows) os << k << ',' << v << '\n';
  } else {
    for (const auto& [k, v] : rows) os << k << ": " << v << '\n';
  }
  return os.str();
}

int run(const RunConfig& cfg) {
  if (cfg.command == "gen") {
    ordered_json params;
    Resolved ctx = resolve_points(cfg, params);
    if (cfg.out.empty()) {
      // The C API writes to paths only; route through a temporary file.
      char name[] = "/tmp/fqinc_genXXXXXX";
      int fd = mkstemp(name);
      if (fd < 0) throw UsageError("cannot create a temporary file");
      close(fd);
      fqinc_status st = fqinc_point_set_write(ctx.points.get(), name);
      std::ifstream in(name);
      std::cout << in.rdbuf();
      std::remove(name);
      check(st);
    } else {
      check(fqinc_point_set_write(ctx.points.get(), cfg.out.c_str()));
    }
    return kExitOk;
  }

  ordered_json params = ordered_json::object();
  Outcome outcome;
  std::uint64_t q = 0;
  std::uint32_t d = 0;

  if (cfg.command == "lemma-raa" || cfg.command == "identities") {
    SpacePtr space = make_space(cfg);
    q = *cfg.q;
    d = *cfg.d;
    fqinc_report* raw = nullptr;
    if (cfg.command == "lemma-raa") {
      check(fqinc_sweep_lifted_diff(space.get(), &raw));
    } else {
      params["trials"] = cfg.trials;
      check(fqinc_run_identity_trials(space.get(), cfg.trials, cfg.seed, &raw));
    }
    ReportPtr report(raw);
    outcome = Outcome{report_json(report.get()), fqinc_report_verdict(report.get())};
  } else {
    Resolved ctx = resolve_points(cfg, params);
    q = fqinc_space_q(ctx.space.get());
    d = fqinc_space_d(ctx.space.get());
    if (cfg.command == "incidence") {
      outcome = run_incidence(cfg, ctx, params);
    } else if (cfg.command == "pinned") {
      outcome = run_pinned(cfg, ctx, params);
    } else {
      if (d != 2) throw UsageError("beck needs d = 2");
      fqinc_report* raw = nullptr;
      check(fqinc_check_beck(ctx.points.get(), &raw));
      ReportPtr report(raw);
      outcome = Outcome{report_json(report.get()), fqinc_report_verdict(report.get())};
    }
  }

  ordered_json report;
  report["command"] = cfg.command;
  report["q"] = q;
  report["d"] = d;
  report["seed"] = cfg.seed;
  report["params"] = params;
  report["results"] = outcome.results;
  report["verdict"] = verdict_name(outcome.verdict);
  emit(cfg, render(cfg, report));
  return outcome.verdict == FQINC_VERDICT_VIOLATED ? kExitViolated : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Point-sphere incidence checks over odd prime fields"};
  RunConfig cfg;
  app.add_option("command", cfg.command, "incidence | lemma-raa | identities | pinned | beck | gen")
      ->required()
      ->check(CLI::IsMember({"incidence", "lemma-raa", "identities", "pinned", "beck", "gen"}));
  app.add_option("--q", cfg.q, "field order (odd prime)");
  app.add_option("--d", cfg.d, "dimension (ambient dimension for identities)");
  app.add_option("--seed", cfg.seed, "64-bit seed")->capture_default_str();
  app.add_option("--points", cfg.points_path, "point-set file");
  app.add_option("--spheres", cfg.spheres, "sphere file, all, or random:N")->capture_default_str();
  app.add_option("--shape", cfg.shape, "random:N | full | line | circle:N | grid:AxB");
  app.add_option("--epsilon", cfg.epsilon, "average-pins parameter num/den")->capture_default_str();
  app.add_option("--alpha", cfg.alpha, "fraction-of-pins parameter num/den")->capture_default_str();
  app.add_option("--trials", cfg.trials, "random trials for identities")->capture_default_str();
  app.add_option("--format", cfg.format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--out", cfg.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return run(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
