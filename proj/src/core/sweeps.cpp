#include "fqinc/sweeps.hpp"

#include <algorithm>

#include "fqinc/error.hpp"
#include "fqinc/rng.hpp"

namespace fqinc {

Verdict LiftedDiffSweep::verdict() const noexcept {
  const bool ok = mismatches == 0 && value_at_zero == expected_at_zero &&
                  max_nonzero == expected_max_nonzero;
  return ok ? Verdict::holds : Verdict::violated;
}

LiftedDiffSweep sweep_lifted_diff(const Space& space) {
  LiftedDiffSweep s;
  s.q = space.q();
  s.d = space.dim();
  s.expected_at_zero = space.point_count();
  s.expected_max_nonzero = space.point_count() / space.q();
  for (std::uint64_t key = 0; key < space.sphere_count(); ++key) {
    FqVector x(space.field(), space.decode(key, s.d + 1));
    const std::uint64_t brute = lifted_diff_count(x, DiffMode::brute);
    const std::uint64_t closed = lifted_diff_count(x, DiffMode::closed);
    ++s.vectors_checked;
    if (brute != closed) ++s.mismatches;
    if (key == 0) {
      s.value_at_zero = brute;
    } else {
      s.max_nonzero = std::max(s.max_nonzero, brute);
    }
  }
  return s;
}

Verdict IdentityTrials::verdict() const noexcept {
  return mass_failures == 0 && energy_failures == 0 ? Verdict::holds : Verdict::violated;
}

IdentityTrials run_identity_trials(const FieldSpec& field, unsigned k, std::uint64_t trials,
                                   std::uint64_t seed, std::uint64_t max_set_size) {
  Space ambient(field, k);
  if (max_set_size == 0) throw Error(ErrorCode::invalid_argument, "max set size must be positive");
  IdentityTrials t;
  t.q = field.order();
  t.k = k;
  t.seed = seed;
  t.trials = trials;
  t.max_set_size = std::min(max_set_size, ambient.point_count());

  auto draw = [&](Rng& rng) {
    const std::uint64_t n = 1 + rng.below(t.max_set_size);
    VectorSet set(field, k);
    for (std::uint64_t key : rng.sample(ambient.point_count(), n)) {
      set.add(FqVector(field, ambient.decode(key, k)));
    }
    return set;
  };

  for (std::uint64_t i = 0; i < trials; ++i) {
    Rng rng(derive_seed(seed, i));
    VectorSet a = draw(rng);
    VectorSet b = draw(rng);
    if (rep_sum(a, b).total() != a.size() * b.size()) ++t.mass_failures;
    BigInt lhs = additive_energy(a, b, EnergySide::lhs);
    BigInt rhs = additive_energy(a, b, EnergySide::rhs);
    if (lhs != rhs) ++t.energy_failures;
    t.energy_total += lhs;
  }
  return t;
}

}  // namespace fqinc
