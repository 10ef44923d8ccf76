#ifndef FQINC_SWEEPS_HPP_
#define FQINC_SWEEPS_HPP_

#include <cstdint>

#include "fqinc/geometry.hpp"
#include "fqinc/theorems.hpp"

namespace fqinc {

// r_{A-A}(x) over every x in F_q^(d+1): brute force against the closed form,
// plus the extremal values.
struct LiftedDiffSweep {
  std::uint64_t q = 0;
  unsigned d = 0;
  std::uint64_t vectors_checked = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t value_at_zero = 0;
  std::uint64_t max_nonzero = 0;
  std::uint64_t expected_at_zero = 0;      // q^d
  std::uint64_t expected_max_nonzero = 0;  // q^(d-1)

  Verdict verdict() const noexcept;
};

LiftedDiffSweep sweep_lifted_diff(const Space& space);

// Seeded random (A, B) in F_q^k, checking sum_x r_{A+B}(x) = |A||B| and
// that both sides of the additive energy identity agree.
struct IdentityTrials {
  std::uint64_t q = 0;
  unsigned k = 0;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::uint64_t max_set_size = 0;
  std::uint64_t mass_failures = 0;
  std::uint64_t energy_failures = 0;
  BigInt energy_total;  // sum of lhs energies; a fingerprint of the run

  Verdict verdict() const noexcept;
};

IdentityTrials run_identity_trials(const FieldSpec& field, unsigned k, std::uint64_t trials,
                                   std::uint64_t seed, std::uint64_t max_set_size = 40);

}  // namespace fqinc

#endif  // FQINC_SWEEPS_HPP_
