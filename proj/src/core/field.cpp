#include "fqinc/field.hpp"

#include <limits>
#include <ostream>
#include <string>

#include "fqinc/error.hpp"

namespace fqinc {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f <= n / f; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

FieldSpec::FieldSpec(std::uint64_t p) : p_(p) {
  if (p == 2) {
    throw Error(ErrorCode::invalid_argument, "characteristic 2 excluded");
  }
  if (p < 3) {
    throw Error(ErrorCode::invalid_argument,
                "field order must be an odd prime >= 3, got " + std::to_string(p));
  }
  if (p > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorCode::invalid_argument,
                "field order " + std::to_string(p) + " exceeds 32 bits");
  }
  if (!is_prime(p)) {
    if (p % 2 == 0) {
      throw Error(ErrorCode::invalid_argument,
                  "even order " + std::to_string(p) + ": prime fields only");
    }
    throw Error(ErrorCode::invalid_argument,
                "composite order " + std::to_string(p) + ": prime fields only");
  }
}

std::uint64_t FieldSpec::inv(std::uint64_t a) const {
  if (a % p_ == 0) {
    throw Error(ErrorCode::invalid_argument, "zero has no multiplicative inverse");
  }
  std::int64_t r0 = static_cast<std::int64_t>(p_);
  std::int64_t r1 = static_cast<std::int64_t>(a % p_);
  std::int64_t t0 = 0;
  std::int64_t t1 = 1;
  while (r1 != 0) {
    std::int64_t quot = r0 / r1;
    std::int64_t r2 = r0 - quot * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t t2 = t0 - quot * t1;
    t0 = t1;
    t1 = t2;
  }
  return reduce(t0);
}

FieldSpec make_field(std::uint64_t p) { return FieldSpec(p); }

FieldElement::FieldElement(const FieldSpec& spec, std::uint64_t value)
    : spec_(spec), value_(value % spec.order()) {}

FieldElement FieldElement::from_signed(const FieldSpec& spec, std::int64_t value) {
  return FieldElement(spec, spec.reduce(value));
}

namespace {

const FieldSpec& common_spec(const FieldElement& a, const FieldElement& b) {
  if (a.spec() != b.spec()) {
    throw Error(ErrorCode::context_mismatch,
                "operands from F_" + std::to_string(a.spec().order()) + " and F_" +
                    std::to_string(b.spec().order()));
  }
  return a.spec();
}

}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  const FieldSpec& f = common_spec(a, b);
  return FieldElement(f, f.add(a.value(), b.value()));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  const FieldSpec& f = common_spec(a, b);
  return FieldElement(f, f.sub(a.value(), b.value()));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const FieldSpec& f = common_spec(a, b);
  return FieldElement(f, f.mul(a.value(), b.value()));
}

FieldElement operator-(const FieldElement& a) {
  return FieldElement(a.spec(), a.spec().neg(a.value()));
}

FieldElement inv(const FieldElement& a) {
  return FieldElement(a.spec(), a.spec().inv(a.value()));
}

FieldElement pow(const FieldElement& a, std::uint64_t n) {
  const FieldSpec& f = a.spec();
  std::uint64_t base = a.value();
  std::uint64_t acc = 1 % f.order();
  while (n > 0) {
    if (n & 1) acc = f.mul(acc, base);
    base = f.mul(base, base);
    n >>= 1;
  }
  return FieldElement(f, acc);
}

int legendre(const FieldElement& a) {
  if (a.is_zero()) return 0;
  FieldElement e = pow(a, (a.spec().order() - 1) / 2);
  return e.value() == 1 ? 1 : -1;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) {
  return os << a.value();
}

}  // namespace fqinc
