#ifndef FQINC_FIELD_HPP_
#define FQINC_FIELD_HPP_

#include <cstdint>
#include <iosfwd>

namespace fqinc {

// Order of a prime field F_p with p odd. Construction validates; a
// FieldSpec that exists is always a usable field.
//
// p is limited to 32 bits so that a product of two residues fits in
// uint64_t without reduction tricks.
class FieldSpec {
 public:
  explicit FieldSpec(std::uint64_t p);

  std::uint64_t order() const noexcept { return p_; }

  // Residue-level helpers for the hot loops. Arguments must already be
  // canonical (< p).
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
    return (a * b) % p_;
  }
  std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint64_t reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p_) : r);
  }
  // Extended Euclid; a must be nonzero.
  std::uint64_t inv(std::uint64_t a) const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint64_t p_;
};

// Validating factory: rejects p < 3, p = 2 and composite p.
FieldSpec make_field(std::uint64_t p);

bool is_prime(std::uint64_t n);

class FieldElement {
 public:
  // `value` is reduced mod p.
  FieldElement(const FieldSpec& spec, std::uint64_t value);
  static FieldElement from_signed(const FieldSpec& spec, std::int64_t value);

  std::uint64_t value() const noexcept { return value_; }
  const FieldSpec& spec() const noexcept { return spec_; }
  bool is_zero() const noexcept { return value_ == 0; }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  FieldSpec spec_;
  std::uint64_t value_;
};

FieldElement operator+(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a, const FieldElement& b);
FieldElement operator*(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a);

FieldElement inv(const FieldElement& a);
FieldElement pow(const FieldElement& a, std::uint64_t n);

// -1, 0 or +1 by Euler's criterion.
int legendre(const FieldElement& a);

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

}  // namespace fqinc

#endif  // FQINC_FIELD_HPP_
