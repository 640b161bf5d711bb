#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace morphdet {

/// Raised when a caller breaks an operation's documented contract
/// (dimension mismatch, wrong field, non-prime modulus, ...).
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation's mathematical precondition does not hold
/// (characteristic too small, morphism not epi, module decomposable, ...).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class Scalar;

/// The base field: either Q or F_p.
struct FieldSpec {
  enum class Kind { rationals, prime };

  Kind kind = Kind::rationals;
  std::uint32_t p = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint32_t p);
  /// Accepts "Q", "QQ", "rationals", "F5", "GF(5)", "F_5".
  static FieldSpec parse(std::string_view text);

  std::uint32_t characteristic() const { return p; }
  bool is_prime_field() const { return kind == Kind::prime; }
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  /// Parses "3", "-2/3" (rationals) or a decimal residue (prime fields).
  Scalar parse_scalar(std::string_view text) const;

  bool operator==(const FieldSpec&) const = default;
};

bool is_prime(std::uint64_t n);

/// An exact field element. Rationals are kept reduced with a positive
/// denominator; values that overflow 64 bits move to a GMP rational.
/// Prime-field elements are residues in [0, p).
///
/// A scalar built without a field (p == 0) that meets a prime-field scalar
/// in arithmetic is reduced mod p first; mixing two different primes is a
/// contract violation.
class Scalar {
 public:
  Scalar() = default;
  Scalar(std::int64_t v, std::uint32_t p = 0);  // NOLINT(google-explicit-constructor)
  static Scalar from_mpq(const mpq_class& q);
  static Scalar rational(std::int64_t num, std::int64_t den);

  std::uint32_t modulus() const { return p_; }
  FieldSpec field() const {
    return p_ ? FieldSpec{FieldSpec::Kind::prime, p_} : FieldSpec{};
  }

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }

  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Total order: numeric for rationals, residue order for F_p.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  /// "2/3", "-1", or the residue "4".
  std::string str() const;
  mpq_class to_mpq() const;
  /// Residue for prime-field scalars; numerator for integral rationals.
  std::int64_t small_numerator() const { return num_; }
  std::int64_t small_denominator() const { return den_; }
  bool is_small() const { return !big_; }

 private:
  static Scalar from_i128(__int128 num, __int128 den);
  Scalar to_prime(std::uint32_t p) const;

  std::uint32_t p_ = 0;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

}  // namespace morphdet
