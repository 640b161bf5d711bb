#include "morphdet/scalar.hpp"

#include <cctype>
#include <limits>

namespace morphdet {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits_i64(i128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t r0 = p, r1 = ((a % p) + p) % p;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) throw ContractViolation("scalar is not invertible mod p");
  return ((t0 % p) + p) % p;
}

std::uint32_t common_modulus(const Scalar& a, const Scalar& b) {
  std::uint32_t pa = a.modulus(), pb = b.modulus();
  if (pa && pb && pa != pb)
    throw ContractViolation("arithmetic between different prime fields");
  return pa ? pa : pb;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p)) throw ContractViolation("F_p requires a prime p, got " + std::to_string(p));
  return {Kind::prime, p};
}

FieldSpec FieldSpec::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::toupper(c));
  if (s == "Q" || s == "QQ" || s == "RATIONALS") return rationals();
  std::string digits;
  if (s.rfind("GF(", 0) == 0 && s.back() == ')')
    digits = s.substr(3, s.size() - 4);
  else if (s.rfind("F_", 0) == 0)
    digits = s.substr(2);
  else if (s.rfind("F", 0) == 0)
    digits = s.substr(1);
  if (digits.empty() || digits.size() > 9 ||
      digits.find_first_not_of("0123456789") != std::string::npos)
    throw ContractViolation("unrecognized field '" + std::string(text) + "'");
  return prime(static_cast<std::uint32_t>(std::stoul(digits)));
}

std::string FieldSpec::name() const {
  return kind == Kind::rationals ? "Q" : "F" + std::to_string(p);
}

Scalar FieldSpec::zero() const { return Scalar(0, p); }
Scalar FieldSpec::one() const { return Scalar(1, p); }
Scalar FieldSpec::from_int(std::int64_t v) const { return Scalar(v, p); }

Scalar FieldSpec::parse_scalar(std::string_view text) const {
  std::string s(text);
  if (s.empty()) throw ContractViolation("empty scalar literal");
  for (char c : s)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      throw ContractViolation("malformed scalar literal '" + s + "'");
  if (s.front() == '+') s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw ContractViolation("malformed scalar literal '" + s + "'");
  if (q.get_den() == 0) throw ContractViolation("zero denominator in '" + s + "'");
  q.canonicalize();
  Scalar r = Scalar::from_mpq(q);
  if (p) r = r * Scalar(1, p);
  return r;
}

Scalar::Scalar(std::int64_t v, std::uint32_t p) : p_(p) {
  if (p_) {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    num_ = r < 0 ? r + p_ : r;
  } else {
    num_ = v;
  }
}

Scalar Scalar::rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ContractViolation("zero denominator");
  return from_i128(num, den);
}

Scalar Scalar::from_mpq(const mpq_class& q) {
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
    Scalar s;
    s.num_ = q.get_num().get_si();
    s.den_ = q.get_den().get_si();
    return s;
  }
  Scalar s;
  s.big_ = std::make_shared<const mpq_class>(q);
  return s;
}

Scalar Scalar::from_i128(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  u128 g = gcd_u128(num < 0 ? static_cast<u128>(-num) : static_cast<u128>(num),
                    static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  if (num == 0) den = 1;
  if (fits_i64(num) && fits_i64(den)) {
    Scalar s;
    s.num_ = static_cast<std::int64_t>(num);
    s.den_ = static_cast<std::int64_t>(den);
    return s;
  }
  auto to_mpz = [](i128 v) {
    bool neg = v < 0;
    u128 u = neg ? static_cast<u128>(-v) : static_cast<u128>(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
  };
  mpq_class q(to_mpz(num), to_mpz(den));
  q.canonicalize();
  return from_mpq(q);
}

mpq_class Scalar::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

Scalar Scalar::to_prime(std::uint32_t p) const {
  if (p_ == p) return *this;
  if (p_ != 0) throw ContractViolation("arithmetic between different prime fields");
  std::int64_t n, d;
  if (big_) {
    mpz_class mp(static_cast<unsigned long>(p));
    mpz_class nn = big_->get_num() % mp;
    mpz_class dd = big_->get_den() % mp;
    n = nn.get_si();
    d = dd.get_si();
  } else {
    n = num_ % static_cast<std::int64_t>(p);
    d = den_ % static_cast<std::int64_t>(p);
  }
  if (n < 0) n += p;
  if (d < 0) d += p;
  if (d == 0) throw ContractViolation("denominator divisible by the characteristic");
  Scalar s;
  s.p_ = p;
  s.num_ = static_cast<std::int64_t>((static_cast<i128>(n) * mod_inverse(d, p)) % p);
  return s;
}

Scalar Scalar::operator-() const {
  if (p_) return Scalar(num_ == 0 ? 0 : p_ - num_, p_);
  if (big_) return from_mpq(-*big_);
  if (num_ == std::numeric_limits<std::int64_t>::min()) return from_i128(-static_cast<i128>(num_), den_);
  Scalar s = *this;
  s.num_ = -num_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ContractViolation("division by zero");
  if (p_) {
    Scalar s;
    s.p_ = p_;
    s.num_ = mod_inverse(num_, p_);
    return s;
  }
  if (big_) return from_mpq(1 / *big_);
  return from_i128(den_, num_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  std::uint32_t p = common_modulus(a, b);
  if (p) {
    Scalar x = a.to_prime(p), y = b.to_prime(p);
    return Scalar((x.num_ + y.num_) % p, p);
  }
  if (a.big_ || b.big_) return Scalar::from_mpq(a.to_mpq() + b.to_mpq());
  if (a.den_ == 1 && b.den_ == 1) {
    std::int64_t r;
    if (!__builtin_add_overflow(a.num_, b.num_, &r)) return Scalar(r);
  }
  return Scalar::from_i128(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                           static_cast<i128>(a.den_) * b.den_);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  std::uint32_t p = common_modulus(a, b);
  if (p) {
    Scalar x = a.to_prime(p), y = b.to_prime(p);
    return Scalar(static_cast<std::int64_t>((static_cast<i128>(x.num_) * y.num_) % p), p);
  }
  if (a.big_ || b.big_) return Scalar::from_mpq(a.to_mpq() * b.to_mpq());
  if (a.den_ == 1 && b.den_ == 1) {
    std::int64_t r;
    if (!__builtin_mul_overflow(a.num_, b.num_, &r)) return Scalar(r);
  }
  return Scalar::from_i128(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  std::uint32_t p = common_modulus(a, b);
  if (p) return a.to_prime(p) * b.to_prime(p).inverse();
  return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  std::uint32_t p = common_modulus(a, b);
  if (p) return a.to_prime(p).num_ == b.to_prime(p).num_;
  if (a.big_ || b.big_) return a.to_mpq() == b.to_mpq();
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  std::uint32_t p = common_modulus(a, b);
  if (p) return a.to_prime(p).num_ <=> b.to_prime(p).num_;
  if (a.big_ || b.big_) {
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  i128 l = static_cast<i128>(a.num_) * b.den_, r = static_cast<i128>(b.num_) * a.den_;
  return l < r ? std::strong_ordering::less
               : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Scalar::str() const {
  if (big_) return big_->get_str();
  if (p_ || den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace morphdet
