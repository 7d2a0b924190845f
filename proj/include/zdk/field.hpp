#pragma once

#include <cstdint>
#include <string>

#include "zdk/arith.hpp"

namespace zdk {

/// The field Q. Elements are canonical mpq_class values.
class Rationals {
 public:
  using Elem = Rat;

  std::uint64_t characteristic() const { return 0; }
  bool is_finite() const { return false; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long long v) const { return Elem(static_cast<long>(v)); }
  Elem from_bigint(const BigInt& v) const { return Elem(v); }
  Elem from_rat(const Rat& v) const { return v; }

  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const { return 1 / a; }
  Elem div(const Elem& a, const Elem& b) const { return a / b; }

  void add_to(Elem& acc, const Elem& a) const { acc += a; }
  void sub_mul(Elem& acc, const Elem& a, const Elem& b) const { acc -= a * b; }
  void add_mul(Elem& acc, const Elem& a, const Elem& b) const { acc += a * b; }
  void mul_to(Elem& acc, const Elem& a) const { acc *= a; }

  // Canonical text: integer or num/den.
  std::string to_string(const Elem& a) const { return a.get_str(); }
  // Sign-aware helpers for printing.
  bool is_negative(const Elem& a) const { return sgn(a) < 0; }

  bool operator==(const Rationals&) const { return true; }
};

/// Prime field F_p with p < 2^31.
class PrimeField {
 public:
  using Elem = std::uint32_t;

  // Throws std::invalid_argument unless p is a prime below 2^31.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  std::uint64_t characteristic() const { return p_; }
  bool is_finite() const { return true; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  Elem from_bigint(const BigInt& v) const {
    return static_cast<Elem>(mpz_fdiv_ui(v.get_mpz_t(), p_));
  }
  // Throws UglyPrime when p divides the denominator.
  Elem from_rat(const Rat& v) const { return rat_mod_p(v, p_); }

  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }

  Elem add(Elem a, Elem b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  // Throws std::domain_error on zero.
  Elem inv(Elem a) const { return static_cast<Elem>(inv_mod_u64(a, p_)); }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  void add_to(Elem& acc, Elem a) const { acc = add(acc, a); }
  void sub_mul(Elem& acc, Elem a, Elem b) const { acc = sub(acc, mul(a, b)); }
  void add_mul(Elem& acc, Elem a, Elem b) const { acc = add(acc, mul(a, b)); }
  void mul_to(Elem& acc, Elem a) const { acc = mul(acc, a); }

  Elem pow(Elem a, std::uint64_t e) const;

  std::string to_string(Elem a) const { return std::to_string(a); }
  bool is_negative(Elem) const { return false; }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace zdk
