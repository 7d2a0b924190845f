#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace zdk {

inline constexpr std::size_t kMaxVars = 16;
using Exponent = std::uint16_t;

/// A power product x_1^e_1 ... x_n^e_n. Slots past the arity are zero.
class PowerProduct {
 public:
  PowerProduct() = default;
  explicit PowerProduct(std::size_t nvars);
  PowerProduct(std::size_t nvars, const std::vector<unsigned>& exps);

  static PowerProduct variable(std::size_t nvars, std::size_t i, unsigned e = 1);

  std::size_t arity() const { return nvars_; }
  std::uint32_t degree() const { return deg_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  bool is_one() const { return deg_ == 0; }

  void set(std::size_t i, unsigned e);

  // Throws std::overflow_error if an exponent leaves the Exponent range.
  PowerProduct operator*(const PowerProduct& o) const;
  bool divides(const PowerProduct& o) const;
  // Precondition: divides(o). Returns o / *this.
  PowerProduct quotient_into(const PowerProduct& o) const;
  PowerProduct lcm(const PowerProduct& o) const;
  bool coprime(const PowerProduct& o) const;
  // Index of the single variable when this is a pure power x_i^e (e >= 1).
  int pure_power_var() const;

  std::uint32_t support_mask() const { return mask_; }

  bool operator==(const PowerProduct& o) const { return deg_ == o.deg_ && exps_ == o.exps_; }

  std::size_t hash() const;

 private:
  std::array<Exponent, kMaxVars> exps_{};
  std::uint32_t deg_ = 0;
  std::uint16_t mask_ = 0;
  std::uint8_t nvars_ = 0;
};

struct PowerProductHash {
  std::size_t operator()(const PowerProduct& t) const { return t.hash(); }
};

enum class OrderKind { Lex, DegLex, DegRevLex, Elimination };

/// A term ordering on power products of a fixed arity. Variable 0 is the largest.
/// Elimination orders compare the first `block` variables by degrevlex and break
/// ties with degrevlex on the remaining ones.
class TermOrder {
 public:
  TermOrder() = default;
  TermOrder(OrderKind kind, std::size_t nvars, std::size_t block = 0);

  static TermOrder lex(std::size_t n) { return {OrderKind::Lex, n}; }
  static TermOrder deglex(std::size_t n) { return {OrderKind::DegLex, n}; }
  static TermOrder degrevlex(std::size_t n) { return {OrderKind::DegRevLex, n}; }
  static TermOrder elimination(std::size_t n, std::size_t block) {
    return {OrderKind::Elimination, n, block};
  }

  OrderKind kind() const { return kind_; }
  std::size_t arity() const { return nvars_; }
  std::size_t block() const { return block_; }

  // Throws ArityMismatch when either argument has the wrong arity.
  std::strong_ordering compare(const PowerProduct& a, const PowerProduct& b) const;
  // Unchecked variant used in hot loops.
  int cmp(const PowerProduct& a, const PowerProduct& b) const;

  std::string name() const;

  auto operator<=>(const TermOrder&) const = default;

 private:
  OrderKind kind_ = OrderKind::DegRevLex;
  std::size_t nvars_ = 0;
  std::size_t block_ = 0;
};

// Descending comparator for ordered containers.
struct DescendingOrder {
  const TermOrder* order;
  bool operator()(const PowerProduct& a, const PowerProduct& b) const {
    return order->cmp(a, b) > 0;
  }
};

}  // namespace zdk
