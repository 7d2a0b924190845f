#include "zdk/field.hpp"

#include <stdexcept>

namespace zdk {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1U << 31) || !is_prime_u64(p))
    throw std::invalid_argument(std::to_string(p) + " is not a prime below 2^31");
}

PrimeField::Elem PrimeField::pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

}  // namespace zdk
