#include "zdk/lindep.hpp"

#include "zdk/errors.hpp"

namespace zdk {

template <class K>
std::optional<typename LinDepMill<K>::Vec> LinDepMill<K>::feed(const Vec& v) {
  if (v.size() != dim_) throw DimensionMismatch(dim_, v.size());
  const K& F = field_;
  std::size_t k = rows_.size();
  Vec w = v;
  Vec combo(k + 1, F.zero());
  combo[k] = F.one();
  for (std::size_t r = 0; r < k; ++r) {
    Elem c = w[pivots_[r]];
    if (F.is_zero(c)) continue;
    const Vec& row = rows_[r];
    for (std::size_t i = pivots_[r]; i < dim_; ++i)
      if (!F.is_zero(row[i])) F.sub_mul(w[i], c, row[i]);
    const Vec& cr = combos_[r];
    for (std::size_t j = 0; j < cr.size(); ++j)
      if (!F.is_zero(cr[j])) F.sub_mul(combo[j], c, cr[j]);
  }

  std::size_t piv = 0;
  while (piv < dim_ && F.is_zero(w[piv])) ++piv;
  if (piv == dim_) {
    // 0 = sum_j combo_j w_j + v
    Vec out(k);
    for (std::size_t j = 0; j < k; ++j) out[j] = F.neg(combo[j]);
    return out;
  }

  Elem inv = F.inv(w[piv]);
  for (std::size_t i = piv; i < dim_; ++i) F.mul_to(w[i], inv);
  for (auto& c : combo) F.mul_to(c, inv);
  // clear the new pivot column from the older rows
  for (std::size_t r = 0; r < k; ++r) {
    Elem c = rows_[r][piv];
    if (F.is_zero(c)) continue;
    Vec& row = rows_[r];
    for (std::size_t i = piv; i < dim_; ++i)
      if (!F.is_zero(w[i])) F.sub_mul(row[i], c, w[i]);
    Vec& cr = combos_[r];
    cr.resize(k + 1, F.zero());
    for (std::size_t j = 0; j <= k; ++j)
      if (!F.is_zero(combo[j])) F.sub_mul(cr[j], c, combo[j]);
  }
  pivot_row_[piv] = static_cast<int>(k);
  rows_.push_back(std::move(w));
  pivots_.push_back(piv);
  combos_.push_back(std::move(combo));
  return std::nullopt;
}

template class LinDepMill<Rationals>;
template class LinDepMill<PrimeField>;

}  // namespace zdk
