#pragma once

#include <string_view>
#include <vector>

#include "zdk/groebner.hpp"
#include "zdk/quotient.hpp"
#include "zdk/unipoly.hpp"

namespace zdk {

enum class MinPolyAlg { Def, Mat, Elim };

// "def", "mat", "elim"; throws std::invalid_argument otherwise.
MinPolyAlg parse_minpoly_alg(std::string_view name);

/// Dense d x d matrix over K stored by columns.
template <class K>
struct DenseMatrix {
  using Elem = typename K::Elem;
  std::size_t n = 0;
  std::vector<std::vector<Elem>> cols;

  const Elem& at(std::size_t i, std::size_t j) const { return cols[j][i]; }
  std::vector<Elem> apply(const K& field, const std::vector<Elem>& v) const;
};

// Column i holds the coordinates of NF(t_i * f) in the quotient basis.
template <class K>
DenseMatrix<K> mult_matrix(QuotientAlgebra<K>& A, const Poly<K>& f);

// First dependency among NF(f^i), with powers built incrementally in A.
template <class K>
UPoly<K> minpoly_in(QuotientAlgebra<K>& A, const Poly<K>& f);

// All three throw NotZeroDimensional. The unit ideal gives the constant 1.
template <class K>
UPoly<K> minpoly_def(const Ideal<K>& I, const Poly<K>& f, const TermOrder& ord);
template <class K>
UPoly<K> minpoly_mat(const Ideal<K>& I, const Poly<K>& f, const TermOrder& ord);
template <class K>
UPoly<K> minpoly_elim(const Ideal<K>& I, const Poly<K>& f, const TermOrder& ord);

template <class K>
UPoly<K> minpoly(const Ideal<K>& I, const Poly<K>& f, MinPolyAlg alg = MinPolyAlg::Def) {
  const TermOrder& ord = I.ring()->order();
  switch (alg) {
    case MinPolyAlg::Mat: return minpoly_mat(I, f, ord);
    case MinPolyAlg::Elim: return minpoly_elim(I, f, ord);
    default: return minpoly_def(I, f, ord);
  }
}

}  // namespace zdk
