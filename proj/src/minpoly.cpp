#include "zdk/minpoly.hpp"

#include <stdexcept>

#include "zdk/errors.hpp"
#include "zdk/lindep.hpp"

namespace zdk {

MinPolyAlg parse_minpoly_alg(std::string_view name) {
  if (name == "def") return MinPolyAlg::Def;
  if (name == "mat") return MinPolyAlg::Mat;
  if (name == "elim") return MinPolyAlg::Elim;
  throw std::invalid_argument("unknown minpoly algorithm: " + std::string(name));
}

template <class K>
std::vector<typename K::Elem> DenseMatrix<K>::apply(const K& F, const std::vector<Elem>& v) const {
  if (v.size() != n) throw DimensionMismatch(n, v.size());
  std::vector<Elem> out(n, F.zero());
  for (std::size_t j = 0; j < n; ++j) {
    if (F.is_zero(v[j])) continue;
    const auto& c = cols[j];
    for (std::size_t i = 0; i < n; ++i)
      if (!F.is_zero(c[i])) F.add_mul(out[i], v[j], c[i]);
  }
  return out;
}

template <class K>
DenseMatrix<K> mult_matrix(QuotientAlgebra<K>& A, const Poly<K>& f) {
  DenseMatrix<K> M;
  M.n = A.dim();
  Poly<K> g = A.gb()->normal_form(f);
  M.cols.reserve(M.n);
  for (std::size_t i = 0; i < M.n; ++i) M.cols.push_back(A.mul(g, A.unit(i)));
  return M;
}

namespace {

// z^k - sum_j c_j z^j
template <class K>
UPoly<K> from_dependency(const K& F, const std::vector<typename K::Elem>& c) {
  std::vector<typename K::Elem> coeffs(c.size() + 1, F.zero());
  for (std::size_t j = 0; j < c.size(); ++j) coeffs[j] = F.neg(c[j]);
  coeffs[c.size()] = F.one();
  return UPoly<K>(F, std::move(coeffs));
}

template <class K, class Step>
UPoly<K> first_dependency(const K& F, std::size_t d, Step step) {
  if (d == 0) return UPoly<K>::constant(F, F.one());
  LinDepMill<K> mill(F, d);
  std::vector<typename K::Elem> v(d, F.zero());
  v[0] = F.one();
  mill.feed(v);
  for (std::size_t i = 1; i <= d; ++i) {
    v = step(v);
    if (auto dep = mill.feed(v)) return from_dependency(F, *dep);
  }
  throw std::logic_error("no dependency within the dimension bound");
}

}  // namespace

template <class K>
UPoly<K> minpoly_in(QuotientAlgebra<K>& A, const Poly<K>& f) {
  Poly<K> g = A.dim() ? A.gb()->normal_form(f) : f;
  return first_dependency(A.field(), A.dim(), [&](const auto& v) { return A.mul(g, v); });
}

template <class K>
UPoly<K> minpoly_def(const Ideal<K>& I, const Poly<K>& f, const TermOrder& ord) {
  QuotientAlgebra<K> A(I.reduced_gb(ord));
  return minpoly_in(A, f);
}

template <class K>
UPoly<K> minpoly_mat(const Ideal<K>& I, const Poly<K>& f, const TermOrder& ord) {
  QuotientAlgebra<K> A(I.reduced_gb(ord));
  DenseMatrix<K> M = mult_matrix(A, f);
  const K& F = A.field();
  return first_dependency(F, A.dim(), [&](const auto& v) { return M.apply(F, v); });
}

template <class K>
UPoly<K> minpoly_elim(const Ideal<K>& I, const Poly<K>& f, const TermOrder& ord) {
  GBPtr<K> gb = I.reduced_gb(ord);
  // the quotient must be finite-dimensional for the result to be the minimal polynomial
  quotient_basis(*gb);
  const K& F = I.field();
  std::vector<std::string> vars = I.ring()->vars();
  std::size_t n = vars.size();
  vars.push_back("@z");
  auto zr = make_ring(F, vars, TermOrder::degrevlex(n + 1));
  std::vector<Poly<K>> gens;
  for (const auto& g : gb->elements()) gens.push_back(g.in_ring(zr));
  gens.push_back(Poly<K>::var(zr, n) - f.in_ring(zr));
  std::vector<std::size_t> xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = i;
  Ideal<K> E = eliminate(Ideal<K>(zr, gens), xs);
  const auto& elems = E.reduced_gb()->elements();
  if (elems.size() != 1) throw std::logic_error("elimination ideal is not principal");
  const Poly<K>& m = elems[0];
  std::vector<typename K::Elem> coeffs(m.lead_pp()[0] + 1, F.zero());
  for (const auto& t : m.terms()) coeffs[t.pp[0]] = t.c;
  return UPoly<K>(F, std::move(coeffs));
}

#define ZDK_INSTANTIATE(K)                                                                  \
  template struct DenseMatrix<K>;                                                           \
  template DenseMatrix<K> mult_matrix(QuotientAlgebra<K>&, const Poly<K>&);                 \
  template UPoly<K> minpoly_in(QuotientAlgebra<K>&, const Poly<K>&);                        \
  template UPoly<K> minpoly_def(const Ideal<K>&, const Poly<K>&, const TermOrder&);         \
  template UPoly<K> minpoly_mat(const Ideal<K>&, const Poly<K>&, const TermOrder&);         \
  template UPoly<K> minpoly_elim(const Ideal<K>&, const Poly<K>&, const TermOrder&);

ZDK_INSTANTIATE(Rationals)
ZDK_INSTANTIATE(PrimeField)

#undef ZDK_INSTANTIATE

}  // namespace zdk
