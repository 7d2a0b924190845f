#include "zdk/groebner.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "zdk/errors.hpp"

namespace zdk {

namespace {

// Leading-term index used for divisor lookups during reduction.
template <class K>
struct Reducers {
  std::vector<const Poly<K>*> polys;
  std::vector<PowerProduct> lts;

  void add(const Poly<K>* g) {
    polys.push_back(g);
    lts.push_back(g->lead_pp());
  }
  int find(const PowerProduct& t) const {
    for (std::size_t i = 0; i < lts.size(); ++i)
      if (lts[i].divides(t)) return static_cast<int>(i);
    return -1;
  }
};

// Full reduction of the sum of `init` (unsorted, repeats allowed) by monic
// reducers. Every monomial that can show up is collected first and sorted
// once; the reduction itself then runs on a dense coefficient vector.
template <class K>
Poly<K> reduce_terms(const RingPtr<K>& ring, const std::vector<Term<K>>& init,
                     const Reducers<K>& red) {
  const K& F = ring->field();
  std::unordered_map<PowerProduct, std::uint32_t, PowerProductHash> col;
  std::vector<PowerProduct> monos;
  auto intern = [&](const PowerProduct& t) {
    auto [it, fresh] = col.try_emplace(t, static_cast<std::uint32_t>(monos.size()));
    if (fresh) monos.push_back(t);
    return it->second;
  };
  for (const auto& t : init) intern(t.pp);

  std::vector<int> reducer;
  std::vector<std::uint32_t> row_begin, row_cols;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    PowerProduct t = monos[i];
    int k = red.find(t);
    reducer.push_back(k);
    row_begin.push_back(static_cast<std::uint32_t>(row_cols.size()));
    if (k < 0) continue;
    PowerProduct u = red.lts[k].quotient_into(t);
    const auto& gt = red.polys[k]->terms();
    for (std::size_t j = 1; j < gt.size(); ++j) row_cols.push_back(intern(u * gt[j].pp));
  }

  std::size_t m = monos.size();
  const TermOrder& ord = ring->order();
  std::vector<std::uint32_t> perm(m), rank(m);
  for (std::size_t i = 0; i < m; ++i) perm[i] = static_cast<std::uint32_t>(i);
  std::sort(perm.begin(), perm.end(),
            [&](std::uint32_t a, std::uint32_t b) { return ord.cmp(monos[a], monos[b]) > 0; });
  for (std::size_t r = 0; r < m; ++r) rank[perm[r]] = static_cast<std::uint32_t>(r);

  std::vector<typename K::Elem> val(m, F.zero());
  for (const auto& t : init) F.add_to(val[rank[col.find(t.pp)->second]], t.c);

  std::vector<Term<K>> out;
  for (std::size_t r = 0; r < m; ++r) {
    if (F.is_zero(val[r])) continue;
    std::uint32_t i = perm[r];
    int k = reducer[i];
    if (k < 0) {
      out.push_back({monos[i], std::move(val[r])});
      continue;
    }
    const auto& gt = red.polys[k]->terms();
    const std::uint32_t* cols = row_cols.data() + row_begin[i];
    for (std::size_t j = 1; j < gt.size(); ++j) F.sub_mul(val[rank[cols[j - 1]]], val[r], gt[j].c);
  }
  return Poly<K>::from_sorted(ring, std::move(out));
}

template <class K>
Poly<K> reduce_full(const Poly<K>& f, const Reducers<K>& red) {
  return reduce_terms(f.ring(), f.terms(), red);
}

struct Pair {
  std::size_t i, j;
  PowerProduct lcm;
};

}  // namespace

template <class K>
Poly<K> adopt(const RingPtr<K>& ring, const Poly<K>& f) {
  if (f.ring() == ring) return f;
  if (!f.ring()) throw std::invalid_argument("polynomial without a ring");
  if (!ring->compatible(*f.ring())) {
    if (ring->field() == f.field()) return f.in_ring(ring);
    throw FieldMismatch();
  }
  if (ring->order() == f.ring()->order()) return Poly<K>::from_sorted(ring, f.terms());
  return Poly<K>(ring, f.terms());
}

template <class K>
ReducedGB<K>::ReducedGB(RingPtr<K> ring, std::vector<Poly<K>> elems) : ring_(std::move(ring)) {
  for (auto& g : elems) elems_.push_back(adopt(ring_, g));
  const TermOrder& ord = ring_->order();
  std::sort(elems_.begin(), elems_.end(), [&](const Poly<K>& a, const Poly<K>& b) {
    return ord.cmp(a.lead_pp(), b.lead_pp()) < 0;
  });
}

template <class K>
bool ReducedGB<K>::is_zero_dimensional() const {
  std::uint32_t seen = 0;
  for (const auto& g : elems_) {
    if (g.is_constant()) return true;
    int v = g.lead_pp().pure_power_var();
    if (v >= 0) seen |= 1U << v;
  }
  std::uint32_t all = ring_->nvars() == 32 ? ~0U : (1U << ring_->nvars()) - 1;
  return seen == all;
}

template <class K>
int ReducedGB<K>::find_divisor(const PowerProduct& t) const {
  for (std::size_t i = 0; i < elems_.size(); ++i)
    if (elems_[i].lead_pp().divides(t)) return static_cast<int>(i);
  return -1;
}

template <class K>
Poly<K> ReducedGB<K>::normal_form(const Poly<K>& f_in) const {
  Poly<K> f = adopt(ring_, f_in);
  Reducers<K> red;
  for (const auto& g : elems_) red.add(&g);
  return reduce_full(f, red);
}

template <class K>
std::string ReducedGB<K>::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) out += ", ";
    out += elems_[i].to_string();
  }
  return out + "]";
}

template <class K>
GBPtr<K> buchberger(const RingPtr<K>& ring, const std::vector<Poly<K>>& gens_in, std::size_t known_gb) {
  const TermOrder& ord = ring->order();
  const K& F = ring->field();
  known_gb = std::min(known_gb, gens_in.size());

  std::vector<Poly<K>> input;
  for (std::size_t k = known_gb; k < gens_in.size(); ++k) {
    Poly<K> a = adopt(ring, gens_in[k]);
    if (a.is_zero()) continue;
    if (a.is_constant()) return std::make_shared<const ReducedGB<K>>(ring, std::vector<Poly<K>>{Poly<K>::from_int(ring, 1)});
    input.push_back(a.monic());
  }
  std::sort(input.begin(), input.end(), [&](const Poly<K>& a, const Poly<K>& b) {
    return ord.cmp(a.lead_pp(), b.lead_pp()) < 0;
  });

  std::deque<Poly<K>> polys;  // stable addresses
  std::vector<bool> active;
  std::vector<Pair> pairs;

  auto active_reducers = [&] {
    Reducers<K> red;
    for (std::size_t i = 0; i < polys.size(); ++i)
      if (active[i]) red.add(&polys[i]);
    return red;
  };

  bool unit = false;
  for (std::size_t k = 0; k < known_gb; ++k) {
    polys.push_back(adopt(ring, gens_in[k]));
    active.push_back(true);
    if (polys.back().is_constant()) unit = true;
  }
  // Gebauer–Möller update with the new element h = polys.back()
  auto update = [&]() {
    std::size_t h = polys.size() - 1;
    const PowerProduct& lh = polys[h].lead_pp();
    if (lh.is_one()) {
      unit = true;
      return;
    }
    std::vector<Pair> cand;
    for (std::size_t g = 0; g < h; ++g)
      if (active[g]) cand.push_back({g, h, polys[g].lead_pp().lcm(lh)});
    // drop a new pair whose lcm is a proper multiple of another new pair's lcm,
    // and keep only one pair per lcm value
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      bool coprime = polys[cand[a].i].lead_pp().coprime(lh);
      bool drop = false;
      for (std::size_t b = 0; b < cand.size() && !drop; ++b) {
        if (a == b) continue;
        if (!cand[b].lcm.divides(cand[a].lcm)) continue;
        if (cand[b].lcm == cand[a].lcm) {
          // equal lcms: keep the coprime one if any, else the first
          bool bcop = polys[cand[b].i].lead_pp().coprime(lh);
          if (bcop && !coprime) drop = true;
          else if (bcop == coprime && b < a) drop = true;
        } else {
          drop = true;
        }
      }
      if (!drop) kept.push_back(cand[a]);
    }
    // product criterion
    std::vector<Pair> fresh;
    for (const auto& p : kept)
      if (!polys[p.i].lead_pp().coprime(lh)) fresh.push_back(p);
    // old pairs made redundant by h (chain criterion)
    std::vector<Pair> old;
    for (const auto& p : pairs) {
      bool redundant = lh.divides(p.lcm) && polys[p.i].lead_pp().lcm(lh) != p.lcm &&
                       polys[p.j].lead_pp().lcm(lh) != p.lcm;
      if (!redundant) old.push_back(p);
    }
    pairs = std::move(old);
    pairs.insert(pairs.end(), fresh.begin(), fresh.end());
    for (std::size_t g = 0; g < h; ++g)
      if (active[g] && lh.divides(polys[g].lead_pp())) active[g] = false;
  };

  for (const auto& f : input) {
    if (unit) break;
    Poly<K> r = reduce_full(f, active_reducers());
    if (r.is_zero()) continue;
    polys.push_back(r.monic());
    active.push_back(true);
    update();
    if (unit) break;
  }

  while (!unit && !pairs.empty()) {
    // normal strategy: smallest lcm first
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k)
      if (ord.cmp(pairs[k].lcm, pairs[best].lcm) < 0) best = k;
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

    const Poly<K>& gi = polys[p.i];
    const Poly<K>& gj = polys[p.j];
    PowerProduct ui = gi.lead_pp().quotient_into(p.lcm);
    PowerProduct uj = gj.lead_pp().quotient_into(p.lcm);
    std::vector<Term<K>> init;
    init.reserve(gi.size() + gj.size());
    for (std::size_t k = 1; k < gi.terms().size(); ++k)
      init.push_back({ui * gi.terms()[k].pp, gi.terms()[k].c});
    for (std::size_t k = 1; k < gj.terms().size(); ++k)
      init.push_back({uj * gj.terms()[k].pp, F.neg(gj.terms()[k].c)});
    Poly<K> r = reduce_terms(ring, init, active_reducers());
    if (r.is_zero()) continue;
    polys.push_back(r.monic());
    active.push_back(true);
    update();
  }

  if (unit)
    return std::make_shared<const ReducedGB<K>>(ring, std::vector<Poly<K>>{Poly<K>::from_int(ring, 1)});

  // inter-reduce the minimal basis
  std::vector<Poly<K>> minimal;
  for (std::size_t i = 0; i < polys.size(); ++i)
    if (active[i]) minimal.push_back(polys[i]);
  std::vector<Poly<K>> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    Reducers<K> red;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) red.add(&minimal[j]);
    const Poly<K>& g = minimal[i];
    std::vector<Term<K>> init(g.terms().begin() + 1, g.terms().end());
    Poly<K> tail = reduce_terms(ring, init, red);
    reduced.push_back(Poly<K>::monomial(ring, g.lead_pp(), F.one()) + tail);
  }
  return std::make_shared<const ReducedGB<K>>(ring, std::move(reduced));
}

template <class K>
Ideal<K>::Ideal(RingPtr<K> ring, std::vector<Poly<K>> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) gens_.push_back(adopt(ring_, g));
}

template <class K>
GBPtr<K> Ideal<K>::reduced_gb(const TermOrder& ord) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto it = cache_->gbs.find(ord);
  if (it != cache_->gbs.end()) return it->second;
  RingPtr<K> r = ord == ring_->order() ? ring_ : ring_->with_order(ord);
  // seed from another cached basis if there is one (same ideal, fewer generators)
  const std::vector<Poly<K>>* src = &gens_;
  std::size_t known = ord == ring_->order() ? known_gb_ : 0;
  if (!cache_->gbs.empty() && known == 0) src = &cache_->gbs.begin()->second->elements();
  GBPtr<K> gb = buchberger(r, *src, known);
  cache_->gbs.emplace(ord, gb);
  return gb;
}

template <class K>
bool Ideal<K>::has_cached_gb(const TermOrder& ord) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->gbs.count(ord) != 0;
}

template <class K>
void Ideal<K>::install_gb(GBPtr<K> gb) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->gbs[gb->order()] = std::move(gb);
}

template <class K>
Ideal<K> Ideal<K>::plus(const std::vector<Poly<K>>& extra) const {
  std::vector<Poly<K>> g;
  std::size_t known = 0;
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->gbs.find(ring_->order());
    if (it != cache_->gbs.end()) {
      g = it->second->elements();
      known = g.size();
    } else {
      g = gens_;
    }
  }
  for (const auto& e : extra) g.push_back(adopt(ring_, e));
  Ideal out(ring_, std::move(g));
  out.known_gb_ = known;
  return out;
}

template <class K>
bool Ideal<K>::contains(const Ideal& o) const {
  GBPtr<K> gb = reduced_gb();
  for (const auto& g : o.generators())
    if (!gb->contains(g)) return false;
  return true;
}

template <class K>
bool Ideal<K>::operator==(const Ideal& o) const {
  return *reduced_gb() == *o.reduced_gb(ring_->order());
}

template <class K>
QuotientBasis quotient_basis(const ReducedGB<K>& gb) {
  QuotientBasis qb;
  if (gb.is_unit_ideal()) return qb;
  if (!gb.is_zero_dimensional()) throw NotZeroDimensional();
  const TermOrder& ord = gb.order();
  std::size_t n = gb.ring()->nvars();
  std::vector<PowerProduct> queue{PowerProduct(n)};
  qb.index.emplace(PowerProduct(n), 0);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (std::size_t v = 0; v < n; ++v) {
      PowerProduct t = queue[q] * PowerProduct::variable(n, v);
      if (qb.index.count(t) || gb.find_divisor(t) >= 0) continue;
      qb.index.emplace(t, 0);
      queue.push_back(t);
    }
  }
  std::sort(queue.begin(), queue.end(),
            [&](const PowerProduct& a, const PowerProduct& b) { return ord.cmp(a, b) < 0; });
  for (std::size_t i = 0; i < queue.size(); ++i) qb.index[queue[i]] = i;
  qb.terms = std::move(queue);
  return qb;
}

BigInt den_sigma(const Ideal<Rationals>& I, const TermOrder& ord) {
  GBPtr<Rationals> gb = I.reduced_gb(ord);
  if (gb->is_zero_ideal()) throw ZeroIdeal();
  BigInt d = 1;
  for (const auto& g : gb->elements()) {
    BigInt e = den_poly(g);
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), e.get_mpz_t());
  }
  return d;
}

Ideal<PrimeField> reduce_ideal_mod_p(const Ideal<Rationals>& I, const TermOrder& ord,
                                     std::uint32_t p) {
  GBPtr<Rationals> gb = I.reduced_gb(ord);
  RingPtr<PrimeField> rp = ring_mod_p(gb->ring(), p);
  std::vector<Poly<PrimeField>> img;
  img.reserve(gb->size());
  for (const auto& g : gb->elements()) img.push_back(map_mod_p(g, rp));
  Ideal<PrimeField> out(rp, img);
  out.install_gb(std::make_shared<const ReducedGB<PrimeField>>(rp, std::move(img)));
  return out;
}

template <class K>
Ideal<K> eliminate(const Ideal<K>& I, const std::vector<std::size_t>& vars) {
  const auto& ring = I.ring();
  std::size_t n = ring->nvars();
  std::vector<bool> elim(n, false);
  for (auto v : vars) {
    if (v >= n) throw std::out_of_range("variable index");
    elim[v] = true;
  }
  std::vector<std::string> front, back;
  for (std::size_t i = 0; i < n; ++i) (elim[i] ? front : back).push_back(ring->vars()[i]);
  std::vector<std::string> all = front;
  all.insert(all.end(), back.begin(), back.end());
  auto er = make_ring(ring->field(), all, TermOrder::elimination(n, front.size()));

  OrderKind kind = ring->order().kind();
  if (kind == OrderKind::Elimination) kind = OrderKind::DegRevLex;
  auto rr = make_ring(ring->field(), back, TermOrder(kind, back.size()));

  const std::vector<Poly<K>>& src =
      I.has_cached_gb(ring->order()) ? I.reduced_gb()->elements() : I.generators();
  GBPtr<K> gb = buchberger(er, src);
  std::vector<Poly<K>> kept;
  std::uint32_t front_mask = front.size() == 0 ? 0 : (1U << front.size()) - 1;
  for (const auto& g : gb->elements())
    if ((g.lead_pp().support_mask() & front_mask) == 0) kept.push_back(g.in_ring(rr));
  Ideal<K> out(rr, kept);
  // the kept elements are the reduced GB for degrevlex on the back block
  if (kind == OrderKind::DegRevLex) out.install_gb(std::make_shared<const ReducedGB<K>>(rr, kept));
  return out;
}

template <class K>
Ideal<K> intersect(const Ideal<K>& I, const Ideal<K>& J) {
  const auto& ring = I.ring();
  if (!ring->compatible(*J.ring())) throw FieldMismatch();
  std::vector<std::string> vars{"@t"};
  vars.insert(vars.end(), ring->vars().begin(), ring->vars().end());
  auto tr = make_ring(ring->field(), vars, ring->order().kind() == OrderKind::Lex
                                               ? TermOrder::lex(vars.size())
                                               : TermOrder::degrevlex(vars.size()));
  Poly<K> t = Poly<K>::var(tr, 0);
  Poly<K> one_minus_t = Poly<K>::from_int(tr, 1) - t;
  auto src = [](const Ideal<K>& A) {
    return A.has_cached_gb(A.ring()->order()) ? A.reduced_gb()->elements() : A.generators();
  };
  std::vector<Poly<K>> gens;
  for (const auto& g : src(I)) gens.push_back(t * g.in_ring(tr));
  for (const auto& g : src(J)) gens.push_back(one_minus_t * g.in_ring(tr));
  Ideal<K> big(tr, gens);
  Ideal<K> e = eliminate(big, {0});
  // back in the original ring and ordering
  std::vector<Poly<K>> out;
  for (const auto& g : e.generators()) out.push_back(g.in_ring(ring));
  return Ideal<K>(ring, out);
}

template class ReducedGB<Rationals>;
template class ReducedGB<PrimeField>;
template class Ideal<Rationals>;
template class Ideal<PrimeField>;
template GBPtr<Rationals> buchberger(const RingPtr<Rationals>&, const std::vector<Poly<Rationals>>&, std::size_t);
template GBPtr<PrimeField> buchberger(const RingPtr<PrimeField>&, const std::vector<Poly<PrimeField>>&, std::size_t);
template Poly<Rationals> adopt(const RingPtr<Rationals>&, const Poly<Rationals>&);
template Poly<PrimeField> adopt(const RingPtr<PrimeField>&, const Poly<PrimeField>&);
template QuotientBasis quotient_basis(const ReducedGB<Rationals>&);
template QuotientBasis quotient_basis(const ReducedGB<PrimeField>&);
template Ideal<Rationals> eliminate(const Ideal<Rationals>&, const std::vector<std::size_t>&);
template Ideal<PrimeField> eliminate(const Ideal<PrimeField>&, const std::vector<std::size_t>&);
template Ideal<Rationals> intersect(const Ideal<Rationals>&, const Ideal<Rationals>&);
template Ideal<PrimeField> intersect(const Ideal<PrimeField>&, const Ideal<PrimeField>&);

}  // namespace zdk
