#pragma once

#include <cstdint>
#include <vector>

#include "zdk/factor.hpp"
#include "zdk/groebner.hpp"
#include "zdk/unipoly.hpp"

namespace zdk {

enum class SplitToken { TotalSplit, PartialSplit };

/// Output of the splitting functions. A zero splitter with factor_powers {z}
/// certifies that the ideal is primary.
template <class K>
struct SplitReport {
  Poly<K> splitter;
  std::vector<UPoly<K>> factor_powers;  // mu_j^{d_j}
  SplitToken token = SplitToken::TotalSplit;
  int random_forms = 0;  // random linear forms drawn, nested calls included

  std::size_t s() const { return factor_powers.size(); }
};

/// Representatives (in normal form) of a basis of the fixed points of the
/// Frobenius map on P/I. The first element is 1.
template <class K>
struct FrobeniusBasis {
  std::vector<Poly<K>> elements;

  std::size_t dim() const { return elements.size(); }
};

struct StructureOptions {
  std::uint64_t seed = 0;
  int max_attempts = 20;
};

// All functions below use the reduced GB of I for `ord`. Over Q minimal
// polynomials come from the verified modular algorithm.

// Throws NotZeroDimensional.
template <class K>
bool is_radical_0dim(const Ideal<K>& I, const TermOrder& ord);

// Throws NotZeroDimensional.
template <class K>
Ideal<K> radical_0dim(const Ideal<K>& I, const TermOrder& ord);

// Throws NotZeroDimensional.
FrobeniusBasis<PrimeField> frobenius_basis(const Ideal<PrimeField>& I, const TermOrder& ord);

// False for ideals that are not zero-dimensional (and for the unit ideal).
// Throws HeuristicExhausted over Q.
template <class K>
bool is_maximal(const Ideal<K>& I, const TermOrder& ord, const StructureOptions& opts = {});

// Throws NotZeroDimensional; HeuristicExhausted over Q.
template <class K>
bool is_primary_0dim(const Ideal<K>& I, const TermOrder& ord, const StructureOptions& opts = {});

// Throws NotZeroDimensional; HeuristicExhausted over Q.
template <class K>
SplitReport<K> pd_splitting(const Ideal<K>& I, const TermOrder& ord, const StructureOptions& opts = {});

SplitReport<PrimeField> pd_splitting_finite(const Ideal<PrimeField>& I, const TermOrder& ord);

// I must be non-primary; a primary input exhausts the attempts.
SplitReport<Rationals> pd_splitting_infinite(const Ideal<Rationals>& I, const TermOrder& ord,
                                             const StructureOptions& opts = {});

template <class K>
struct CoreDecomposition {
  std::vector<Ideal<K>> components;
  SplitToken token = SplitToken::TotalSplit;
};

template <class K>
CoreDecomposition<K> primary_decomposition_core(const Ideal<K>& I, const TermOrder& ord,
                                                const StructureOptions& opts = {});

// Pairwise distinct primary ideals intersecting to I, sorted by the text of
// their reduced GBs. The unit ideal has no components.
template <class K>
std::vector<Ideal<K>> primary_decomposition_0dim(const Ideal<K>& I, const TermOrder& ord,
                                                 const StructureOptions& opts = {});

}  // namespace zdk
