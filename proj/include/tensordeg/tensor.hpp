#pragma once

#include <cstddef>
#include <vector>

#include "tensordeg/coset_enum.hpp"
#include "tensordeg/group.hpp"

namespace tdeg {

/**
 * True iff H and K act compatibly on each other by conjugation in the parent
 * group, i.e. for all h1,h2 in H and k1,k2 in K
 *   ^{^{h1} k1} h2 = ^{h1}(^{k1}(^{h1^-1} h2))   and
 *   ^{^{k1} h1} k2 = ^{k1}(^{h1}(^{k1^-1} k2)).
 */
bool check_compatibility(const Subgroup& h, const Subgroup& k);

/// The defining presentation of H (x) K: generator pos(h)*|K| + pos(k) stands for h (x) k.
struct TensorPresentation {
  Presentation pres;
  std::size_t h_size;
  std::size_t k_size;
};

/**
 * One generator t[h,k] per pair and, for all h1,h2 in H and k,k1,k2 in K, the relators
 *   t[h1 h2, k]^-1 t[^{h1}h2, ^{h1}k] t[h1, k]
 *   t[h, k1 k2]^-1 t[h, k1] t[^{k1}h, ^{k1}k2]
 * plus t[1,k] and t[h,1] when with_trivial_symbols is set (they are consequences).
 * Throws IncompatibleActions or NotNormal.
 */
TensorPresentation tensor_presentation(const Subgroup& h, const Subgroup& k, bool with_trivial_symbols = true);

/// H (x) K together with kappa: h (x) k -> [h,k] and its kernel J(G,H,K).
class TensorData {
public:
  GroupPtr G;
  Subgroup H;
  Subgroup K;
  EnumeratedGroup eg;
  std::vector<Elem> kappa;  // element of H (x) K -> element of G
  Subgroup J;               // kernel of kappa, inside eg.group
  Subgroup commutator_HK;   // [H,K] inside G

  std::size_t symbol_of(Elem h, Elem k) const;

  /// The element h (x) k of the tensor group.
  Elem tensor_element(Elem h, Elem k) const { return eg.genmap[symbol_of(h, k)]; }
};

/// Enumerates H (x) K and verifies the central extension 1 -> J -> H (x) K -> [H,K] -> 1.
/// Throws CosetLimitExceeded, IncompatibleActions, or InternalCheckFailed.
TensorData tensor_square(const Subgroup& h, const Subgroup& k, std::size_t max_cosets = kDefaultMaxCosets);

/// H ^ K = (H (x) K) / nabla(H cap K) with kappa' and M(G,H,K) = ker kappa'.
struct ExteriorData {
  TensorData base;
  Subgroup nabla;
  GroupPtr wedge_group;
  std::vector<Elem> projection;   // tensor element -> wedge element
  std::vector<Elem> kappa_prime;  // wedge element -> element of G
  Subgroup M;
};

ExteriorData exterior_data(TensorData td);

enum class Mode { tensor, exterior };

/// Whether h (x) k (or h ^ k) is the identity. Throws ElementOutOfRange if h is not in H or k not in K.
bool vanishes(const ExteriorData& ed, Elem h, Elem k, Mode mode);

}  // namespace tdeg
