#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tensordeg/group.hpp"
#include "tensordeg/rational.hpp"
#include "tensordeg/tensor.hpp"

namespace tdeg {

/// {k in K : h (x) k = 1 (or h ^ k = 1) for all h in X}. X must lie in H.
Subgroup star_centralizer(const ExteriorData& ed, std::span<const Elem> xs, Mode mode);

/// {h in H : h (x) k = 1 (or h ^ k = 1) for all k in Y}. Y must lie in K.
Subgroup left_star_centralizer(const ExteriorData& ed, std::span<const Elem> ys, Mode mode);

enum class DegreeKind { comm, tensor, exterior };

/**
 * d(H,K), d_tensor(H,K) or d_exterior(H,K).
 *
 * Evaluated twice, by counting vanishing pairs over H x K and by summing
 * |C*_K(h_i)| / |C_K(h_i)| over K-class representatives of H; throws
 * InternalCheckFailed if the two disagree.
 */
Rational degree(const ExteriorData& ed, DegreeKind kind);

struct DegreeBundle {
  Rational d_comm;
  Rational d_tensor;
  Rational d_exterior;
  std::size_t J_order = 0;
  std::size_t M_order = 0;
  std::size_t cent_order = 0;           // |C_K(H)|
  std::size_t tensor_cent_order = 0;    // |C(x)_K(H)|
  std::size_t exterior_cent_order = 0;  // |C^_K(H)|
  std::size_t k_classes = 0;            // k_K(H)
  std::size_t left_cent_order = 0;         // |C_H(K)|
  std::size_t left_tensor_cent_order = 0;  // |C(x)_H(K)|
};

DegreeBundle degree_bundle(const ExteriorData& ed);

enum class Verdict { pass, fail, not_asserted };

struct EmbeddingEntry {
  Elem rep;
  std::size_t index;  // |C_K(h_i) : C(x)_K(h_i)|
  bool holds;         // index divides |J| and index <= |J|
  Verdict verdict;
};

/// Per K-class representative of H, the index |C_K(h_i) : C(x)_K(h_i)| checked
/// against |J(G,H,K)|. Verdicts are only asserted when H K = G.
struct EmbeddingReport {
  bool hk_covers_g = false;
  std::size_t J_order = 0;
  std::vector<EmbeddingEntry> entries;

  std::size_t holding() const;
  bool ok() const;  // no entry failed
};

EmbeddingReport lemma_embedding_report(const ExteriorData& ed);

}  // namespace tdeg
