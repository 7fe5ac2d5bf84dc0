#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tensordeg/group.hpp"

namespace tdeg {

/// Signed generator indices: +i is generator i, -i its inverse (1-based).
using Word = std::vector<std::int32_t>;

inline constexpr std::size_t kDefaultMaxCosets = 50000;
inline constexpr std::size_t kMaxGenerators = 4096;

/// Cancels adjacent x x^-1 pairs.
Word free_reduce(std::span<const std::int32_t> word);

/**
 * A finite presentation. Relators are freely reduced, empty ones dropped,
 * and the list is deduplicated and sorted by (length, lexicographic), so two
 * presentations with the same relator set compare equal.
 */
class Presentation {
public:
  Presentation(std::size_t ngens, std::vector<Word> relators);

  std::size_t ngens() const noexcept { return ngens_; }
  const std::vector<Word>& relators() const noexcept { return relators_; }

  friend bool operator==(const Presentation&, const Presentation&) = default;

private:
  std::size_t ngens_;
  std::vector<Word> relators_;
};

/// The regular representation of a finitely presented group.
struct EnumeratedGroup {
  GroupPtr group;
  std::vector<Elem> genmap;  // generator i (0-based) -> element index
};

/**
 * Todd-Coxeter enumeration over the trivial subgroup.
 *
 * Relator-tracing (HLT) with immediate coincidence processing. The final
 * table is renumbered into standard breadth-first order, so element numbering
 * depends only on the group and its generators. Throws CosetLimitExceeded
 * when more than max_cosets cosets are alive at once.
 */
EnumeratedGroup todd_coxeter(const Presentation& pres, std::size_t max_cosets = kDefaultMaxCosets);

/// Image of a word under genmap; the empty word maps to 0.
Elem evaluate_word(const EnumeratedGroup& eg, std::span<const std::int32_t> word);

struct Quotient {
  GroupPtr group;
  std::vector<Elem> projection;  // element of G -> coset index
};

/// G/N with cosets numbered by their minimum member. Throws NotNormal.
Quotient quotient_group(const Subgroup& n);

}  // namespace tdeg
