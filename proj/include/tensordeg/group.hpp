#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tdeg {

/// Index of an element inside a FiniteGroup. The identity is always 0.
using Elem = std::uint32_t;

/// Groups above this order get a sampled associativity check instead of the exhaustive one.
inline constexpr std::size_t kExhaustiveAssociativityBound = 64;
inline constexpr std::size_t kAssociativitySamples = 10000;

/**
 * A finite group stored as a dense multiplication table.
 *
 * Instances are immutable and are only created through build_group(), which
 * validates the group axioms. Share them through GroupPtr.
 */
class FiniteGroup {
public:
  std::size_t order() const noexcept { return n_; }
  const std::string& label() const noexcept { return label_; }

  Elem mul(Elem a, Elem b) const { return table_[std::size_t(a) * n_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }

  /// Left conjugation g x g^-1.
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inverse_[g]); }

  /// Commutator a b a^-1 b^-1, the convention matching left conjugation.
  Elem commutator(Elem a, Elem b) const { return mul(mul(a, b), mul(inverse_[a], inverse_[b])); }

  std::span<const Elem> row(Elem g) const { return {table_.data() + std::size_t(g) * n_, n_}; }
  std::span<const Elem> inverses() const noexcept { return inverse_; }

  /// Multiplicative order of an element.
  std::size_t element_order(Elem g) const;
  bool is_abelian() const;

private:
  friend std::shared_ptr<const FiniteGroup> build_group(std::size_t, std::vector<Elem>, std::string);

  FiniteGroup() = default;

  std::size_t n_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::string label_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Validates a flat row-major n*n table and returns the group.
/// If the identity is not at index 0 it is swapped into place.
/// Throws NotAGroup naming the first failing element or triple.
GroupPtr build_group(std::size_t n, std::vector<Elem> table, std::string label);

/// Row-per-element overload of build_group().
GroupPtr build_group(const std::vector<std::vector<Elem>>& rows, std::string label);

/**
 * A subgroup of a FiniteGroup, held as a strictly increasing element list.
 * Construction checks identity, closure and Lagrange.
 */
class Subgroup {
public:
  Subgroup(GroupPtr parent, std::vector<Elem> elements);

  /// The whole parent group.
  static Subgroup whole(GroupPtr parent);
  static Subgroup trivial(GroupPtr parent);

  const FiniteGroup& parent() const noexcept { return *parent_; }
  const GroupPtr& parent_ptr() const noexcept { return parent_; }

  std::span<const Elem> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(Elem g) const { return g < member_.size() && member_[g]; }

  /// Position of g in elements(); g must be a member.
  std::size_t index_of(Elem g) const;

  /// Greedy generating set: scan elements in order, keep those outside the current closure.
  std::vector<Elem> generators() const;

  bool is_subset_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.elements_ == b.elements_;
  }

private:
  struct Unchecked {};
  Subgroup(GroupPtr parent, std::vector<Elem> elements, Unchecked);
  friend Subgroup subgroup_closure(const GroupPtr&, std::span<const Elem>);

  GroupPtr parent_;
  std::vector<Elem> elements_;
  std::vector<bool> member_;
};

/// Orbits of H under conjugation by K.
struct ClassPartition {
  std::vector<std::vector<Elem>> classes;
  std::vector<Elem> reps;  // class minima, in the same order as classes

  std::size_t count() const noexcept { return classes.size(); }
};

Subgroup subgroup_closure(const GroupPtr& group, std::span<const Elem> gens);

bool is_normal(const Subgroup& s);

/// {k in K : x k = k x for all x in X}.
Subgroup centralizer(const Subgroup& k, std::span<const Elem> xs);

/// Partition of H into K-conjugacy classes. Throws NotNormal if conjugation leaves H.
ClassPartition conjugacy_classes(const Subgroup& h, const Subgroup& k);

/// [H,K], generated by all h k h^-1 k^-1.
Subgroup relative_commutator(const Subgroup& h, const Subgroup& k);

Subgroup intersection(const Subgroup& a, const Subgroup& b);

/// True when the product set H K is the whole parent group.
bool product_covers(const Subgroup& h, const Subgroup& k);

std::optional<std::uint64_t> smallest_prime_divisor(std::uint64_t n);

}  // namespace tdeg
