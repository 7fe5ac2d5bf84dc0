#include "tensordeg/group.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <utility>

#include "tensordeg/errors.hpp"

namespace tdeg {

namespace {

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

void require_same_parent(const Subgroup& a, const Subgroup& b) {
  if (a.parent_ptr() != b.parent_ptr())
    throw std::invalid_argument("subgroups live in different groups");
}

}  // namespace

std::size_t FiniteGroup::element_order(Elem g) const {
  std::size_t k = 1;
  for (Elem x = g; x != 0; x = mul(x, g)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

GroupPtr build_group(std::size_t n, std::vector<Elem> table, std::string label) {
  if (n == 0) throw NotAGroup("empty table");
  if (table.size() != n * n)
    throw NotAGroup("table has " + std::to_string(table.size()) + " entries, expected " +
                    std::to_string(n * n));
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] >= n)
      throw NotAGroup("entry " + std::to_string(table[i]) + " at (" + std::to_string(i / n) + "," +
                      std::to_string(i % n) + ") is out of range");

  auto at = [&](std::size_t a, std::size_t b) -> Elem& { return table[a * n + b]; };

  // Latin square: every row and column is a permutation.
  std::vector<std::size_t> seen(n, 0);
  std::size_t stamp = 0;
  for (std::size_t a = 0; a < n; ++a) {
    ++stamp;
    for (std::size_t b = 0; b < n; ++b) {
      if (seen[at(a, b)] == stamp)
        throw NotAGroup("row " + std::to_string(a) + " repeats entry " + std::to_string(at(a, b)));
      seen[at(a, b)] = stamp;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    ++stamp;
    for (std::size_t a = 0; a < n; ++a) {
      if (seen[at(a, b)] == stamp)
        throw NotAGroup("column " + std::to_string(b) + " repeats entry " + std::to_string(at(a, b)));
      seen[at(a, b)] = stamp;
    }
  }

  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t h = 0; h < n && ok; ++h) ok = at(e, h) == h && at(h, e) == h;
    if (ok) identity = e;
  }
  if (!identity) throw NotAGroup("no two-sided identity");

  if (*identity != 0) {
    // Swap labels 0 and e so the identity lands at index 0.
    const Elem e = static_cast<Elem>(*identity);
    auto relabel = [e](Elem x) -> Elem { return x == 0 ? e : (x == e ? 0 : x); };
    std::vector<Elem> moved(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        moved[relabel(Elem(a)) * n + relabel(Elem(b))] = relabel(at(a, b));
    table = std::move(moved);
  }

  if (n <= kExhaustiveAssociativityBound) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (at(at(a, b), c) != at(a, at(b, c)))
            throw NotAGroup("associativity fails at " + triple(a, b, c));
  } else {
    std::mt19937_64 rng(0x5eed'7ab1eULL ^ n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < kAssociativitySamples; ++s) {
      const std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
      if (at(at(a, b), c) != at(a, at(b, c)))
        throw NotAGroup("associativity fails at " + triple(a, b, c));
    }
  }

  std::vector<Elem> inverse(n);
  for (std::size_t a = 0; a < n; ++a) {
    // Latin rows guarantee exactly one b with a b = 1.
    const auto row = std::span<const Elem>(table.data() + a * n, n);
    const auto b = static_cast<std::size_t>(std::find(row.begin(), row.end(), Elem(0)) - row.begin());
    if (at(b, a) != 0) throw NotAGroup("element " + std::to_string(a) + " has no two-sided inverse");
    inverse[a] = static_cast<Elem>(b);
  }

  std::shared_ptr<FiniteGroup> g(new FiniteGroup);
  g->n_ = n;
  g->table_ = std::move(table);
  g->inverse_ = std::move(inverse);
  g->label_ = std::move(label);
  return g;
}

GroupPtr build_group(const std::vector<std::vector<Elem>>& rows, std::string label) {
  const std::size_t n = rows.size();
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n)
      throw NotAGroup("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                      " entries, expected " + std::to_string(n));
    flat.insert(flat.end(), rows[r].begin(), rows[r].end());
  }
  return build_group(n, std::move(flat), std::move(label));
}

Subgroup::Subgroup(GroupPtr parent, std::vector<Elem> elements, Unchecked)
    : parent_(std::move(parent)), elements_(std::move(elements)), member_(parent_->order(), false) {
  for (Elem g : elements_) member_[g] = true;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<Elem> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
  if (!parent_) throw std::invalid_argument("subgroup without a parent group");
  const FiniteGroup& g = *parent_;
  std::sort(elements_.begin(), elements_.end());
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
    throw std::invalid_argument("subgroup element list has duplicates");
  member_.assign(g.order(), false);
  for (Elem x : elements_) {
    if (x >= g.order()) throw ElementOutOfRange(std::to_string(x) + " in " + g.label());
    member_[x] = true;
  }
  if (elements_.empty() || elements_.front() != 0)
    throw std::invalid_argument("subgroup does not contain the identity");
  for (Elem a : elements_) {
    if (!member_[g.inv(a)]) throw std::invalid_argument("subgroup not closed under inverses");
    for (Elem b : elements_)
      if (!member_[g.mul(a, b)]) throw std::invalid_argument("subgroup not closed under products");
  }
  if (g.order() % elements_.size() != 0)
    throw std::invalid_argument("subgroup order does not divide the group order");
}

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<Elem> all(parent->order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Elem>(i);
  return Subgroup(std::move(parent), std::move(all), Unchecked{});
}

Subgroup Subgroup::trivial(GroupPtr parent) { return Subgroup(std::move(parent), {0}, Unchecked{}); }

std::size_t Subgroup::index_of(Elem g) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
  if (it == elements_.end() || *it != g)
    throw ElementOutOfRange(std::to_string(g) + " is not in the subgroup");
  return static_cast<std::size_t>(it - elements_.begin());
}

std::vector<Elem> Subgroup::generators() const {
  std::vector<Elem> gens;
  std::vector<bool> covered(parent_->order(), false);
  covered[0] = true;
  for (Elem x : elements_) {
    if (covered[x]) continue;
    gens.push_back(x);
    const Subgroup span = subgroup_closure(parent_, gens);
    for (Elem y : span.elements()) covered[y] = true;
  }
  return gens;
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  if (parent_ != other.parent_) return false;
  return std::all_of(elements_.begin(), elements_.end(), [&](Elem x) { return other.contains(x); });
}

Subgroup subgroup_closure(const GroupPtr& group, std::span<const Elem> gens) {
  const FiniteGroup& g = *group;
  std::vector<Elem> gen_list;
  for (Elem x : gens) {
    if (x >= g.order()) throw ElementOutOfRange(std::to_string(x) + " in " + g.label());
    if (x != 0) gen_list.push_back(x);
  }
  // Right-multiplying by generators reaches every element: finite order makes inverses positive powers.
  std::vector<bool> seen(g.order(), false);
  std::vector<Elem> members{0};
  seen[0] = true;
  std::deque<Elem> queue{0};
  while (!queue.empty()) {
    const Elem x = queue.front();
    queue.pop_front();
    for (Elem s : gen_list) {
      const Elem y = g.mul(x, s);
      if (!seen[y]) {
        seen[y] = true;
        members.push_back(y);
        queue.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup(group, std::move(members), Subgroup::Unchecked{});
}

bool is_normal(const Subgroup& s) {
  const FiniteGroup& g = s.parent();
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y : s.elements())
      if (!s.contains(g.mul(g.mul(g.inv(x), y), x))) return false;
  return true;
}

Subgroup centralizer(const Subgroup& k, std::span<const Elem> xs) {
  const FiniteGroup& g = k.parent();
  std::vector<Elem> out;
  for (Elem c : k.elements()) {
    bool commutes = true;
    for (Elem x : xs) {
      if (x >= g.order()) throw ElementOutOfRange(std::to_string(x) + " in " + g.label());
      if (g.mul(x, c) != g.mul(c, x)) {
        commutes = false;
        break;
      }
    }
    if (commutes) out.push_back(c);
  }
  return Subgroup(k.parent_ptr(), std::move(out));
}

ClassPartition conjugacy_classes(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  const FiniteGroup& g = h.parent();
  ClassPartition part;
  std::vector<bool> assigned(g.order(), false);
  for (Elem x : h.elements()) {
    if (assigned[x]) continue;
    std::vector<Elem> cls;
    for (Elem c : k.elements()) {
      const Elem y = g.conj(c, x);
      if (!h.contains(y))
        throw NotNormal("conjugating " + std::to_string(x) + " by " + std::to_string(c) + " leaves H");
      if (!assigned[y]) {
        assigned[y] = true;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    part.reps.push_back(cls.front());
    part.classes.push_back(std::move(cls));
  }
  return part;
}

Subgroup relative_commutator(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  const FiniteGroup& g = h.parent();
  std::vector<bool> seen(g.order(), false);
  std::vector<Elem> comms;
  for (Elem a : h.elements())
    for (Elem b : k.elements()) {
      const Elem c = g.commutator(a, b);
      if (!seen[c]) {
        seen[c] = true;
        comms.push_back(c);
      }
    }
  return subgroup_closure(h.parent_ptr(), comms);
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  std::vector<Elem> out;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(),
                        b.elements().end(), std::back_inserter(out));
  return Subgroup(a.parent_ptr(), std::move(out));
}

bool product_covers(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  return h.size() * k.size() == h.parent().order() * intersection(h, k).size();
}

std::optional<std::uint64_t> smallest_prime_divisor(std::uint64_t n) {
  if (n <= 1) return std::nullopt;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return p;
  return n;
}

}  // namespace tdeg
