#include "tensordeg/coset_enum.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>

#include "tensordeg/errors.hpp"

namespace tdeg {

Word free_reduce(std::span<const std::int32_t> word) {
  Word out;
  out.reserve(word.size());
  for (std::int32_t x : word) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Presentation::Presentation(std::size_t ngens, std::vector<Word> relators) : ngens_(ngens) {
  if (ngens > kMaxGenerators)
    throw InvalidPresentation(std::to_string(ngens) + " generators exceeds the cap of " +
                              std::to_string(kMaxGenerators));
  for (const Word& r : relators)
    for (std::int32_t x : r)
      if (x == 0 || static_cast<std::size_t>(std::abs(x)) > ngens)
        throw InvalidPresentation("generator index " + std::to_string(x) + " out of range");
  for (Word& r : relators) {
    Word reduced = free_reduce(r);
    if (!reduced.empty()) relators_.push_back(std::move(reduced));
  }
  std::sort(relators_.begin(), relators_.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  relators_.erase(std::unique(relators_.begin(), relators_.end()), relators_.end());
}

namespace {

constexpr std::int32_t kUndef = -1;

/// Columns are 2*i for generator i and 2*i+1 for its inverse.
std::size_t column_of(std::int32_t letter) {
  return letter > 0 ? 2 * std::size_t(letter - 1) : 2 * std::size_t(-letter - 1) + 1;
}

std::size_t inverse_column(std::size_t col) { return col ^ 1U; }

class CosetTable {
public:
  CosetTable(std::size_t ngens, std::size_t max_cosets)
      : cols_(2 * ngens), max_cosets_(max_cosets), alloc_cap_(std::max<std::size_t>(4 * max_cosets, 1024)) {
    add_row();
  }

  std::size_t cols() const { return cols_; }
  std::size_t rows() const { return forward_.size(); }
  bool alive(std::size_t c) const { return forward_[c] == c; }

  std::int32_t& at(std::size_t c, std::size_t col) { return table_[c * cols_ + col]; }
  std::int32_t get(std::size_t c, std::size_t col) const { return table_[c * cols_ + col]; }

  void define(std::size_t c, std::size_t col) {
    if (live_ >= max_cosets_) throw CosetLimitExceeded(max_cosets_);
    const auto d = static_cast<std::int32_t>(add_row());
    at(c, col) = d;
    at(std::size_t(d), inverse_column(col)) = static_cast<std::int32_t>(c);
  }

  // Dead rows are reclaimed only when the allocation cap is reached; returns the
  // position of `cursor` after renumbering.
  std::size_t maybe_compact(std::size_t cursor) {
    if (rows() < alloc_cap_) return cursor;
    std::vector<std::int32_t> renum(rows(), kUndef);
    std::size_t next = 0, new_cursor = std::numeric_limits<std::size_t>::max();
    for (std::size_t c = 0; c < rows(); ++c) {
      if (!alive(c)) continue;
      if (c >= cursor && new_cursor == std::numeric_limits<std::size_t>::max()) new_cursor = next;
      renum[c] = static_cast<std::int32_t>(next++);
    }
    std::vector<std::int32_t> fresh(next * cols_, kUndef);
    for (std::size_t c = 0; c < rows(); ++c) {
      if (!alive(c)) continue;
      for (std::size_t x = 0; x < cols_; ++x) {
        const std::int32_t v = get(c, x);
        fresh[std::size_t(renum[c]) * cols_ + x] = v == kUndef ? kUndef : renum[std::size_t(v)];
      }
    }
    table_ = std::move(fresh);
    forward_.resize(next);
    for (std::size_t c = 0; c < next; ++c) forward_[c] = c;
    alloc_cap_ = std::max(alloc_cap_, 2 * next);
    return new_cursor == std::numeric_limits<std::size_t>::max() ? next : new_cursor;
  }

  std::size_t rep(std::size_t c) {
    std::size_t r = c;
    while (forward_[r] != r) r = forward_[r];
    while (forward_[c] != r) {
      const std::size_t next = forward_[c];
      forward_[c] = r;
      c = next;
    }
    return r;
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::deque<std::size_t> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      const std::size_t g = queue.front();
      queue.pop_front();
      for (std::size_t x = 0; x < cols_; ++x) {
        const std::int32_t dv = get(g, x);
        if (dv == kUndef) continue;
        const auto d = std::size_t(dv);
        const std::size_t xi = inverse_column(x);
        if (get(d, xi) == static_cast<std::int32_t>(g)) at(d, xi) = kUndef;
        const std::size_t mu = rep(g), nu = rep(d);
        if (get(mu, x) != kUndef) {
          merge(nu, std::size_t(get(mu, x)), queue);
        } else if (get(nu, xi) != kUndef) {
          merge(mu, std::size_t(get(nu, xi)), queue);
        } else {
          at(mu, x) = static_cast<std::int32_t>(nu);
          at(nu, xi) = static_cast<std::int32_t>(mu);
        }
      }
    }
  }

  /// Traces w from c in both directions, defining cosets until the cycle closes.
  void scan_and_fill(std::size_t c, const std::vector<std::size_t>& w) {
    std::size_t f = c, b = c;
    std::size_t i = 0, j = w.size();  // [i, j) is the untraced middle
    while (true) {
      while (i < j && get(f, w[i]) != kUndef) f = std::size_t(get(f, w[i++]));
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && get(b, inverse_column(w[j - 1])) != kUndef)
        b = std::size_t(get(b, inverse_column(w[--j])));
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        at(f, w[i]) = static_cast<std::int32_t>(b);
        at(b, inverse_column(w[i])) = static_cast<std::int32_t>(f);
        return;
      }
      define(f, w[i]);
    }
  }

  std::size_t live() const { return live_; }

private:
  std::size_t add_row() {
    const std::size_t r = forward_.size();
    forward_.push_back(r);
    table_.resize(table_.size() + cols_, kUndef);
    ++live_;
    return r;
  }

  void merge(std::size_t a, std::size_t b, std::deque<std::size_t>& queue) {
    const std::size_t ra = rep(a), rb = rep(b);
    if (ra == rb) return;
    const std::size_t lo = std::min(ra, rb), hi = std::max(ra, rb);
    forward_[hi] = lo;
    --live_;
    queue.push_back(hi);
  }

  std::size_t cols_;
  std::size_t max_cosets_;
  std::size_t alloc_cap_;
  std::size_t live_ = 0;
  std::vector<std::int32_t> table_;
  std::vector<std::size_t> forward_;
};

}  // namespace

EnumeratedGroup todd_coxeter(const Presentation& pres, std::size_t max_cosets) {
  if (max_cosets == 0) throw std::invalid_argument("max_cosets must be positive");
  const std::size_t ngens = pres.ngens();

  std::vector<std::vector<std::size_t>> rels;
  rels.reserve(pres.relators().size());
  for (const Word& r : pres.relators()) {
    std::vector<std::size_t> cols;
    cols.reserve(r.size());
    for (std::int32_t x : r) cols.push_back(column_of(x));
    rels.push_back(std::move(cols));
  }

  CosetTable t(ngens, max_cosets);
  for (std::size_t c = 0; c < t.rows(); ++c) {
    for (const auto& r : rels) {
      if (!t.alive(c)) break;
      t.scan_and_fill(c, r);
    }
    for (std::size_t x = 0; x < t.cols() && t.alive(c); ++x)
      if (t.get(c, x) == kUndef) t.define(c, x);
    c = t.maybe_compact(c + 1) - 1;
  }

  // Standardize: breadth-first from coset 0, columns in order.
  const std::size_t cols = t.cols();
  std::vector<std::int32_t> renum(t.rows(), kUndef);
  std::vector<std::size_t> order{0};
  renum[0] = 0;
  std::vector<std::size_t> parent{0}, via{0};
  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    const std::size_t c = order[idx];
    for (std::size_t x = 0; x < cols; ++x) {
      const std::int32_t dv = t.get(c, x);
      if (dv == kUndef) throw InternalCheckFailed("coset table incomplete after enumeration");
      const auto d = std::size_t(dv);
      if (renum[d] == kUndef) {
        renum[d] = static_cast<std::int32_t>(order.size());
        order.push_back(d);
        parent.push_back(idx);
        via.push_back(x);
      }
    }
  }
  const std::size_t n = order.size();
  if (n != t.live()) throw InternalCheckFailed("coset table not connected");

  std::vector<std::int32_t> action(n * cols);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t x = 0; x < cols; ++x) action[i * cols + x] = renum[std::size_t(t.get(order[i], x))];

  // Element i is the coset reached from 0 along its tree word; e * f traces f's word from e.
  std::vector<Elem> mult(n * n);
  for (std::size_t e = 0; e < n; ++e) {
    mult[e * n] = static_cast<Elem>(e);
    for (std::size_t f = 1; f < n; ++f) {
      const std::size_t start = mult[e * n + parent[f]];
      mult[e * n + f] = static_cast<Elem>(action[start * cols + via[f]]);
    }
  }

  EnumeratedGroup eg;
  eg.group = build_group(n, std::move(mult), "fp");
  eg.genmap.resize(ngens);
  for (std::size_t g = 0; g < ngens; ++g) eg.genmap[g] = static_cast<Elem>(action[2 * g]);
  for (const Word& r : pres.relators())
    if (evaluate_word(eg, r) != 0) throw InternalCheckFailed("relator does not evaluate to identity");
  return eg;
}

Elem evaluate_word(const EnumeratedGroup& eg, std::span<const std::int32_t> word) {
  const FiniteGroup& g = *eg.group;
  Elem acc = 0;
  for (std::int32_t x : word) {
    const auto idx = static_cast<std::size_t>(std::abs(x));
    if (x == 0 || idx > eg.genmap.size())
      throw ElementOutOfRange("generator " + std::to_string(x) + " in word");
    const Elem img = eg.genmap[idx - 1];
    acc = g.mul(acc, x > 0 ? img : g.inv(img));
  }
  return acc;
}

Quotient quotient_group(const Subgroup& n) {
  if (!is_normal(n)) throw NotNormal("quotient by a non-normal subgroup");
  const FiniteGroup& g = n.parent();
  constexpr Elem kUnset = std::numeric_limits<Elem>::max();
  std::vector<Elem> projection(g.order(), kUnset);
  std::vector<Elem> reps;
  // Scanning in index order numbers cosets by their minimum member.
  for (Elem x = 0; x < g.order(); ++x) {
    if (projection[x] != kUnset) continue;
    const auto q = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem m : n.elements()) projection[g.mul(x, m)] = q;
  }
  const std::size_t m = reps.size();
  std::vector<Elem> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) table[a * m + b] = projection[g.mul(reps[a], reps[b])];
  Quotient q;
  q.group = build_group(m, std::move(table), g.label() + "/N");
  q.projection = std::move(projection);
  return q;
}

}  // namespace tdeg
