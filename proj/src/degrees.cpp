#include "tensordeg/degrees.hpp"

#include <algorithm>

#include "tensordeg/errors.hpp"

namespace tdeg {

namespace {

bool pair_vanishes(const ExteriorData& ed, Elem h, Elem k, DegreeKind kind) {
  switch (kind) {
    case DegreeKind::comm: {
      const FiniteGroup& g = *ed.base.G;
      return g.mul(h, k) == g.mul(k, h);
    }
    case DegreeKind::tensor:
      return vanishes(ed, h, k, Mode::tensor);
    case DegreeKind::exterior:
      return vanishes(ed, h, k, Mode::exterior);
  }
  return false;
}

std::size_t vanishing_count(const ExteriorData& ed, Elem h, DegreeKind kind) {
  std::size_t c = 0;
  for (Elem k : ed.base.K.elements()) c += pair_vanishes(ed, h, k, kind);
  return c;
}

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

}  // namespace

Subgroup star_centralizer(const ExteriorData& ed, std::span<const Elem> xs, Mode mode) {
  const Subgroup& k = ed.base.K;
  for (Elem x : xs)
    if (!ed.base.H.contains(x)) throw ElementOutOfRange(std::to_string(x) + " is not in H");
  std::vector<Elem> out;
  for (Elem c : k.elements())
    if (std::all_of(xs.begin(), xs.end(), [&](Elem x) { return vanishes(ed, x, c, mode); }))
      out.push_back(c);
  try {
    return Subgroup(k.parent_ptr(), std::move(out));
  } catch (const std::invalid_argument& e) {
    throw InternalCheckFailed(std::string("star centralizer is not a subgroup: ") + e.what());
  }
}

Subgroup left_star_centralizer(const ExteriorData& ed, std::span<const Elem> ys, Mode mode) {
  const Subgroup& h = ed.base.H;
  for (Elem y : ys)
    if (!ed.base.K.contains(y)) throw ElementOutOfRange(std::to_string(y) + " is not in K");
  std::vector<Elem> out;
  for (Elem c : h.elements())
    if (std::all_of(ys.begin(), ys.end(), [&](Elem y) { return vanishes(ed, c, y, mode); }))
      out.push_back(c);
  try {
    return Subgroup(h.parent_ptr(), std::move(out));
  } catch (const std::invalid_argument& e) {
    throw InternalCheckFailed(std::string("star centralizer is not a subgroup: ") + e.what());
  }
}

Rational degree(const ExteriorData& ed, DegreeKind kind) {
  const Subgroup& h = ed.base.H;
  const Subgroup& k = ed.base.K;

  std::size_t pairs = 0;
  for (Elem a : h.elements()) pairs += vanishing_count(ed, a, kind);
  const Rational by_pairs(as_int(pairs), as_int(h.size() * k.size()));

  const ClassPartition classes = conjugacy_classes(h, k);
  Rational by_classes;
  if (kind == DegreeKind::comm) {
    by_classes = Rational(as_int(classes.count()), as_int(h.size()));
  } else {
    for (Elem rep : classes.reps) {
      const std::size_t star = vanishing_count(ed, rep, kind);
      const std::size_t plain = vanishing_count(ed, rep, DegreeKind::comm);
      by_classes += Rational(as_int(star), as_int(plain));
    }
    by_classes = by_classes / Rational(as_int(h.size()));
  }

  if (by_pairs != by_classes)
    throw InternalCheckFailed("pair count " + by_pairs.str() + " != class sum " + by_classes.str());
  return by_pairs;
}

DegreeBundle degree_bundle(const ExteriorData& ed) {
  const Subgroup& h = ed.base.H;
  DegreeBundle b;
  b.d_comm = degree(ed, DegreeKind::comm);
  b.d_tensor = degree(ed, DegreeKind::tensor);
  b.d_exterior = degree(ed, DegreeKind::exterior);
  b.J_order = ed.base.J.size();
  b.M_order = ed.M.size();

  const Subgroup plain = centralizer(ed.base.K, h.elements());
  const Subgroup tensor = star_centralizer(ed, h.elements(), Mode::tensor);
  const Subgroup exterior = star_centralizer(ed, h.elements(), Mode::exterior);
  if (!tensor.is_subset_of(exterior) || !exterior.is_subset_of(plain))
    throw InternalCheckFailed("C(x)_K(H) <= C^_K(H) <= C_K(H) violated");
  b.cent_order = plain.size();
  b.tensor_cent_order = tensor.size();
  b.exterior_cent_order = exterior.size();
  b.k_classes = conjugacy_classes(h, ed.base.K).count();

  const Subgroup left_plain = centralizer(h, ed.base.K.elements());
  const Subgroup left_tensor = left_star_centralizer(ed, ed.base.K.elements(), Mode::tensor);
  if (!left_tensor.is_subset_of(left_plain)) throw InternalCheckFailed("C(x)_H(K) is not inside C_H(K)");
  b.left_cent_order = left_plain.size();
  b.left_tensor_cent_order = left_tensor.size();
  return b;
}

std::size_t EmbeddingReport::holding() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const EmbeddingEntry& e) { return e.holds; }));
}

bool EmbeddingReport::ok() const {
  return std::none_of(entries.begin(), entries.end(), [](const EmbeddingEntry& e) { return e.verdict == Verdict::fail; });
}

EmbeddingReport lemma_embedding_report(const ExteriorData& ed) {
  const Subgroup& h = ed.base.H;
  const Subgroup& k = ed.base.K;
  EmbeddingReport report;
  report.hk_covers_g = product_covers(h, k);
  report.J_order = ed.base.J.size();

  for (Elem rep : conjugacy_classes(h, k).reps) {
    const Elem one[] = {rep};
    const Subgroup plain = centralizer(k, one);
    const Subgroup tensor = star_centralizer(ed, one, Mode::tensor);
    if (!tensor.is_subset_of(plain)) throw InternalCheckFailed("C(x)_K(h) is not inside C_K(h)");
    const std::size_t index = plain.size() / tensor.size();
    const bool holds = report.J_order % index == 0 && index <= report.J_order;
    Verdict v = Verdict::not_asserted;
    if (report.hk_covers_g) v = holds ? Verdict::pass : Verdict::fail;
    report.entries.push_back({rep, index, holds, v});
  }
  return report;
}

}  // namespace tdeg
