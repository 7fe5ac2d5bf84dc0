#include "tensordeg/tensor.hpp"

#include <deque>
#include <limits>

#include "tensordeg/errors.hpp"

namespace tdeg {

namespace {

void require_subgroups_of_same_group(const Subgroup& h, const Subgroup& k) {
  if (h.parent_ptr() != k.parent_ptr()) throw std::invalid_argument("H and K live in different groups");
}

}  // namespace

bool check_compatibility(const Subgroup& h, const Subgroup& k) {
  require_subgroups_of_same_group(h, k);
  const FiniteGroup& g = h.parent();
  for (Elem h1 : h.elements())
    for (Elem k1 : k.elements()) {
      const Elem h1k1 = g.conj(h1, k1);
      const Elem k1h1 = g.conj(k1, h1);
      for (Elem h2 : h.elements())
        if (g.conj(h1k1, h2) != g.conj(h1, g.conj(k1, g.conj(g.inv(h1), h2)))) return false;
      for (Elem k2 : k.elements())
        if (g.conj(k1h1, k2) != g.conj(k1, g.conj(h1, g.conj(g.inv(k1), k2)))) return false;
    }
  return true;
}

TensorPresentation tensor_presentation(const Subgroup& h, const Subgroup& k, bool with_trivial_symbols) {
  require_subgroups_of_same_group(h, k);
  if (!is_normal(h)) throw NotNormal("H");
  if (!is_normal(k)) throw NotNormal("K");
  if (!check_compatibility(h, k)) throw IncompatibleActions();

  const FiniteGroup& g = h.parent();
  const std::size_t nh = h.size(), nk = k.size();
  auto t = [&](Elem a, Elem b) {
    return static_cast<std::int32_t>(h.index_of(a) * nk + k.index_of(b) + 1);
  };

  std::vector<Word> rels;
  rels.reserve(2 * nh * nk * (nh + nk) + (with_trivial_symbols ? nh + nk : 0));
  if (with_trivial_symbols) {
    for (Elem b : k.elements()) rels.push_back({t(0, b)});
    for (Elem a : h.elements()) rels.push_back({t(a, 0)});
  }
  for (Elem h1 : h.elements())
    for (Elem h2 : h.elements())
      for (Elem b : k.elements())
        rels.push_back({-t(g.mul(h1, h2), b), t(g.conj(h1, h2), g.conj(h1, b)), t(h1, b)});
  for (Elem a : h.elements())
    for (Elem k1 : k.elements())
      for (Elem k2 : k.elements())
        rels.push_back({-t(a, g.mul(k1, k2)), t(a, k1), t(g.conj(k1, a), g.conj(k1, k2))});

  return {Presentation(nh * nk, std::move(rels)), nh, nk};
}

std::size_t TensorData::symbol_of(Elem h, Elem k) const {
  if (!H.contains(h)) throw ElementOutOfRange(std::to_string(h) + " is not in H");
  if (!K.contains(k)) throw ElementOutOfRange(std::to_string(k) + " is not in K");
  return H.index_of(h) * K.size() + K.index_of(k);
}

TensorData tensor_square(const Subgroup& h, const Subgroup& k, std::size_t max_cosets) {
  TensorPresentation tp = tensor_presentation(h, k);
  EnumeratedGroup eg = todd_coxeter(tp.pres, max_cosets);
  const FiniteGroup& g = h.parent();
  const FiniteGroup& tg = *eg.group;
  const std::size_t n = tg.order();

  // Generator images under kappa, indexed by symbol.
  std::vector<Elem> gen_kappa(h.size() * k.size());
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = 0; j < k.size(); ++j)
      gen_kappa[i * k.size() + j] = g.commutator(h.elements()[i], k.elements()[j]);

  // Extend along a breadth-first spanning tree of the Cayley graph; the
  // homomorphism check below validates the result.
  constexpr Elem kUnset = std::numeric_limits<Elem>::max();
  std::vector<Elem> kappa(n, kUnset);
  kappa[0] = 0;
  std::deque<Elem> queue{0};
  while (!queue.empty()) {
    const Elem x = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < eg.genmap.size(); ++s) {
      const Elem y = tg.mul(x, eg.genmap[s]);
      if (kappa[y] == kUnset) {
        kappa[y] = g.mul(kappa[x], gen_kappa[s]);
        queue.push_back(y);
      }
    }
  }
  for (std::size_t s = 0; s < eg.genmap.size(); ++s)
    if (kappa[eg.genmap[s]] != gen_kappa[s]) throw InternalCheckFailed("kappa(h (x) k) != [h,k]");
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (kappa[tg.mul(x, y)] != g.mul(kappa[x], kappa[y]))
        throw InternalCheckFailed("kappa is not a homomorphism");

  Subgroup comm = relative_commutator(h, k);
  std::vector<bool> hit(g.order(), false);
  for (Elem x = 0; x < n; ++x) hit[kappa[x]] = true;
  for (Elem c = 0; c < g.order(); ++c)
    if (hit[c] != comm.contains(c)) throw InternalCheckFailed("image of kappa != [H,K]");

  std::vector<Elem> kernel;
  for (Elem x = 0; x < n; ++x)
    if (kappa[x] == 0) kernel.push_back(x);
  Subgroup j(eg.group, std::move(kernel));
  for (Elem z : j.elements())
    for (Elem s : eg.genmap)
      if (tg.mul(z, s) != tg.mul(s, z)) throw InternalCheckFailed("J is not central");
  if (n != j.size() * comm.size()) throw InternalCheckFailed("|H (x) K| != |J| |[H,K]|");

  return TensorData{h.parent_ptr(), h,        k, std::move(eg), std::move(kappa),
                    std::move(j),   std::move(comm)};
}

ExteriorData exterior_data(TensorData td) {
  const Subgroup meet = intersection(td.H, td.K);
  std::vector<Elem> diag;
  for (Elem x : meet.elements()) diag.push_back(td.tensor_element(x, x));
  Subgroup nabla = subgroup_closure(td.eg.group, diag);
  if (!nabla.is_subset_of(td.J)) throw InternalCheckFailed("nabla(H cap K) is not inside J");

  Quotient q = quotient_group(nabla);
  const FiniteGroup& wg = *q.group;
  constexpr Elem kUnset = std::numeric_limits<Elem>::max();
  std::vector<Elem> kappa_prime(wg.order(), kUnset);
  for (Elem x = 0; x < td.eg.group->order(); ++x) {
    Elem& slot = kappa_prime[q.projection[x]];
    if (slot == kUnset)
      slot = td.kappa[x];
    else if (slot != td.kappa[x])
      throw InternalCheckFailed("kappa' is not well defined on nabla cosets");
  }
  std::vector<Elem> kernel;
  for (Elem w = 0; w < wg.order(); ++w)
    if (kappa_prime[w] == 0) kernel.push_back(w);
  Subgroup m(q.group, std::move(kernel));
  if (wg.order() != m.size() * td.commutator_HK.size())
    throw InternalCheckFailed("|H ^ K| != |M| |[H,K]|");

  return ExteriorData{std::move(td), std::move(nabla), q.group, std::move(q.projection),
                      std::move(kappa_prime), std::move(m)};
}

bool vanishes(const ExteriorData& ed, Elem h, Elem k, Mode mode) {
  const Elem x = ed.base.tensor_element(h, k);
  return mode == Mode::tensor ? x == 0 : ed.projection[x] == 0;
}

}  // namespace tdeg
