#include "tensordeg/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "tensordeg/errors.hpp"

namespace tdeg {

namespace {

constexpr std::size_t kMaxCatalogOrder = 4096;

using Table = std::vector<Elem>;

struct RawGroup {
  std::size_t n;
  Table table;
};

RawGroup cyclic(std::size_t n) {
  Table t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = static_cast<Elem>((i + j) % n);
  return {n, std::move(t)};
}

RawGroup dihedral(std::size_t n) {
  const std::size_t order = 2 * n;
  Table t(order * order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t i = x % n, a = x / n, k = y % n, b = y / n;
      // r^i s^a r^k s^b = r^(i +- k) s^(a+b)
      const std::size_t rot = a == 0 ? (i + k) % n : (i + n - k) % n;
      t[x * order + y] = static_cast<Elem>(rot + n * ((a + b) % 2));
    }
  return {order, std::move(t)};
}

RawGroup dicyclic(std::size_t n) {
  const std::size_t m = 2 * n, order = 4 * n;
  Table t(order * order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t i = x % m, a = x / m, k = y % m, b = y / m;
      // x a^k = a^-k x and x^2 = a^n
      std::size_t rot = a == 0 ? (i + k) % m : (i + m - k) % m;
      std::size_t xs = a + b;
      if (xs == 2) {
        rot = (rot + n) % m;
        xs = 0;
      }
      t[x * order + y] = static_cast<Elem>(rot + m * xs);
    }
  return {order, std::move(t)};
}

bool is_even(const std::vector<int>& p) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
  return inversions % 2 == 0;
}

RawGroup permutations(std::size_t degree, bool even_only) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(degree);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (!even_only || is_even(p)) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  const std::size_t n = perms.size();
  Table t(n * n);
  std::vector<int> prod(degree);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t i = 0; i < degree; ++i) prod[i] = perms[x][perms[y][i]];
      const auto it = std::lower_bound(perms.begin(), perms.end(), prod);
      t[x * n + y] = static_cast<Elem>(it - perms.begin());
    }
  return {n, std::move(t)};
}

RawGroup direct_product(const RawGroup& a, const RawGroup& b) {
  const std::size_t n = a.n * b.n;
  Table t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t xa = x / b.n, xb = x % b.n, ya = y / b.n, yb = y % b.n;
      t[x * n + y] = static_cast<Elem>(a.table[xa * a.n + ya] * b.n + b.table[xb * b.n + yb]);
    }
  return {n, std::move(t)};
}

std::optional<std::size_t> parse_index(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

RawGroup factor(std::string_view f, std::string_view whole) {
  if (f == "Q8") return dicyclic(2);
  if (f == "Q16") return dicyclic(4);
  auto numbered = [&](std::string_view prefix) -> std::optional<std::size_t> {
    if (f.substr(0, prefix.size()) != prefix) return std::nullopt;
    return parse_index(f.substr(prefix.size()));
  };
  if (auto n = numbered("Dic"); n && *n >= 1 && *n <= kMaxCatalogOrder / 4) return dicyclic(*n);
  if (auto n = numbered("C"); n && *n >= 1 && *n <= kMaxCatalogOrder) return cyclic(*n);
  if (auto n = numbered("D"); n && *n >= 1 && *n <= kMaxCatalogOrder / 2) return dihedral(*n);
  if (auto n = numbered("S"); n && *n >= 1 && *n <= 5) return permutations(*n, false);
  if (auto n = numbered("A"); n && *n >= 1 && *n <= 5) return permutations(*n, true);
  throw UnknownGroup(std::string(whole));
}

}  // namespace

GroupPtr catalog_group(std::string_view expr) {
  std::optional<RawGroup> acc;
  std::size_t start = 0;
  while (true) {
    const std::size_t stop = expr.find('x', start);
    const std::string_view f = expr.substr(start, stop == std::string_view::npos ? expr.npos : stop - start);
    RawGroup g = factor(f, expr);
    if (acc && acc->n * g.n > kMaxCatalogOrder) throw UnknownGroup(std::string(expr));
    acc = acc ? direct_product(*acc, g) : std::move(g);
    if (stop == std::string_view::npos) break;
    start = stop + 1;
  }
  return build_group(acc->n, std::move(acc->table), std::string(expr));
}

std::vector<std::string> default_catalog() {
  std::vector<std::string> names;
  for (int n = 1; n <= 12; ++n) names.push_back("C" + std::to_string(n));
  for (const char* g : {"C2xC2", "C2xC2xC2", "C4xC2", "C3xC3", "S3", "D4", "D5", "D6", "Q8", "A4", "Dic3"})
    names.emplace_back(g);
  return names;
}

}  // namespace tdeg
