#include "permsq/squares.hpp"

#include <map>
#include <stdexcept>

namespace permsq {

bool is_perfect_square(const CycleType& t) noexcept {
  for (auto [len, mult] : t.multiplicities())
    if (len % 2 == 0 && mult % 2 != 0) return false;
  return true;
}

bool is_perfect_square(const Permutation& w) { return is_perfect_square(cycle_type(w)); }

Permutation cycle_power(const Cycle& c, int k, int n) {
  if (k < 1) throw std::invalid_argument("cycle power exponent must be positive");
  auto e = c.elements();
  const auto m = e.size();
  std::vector<Point> image(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = i + 1;
  const auto shift = static_cast<std::size_t>(k) % m;
  for (std::size_t j = 0; j < m; ++j) {
    if (e[j] > n) throw std::invalid_argument("cycle element exceeds n");
    image[static_cast<std::size_t>(e[j] - 1)] = e[(j + shift) % m];
  }
  return Permutation::from_images(std::move(image));
}

std::optional<Permutation> square_root(const Permutation& w) {
  const int n = w.size();
  const auto decomposition = cycle_decompose(w);

  std::vector<Point> root(static_cast<std::size_t>(n));
  std::map<int, std::vector<const Cycle*>> even_by_length;

  for (const Cycle& c : decomposition.cycles) {
    auto e = c.elements();
    const auto m = e.size();
    if (m % 2 == 0) {
      even_by_length[c.length()].push_back(&c);
      continue;
    }
    const auto shift = (m + 1) / 2;
    for (std::size_t j = 0; j < m; ++j) root[static_cast<std::size_t>(e[j] - 1)] = e[(j + shift) % m];
  }

  for (const auto& [len, group] : even_by_length) {
    if (group.size() % 2 != 0) return std::nullopt;
    // Cycles arrive sorted by minimum element from cycle_decompose.
    for (std::size_t p = 0; p + 1 < group.size(); p += 2) {
      auto a = group[p]->elements();
      auto b = group[p + 1]->elements();
      const auto m = a.size();
      for (std::size_t j = 0; j < m; ++j) {
        root[static_cast<std::size_t>(a[j] - 1)] = b[j];
        root[static_cast<std::size_t>(b[j] - 1)] = a[(j + 1) % m];
      }
    }
  }
  return Permutation::from_images(std::move(root));
}

}  // namespace permsq
