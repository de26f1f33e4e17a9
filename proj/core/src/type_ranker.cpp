#include "permsq/type_ranker.hpp"

#include <algorithm>
#include <stdexcept>

namespace permsq {

namespace {

/// Lexicographic rank of the k-subset at `positions` (ascending indices into
/// a pool of size r).
Count combination_rank(const std::vector<int>& positions, int r) {
  const int k = static_cast<int>(positions.size());
  Count rank = 0;
  int next = 0;
  for (int i = 0; i < k; ++i) {
    for (int j = next; j < positions[static_cast<std::size_t>(i)]; ++j) rank += binomial(r - 1 - j, k - 1 - i);
    next = positions[static_cast<std::size_t>(i)] + 1;
  }
  return rank;
}

std::vector<int> combination_unrank(Count rank, int r, int k) {
  std::vector<int> positions;
  int pos = 0;
  for (int i = 0; i < k; ++i) {
    for (;; ++pos) {
      const Count c = binomial(r - 1 - pos, k - 1 - i);
      if (rank < c) break;
      rank -= c;
    }
    positions.push_back(pos++);
  }
  return positions;
}

}  // namespace

TypeRanker::TypeRanker(Partition lambda) : lambda_(std::move(lambda)) {
  for (std::size_t i = 0; i < lambda_.parts.size();) {
    std::size_t j = i;
    while (j < lambda_.parts.size() && lambda_.parts[j] == lambda_.parts[i]) ++j;
    groups_.push_back({lambda_.parts[i], static_cast<int>(j - i)});
    i = j;
  }
  int remaining = lambda_.n;
  for (auto [len, mult] : groups_) {
    const int block = len * mult;
    radices_.push_back(binomial(remaining, block));
    for (int c = 0; c < mult; ++c) {
      const int left = block - c * len;  // points of the block not yet placed
      for (int s = 1; s < len; ++s) radices_.push_back(left - s);
    }
    remaining -= block;
  }
  size_ = 1;
  for (const Count& r : radices_) size_ *= r;
}

Permutation TypeRanker::unrank(const Count& k) const {
  if (k < 0 || k >= size_) throw std::out_of_range("type rank out of range");
  std::vector<Count> digits(radices_.size());
  Count rest = k;
  for (std::size_t d = radices_.size(); d-- > 0;) {
    digits[d] = rest % radices_[d];
    rest /= radices_[d];
  }

  std::vector<Point> pool;
  for (Point x = 1; x <= lambda_.n; ++x) pool.push_back(x);
  std::vector<Cycle> cycles;
  std::size_t d = 0;
  for (auto [len, mult] : groups_) {
    const int block = len * mult;
    const auto chosen = combination_unrank(digits[d++], static_cast<int>(pool.size()), block);
    std::vector<Point> subset;
    for (auto it = chosen.rbegin(); it != chosen.rend(); ++it) {
      subset.push_back(pool[static_cast<std::size_t>(*it)]);
      pool.erase(pool.begin() + *it);
    }
    std::sort(subset.begin(), subset.end());
    for (int c = 0; c < mult; ++c) {
      std::vector<Point> elems{subset.front()};
      subset.erase(subset.begin());
      for (int s = 1; s < len; ++s) {
        const auto idx = static_cast<std::size_t>(digits[d++]);
        elems.push_back(subset[idx]);
        subset.erase(subset.begin() + static_cast<std::ptrdiff_t>(idx));
      }
      cycles.emplace_back(std::move(elems));
    }
  }
  return from_cycles(std::max(lambda_.n, 1), cycles);
}

Count TypeRanker::rank(const Permutation& w) const {
  if (partition_of(cycle_type(w)) != lambda_)
    throw std::invalid_argument("permutation " + format_cycles(w) + " does not have the ranker's cycle type");

  const auto decomposition = cycle_decompose(w);
  std::vector<Point> pool;
  for (Point x = 1; x <= w.size(); ++x) pool.push_back(x);

  Count rank = 0;
  std::size_t d = 0;
  auto push_digit = [&](const Count& digit) { rank = rank * radices_[d++] + digit; };

  for (auto [len, mult] : groups_) {
    std::vector<Point> subset;
    for (const Cycle& c : decomposition.cycles)
      if (c.length() == len) subset.insert(subset.end(), c.elements().begin(), c.elements().end());
    std::sort(subset.begin(), subset.end());

    std::vector<int> positions;
    for (Point x : subset)
      positions.push_back(static_cast<int>(std::lower_bound(pool.begin(), pool.end(), x) - pool.begin()));
    push_digit(combination_rank(positions, static_cast<int>(pool.size())));
    for (Point x : subset) pool.erase(std::lower_bound(pool.begin(), pool.end(), x));

    while (!subset.empty()) {
      Point x = subset.front();
      subset.erase(subset.begin());
      for (int s = 1; s < len; ++s) {
        x = w(x);
        const auto it = std::lower_bound(subset.begin(), subset.end(), x);
        push_digit(Count(it - subset.begin()));
        subset.erase(it);
      }
    }
  }
  return rank;
}

ClassIndex::ClassIndex(int n, ClassSelector selector) : n_(n), selector_(selector) {
  if (n < 1) throw std::invalid_argument("class index requires n >= 1");
  size_ = 0;
  for (const Partition& p : partitions(n)) {
    if (!selector_.matches(p.to_cycle_type())) continue;
    offsets_.push_back(size_);
    rankers_.emplace_back(p);
    size_ += rankers_.back().size();
  }
}

Permutation ClassIndex::unrank(const Count& k) const {
  if (k < 0 || k >= size_) throw std::out_of_range("class rank out of range");
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), k);
  const auto idx = static_cast<std::size_t>(it - offsets_.begin()) - 1;
  return rankers_[idx].unrank(k - offsets_[idx]);
}

Count ClassIndex::rank(const Permutation& w) const {
  if (w.size() != n_) throw std::invalid_argument("permutation size differs from the class index's n");
  const auto lambda = partition_of(cycle_type(w));
  for (std::size_t i = 0; i < rankers_.size(); ++i)
    if (rankers_[i].partition() == lambda) return offsets_[i] + rankers_[i].rank(w);
  throw std::invalid_argument(format_cycles(w) + " is not in class " + selector_.to_string());
}

namespace {

void check_pairable(const ClassIndex& small, const ClassIndex& big) {
  if (big.size() != small.size() * (small.n() + 1))
    throw std::invalid_argument("class " + small.selector().to_string() + " sizes at n = " + std::to_string(small.n()) +
                                " and " + std::to_string(big.n()) + " are not in ratio " + std::to_string(big.n()));
}

}  // namespace

Permutation canonical_pair(const ClassSelector& selector, const Permutation& w, Point i) {
  const int m = w.size();
  if (m % 2 != 0) throw std::invalid_argument("canonical_pair expects a permutation of even size");
  if (i < 1 || i > m + 1) throw std::invalid_argument("pair index outside [1, " + std::to_string(m + 1) + "]");
  const ClassIndex small(m, selector);
  const ClassIndex big(m + 1, selector);
  check_pairable(small, big);
  return big.unrank(Count(i - 1) * small.size() + small.rank(w));
}

PairPreimage canonical_unpair(const ClassSelector& selector, const Permutation& v) {
  const int big_n = v.size();
  if (big_n % 2 != 1 || big_n < 3) throw std::invalid_argument("canonical_unpair expects a permutation of odd size >= 3");
  const ClassIndex small(big_n - 1, selector);
  const ClassIndex big(big_n, selector);
  check_pairable(small, big);
  const Count g = big.rank(v);
  return {small.unrank(g % small.size()), static_cast<Point>(g / small.size()) + 1};
}

}  // namespace permsq
