#include "permsq/partitions.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace permsq {

Count factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  static std::mutex mutex;
  static std::vector<Count> memo{Count(1)};
  std::lock_guard lock(mutex);
  while (static_cast<int>(memo.size()) <= n) memo.push_back(memo.back() * static_cast<unsigned>(memo.size()));
  return memo[static_cast<std::size_t>(n)];
}

Count binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Count c = 1;
  for (int j = 1; j <= k; ++j) c = c * (n - k + j) / j;
  return c;
}

Partition Partition::from_parts(std::vector<int> parts) {
  int sum = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i && parts[i] > parts[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    sum += parts[i];
  }
  return Partition{sum, std::move(parts)};
}

CycleType Partition::to_cycle_type() const {
  std::map<int, int> mult;
  for (int p : parts) ++mult[p];
  return CycleType(n, std::move(mult));
}

Partition partition_of(const CycleType& t) {
  Partition p{t.n(), {}};
  for (auto it = t.multiplicities().rbegin(); it != t.multiplicities().rend(); ++it)
    p.parts.insert(p.parts.end(), static_cast<std::size_t>(it->second), it->first);
  return p;
}

PartitionRange::PartitionRange(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("cannot partition a negative number");
}

PartitionRange::iterator::iterator(int n) : done_(false) {
  current_.n = n;
  if (n > 0) current_.parts = {n};
}

PartitionRange::iterator& PartitionRange::iterator::operator++() {
  auto& a = current_.parts;
  // Strip trailing 1s; they are redistributed below.
  int remainder = 0;
  while (!a.empty() && a.back() == 1) {
    a.pop_back();
    ++remainder;
  }
  if (a.empty()) {
    done_ = true;
    return *this;
  }
  const int part = --a.back();
  ++remainder;
  while (remainder >= part) {
    a.push_back(part);
    remainder -= part;
  }
  if (remainder > 0) a.push_back(remainder);
  return *this;
}

std::vector<Partition> partition_list(int n) {
  std::vector<Partition> out;
  for (const auto& p : partitions(n)) out.push_back(p);
  return out;
}

Count class_size(const CycleType& t) {
  Count denominator = 1;
  for (auto [len, mult] : t.multiplicities()) {
    Count power = 1;
    for (int j = 0; j < mult; ++j) power *= len;
    denominator *= power * factorial(mult);
  }
  return factorial(t.n()) / denominator;
}

Count class_size(const Partition& lambda) {
  if (lambda.n == 0) return 1;
  return class_size(lambda.to_cycle_type());
}

}  // namespace permsq
