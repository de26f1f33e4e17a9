#include "permsq/census.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "permsq/partitions.hpp"
#include "permsq/squares.hpp"

namespace permsq {

std::size_t label_index(const ClassLabel& label) {
  return static_cast<std::size_t>((label.parity == Parity::EE ? 0 : 3) + label.type_index - 1);
}

const Count& CensusReport::count(const ClassSelector& sel) const {
  const auto idx = label_index(sel.label);
  return sel.perfect_squares_only ? ps[idx] : all[idx];
}

bool CensusReport::all_pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const IdentityCheck& c) { return c.pass(); });
}

void finalize_census(CensusReport& r) {
  r.verdicts.clear();
  r.verdicts.push_back({"ee_type_sum", r.all[0] + r.all[1] + r.all[2], r.ee_total});
  r.verdicts.push_back({"oe_type_sum", r.all[3] + r.all[4] + r.all[5], r.oe_total});
  r.verdicts.push_back({"total_is_factorial", r.total(), factorial(r.n)});
  r.verdicts.push_back({"ps_sum_is_alpha", r.ps[0] + r.ps[1] + r.ps[2], r.alpha});
  r.verdicts.push_back({"ps_outside_ee", r.ps[3] + r.ps[4] + r.ps[5], Count(0)});
  r.verdicts.push_back({"ps2_eq_ee2", r.ps[1], r.all[1]});
  if (r.n > 1) r.verdicts.push_back({"ee_eq_oe", r.ee_total, r.oe_total});
}

Count alpha(int n) {
  if (n < 1) throw std::invalid_argument("alpha(n) requires n >= 1");
  Count total = 0;
  for (const Partition& p : partitions(n)) {
    const auto t = p.to_cycle_type();
    if (is_perfect_square(t)) total += class_size(t);
  }
  return total;
}

namespace {

struct Tally {
  std::array<Count, 6> all{};
  std::array<Count, 6> ps{};
};

void tally_partitions(const std::vector<Partition>& parts, std::size_t begin, std::size_t end, Tally& out) {
  for (std::size_t k = begin; k < end; ++k) {
    const auto t = parts[k].to_cycle_type();
    const auto size = class_size(t);
    const auto idx = label_index(classify(t));
    out.all[idx] += size;
    if (is_perfect_square(t)) out.ps[idx] += size;
  }
}

}  // namespace

CensusReport census(int n, int workers) {
  if (n < 1) throw std::invalid_argument("census requires n >= 1");
  const auto parts = partition_list(n);
  workers = std::clamp(workers, 1, static_cast<int>(std::max<std::size_t>(parts.size(), 1)));

  std::vector<Tally> tallies(static_cast<std::size_t>(workers));
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (parts.size() + static_cast<std::size_t>(workers) - 1) / static_cast<std::size_t>(workers);
    for (int w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(parts.size(), static_cast<std::size_t>(w) * chunk);
      const std::size_t end = std::min(parts.size(), begin + chunk);
      pool.emplace_back([&, begin, end, w] { tally_partitions(parts, begin, end, tallies[static_cast<std::size_t>(w)]); });
    }
  }

  CensusReport r;
  r.n = n;
  for (const Tally& t : tallies)
    for (std::size_t i = 0; i < 6; ++i) {
      r.all[i] += t.all[i];
      r.ps[i] += t.ps[i];
    }
  // Parity totals and alpha are summed separately from the per-type
  // buckets so the type-sum checks in finalize_census are not tautologies.
  for (const Partition& p : parts) {
    const auto t = p.to_cycle_type();
    (parity_class(t) == Parity::EE ? r.ee_total : r.oe_total) += class_size(t);
  }
  r.alpha = alpha(n);
  finalize_census(r);
  return r;
}

}  // namespace permsq
