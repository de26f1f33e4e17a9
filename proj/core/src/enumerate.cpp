#include "permsq/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "permsq/maps.hpp"

namespace permsq {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

/// Splits [0, total) into `workers` contiguous ranges run on separate threads.
template <class Fn>
void run_chunks(std::uint64_t total, int workers, Fn&& fn) {
  workers = std::max(1, workers);
  if (workers == 1 || total < 2) {
    fn(std::uint64_t{0}, total, 0);
    return;
  }
  const auto w = static_cast<std::uint64_t>(workers);
  const std::uint64_t chunk = (total + w - 1) / w;
  std::vector<std::jthread> pool;
  for (int k = 0; k < workers; ++k) {
    const std::uint64_t begin = std::min(total, static_cast<std::uint64_t>(k) * chunk);
    const std::uint64_t end = std::min(total, begin + chunk);
    pool.emplace_back([&fn, begin, end, k] { fn(begin, end, k); });
  }
}

void check_support(const OddSupport& a, int ground) {
  for (std::size_t k = 0; k < a.elements.size(); ++k) {
    const Point x = a.elements[k];
    if (x < 1 || x > ground) fail("support element " + std::to_string(x) + " outside [1, " + std::to_string(ground) + "]");
    if (k && a.elements[k - 1] >= x) fail("support must be strictly increasing");
  }
}

/// Validates |A| = 2c+1 with 1 <= c <= n-1 and returns c.
int admissible_c(int n, const OddSupport& a) {
  check_support(a, 2 * n + 1);
  if (a.size() % 2 == 0) fail("|A| = " + std::to_string(a.size()) + " is even; it must be 2c+1");
  const int c = (a.size() - 1) / 2;
  if (c < 1 || c > n - 1)
    fail("|A| = " + std::to_string(a.size()) + " gives c = " + std::to_string(c) + ", outside 1 <= c <= " +
         std::to_string(n - 1));
  return c;
}

}  // namespace

EnumerationLimits EnumerationLimits::from_env() {
  EnumerationLimits limits;
  if (const char* raw = std::getenv(kEnvVar); raw && *raw) {
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (*end != '\0' || v < 1 || v > 20) throw std::invalid_argument(std::string(kEnvVar) + " must be an integer in [1, 20]");
    limits.cap = static_cast<int>(v);
  }
  return limits;
}

void EnumerationLimits::check(int n, const std::string& what) const {
  if (n < 1 || n > cap)
    throw std::out_of_range(what + ": n = " + std::to_string(n) + " outside the enumeration cap [1, " +
                            std::to_string(cap) + "]");
}

std::uint64_t factorial_u64(int n) {
  if (n < 0 || n > 20) throw std::out_of_range("factorial_u64 defined for 0 <= n <= 20");
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::uint64_t lex_rank(const Permutation& w) {
  const int n = w.size();
  std::uint64_t rank = 0;
  for (int i = 1; i <= n; ++i) {
    std::uint64_t smaller = 0;
    for (int j = i + 1; j <= n; ++j)
      if (w(j) < w(i)) ++smaller;
    rank = rank * static_cast<std::uint64_t>(n - i + 1) + smaller;
  }
  return rank;
}

Permutation lex_unrank(int n, std::uint64_t rank) {
  if (rank >= factorial_u64(n)) throw std::out_of_range("lexicographic rank out of range");
  std::vector<Point> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<Point> image;
  image.reserve(pool.size());
  for (int i = n; i >= 1; --i) {
    const std::uint64_t f = factorial_u64(i - 1);
    const auto idx = static_cast<std::ptrdiff_t>(rank / f);
    rank %= f;
    image.push_back(pool[static_cast<std::size_t>(idx)]);
    pool.erase(pool.begin() + idx);
  }
  return Permutation::from_images(std::move(image));
}

void for_each_permutation_in_range(int n, std::uint64_t first, std::uint64_t last,
                                   const std::function<void(const Permutation&)>& visit) {
  if (first >= last) return;
  const auto start = lex_unrank(n, first);
  std::vector<Point> image(start.images().begin(), start.images().end());
  for (std::uint64_t r = first; r < last; ++r) {
    visit(Permutation::from_images(image));
    std::next_permutation(image.begin(), image.end());
  }
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit,
                          const EnumerationLimits& limits) {
  limits.check(n, "for_each_permutation");
  for_each_permutation_in_range(n, 0, factorial_u64(n), visit);
}

std::vector<Permutation> all_permutations(int n, const EnumerationLimits& limits) {
  std::vector<Permutation> out;
  limits.check(n, "all_permutations");
  out.reserve(factorial_u64(n));
  for_each_permutation(n, [&](const Permutation& w) { out.push_back(w); }, limits);
  return out;
}

GroupTable::GroupTable(int n, const EnumerationLimits& limits, int workers) : n_(n) {
  limits.check(n, "GroupTable");
  const std::uint64_t total = factorial_u64(n);
  labels_.assign(total, 0);
  odd_masks_.assign(total, 0);
  workers = std::max(1, workers);
  std::vector<std::vector<std::uint8_t>> marks(static_cast<std::size_t>(workers));

  run_chunks(total, workers, [&](std::uint64_t begin, std::uint64_t end, int k) {
    auto& mine = marks[static_cast<std::size_t>(k)];
    mine.assign(total, 0);
    std::uint64_t r = begin;
    for_each_permutation_in_range(n, begin, end, [&](const Permutation& u) {
      odd_masks_[r] = support_mask(odd_support(u));
      labels_[r++] = static_cast<std::uint8_t>(label_index(classify(u)));
      mine[lex_rank(square(u))] = 1;
    });
  });

  squares_.assign(total, 0);
  for (const auto& mine : marks)
    for (std::uint64_t r = 0; r < total; ++r) squares_[r] |= mine[r];
}

std::uint32_t support_mask(const OddSupport& a) {
  std::uint32_t mask = 0;
  for (Point x : a.elements) {
    if (x < 1 || x > 32) throw std::out_of_range("support point outside the 32-bit mask");
    mask |= std::uint32_t{1} << (x - 1);
  }
  return mask;
}

const GroupTable& shared_group_table(int n, const EnumerationLimits& limits) {
  limits.check(n, "shared_group_table");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GroupTable>> tables;
  std::lock_guard lock(mutex);
  auto& slot = tables[n];
  if (!slot) slot = std::make_unique<GroupTable>(n, limits);
  return *slot;
}

ClassLabel GroupTable::label(std::uint64_t rank) const { return all_labels()[labels_[rank]]; }

bool GroupTable::matches(std::uint64_t rank, const ClassSelector& sel) const {
  if (labels_[rank] != label_index(sel.label)) return false;
  return !sel.perfect_squares_only || is_square(rank);
}

std::uint64_t GroupTable::count(const ClassSelector& sel) const {
  std::uint64_t c = 0;
  for (std::uint64_t r = 0; r < size(); ++r)
    if (matches(r, sel)) ++c;
  return c;
}

std::uint64_t GroupTable::square_count() const {
  return static_cast<std::uint64_t>(std::count(squares_.begin(), squares_.end(), std::uint8_t{1}));
}

Count brute_alpha(int n, const EnumerationLimits& limits, int workers) {
  limits.check(n, "brute_alpha");
  return GroupTable(n, limits, workers).square_count();
}

CensusReport brute_census(int n, const EnumerationLimits& limits, int workers) {
  limits.check(n, "brute_census");
  const GroupTable table(n, limits, workers);
  std::array<std::uint64_t, 6> all{}, ps{};
  std::uint64_t ee = 0, oe = 0;
  for (std::uint64_t r = 0; r < table.size(); ++r) {
    const auto label = table.label(r);
    const auto idx = label_index(label);
    ++all[idx];
    if (table.is_square(r)) ++ps[idx];
    // Parity is re-derived from the permutation so the type sums are checked
    // against an independent total.
    (parity_class(lex_unrank(n, r)) == Parity::EE ? ee : oe) += 1;
  }
  CensusReport report;
  report.n = n;
  for (std::size_t i = 0; i < 6; ++i) {
    report.all[i] = all[i];
    report.ps[i] = ps[i];
  }
  report.ee_total = ee;
  report.oe_total = oe;
  report.alpha = table.square_count();
  finalize_census(report);
  return report;
}

DBijectionVerdict verify_d_bijection(const ClassSelector& selector, int m, const EnumerationLimits& limits) {
  static const std::vector<std::string> supported = {"EE1", "PS1", "OE1", "OE2"};
  const auto name = selector.to_string();
  if (std::find(supported.begin(), supported.end(), name) == supported.end())
    fail("class " + name + " contains permutations with 1-cycles; adding-and-swapping applies only to EE1, PS1, OE1, OE2");
  if (m < 2 || m % 2 != 0) fail("source size must be even and at least 2, got " + std::to_string(m));
  limits.check(m + 1, "verify_d_bijection");

  const GroupTable& source = shared_group_table(m, limits);
  const GroupTable& target = shared_group_table(m + 1, limits);

  DBijectionVerdict v;
  v.selector = selector;
  v.source_size = m;
  v.target = target.count(selector);
  std::vector<std::uint8_t> hit(target.size(), 0);
  for (std::uint64_t r = 0; r < source.size(); ++r) {
    if (!source.matches(r, selector)) continue;
    ++v.sources;
    const auto w = lex_unrank(m, r);
    for (Point i = 1; i <= m + 1; ++i) {
      const auto image = add_and_swap(w, i);
      ++v.images;
      const auto ir = lex_rank(image);
      if (!hit[ir]) ++v.distinct;
      hit[ir] = 1;
      if (!target.matches(ir, selector)) ++v.outside_target;
      const auto back = add_and_swap_inverse(image);
      if (back.w != w || back.i != i) ++v.inverse_failures;
    }
  }
  return v;
}

std::vector<OddSupport> admissible_supports(int n) {
  std::vector<OddSupport> out;
  const int ground = 2 * n + 1;
  for (int c = 1; c <= n - 1; ++c) {
    const int k = 2 * c + 1;
    std::vector<bool> pick(static_cast<std::size_t>(ground), false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
      OddSupport a;
      for (int x = 0; x < ground; ++x)
        if (pick[static_cast<std::size_t>(x)]) a.elements.push_back(x + 1);
      out.push_back(std::move(a));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  std::sort(out.begin(), out.end(), [](const OddSupport& a, const OddSupport& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements < b.elements;
  });
  return out;
}

Equation2Verdict verify_equation2(int n, const OddSupport& support, Point removed, const EnumerationLimits& limits) {
  const int c = admissible_c(n, support);
  if (!support.contains(removed)) fail("a = " + std::to_string(removed) + " is not in A = " + support.to_string());
  limits.check(2 * n + 1, "verify_equation2");

  Equation2Verdict v;
  v.n = n;
  v.support = support;
  v.removed = removed;
  v.factor = 2 * c + 1;

  std::vector<Point> rest_of_ground;
  for (Point x = 1; x <= 2 * n + 1; ++x)
    if (x != removed) rest_of_ground.push_back(x);
  const auto into_even = Relabeling::onto_prefix(rest_of_ground);
  for (Point x : support.elements)
    if (x != removed) v.relabeled.elements.push_back(into_even(x));

  const ClassSelector type3{ClassLabel{Parity::EE, 3}, false};
  auto tally = [&](int size, const OddSupport& target, Count& ee, Count& ps) {
    const GroupTable& table = shared_group_table(size, limits);
    const auto mask = support_mask(target);
    std::uint64_t all = 0, squares = 0;
    for (std::uint64_t r = 0; r < table.size(); ++r) {
      if (table.odd_support_mask(r) != mask || !table.matches(r, type3)) continue;
      ++all;
      if (table.is_square(r)) ++squares;
    }
    ee = all;
    ps = squares;
  };

  Count even_all, even_ps;
  tally(2 * n + 1, support, v.lhs_ee, v.lhs_ps);
  tally(2 * n, v.relabeled, even_all, even_ps);
  v.rhs_ee = v.factor * even_all;
  v.rhs_ps = v.factor * even_ps;
  return v;
}

Lemma41Verdict verify_lemma41(int n, const OddSupport& support, const EnumerationLimits& limits) {
  const int c = admissible_c(n, support);
  limits.check(2 * n + 1, "verify_lemma41");

  const int big = 2 * n + 1;
  const int even_size = 2 * n - 2 * c;
  const int odd_size = 2 * c + 1;
  const GroupTable& big_table = shared_group_table(big, limits);
  const GroupTable& even_table = shared_group_table(even_size, limits);
  const GroupTable& odd_table = shared_group_table(odd_size, limits);
  const auto mask = support_mask(support);

  const ClassSelector ee1{ClassLabel{Parity::EE, 1}, false};
  const ClassSelector ps1{ClassLabel{Parity::EE, 1}, true};
  const ClassSelector ee2{ClassLabel{Parity::EE, 2}, false};
  const ClassSelector ee3{ClassLabel{Parity::EE, 3}, false};

  Lemma41Verdict v;
  v.n = n;
  v.support = support;
  v.product_count = even_table.count(ee1) * odd_table.count(ee2);
  v.ps_product_count = even_table.count(ps1) * odd_table.count(ee2);

  std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
  for (std::uint64_t r = 0; r < big_table.size(); ++r) {
    if (big_table.odd_support_mask(r) != mask || !big_table.matches(r, ee3)) continue;
    const auto eta = lex_unrank(big, r);
    ++v.class_count;
    const bool eta_square = big_table.is_square(r);
    if (eta_square) ++v.ps_class_count;

    const auto parts = split_type3(eta);
    const auto er = lex_rank(parts.even_part);
    const auto orank = lex_rank(parts.odd_part);
    if (!seen.emplace(er, orank).second) ++v.collisions;
    if (!even_table.matches(er, ee1) || !odd_table.matches(orank, ee2)) ++v.outside_product;
    if (eta_square != even_table.is_square(er) || !odd_table.is_square(orank)) ++v.ps_mismatches;
    if (join_type3(big, parts.support, parts.even_part, parts.odd_part) != eta) ++v.round_trip_failures;
  }
  return v;
}

}  // namespace permsq
