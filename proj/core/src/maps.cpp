#include "permsq/maps.hpp"

#include <algorithm>
#include <stdexcept>

namespace permsq {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

void check_ground_set(const std::vector<Point>& s, const char* which) {
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] < 1) fail(std::string("relabeling ") + which + " contains a non-positive point");
    if (k && s[k - 1] >= s[k]) fail(std::string("relabeling ") + which + " is not strictly increasing");
  }
}

std::vector<Point> iota_points(int k) {
  std::vector<Point> v(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  return v;
}

}  // namespace

Relabeling::Relabeling(std::vector<Point> source, std::vector<Point> target)
    : source_(std::move(source)), target_(std::move(target)) {
  if (source_.size() != target_.size()) fail("relabeling source and target differ in size");
  check_ground_set(source_, "source");
  check_ground_set(target_, "target");
}

Relabeling Relabeling::onto_prefix(std::vector<Point> source) {
  auto target = iota_points(static_cast<int>(source.size()));
  return Relabeling(std::move(source), std::move(target));
}

Relabeling Relabeling::from_prefix(std::vector<Point> target) {
  auto source = iota_points(static_cast<int>(target.size()));
  return Relabeling(std::move(source), std::move(target));
}

Point Relabeling::operator()(Point x) const {
  auto it = std::lower_bound(source_.begin(), source_.end(), x);
  if (it == source_.end() || *it != x) throw std::out_of_range("point " + std::to_string(x) + " not in relabeling source");
  return target_[static_cast<std::size_t>(it - source_.begin())];
}

Permutation relabel(const Permutation& w, const Relabeling& r) {
  return relabel(w, r, r.target().empty() ? 1 : r.target().back());
}

Permutation relabel(const Permutation& w, const Relabeling& r, int target_size) {
  const auto& src = r.source();
  if (!r.target().empty() && r.target().back() > target_size)
    fail("relabeling target exceeds the requested size " + std::to_string(target_size));
  if (!src.empty() && src.back() > w.size()) fail("relabeling source exceeds the permutation's domain");
  std::vector<bool> in_source(static_cast<std::size_t>(w.size()) + 1, false);
  for (Point x : src) in_source[static_cast<std::size_t>(x)] = true;
  for (Point x = 1; x <= w.size(); ++x) {
    const bool inside = in_source[static_cast<std::size_t>(x)];
    if (!inside && w(x) != x) fail("permutation moves point " + std::to_string(x) + " outside the relabeling source");
    if (inside && !in_source[static_cast<std::size_t>(w(x))])
      fail("permutation maps point " + std::to_string(x) + " out of the relabeling source");
  }
  std::vector<Point> image = iota_points(target_size);
  for (Point x : src) image[static_cast<std::size_t>(r(x) - 1)] = r(w(x));
  return Permutation::from_images(std::move(image));
}

Permutation restrict_to(const Permutation& w, const std::vector<Point>& subset) {
  std::vector<Point> image = iota_points(w.size());
  std::vector<bool> member(static_cast<std::size_t>(w.size()) + 1, false);
  for (Point x : subset) member.at(static_cast<std::size_t>(x)) = true;
  for (Point x : subset) {
    if (!member[static_cast<std::size_t>(w(x))]) fail("subset is not closed under the permutation");
    image[static_cast<std::size_t>(x - 1)] = w(x);
  }
  return Permutation::from_images(std::move(image));
}

Permutation transposition(int n, Point a, Point b) {
  if (a < 1 || b < 1 || a > n || b > n) fail("transposition points outside [1, n]");
  std::vector<Point> image = iota_points(n);
  std::swap(image[static_cast<std::size_t>(a - 1)], image[static_cast<std::size_t>(b - 1)]);
  return Permutation::from_images(std::move(image));
}

Permutation add_and_swap(const Permutation& w, Point i) {
  const int m = w.size();
  for (Point x = 1; x <= m; ++x)
    if (w(x) == x) fail("add_and_swap requires a permutation without 1-cycles; (" + std::to_string(x) + ") is fixed");
  if (i < 1 || i > m + 1) fail("add_and_swap index " + std::to_string(i) + " outside [1, " + std::to_string(m + 1) + "]");

  std::vector<Point> image(w.images().begin(), w.images().end());
  image.push_back(m + 1);
  const auto extended = Permutation::from_images(std::move(image));
  if (i == m + 1) return extended;
  const auto t = transposition(m + 1, i, m + 1);
  return compose(t, compose(extended, t));
}

AddSwapPreimage add_and_swap_inverse(const Permutation& v) {
  const int big = v.size();
  Point fixed = 0;
  int fixed_count = 0;
  for (Point x = 1; x <= big; ++x)
    if (v(x) == x) {
      fixed = x;
      ++fixed_count;
    }
  if (fixed_count != 1)
    fail("add_and_swap_inverse requires exactly one 1-cycle, found " + std::to_string(fixed_count));
  if (big < 2) fail("add_and_swap_inverse requires at least two points");
  const auto t = transposition(big, fixed, big);
  const auto moved = compose(t, compose(v, t));
  std::vector<Point> image(moved.images().begin(), moved.images().end() - 1);
  return {Permutation::from_images(std::move(image)), fixed};
}

Type3Split split_type3(const Permutation& eta) {
  const auto t = cycle_type(eta);
  if (!t.has_even_cycle()) fail("split_type3: permutation has no even cycle");
  if (!t.has_odd_cycle()) fail("split_type3: permutation has no odd cycle");

  OddSupport support = odd_support(eta);
  std::vector<Point> complement;
  for (Point x = 1; x <= eta.size(); ++x)
    if (!support.contains(x)) complement.push_back(x);

  auto odd_part = relabel(restrict_to(eta, support.elements), Relabeling::onto_prefix(support.elements), support.size());
  const int even_size = static_cast<int>(complement.size());
  auto even_part = relabel(restrict_to(eta, complement), Relabeling::onto_prefix(complement), even_size);
  return {std::move(support), std::move(even_part), std::move(odd_part)};
}

Permutation join_type3(int n, const OddSupport& support, const Permutation& even_part, const Permutation& odd_part) {
  if (support.size() != odd_part.size()) fail("join_type3: support size differs from the odd part's size");
  if (n - support.size() != even_part.size()) fail("join_type3: complement size differs from the even part's size");
  const auto even_type = cycle_type(even_part);
  const auto odd_type = cycle_type(odd_part);
  if (even_type.has_odd_cycle()) fail("join_type3: even part contains an odd cycle");
  if (odd_type.has_even_cycle()) fail("join_type3: odd part contains an even cycle");
  if (!support.elements.empty() && support.elements.back() > n) fail("join_type3: support exceeds [n]");

  std::vector<Point> complement;
  for (Point x = 1; x <= n; ++x)
    if (!support.contains(x)) complement.push_back(x);

  const auto odd_lifted = relabel(odd_part, Relabeling::from_prefix(support.elements), n);
  const auto even_lifted = relabel(even_part, Relabeling::from_prefix(complement), n);
  return compose(odd_lifted, even_lifted);
}

Permutation parity_toggle(const Permutation& w) {
  if (w.size() < 2) fail("parity_toggle requires n >= 2");
  return compose(transposition(w.size(), 1, 2), w);
}

}  // namespace permsq
