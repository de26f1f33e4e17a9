#include "permsq/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace permsq {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

}  // namespace

Permutation Permutation::identity(int n) {
  if (n < 1) fail("permutation size must be at least 1, got " + std::to_string(n));
  std::vector<Point> image(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(image));
}

Permutation Permutation::from_images(std::vector<Point> images) {
  const auto n = images.size();
  if (n == 0) fail("permutation size must be at least 1");
  std::vector<bool> seen(n + 1, false);
  for (Point v : images) {
    if (v < 1 || static_cast<std::size_t>(v) > n)
      fail("image " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
    if (seen[static_cast<std::size_t>(v)]) fail("image " + std::to_string(v) + " repeated");
    seen[static_cast<std::size_t>(v)] = true;
  }
  return Permutation(std::move(images));
}

Point Permutation::at(Point i) const {
  if (i < 1 || i > size()) throw std::out_of_range("point " + std::to_string(i) + " outside domain");
  return (*this)(i);
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i)
    inv[static_cast<std::size_t>(image_[i] - 1)] = static_cast<Point>(i + 1);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != static_cast<Point>(i + 1)) return false;
  return true;
}

Cycle::Cycle(std::vector<Point> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) fail("empty cycle");
  auto sorted = elements_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 1) fail("cycle element " + std::to_string(sorted.front()) + " is not positive");
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end())
    fail("element " + std::to_string(*dup) + " repeated within a cycle");
  std::rotate(elements_.begin(), std::min_element(elements_.begin(), elements_.end()), elements_.end());
}

CycleType::CycleType(int n, std::map<int, int> multiplicity) : n_(n), multiplicity_(std::move(multiplicity)) {
  long long total = 0;
  for (auto [len, mult] : multiplicity_) {
    if (len < 1 || mult < 1) fail("cycle lengths and multiplicities must be positive");
    total += static_cast<long long>(len) * mult;
  }
  if (total != n_) fail("cycle type sums to " + std::to_string(total) + ", expected " + std::to_string(n_));
}

int CycleType::count(int length) const noexcept {
  auto it = multiplicity_.find(length);
  return it == multiplicity_.end() ? 0 : it->second;
}

int CycleType::even_cycle_count() const noexcept {
  int c = 0;
  for (auto [len, mult] : multiplicity_)
    if (len % 2 == 0) c += mult;
  return c;
}

bool CycleType::has_even_cycle() const noexcept { return even_cycle_count() > 0; }

bool CycleType::has_odd_cycle() const noexcept {
  return std::any_of(multiplicity_.begin(), multiplicity_.end(), [](auto kv) { return kv.first % 2 == 1; });
}

Permutation compose(const Permutation& u, const Permutation& w) {
  if (u.size() != w.size())
    fail("cannot compose permutations of sizes " + std::to_string(u.size()) + " and " + std::to_string(w.size()));
  std::vector<Point> image(static_cast<std::size_t>(w.size()));
  for (Point i = 1; i <= w.size(); ++i) image[static_cast<std::size_t>(i - 1)] = u(w(i));
  return Permutation::from_images(std::move(image));
}

Permutation square(const Permutation& w) { return compose(w, w); }

CycleDecomposition cycle_decompose(const Permutation& w) {
  CycleDecomposition d;
  d.n = w.size();
  std::vector<bool> seen(static_cast<std::size_t>(w.size()) + 1, false);
  // Scanning starts in ascending order, so each cycle opens at its minimum
  // and the cycles come out sorted by minimum.
  for (Point s = 1; s <= w.size(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<Point> elems;
    for (Point x = s; !seen[static_cast<std::size_t>(x)]; x = w(x)) {
      seen[static_cast<std::size_t>(x)] = true;
      elems.push_back(x);
    }
    d.cycles.emplace_back(std::move(elems));
  }
  return d;
}

Permutation from_cycles(int n, std::span<const Cycle> cycles) {
  if (n < 1) fail("permutation size must be at least 1, got " + std::to_string(n));
  std::vector<Point> image(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = i + 1;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (const Cycle& c : cycles) {
    auto e = c.elements();
    for (std::size_t k = 0; k < e.size(); ++k) {
      Point x = e[k];
      if (x > n) fail("element " + std::to_string(x) + " exceeds n = " + std::to_string(n));
      if (used[static_cast<std::size_t>(x)]) fail("element " + std::to_string(x) + " repeated across cycles");
      used[static_cast<std::size_t>(x)] = true;
      image[static_cast<std::size_t>(x - 1)] = e[(k + 1) % e.size()];
    }
  }
  return Permutation::from_images(std::move(image));
}

Permutation from_cycles(const CycleDecomposition& d) { return from_cycles(d.n, d.cycles); }

CycleType cycle_type(const Permutation& w) {
  std::map<int, int> mult;
  std::vector<bool> seen(static_cast<std::size_t>(w.size()) + 1, false);
  for (Point s = 1; s <= w.size(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    int len = 0;
    for (Point x = s; !seen[static_cast<std::size_t>(x)]; x = w(x)) {
      seen[static_cast<std::size_t>(x)] = true;
      ++len;
    }
    ++mult[len];
  }
  return CycleType(w.size(), std::move(mult));
}

Permutation parse_cycles(std::string_view text, int n) {
  std::vector<Cycle> cycles;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char ch) {
    skip_ws();
    if (pos >= text.size() || text[pos] != ch)
      fail(std::string("expected '") + ch + "' at offset " + std::to_string(pos) + " in \"" + std::string(text) + "\"");
    ++pos;
  };
  auto read_int = [&] {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected an integer at offset " + std::to_string(start) + " in \"" + std::string(text) + "\"");
    if (pos - start > 9) fail("integer too large at offset " + std::to_string(start));
    return std::stoi(std::string(text.substr(start, pos - start)));
  };

  skip_ws();
  while (pos < text.size()) {
    expect('(');
    std::vector<Point> elems{read_int()};
    skip_ws();
    while (pos < text.size() && text[pos] == ',') {
      ++pos;
      elems.push_back(read_int());
      skip_ws();
    }
    expect(')');
    for (Point x : elems)
      if (x < 1 || x > n) fail("element " + std::to_string(x) + " outside [1, " + std::to_string(n) + "]");
    cycles.emplace_back(std::move(elems));
    skip_ws();
  }
  return from_cycles(n, cycles);
}

std::string format_cycles(const CycleDecomposition& d) {
  std::string out;
  for (const Cycle& c : d.cycles) {
    out += '(';
    bool first = true;
    for (Point x : c.elements()) {
      if (!first) out += ',';
      out += std::to_string(x);
      first = false;
    }
    out += ')';
  }
  return out;
}

std::string format_cycles(const Permutation& w) { return format_cycles(cycle_decompose(w)); }

std::string format_cycle_type(const CycleType& t) {
  std::string out = "{";
  bool first = true;
  for (auto [len, mult] : t.multiplicities()) {
    if (!first) out += ", ";
    out += std::to_string(len) + ":" + std::to_string(mult);
    first = false;
  }
  return out + "}";
}

}  // namespace permsq
