#include "permsq/classify.hpp"

#include <algorithm>
#include <stdexcept>

#include "permsq/squares.hpp"

namespace permsq {

namespace {

bool only_odd(const CycleType& t) noexcept { return !t.has_even_cycle(); }

bool only_even(const CycleType& t) noexcept { return !t.has_odd_cycle(); }

/// Exactly one fixed point and every other cycle has even length.
bool one_fixed_point_rest_even(const CycleType& t) noexcept {
  if (t.count(1) != 1) return false;
  for (auto [len, mult] : t.multiplicities())
    if (len != 1 && len % 2 != 0) return false;
  return true;
}

}  // namespace

std::string ClassLabel::to_string() const {
  return (parity == Parity::EE ? "EE" : "OE") + std::to_string(type_index);
}

ClassLabel parse_label(std::string_view text) {
  if (text.size() == 3 && (text.substr(0, 2) == "EE" || text.substr(0, 2) == "OE") && text[2] >= '1' &&
      text[2] <= '3')
    return ClassLabel{text[0] == 'E' ? Parity::EE : Parity::OE, text[2] - '0'};
  throw std::invalid_argument("unknown class label \"" + std::string(text) + "\"");
}

const std::vector<ClassLabel>& all_labels() {
  static const std::vector<ClassLabel> labels = {
      {Parity::EE, 1}, {Parity::EE, 2}, {Parity::EE, 3}, {Parity::OE, 1}, {Parity::OE, 2}, {Parity::OE, 3},
  };
  return labels;
}

bool OddSupport::contains(Point x) const { return std::binary_search(elements.begin(), elements.end(), x); }

std::string OddSupport::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(elements[i]);
  }
  return out + "}";
}

Parity parity_class(const CycleType& t) noexcept {
  return t.even_cycle_count() % 2 == 0 ? Parity::EE : Parity::OE;
}

Parity parity_class(const Permutation& w) { return parity_class(cycle_type(w)); }

int ee_type(const CycleType& t) {
  if (parity_class(t) != Parity::EE)
    throw std::invalid_argument("ee_type: cycle type " + format_cycle_type(t) + " has an odd number of even cycles");
  if (only_odd(t)) return 2;
  if (t.n() % 2 == 0) return only_even(t) ? 1 : 3;
  return one_fixed_point_rest_even(t) ? 1 : 3;
}

int oe_type(const CycleType& t) {
  if (parity_class(t) != Parity::OE)
    throw std::invalid_argument("oe_type: cycle type " + format_cycle_type(t) + " has an even number of even cycles");
  const int fixed = t.count(1);
  if (t.n() % 2 == 0) {
    if (only_even(t)) return 1;
    return fixed == 0 ? 2 : 3;
  }
  if (one_fixed_point_rest_even(t)) return 1;
  return fixed == 1 ? 2 : 3;
}

ClassLabel classify(const CycleType& t) {
  const Parity p = parity_class(t);
  return ClassLabel{p, p == Parity::EE ? ee_type(t) : oe_type(t)};
}

ClassLabel classify(const Permutation& w) { return classify(cycle_type(w)); }

std::optional<int> ps_type(const CycleType& t) {
  if (parity_class(t) != Parity::EE || !is_perfect_square(t)) return std::nullopt;
  return ee_type(t);
}

OddSupport odd_support(const Permutation& w) {
  OddSupport a;
  for (const Cycle& c : cycle_decompose(w).cycles)
    if (c.length() % 2 == 1) a.elements.insert(a.elements.end(), c.elements().begin(), c.elements().end());
  std::sort(a.elements.begin(), a.elements.end());
  return a;
}

bool ClassSelector::matches(const CycleType& t) const {
  if (classify(t) != label) return false;
  return !perfect_squares_only || is_perfect_square(t);
}

std::string ClassSelector::to_string() const {
  if (perfect_squares_only && label.parity == Parity::EE) return "PS" + std::to_string(label.type_index);
  return perfect_squares_only ? label.to_string() + "/PS" : label.to_string();
}

ClassSelector parse_selector(std::string_view text) {
  if (text.size() == 3 && text.substr(0, 2) == "PS" && text[2] >= '1' && text[2] <= '3')
    return ClassSelector{ClassLabel{Parity::EE, text[2] - '0'}, true};
  if (text.size() == 6 && text.substr(3) == "/PS") return ClassSelector{parse_label(text.substr(0, 3)), true};
  return ClassSelector{parse_label(text), false};
}

}  // namespace permsq
