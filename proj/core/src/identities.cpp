#include "permsq/identities.hpp"

#include <algorithm>
#include <stdexcept>

namespace permsq {

namespace {

struct NamedIdentity {
  Identity id;
  const char* name;
};

constexpr NamedIdentity kNames[] = {
    {Identity::theorem1, "theorem1"}, {Identity::theorem2, "theorem2"}, {Identity::corollary, "corollary"},
    {Identity::lemma31, "lemma31"},   {Identity::lemma32, "lemma32"},   {Identity::remark31, "remark31"},
    {Identity::oe_types, "oe_types"}, {Identity::ps2_eq_ee2, "ps2_eq_ee2"},
};

bool doubling(Identity id) { return id != Identity::lemma31 && id != Identity::ps2_eq_ee2; }

}  // namespace

const std::vector<Identity>& all_identities() {
  static const std::vector<Identity> ids = [] {
    std::vector<Identity> v;
    for (auto [id, name] : kNames) v.push_back(id);
    return v;
  }();
  return ids;
}

std::string identity_name(Identity id) {
  for (auto [i, name] : kNames)
    if (i == id) return name;
  return "unknown";
}

std::optional<Identity> parse_identity(std::string_view name) {
  for (auto [id, n] : kNames)
    if (name == n) return id;
  return std::nullopt;
}

int identity_min_n(Identity id) { return id == Identity::lemma31 ? 2 : 1; }

std::vector<int> identity_sizes(Identity id, int n) {
  if (doubling(id)) return {2 * n, 2 * n + 1};
  return {n};
}

bool IdentityVerdict::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass(); });
}

const CensusReport& CachedCensus::operator()(int n) {
  auto it = cache_.find(n);
  if (it == cache_.end()) it = cache_.emplace(n, source_(n)).first;
  return it->second;
}

IdentityVerdict verify_identity(Identity id, int n, CachedCensus& census) {
  if (n < identity_min_n(id))
    throw std::invalid_argument(identity_name(id) + " requires n >= " + std::to_string(identity_min_n(id)));

  IdentityVerdict v{id, n, {}};
  if (!doubling(id)) {
    const auto& r = census(n);
    if (id == Identity::lemma31)
      v.checks.push_back({"EE=OE", r.ee_total, r.oe_total});
    else
      v.checks.push_back({"PS2=EE2", r.ps[1], r.all[1]});
    return v;
  }

  // The two references are taken in sequence; the cache is a std::map so
  // the first stays valid across the second insertion.
  const auto& odd = census(2 * n + 1);
  const auto& even = census(2 * n);
  const int factor = 2 * n + 1;
  auto add = [&](std::string name, const Count& big, const Count& small) {
    v.checks.push_back({std::move(name), big, small * factor});
  };

  switch (id) {
    case Identity::theorem1:
      for (int i = 0; i < 3; ++i) add("EE" + std::to_string(i + 1), odd.all[i], even.all[i]);
      break;
    case Identity::theorem2:
      for (int i = 0; i < 3; ++i) add("PS" + std::to_string(i + 1), odd.ps[i], even.ps[i]);
      break;
    case Identity::corollary:
      add("alpha", odd.alpha, even.alpha);
      break;
    case Identity::lemma32:
      add("EE", odd.ee_total, even.ee_total);
      break;
    case Identity::remark31:
      add("OE", odd.oe_total, even.oe_total);
      break;
    case Identity::oe_types:
      for (int i = 0; i < 3; ++i) add("OE" + std::to_string(i + 1), odd.all[3 + i], even.all[3 + i]);
      break;
    default:
      break;
  }
  return v;
}

IdentityVerdict verify_identity(Identity id, int n) {
  CachedCensus cached([](int m) { return census(m); });
  return verify_identity(id, n, cached);
}

}  // namespace permsq
