// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "permsq/permsq.hpp"
#include "reference_table.hpp"

using namespace permsq;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what;
      pass = false;
    }
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Criterion 1: alpha(n) equals the published values for 2..17 in under 1 s.
void alpha_reference(Outcome& o) {
  const auto start = Clock::now();
  int compared = 0;
  for (const auto& [n, expected] : cli::reference_alpha()) {
    o.require(alpha(n).str() == expected, "alpha(" + std::to_string(n) + ")");
    ++compared;
  }
  const double t = seconds_since(start);
  o.require(compared == 16, "reference table has 16 entries");
  o.require(t < 1.0, "runtime under 1 s");
  o.detail << (o.pass ? "" : "; ") << compared << " values, " << t << " s";
}

/// Criterion 2: alpha(2n+1) = (2n+1) alpha(2n) from computed and embedded values.
void corollary_ratios(Outcome& o) {
  const auto& table = cli::reference_alpha();
  for (int n = 1; n <= 8; ++n) {
    o.require(alpha(2 * n + 1) == (2 * n + 1) * alpha(2 * n), "computed ratio at n=" + std::to_string(n));
    o.require(Count(table.at(2 * n + 1)) == (2 * n + 1) * Count(table.at(2 * n)),
              "embedded ratio at n=" + std::to_string(n));
  }
  o.detail << (o.pass ? "" : "; ") << "n=1..8, computed and embedded";
}

/// Criterion 3: enumeration and partition backends agree for n = 2..8.
void oracle_equivalence(Outcome& o) {
  const auto start = Clock::now();
  double at8 = 0;
  for (int n = 2; n <= 8; ++n) {
    const auto t0 = Clock::now();
    o.require(brute_alpha(n) == alpha(n), "brute_alpha(" + std::to_string(n) + ")");
    o.require(brute_census(n) == census(n), "brute_census(" + std::to_string(n) + ")");
    if (n == 8) at8 = seconds_since(t0);
  }
  o.require(at8 <= 30.0, "n=8 within 30 s");
  o.detail << (o.pass ? "" : "; ") << "n=2..8, " << seconds_since(start) << " s total, " << at8 << " s at n=8";
}

/// Criterion 4: literal squares match the cycle-type criterion for n <= 7.
void criterion_equivalence(Outcome& o) {
  std::uint64_t checked = 0, mismatches = 0;
  for (int n = 1; n <= 7; ++n) {
    const auto& table = shared_group_table(n);
    for (std::uint64_t r = 0; r < table.size(); ++r, ++checked)
      if (table.is_square(r) != is_perfect_square(cycle_type(lex_unrank(n, r)))) ++mismatches;
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  o.detail << (o.pass ? "" : "; ") << checked << " permutations, " << mismatches << " mismatches";
}

/// Criterion 5: square(square_root(w)) = w for every perfect square, n <= 8.
void constructive_roots(Outcome& o) {
  std::uint64_t roots = 0, failures = 0;
  for (int n = 1; n <= 8; ++n)
    for_each_permutation(n, [&](const Permutation& w) {
      if (!is_perfect_square(w)) return;
      ++roots;
      const auto u = square_root(w);
      if (!u || square(*u) != w) ++failures;
    });
  o.require(failures == 0, std::to_string(failures) + " failures");
  o.detail << (o.pass ? "" : "; ") << roots << " roots, " << failures << " failures";
}

/// Criterion 6: type-wise (2n+1) relations for EE and PS, both backends.
void type_relations(Outcome& o) {
  const auto start = Clock::now();
  CachedCensus partition([](int m) { return census(m); });
  for (auto id : {Identity::theorem1, Identity::theorem2})
    for (int n = 1; n <= 14; ++n)
      o.require(verify_identity(id, n, partition).pass(), identity_name(id) + " partition n=" + std::to_string(n));
  const double t = seconds_since(start);
  o.require(t < 1.0, "partition runtime under 1 s");

  CachedCensus brute([](int m) { return brute_census(m); });
  for (auto id : {Identity::theorem1, Identity::theorem2})
    for (int n = 1; n <= 4; ++n)
      o.require(verify_identity(id, n, brute).pass(), identity_name(id) + " brute n=" + std::to_string(n));

  const auto base = verify_identity(Identity::theorem1, 1, brute);
  o.require(base.checks.size() == 3 && base.checks[1].lhs == 3 && base.checks[1].rhs == 3 && brute(2).all[1] == 1,
            "base case |EE2(3)| = 3 = 3 |EE2(2)|");
  o.detail << (o.pass ? "" : "; ") << "partition n=1..14 in " << t << " s, brute n=1..4, base case 3 = 3*1";
}

/// Criterion 7: adding-and-swapping is a bijection onto the target class.
void d_bijection(Outcome& o) {
  int cases = 0;
  for (const char* name : {"EE1", "PS1", "OE1", "OE2"})
    for (int m : {2, 4, 6, 8}) {
      const auto v = verify_d_bijection(parse_selector(name), m);
      o.require(v.pass(), std::string(name) + " m=" + std::to_string(m));
      ++cases;
    }
  o.detail << (o.pass ? "" : "; ") << cases << " class/size cases";
}

/// Criterion 8: split/join isomorphism and the support-count relation at 2n+1 = 7.
void support_relations(Outcome& o) {
  int lemma = 0, eq = 0;
  for (const auto& a : admissible_supports(3)) {
    o.require(verify_lemma41(3, a).pass(), "split/join A=" + a.to_string());
    ++lemma;
    for (Point x : a.elements) {
      o.require(verify_equation2(3, a, x).pass(), "support count A=" + a.to_string() + " a=" + std::to_string(x));
      ++eq;
    }
  }
  o.detail << (o.pass ? "" : "; ") << lemma << " supports, " << eq << " (A, a) pairs";
}

/// Criterion 9: parity-class halves and the EE/OE (2n+1) relations.
void parity_relations(Outcome& o) {
  for (int n = 2; n <= 20; ++n) {
    const auto r = census(n);
    o.require(r.ee_total == r.oe_total && 2 * r.ee_total == factorial(n), "|EE| = |OE| = n!/2 at n=" + std::to_string(n));
  }
  CachedCensus partition([](int m) { return census(m); });
  for (auto id : {Identity::lemma32, Identity::remark31, Identity::oe_types})
    for (int n = 1; n <= 14; ++n)
      o.require(verify_identity(id, n, partition).pass(), identity_name(id) + " n=" + std::to_string(n));
  o.detail << (o.pass ? "" : "; ") << "halves n=2..20, relations n=1..14";
}

/// Criterion 10: the type-2 perfect squares are exactly EE type 2.
void ps2_equals_ee2(Outcome& o) {
  const ClassLabel ee2{Parity::EE, 2};
  std::uint64_t checked = 0;
  for (int n = 1; n <= 8; ++n) {
    const auto& table = shared_group_table(n);
    for (std::uint64_t r = 0; r < table.size(); ++r, ++checked) {
      const bool in_ee2 = table.label(r) == ee2;
      o.require((in_ee2 && table.is_square(r)) == in_ee2, "set equality at n=" + std::to_string(n));
    }
  }
  for (int n = 1; n <= 20; ++n) o.require(verify_identity(Identity::ps2_eq_ee2, n).pass(), "counts at n=" + std::to_string(n));
  o.detail << (o.pass ? "" : "; ") << "sets n<=8 (" << checked << " permutations), counts n<=20";
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"alpha reference values", alpha_reference},
      {"odd/even alpha ratio", corollary_ratios},
      {"oracle equivalence", oracle_equivalence},
      {"square criterion", criterion_equivalence},
      {"constructive roots", constructive_roots},
      {"EE and PS type relations", type_relations},
      {"adding-and-swapping bijection", d_bijection},
      {"odd-support relations", support_relations},
      {"parity-class relations", parity_relations},
      {"PS2 = EE2", ps2_equals_ee2},
  };
  int failed = 0, index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome o;
    try {
      check(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << index << " " << name << ": " << o.detail.str() << std::endl;
    if (!o.pass) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
