#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "permsq/permsq.hpp"
#include "reference_table.hpp"

namespace permsq::cli {

namespace {

using nlohmann::json;

/// A usage problem detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { text, json, csv };

const std::map<std::string, Format> kFormats = {{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

struct Range {
  int first = 0;
  int last = 0;
};

int parse_int(std::string_view s, const std::string& what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw UsageError("malformed " + what + " \"" + std::string(s) + "\"");
  return v;
}

/// "a..b" with a <= b, or a single integer.
Range parse_range(const std::string& text, int min_value) {
  Range r;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    r.first = parse_int(std::string_view(text).substr(0, dots), "range start");
    r.last = parse_int(std::string_view(text).substr(dots + 2), "range end");
  } else {
    r.first = r.last = parse_int(text, "range");
  }
  if (r.first > r.last) throw UsageError("inverted range " + text);
  if (r.first < min_value) throw UsageError("range " + text + " starts below " + std::to_string(min_value));
  return r;
}

struct Options {
  Format format = Format::text;
  int jobs = 1;
  bool extended = false;

  EnumerationLimits limits() const {
    auto l = EnumerationLimits::from_env();
    if (extended) l.cap = std::max(l.cap, EnumerationLimits::kExtendedCap);
    return l;
  }
};

// ---------------------------------------------------------------- alpha

struct AlphaArgs {
  std::optional<int> n;
  std::optional<std::string> range;
  bool check_reference = false;
};

int cmd_alpha(const AlphaArgs& a, const Options& opt, std::ostream& out, std::ostream& err) {
  if (a.n.has_value() == a.range.has_value()) throw UsageError("alpha: give exactly one of --n or --range");
  const Range r = a.n ? Range{*a.n, *a.n} : parse_range(*a.range, 1);
  if (r.first < 1) throw UsageError("alpha: n must be at least 1");

  if (opt.format == Format::csv) out << kCsvHeader << "\n";
  std::map<int, Count> values;
  for (int n = r.first; n <= r.last; ++n) {
    values[n] = alpha(n);
    switch (opt.format) {
      case Format::text:
        if (a.n)
          out << values[n] << "\n";
        else
          out << n << " " << values[n] << "\n";
        break;
      case Format::json:
        out << json{{"n", n}, {"alpha", values[n].str()}}.dump() << "\n";
        break;
      case Format::csv:
        out << n << ",alpha," << values[n] << "\n";
        break;
    }
  }
  if (!a.check_reference) return kOk;

  std::ostream& note = opt.format == Format::text ? out : err;
  int compared = 0, mismatched = 0;
  for (const auto& [n, expected] : reference_alpha()) {
    if (n < r.first || n > r.last) continue;
    ++compared;
    if (values[n].str() != expected) {
      ++mismatched;
      note << "reference mismatch at n=" << n << ": computed " << values[n] << ", published " << expected << "\n";
    }
  }
  if (mismatched == 0)
    note << "reference: all " << compared << " values match\n";
  else
    note << "reference: " << mismatched << " of " << compared << " values differ\n";
  return mismatched == 0 ? kOk : kFailure;
}

// ---------------------------------------------------------------- classify & friends

int cmd_classify(const std::string& perm, int n, const Options& opt, std::ostream& out) {
  const auto w = parse_cycles(perm, n);
  const auto t = cycle_type(w);
  const auto label = classify(t);
  const bool ps = is_perfect_square(t);
  const auto support = odd_support(w);
  if (opt.format == Format::json) {
    json types = json::object();
    for (auto [len, mult] : t.multiplicities()) types[std::to_string(len)] = mult;
    out << json{{"perm", format_cycles(w)},
                {"n", n},
                {"cycle_type", types},
                {"parity", label.parity == Parity::EE ? "EE" : "OE"},
                {"type", label.type_index},
                {"label", label.to_string()},
                {"square", ps ? "PS" : "NPS"},
                {"odd_support", support.elements}}
               .dump()
        << "\n";
    return kOk;
  }
  out << "permutation  " << format_cycles(w) << "\n"
      << "n            " << n << "\n"
      << "cycle type   " << format_cycle_type(t) << "\n"
      << "parity       " << (label.parity == Parity::EE ? "EE" : "OE") << "\n"
      << "type         " << label.type_index << "\n"
      << "label        " << label.to_string() << "\n"
      << "square       " << (ps ? "PS" : "NPS") << "\n"
      << "odd support  " << support.to_string() << "\n";
  return kOk;
}

int cmd_square(const std::string& perm, int n, std::ostream& out) {
  out << format_cycles(square(parse_cycles(perm, n))) << "\n";
  return kOk;
}

int cmd_sqrt(const std::string& perm, int n, std::ostream& out) {
  const auto root = square_root(parse_cycles(perm, n));
  out << (root ? format_cycles(*root) : std::string("no square root")) << "\n";
  return kOk;
}

int cmd_dmap(const std::string& perm, int n, int i, std::ostream& out) {
  out << format_cycles(add_and_swap(parse_cycles(perm, n), i)) << "\n";
  return kOk;
}

int cmd_pair(const std::string& cls, const std::string& perm, int n, std::optional<int> i, std::ostream& out) {
  const auto selector = parse_selector(cls);
  const auto w = parse_cycles(perm, n);
  if (n % 2 == 0) {
    if (!i) throw UsageError("pair: --i is required when n is even");
    out << format_cycles(canonical_pair(selector, w, *i)) << "\n";
    return kOk;
  }
  if (i) throw UsageError("pair: --i is only accepted when n is even");
  const auto back = canonical_unpair(selector, w);
  out << format_cycles(back.w) << " " << back.i << "\n";
  return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string identity;
  std::string n_range;
  std::string backend = "auto";
};

struct Record {
  std::string identity;
  int n = 0;
  std::string backend;
  std::vector<IdentityCheck> checks;
  std::vector<std::string> failures;  // human-readable counterexamples

  bool pass() const {
    return failures.empty() &&
           std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass(); });
  }
};

void emit(const Record& rec, Format format, std::ostream& out) {
  switch (format) {
    case Format::text: {
      out << (rec.pass() ? "PASS " : "FAIL ") << rec.identity << " n=" << rec.n << " backend=" << rec.backend;
      for (const auto& c : rec.checks) out << "  " << c.name << " " << c.lhs << (c.pass() ? " = " : " != ") << c.rhs;
      out << "\n";
      for (const auto& f : rec.failures) out << "  counterexample: " << f << "\n";
      break;
    }
    case Format::json: {
      json checks = json::array();
      for (const auto& c : rec.checks)
        checks.push_back({{"name", c.name}, {"lhs", c.lhs.str()}, {"rhs", c.rhs.str()}, {"pass", c.pass()}});
      out << json{{"identity", rec.identity},
                  {"n", rec.n},
                  {"backend", rec.backend},
                  {"pass", rec.pass()},
                  {"checks", checks},
                  {"failures", rec.failures}}
                 .dump()
          << "\n";
      break;
    }
    case Format::csv:
      for (const auto& c : rec.checks)
        out << rec.identity << "," << rec.n << "," << rec.backend << "," << c.name << "," << c.lhs << "," << c.rhs
            << "," << (c.pass() ? "true" : "false") << "\n";
      break;
  }
}

std::string check_text(const IdentityCheck& c) { return c.name + ": " + c.lhs.str() + " vs " + c.rhs.str(); }

std::vector<Record> verify_counting(Identity id, const Range& range, const std::string& backend, const Options& opt) {
  const auto name = identity_name(id);
  if (range.first < identity_min_n(id))
    throw UsageError(name + " requires n >= " + std::to_string(identity_min_n(id)));

  const auto limits = opt.limits();
  const bool want_partition = backend == "partition" || backend == "both" || backend == "auto";
  const bool want_brute = backend == "brute" || backend == "both";
  if (want_brute)
    for (int m : identity_sizes(id, range.last))
      if (m > limits.cap)
        throw UsageError("brute backend for " + name + " at n=" + std::to_string(range.last) + " needs S_" +
                         std::to_string(m) + ", above the enumeration cap " + std::to_string(limits.cap) +
                         " (raise with --extended or " + EnumerationLimits::kEnvVar + ")");

  CachedCensus partition_census([&](int m) { return census(m, opt.jobs); });
  CachedCensus brute([&](int m) { return brute_census(m, limits, opt.jobs); });

  std::vector<Record> records;
  for (int n = range.first; n <= range.last; ++n) {
    if (want_partition) {
      const auto v = verify_identity(id, n, partition_census);
      records.push_back({name, n, "partition", v.checks, {}});
    }
    if (want_brute) {
      const auto v = verify_identity(id, n, brute);
      Record rec{name, n, "brute", v.checks, {}};
      if (want_partition)
        for (int m : identity_sizes(id, n))
          if (partition_census(m) != brute(m))
            rec.failures.push_back("partition and brute censuses of S_" + std::to_string(m) + " disagree");
      records.push_back(std::move(rec));
    }
  }
  for (auto& rec : records)
    for (const auto& c : rec.checks)
      if (!c.pass()) rec.failures.push_back(check_text(c));
  return records;
}

std::vector<Record> verify_enumerative(const std::string& name, const Range& range, const Options& opt) {
  const auto limits = opt.limits();
  std::vector<Record> records;
  for (int n = range.first; n <= range.last; ++n) {
    if (name == "d_bijection") {
      for (const char* cls : {"EE1", "PS1", "OE1", "OE2"}) {
        const auto v = verify_d_bijection(parse_selector(cls), 2 * n, limits);
        Record rec{name + ":" + cls, n, "brute", {}, {}};
        rec.checks.push_back({"distinct_images", v.distinct, v.images});
        rec.checks.push_back({"cover", v.images, v.target});
        rec.checks.push_back({"outside_target", v.outside_target, Count(0)});
        rec.checks.push_back({"inverse_failures", v.inverse_failures, Count(0)});
        records.push_back(std::move(rec));
      }
      continue;
    }
    const auto supports = admissible_supports(n);
    limits.check(2 * n + 1, name);
    Record rec{name, n, "brute", {}, {}};
    std::uint64_t cases = 0, passed = 0;
    for (const auto& a : supports) {
      if (name == "lemma41") {
        const auto v = verify_lemma41(n, a, limits);
        ++cases;
        if (v.pass())
          ++passed;
        else
          rec.failures.push_back("A=" + a.to_string() + " class " + std::to_string(v.class_count) + " product " +
                                 std::to_string(v.product_count) + " ps " + std::to_string(v.ps_class_count) + "/" +
                                 std::to_string(v.ps_product_count));
        continue;
      }
      for (Point x : a.elements) {
        const auto v = verify_equation2(n, a, x, limits);
        ++cases;
        if (v.pass())
          ++passed;
        else
          rec.failures.push_back("A=" + a.to_string() + " a=" + std::to_string(x) + " EE " + v.lhs_ee.str() + " vs " +
                                 v.rhs_ee.str() + " PS " + v.lhs_ps.str() + " vs " + v.rhs_ps.str());
      }
    }
    rec.checks.push_back({"cases_passed", passed, cases});
    records.push_back(std::move(rec));
  }
  return records;
}

int cmd_verify(const VerifyArgs& a, const Options& opt, std::ostream& out) {
  const Range range = parse_range(a.n_range, 1);
  const std::vector<std::string> enumerative = {"d_bijection", "equation2", "lemma41"};
  std::vector<Record> records;
  if (const auto id = parse_identity(a.identity)) {
    records = verify_counting(*id, range, a.backend, opt);
  } else if (std::find(enumerative.begin(), enumerative.end(), a.identity) != enumerative.end()) {
    if (a.backend == "partition")
      throw UsageError(a.identity + " is an enumerative check; use --backend brute, both or auto");
    records = verify_enumerative(a.identity, range, opt);
  } else {
    throw UsageError("unknown identity \"" + a.identity + "\"");
  }

  if (opt.format == Format::csv) out << "identity,n,backend,check,lhs,rhs,pass\n";
  bool ok = true;
  for (const auto& rec : records) {
    emit(rec, opt.format, out);
    ok = ok && rec.pass();
  }
  return ok ? kOk : kFailure;
}

// ---------------------------------------------------------------- census

int cmd_census(const std::string& n_range, const std::string& backend, const Options& opt, std::ostream& out) {
  const Range range = parse_range(n_range, 1);
  const auto limits = opt.limits();
  if (backend == "brute" && range.last > limits.cap)
    throw UsageError("brute census above the enumeration cap " + std::to_string(limits.cap));

  if (opt.format == Format::csv) out << kCsvHeader << "\n";
  if (opt.format == Format::text) {
    out << "n";
    for (const auto& [label, v] : census_values(CensusReport{})) out << "\t" << label;
    out << "\n";
  }
  bool ok = true;
  for (int n = range.first; n <= range.last; ++n) {
    const auto report = backend == "brute" ? brute_census(n, limits, opt.jobs) : census(n, opt.jobs);
    ok = ok && report.all_pass();
    switch (opt.format) {
      case Format::csv:
        out << census_to_csv(report);
        break;
      case Format::json:
        out << census_to_json(report) << "\n";
        break;
      case Format::text:
        out << n;
        for (const auto& [label, v] : census_values(report)) out << "\t" << v;
        out << "\n";
        break;
    }
  }
  return ok ? kOk : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Perfect-square permutation census, classification, and identity checks", "permsq"};
  app.require_subcommand(1);

  Options opt;
  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  };
  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::Range(1, 256));
    sub->add_flag("--extended", opt.extended, "Raise the enumeration cap to 10");
  };

  AlphaArgs alpha_args;
  auto* alpha_cmd = app.add_subcommand("alpha", "Number of perfect-square permutations of S_n");
  alpha_cmd->add_option("--n", alpha_args.n, "Single n");
  alpha_cmd->add_option("--range", alpha_args.range, "Range a..b");
  alpha_cmd->add_flag("--check-reference", alpha_args.check_reference, "Compare 2..17 against published values");
  add_format(alpha_cmd);

  std::string perm;
  int n = 0;
  int index = 0;
  auto add_perm = [&](CLI::App* sub) {
    sub->add_option("--perm", perm, "Permutation in cycle notation, e.g. \"(1,2)(3,4,5)\"")->required();
    sub->add_option("--n", n, "Domain size")->required()->check(CLI::PositiveNumber);
  };

  auto* classify_cmd = app.add_subcommand("classify", "Parity class, type, and square status of a permutation");
  add_perm(classify_cmd);
  classify_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* square_cmd = app.add_subcommand("square", "Square of a permutation");
  add_perm(square_cmd);
  auto* sqrt_cmd = app.add_subcommand("sqrt", "Canonical square root of a permutation");
  add_perm(sqrt_cmd);
  auto* dmap_cmd = app.add_subcommand("dmap", "Adding-and-swapping map D_i");
  add_perm(dmap_cmd);
  dmap_cmd->add_option("--i", index, "Index in [1, n+1]")->required();

  std::string pair_class;
  std::optional<int> pair_index;
  auto* pair_cmd = app.add_subcommand(
      "pair", "Rank-based pairing class_{2n} x [2n+1] <-> class_{2n+1} (a canonical enumeration, not a structural map)");
  add_perm(pair_cmd);
  pair_cmd->add_option("--class", pair_class, "EE1..OE3 or PS1..PS3")->required();
  pair_cmd->add_option("--i", pair_index, "Index in [1, n+1]; only for even n");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check an identity over a range of n");
  verify_cmd->add_option("--identity", verify_args.identity,
                         "theorem1, theorem2, corollary, lemma31, lemma32, remark31, oe_types, ps2_eq_ee2, "
                         "d_bijection, equation2, lemma41")
      ->required();
  verify_cmd->add_option("--n-range", verify_args.n_range, "Range a..b")->required();
  verify_cmd->add_option("--backend", verify_args.backend, "Counting backend")
      ->check(CLI::IsMember({"auto", "partition", "brute", "both"}));
  add_format(verify_cmd);
  add_jobs(verify_cmd);

  std::string census_range;
  std::string census_backend = "partition";
  auto* census_cmd = app.add_subcommand("census", "Per-class counts for a range of n");
  census_cmd->add_option("--n-range", census_range, "Range a..b")->required();
  census_cmd->add_option("--backend", census_backend, "Counting backend")->check(CLI::IsMember({"partition", "brute"}));
  add_format(census_cmd);
  add_jobs(census_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  opt.format = kFormats.at(format);

  try {
    if (*alpha_cmd) return cmd_alpha(alpha_args, opt, out, err);
    if (*classify_cmd) return cmd_classify(perm, n, opt, out);
    if (*square_cmd) return cmd_square(perm, n, out);
    if (*sqrt_cmd) return cmd_sqrt(perm, n, out);
    if (*dmap_cmd) return cmd_dmap(perm, n, index, out);
    if (*pair_cmd) return cmd_pair(pair_class, perm, n, pair_index, out);
    if (*verify_cmd) return cmd_verify(verify_args, opt, out);
    if (*census_cmd) return cmd_census(census_range, census_backend, opt, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace permsq::cli
