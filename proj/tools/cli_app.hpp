#pragma once

// Command-line front end. run_cli() is kept separate from main() so the test
// suite can drive every subcommand in-process.
//
// Exit codes: 0 all requested checks pass, 1 a property violation was found,
// 2 usage or precondition error. Reports go to stdout, diagnostics to stderr.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gapart/gapart.hpp"

namespace gapart::cli {

inline constexpr int kPass = 0;
inline constexpr int kViolation = 1;
inline constexpr int kUsage = 2;
inline constexpr int kSchema = 1;
inline constexpr std::size_t kFallbackHorizon = 1000;

using nlohmann::json;

/// GAPART_HORIZON, if set to a nonnegative integer, else 1000.
inline std::size_t default_horizon() {
  if (const char* env = std::getenv("GAPART_HORIZON")) {
    try {
      const long long v = std::stoll(env);
      if (v >= 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return kFallbackHorizon;
}

inline json report(const std::string& command, json params, json result, bool pass) {
  return {{"schema", kSchema},
          {"command", command},
          {"params", std::move(params)},
          {"result", std::move(result)},
          {"status", pass ? "pass" : "fail"}};
}

inline json params_json(const GapParams& p) { return {{"L", p.L()}, {"s", p.s()}, {"k", p.k()}}; }

inline json optional_json(const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); }

inline std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw PreconditionError("malformed integer list '" + text + "'");
    }
  }
  if (out.empty()) throw PreconditionError("empty integer list");
  return out;
}

struct ParamFlags {
  std::int64_t L = 0;
  std::int64_t s = 0;
  std::optional<std::int64_t> k;

  void attach(CLI::App* cmd, bool k_required) {
    cmd->add_option("-L", L, "gap bound L")->required();
    cmd->add_option("-s", s, "shift s")->required();
    auto* opt = cmd->add_option("-k", k, "forbidden part k");
    if (k_required) opt->required();
  }

  GapParams make() const { return k ? GapParams::make(L, s, *k) : GapParams::for_c(L, s); }
};

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"gapart: partitions with bounded gap, explicit injections and q-series checks"};
  app.require_subcommand(1);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "list C_{L,s,2}(n) or F_{L,s,k}(n) in canonical order");
  ParamFlags enum_params;
  std::string family;
  std::int64_t enum_n = 0;
  std::string format = "text";
  enumerate->add_option("--family", family, "C or F")->required()->check(CLI::IsMember({"C", "F"}));
  enum_params.attach(enumerate, false);
  enumerate->add_option("-n", enum_n, "weight")->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  // series
  auto* series = app.add_subcommand("series", "dump generating-function coefficients as CSV n,coefficient");
  std::string kind;
  std::int64_t ser_L = 0, ser_s = 0, ser_k = 0, ser_r = 0, ser_k1 = 0, ser_k2 = 0;
  std::optional<std::size_t> ser_N;
  series->add_option("--kind", kind, "c, f, a, b, d, e or H")
      ->required()
      ->check(CLI::IsMember({"c", "f", "a", "b", "d", "e", "H"}));
  series->add_option("-L", ser_L)->required();
  series->add_option("-s", ser_s)->required();
  series->add_option("-k", ser_k, "k for f, d and e");
  series->add_option("-r", ser_r, "shift r for e and H");
  series->add_option("--k1", ser_k1);
  series->add_option("--k2", ser_k2);
  series->add_option("-N", ser_N, "horizon (default $GAPART_HORIZON or 1000)");

  // verify-inequality
  auto* inequality = app.add_subcommand("verify-inequality", "report every n with f_{L,s,k}(n) < c_{L,s,2}(n)");
  ParamFlags ineq_params;
  std::int64_t ineq_min = 1, ineq_max = 0;
  ineq_params.attach(inequality, true);
  inequality->add_option("--n-min", ineq_min)->check(CLI::NonNegativeNumber);
  inequality->add_option("--n-max", ineq_max)->required()->check(CLI::NonNegativeNumber);

  // threshold-search
  auto* threshold = app.add_subcommand("threshold-search", "largest n <= N with f(n) < c(n), two ways");
  ParamFlags thr_params;
  std::optional<std::size_t> thr_N;
  thr_params.attach(threshold, true);
  threshold->add_option("-N", thr_N, "horizon (default $GAPART_HORIZON or 1000)");

  // injection-verify
  auto* injection = app.add_subcommand("injection-verify", "check phi/psi on C_{L,s,2}(n)");
  ParamFlags inj_params;
  std::string mode = "exhaustive";
  std::optional<std::int64_t> inj_min;
  std::optional<std::int64_t> inj_max;
  std::uint64_t seed = 42;
  std::size_t count = 10000;
  std::string fixtures;
  injection->add_option("--mode", mode, "exhaustive, sample or golden")
      ->check(CLI::IsMember({"exhaustive", "sample", "golden"}));
  injection->add_option("-L", inj_params.L);
  injection->add_option("-s", inj_params.s);
  injection->add_option("-k", inj_params.k);
  injection->add_option("--n-min", inj_min, "default: the weight threshold for s");
  injection->add_option("--n-max", inj_max, "default: n-min");
  injection->add_option("--seed", seed);
  injection->add_option("--count", count, "samples per n");
  injection->add_option("--fixtures", fixtures, "golden fixture file");

  // trace
  auto* trace = app.add_subcommand("trace", "apply phi (or psi with --inverse) to one partition");
  ParamFlags trace_params;
  std::string partition_text;
  bool inverse = false;
  trace_params.attach(trace, true);
  trace->add_option("--partition", partition_text, "text form, e.g. 9^7,15^3")->required();
  trace->add_flag("--inverse", inverse);

  // positivity
  auto* positivity = app.add_subcommand("positivity", "last nonpositive coefficient of H*_{L,s,r,k1,k2}");
  std::int64_t pos_L = 0, pos_s = 0, pos_r = 0, pos_k1 = 0, pos_k2 = 0;
  std::optional<std::size_t> pos_N;
  std::size_t pos_start = 0;
  positivity->add_option("-L", pos_L)->required();
  positivity->add_option("-s", pos_s)->required();
  positivity->add_option("-r", pos_r)->required();
  positivity->add_option("--k1", pos_k1)->required();
  positivity->add_option("--k2", pos_k2)->required();
  positivity->add_option("-N", pos_N, "horizon (default $GAPART_HORIZON or 1000)");
  positivity->add_option("--start", pos_start);

  // asymptotics
  auto* asymptotics = app.add_subcommand("asymptotics", "exact count over leading-term estimate");
  std::string coins_text;
  std::int64_t asy_L = 0, asy_s = 0;
  std::string n_text;
  std::string dk_text = "1";
  std::optional<double> tolerance;
  asymptotics->add_option("--coins", coins_text, "coin system, e.g. 2,3,4");
  asymptotics->add_option("-L", asy_L);
  asymptotics->add_option("-s", asy_s);
  asymptotics->add_option("--n", n_text, "comma-separated n values")->required();
  asymptotics->add_option("--dk", dk_text, "k values for d_k ratios (with -L/-s)");
  asymptotics->add_option("--tolerance", tolerance, "fail if any |ratio - 1| exceeds this");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*enumerate) {
      const auto params = enum_params.make();
      const auto list = family == "C" ? enumerate_C(params, enum_n) : enumerate_F(params, enum_n);
      if (format == "text") {
        for (const auto& p : list) out << p.to_string() << '\n';
      } else {
        json items = json::array();
        for (const auto& p : list) items.push_back(partition_to_json(p));
        auto pj = params_json(params);
        pj["family"] = family;
        pj["n"] = enum_n;
        out << report("enumerate", pj, {{"count", list.size()}, {"partitions", items}}, true).dump(2) << '\n';
      }
      return kPass;
    }

    if (*series) {
      const std::size_t N = ser_N.value_or(default_horizon());
      std::optional<TruncatedSeries> x;
      if (kind == "c") x = series_c(GapParams::for_c(ser_L, ser_s), N);
      else if (kind == "f") x = series_f(GapParams::make(ser_L, ser_s, ser_k), N);
      else if (kind == "a") x = series_abc(ser_s, ser_L, N).a;
      else if (kind == "b") x = series_abc(ser_s, ser_L, N).b;
      else if (kind == "d") x = series_d(ser_k, ser_s, ser_L, N);
      else if (kind == "e") x = series_e(ser_k, ser_r, ser_s, ser_L, N);
      else x = series_H(ser_L, ser_s, ser_r, ser_k1, ser_k2, N);
      out << "n,coefficient\n";
      for (std::size_t n = 0; n <= x->horizon(); ++n) out << n << ',' << to_decimal((*x)[n]) << '\n';
      return kPass;
    }

    if (*inequality) {
      const auto params = ineq_params.make();
      const auto r = scan_inequality(params, ineq_min, ineq_max);
      auto pj = params_json(params);
      pj["n_min"] = ineq_min;
      pj["n_max"] = ineq_max;
      const bool pass = r.violations.empty();
      out << report("verify-inequality", pj, {{"horizon", ineq_max}, {"violations", r.violations}}, pass).dump(2)
          << '\n';
      return pass ? kPass : kViolation;
    }

    if (*threshold) {
      const auto params = thr_params.make();
      const std::size_t N = thr_N.value_or(default_horizon());
      const auto r = threshold_search(params, N);
      json result = {{"horizon", N},
                     {"last_violation", optional_json(r.last_violation_dp)},
                     {"last_violation_series", optional_json(r.last_violation_series)},
                     {"paths_agree", r.agree()}};
      result["statement"] = r.last_violation_dp
                                ? "largest n <= " + std::to_string(N) + " with f(n) < c(n) is " +
                                      std::to_string(*r.last_violation_dp) + "; any valid M exceeds it"
                                : "no violation <= " + std::to_string(N);
      out << report("threshold-search", params_json(params), result, r.agree()).dump(2) << '\n';
      return r.agree() ? kPass : kViolation;
    }

    if (*injection) {
      if (mode == "golden") {
        if (fixtures.empty()) throw PreconditionError("golden mode requires --fixtures");
        const auto results = replay_golden(load_fixtures(fixtures));
        json cases = json::array();
        bool pass = true;
        for (const auto& g : results) {
          pass = pass && g.ok();
          json c = {{"name", g.name}, {"phi_match", g.phi_match}, {"psi_match", g.psi_match}};
          if (!g.error.empty()) c["error"] = g.error;
          if (!g.phi_match) c["phi_actual"] = g.phi_actual;
          if (!g.psi_match) c["psi_actual"] = g.psi_actual;
          cases.push_back(std::move(c));
        }
        out << report("injection-verify", {{"mode", mode}, {"fixtures", fixtures}}, {{"cases", cases}}, pass).dump(2)
            << '\n';
        return pass ? kPass : kViolation;
      }
      if (inj_params.L == 0 || inj_params.s == 0 || !inj_params.k) {
        throw PreconditionError("exhaustive and sample modes require -L, -s and -k");
      }
      const auto params = inj_params.make();
      const auto n_min = inj_min.value_or(thresholds::strong_min_weight(params.s()));
      const auto n_max = inj_max.value_or(n_min);
      if (n_max < n_min) throw PreconditionError("requires n-min <= n-max");
      const auto summary = mode == "exhaustive" ? verify_exhaustive(params, n_min, n_max)
                                                : verify_sample(params, n_min, n_max, seed, count);
      auto pj = params_json(params);
      pj["mode"] = mode;
      pj["n_min"] = n_min;
      pj["n_max"] = n_max;
      if (mode == "sample") {
        pj["seed"] = seed;
        pj["count"] = count;
      }
      json tally = json::object();
      for (int i = 0; i < 5; ++i) tally["C" + std::to_string(i + 1)] = summary.tally[static_cast<std::size_t>(i)];
      json result = {{"checked", summary.checked},
                     {"failures", summary.failures},
                     {"tally", tally},
                     {"failure_samples", summary.failure_samples}};
      if (mode == "exhaustive") {
        result["distinct_images"] = summary.distinct_images;
        result["f_members_classified"] = summary.f_members;
        result["f_class_overlaps"] = summary.f_overlaps;
        result["count_mismatches"] = summary.count_mismatches;
      }
      out << report("injection-verify", pj, result, summary.ok()).dump(2) << '\n';
      return summary.ok() ? kPass : kViolation;
    }

    if (*trace) {
      const auto params = trace_params.make();
      const auto p = Partition::parse(partition_text);
      const auto t = inverse ? psi(p, params) : phi(p, params);
      out << report("trace", params_json(params), trace_to_json(t), true).dump(2) << '\n';
      return kPass;
    }

    if (*positivity) {
      const std::size_t N = pos_N.value_or(default_horizon());
      const auto direct = series_H_direct(pos_L, pos_s, pos_r, pos_k1, pos_k2, N);
      const auto split = series_H_split(pos_L, pos_s, pos_r, pos_k1, pos_k2, N);
      const auto last_direct = positivity_scan(direct, pos_start);
      const auto last_split = positivity_scan(split, pos_start);
      const bool agree = direct == split && last_direct == last_split;
      json prefix = json::array();
      for (std::size_t n = 0; n <= std::min<std::size_t>(N, 10); ++n) prefix.push_back(to_decimal(direct[n]));
      auto as_json = [](const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); };
      json result = {{"horizon", N},
                     {"start", pos_start},
                     {"last_nonpositive", as_json(last_direct)},
                     {"last_nonpositive_split", as_json(last_split)},
                     {"paths_agree", agree},
                     {"prefix", prefix},
                     {"note", "finite-horizon scan; positivity beyond the horizon is not established"}};
      json pj = {{"L", pos_L}, {"s", pos_s}, {"r", pos_r}, {"k1", pos_k1}, {"k2", pos_k2}};
      out << report("positivity", pj, result, agree).dump(2) << '\n';
      return agree ? kPass : kViolation;
    }

    if (*asymptotics) {
      const auto ns = parse_int_list(n_text);
      json rows = json::array();
      bool pass = true;
      auto judge = [&](double ratio) {
        if (tolerance && !(std::abs(ratio - 1.0) <= *tolerance)) pass = false;
      };
      json pj;
      if (!coins_text.empty()) {
        const CoinSystem coins(parse_int_list(coins_text));
        pj = {{"coins", coins.denominations()}};
        for (auto n : ns) {
          const double ratio = ratio_check(coins, n);
          judge(ratio);
          rows.push_back({{"n", n},
                          {"count", to_decimal(denumerant_table(coins, static_cast<std::size_t>(n)).back())},
                          {"estimate", asymptotic_estimate(coins, n)},
                          {"ratio", ratio}});
        }
      } else {
        if (asy_L == 0 || asy_s == 0) throw PreconditionError("asymptotics requires --coins or -L and -s");
        const auto dks = parse_int_list(dk_text);
        pj = {{"L", asy_L}, {"s", asy_s}, {"dk", dks}};
        for (auto n : ns) {
          if (n < 1) throw PreconditionError("requires n >= 1");
          const auto N = static_cast<std::size_t>(n);
          // (L-1)! s(s+1)...(s+L) / n^{L-1}
          double scale = 1.0;
          for (std::int64_t i = 1; i <= asy_L - 1; ++i) scale *= static_cast<double>(i) / static_cast<double>(n);
          for (auto a = asy_s; a <= asy_s + asy_L; ++a) scale *= static_cast<double>(a);
          const auto abc = series_abc(asy_s, asy_L, N);
          const double a_ratio = to_double(abc.a[N]) * scale;
          judge(a_ratio);
          json row = {{"n", n}, {"a_n", to_decimal(abc.a[N])}, {"a_ratio", a_ratio}};
          json dk_rows = json::array();
          for (auto k : dks) {
            const auto d = series_d(k, asy_s, asy_L, N);
            const double ratio = to_double(d[N]) * scale / static_cast<double>(k);
            judge(ratio);
            dk_rows.push_back({{"k", k}, {"d_k", to_decimal(d[N])}, {"ratio", ratio}});
          }
          row["d"] = std::move(dk_rows);
          rows.push_back(std::move(row));
        }
      }
      if (tolerance) pj["tolerance"] = *tolerance;
      out << report("asymptotics", pj, {{"rows", rows}}, pass).dump(2) << '\n';
      return pass ? kPass : kViolation;
    }
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvariantError& e) {
    err << "invariant violated: " << e.what() << '\n';
    return kViolation;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace gapart::cli
