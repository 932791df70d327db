#pragma once

// Command implementations behind the `cfloer` executable. Each command writes
// its result to `out`, diagnostics to `err`, and returns the process exit code:
// 0 success, 1 a check failed, 2 usage error.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cfloer/discs.hpp"
#include "cfloer/errors.hpp"
#include "cfloer/floer.hpp"
#include "cfloer/maslov.hpp"
#include "cfloer/oracle.hpp"
#include "cfloer/signs.hpp"

namespace cfloer::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kSpinScanMaxN = 12;
inline constexpr int kBraneScanMaxN = 6;
inline constexpr int kMaslovMaxRank = 4;
inline constexpr int kMaslovMaxDegree = 4;

struct RunConfig {
  int n = 0;
  std::string spin = "0";
  std::string holonomy;  // empty: trivial
  std::optional<Backend> backend;
  double tol = kDefaultTolerance;
  std::string format = "json";
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  int count = 200;
};

/// "0", "{}" or "" for the standard structure, "{1,3}" for the structure
/// twisted on a subset, "[e0,e1,...,en]" for an explicit sign vector.
inline SpinStructure parse_spin(const std::string& text, int n) {
  const auto t = std::string(cfloer::detail::trim_ws(text));
  if (t.empty() || t == "0" || t == "{}") return SpinStructure::standard(n);
  auto ints = [&](char open, char close) {
    if (t.front() != open || t.back() != close) throw ParseError("bad spin structure '" + t + "'");
    std::vector<int> v;
    std::stringstream ss(t.substr(1, t.size() - 2));
    for (std::string item; std::getline(ss, item, ',');) {
      const auto s = std::string(cfloer::detail::trim_ws(item));
      std::size_t used = 0;
      int x = 0;
      try {
        x = std::stoi(s, &used);
      } catch (const std::exception&) {
        throw ParseError("bad integer '" + s + "' in spin structure");
      }
      if (used != s.size()) throw ParseError("bad integer '" + s + "' in spin structure");
      v.push_back(x);
    }
    return v;
  };
  if (t.front() == '{') {
    auto v = ints('{', '}');
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end()) throw ParseError("repeated index in spin subset");
    for (int j : v)
      if (j < 1 || j > n) throw ParseError("spin subset index " + std::to_string(j) + " outside 1.." + std::to_string(n));
    return SpinStructure::from_subset(IndexSet(v), n);
  }
  if (t.front() == '[') {
    auto v = ints('[', ']');
    if (static_cast<int>(v.size()) != n + 1) throw ParseError("sign vector needs n+1 = " + std::to_string(n + 1) + " entries");
    return SpinStructure(std::move(v));
  }
  throw ParseError("bad spin structure '" + t + "' (use 0, {i,j,..} or [e0,..,en])");
}

inline nlohmann::json report_json(const HfReport& r) {
  return {{"n", r.n},
          {"spin", r.spin.eps()},
          {"holonomy", r.holonomy},
          {"ranks_by_lambda_degree", r.table.by_lambda_degree},
          {"ranks_by_cochain_degree", r.table.by_cochain_degree},
          {"nonvanishing", r.nonvanishing()},
          {"backend", backend_name(r.backend)}};
}

inline const char* kCsvHeader = "n,spin,holonomy,ranks_by_lambda_degree,ranks_by_cochain_degree,nonvanishing,backend";

/// List-valued fields are space separated inside double quotes.
inline std::string report_csv(const HfReport& r) {
  auto join = [](const auto& xs) {
    std::ostringstream s;
    for (std::size_t i = 0; i < xs.size(); ++i) s << (i ? " " : "") << xs[i];
    return "\"" + s.str() + "\"";
  };
  std::ostringstream s;
  s << r.n << ',' << join(r.spin.eps()) << ',' << join(r.holonomy) << ',' << join(r.table.by_lambda_degree) << ','
    << join(r.table.by_cochain_degree) << ',' << (r.nonvanishing() ? "true" : "false") << ',' << backend_name(r.backend);
  return s.str();
}

inline void emit(std::ostream& out, const RunConfig& cfg, const HfReport& r) {
  if (cfg.format == "csv")
    out << report_csv(r) << '\n';
  else
    out << report_json(r).dump() << '\n';
}

inline void emit_summary(std::ostream& out, const RunConfig& cfg, const std::string& command, std::size_t cells, std::size_t nonvanishing) {
  if (cfg.format == "csv")
    out << "# " << command << " n=" << cfg.n << " cells=" << cells << " nonvanishing=" << nonvanishing << '\n';
  else
    out << nlohmann::json{{"summary", {{"command", command}, {"n", cfg.n}, {"cells", cells}, {"nonvanishing", nonvanishing}}}}.dump()
        << '\n';
}

inline int cmd_hf(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.n < 1 || cfg.n > kMaxRank) {
    err << "error: --n must be in 1.." << kMaxRank << '\n';
    return kExitUsage;
  }
  SpinStructure spin = SpinStructure::standard(1);
  std::vector<UnitScalar> hol;
  try {
    spin = parse_spin(cfg.spin, cfg.n);
    hol = cfg.holonomy.empty() ? trivial_holonomy(cfg.n) : parse_holonomy_list(cfg.holonomy, cfg.tol);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (static_cast<int>(hol.size()) != cfg.n) {
    err << "error: --holonomy needs " << cfg.n << " entries, got " << hol.size() << '\n';
    return kExitUsage;
  }
  const bool any_approx = std::any_of(hol.begin(), hol.end(), [](const UnitScalar& u) { return !u.is_exact(); });
  Backend backend = cfg.backend.value_or(Backend::Exact);
  if (backend == Backend::Exact && any_approx) {
    err << "warning: holonomy has approximate entries; promoting to the approx backend\n";
    backend = Backend::Approx;
  }
  const HfReport r = backend == Backend::Exact ? compute_hf<Cyclotomic>(spin, hol, cfg.tol) : compute_hf<ApproxComplex>(spin, hol, cfg.tol);
  if (cfg.format == "csv") out << kCsvHeader << '\n';
  emit(out, cfg, r);
  return kExitOk;
}

namespace detail {
template <class Cell>
int run_scan(const RunConfig& cfg, std::ostream& out, const std::string& command, std::size_t cells, Cell&& cell) {
  if (cfg.format == "csv") out << kCsvHeader << '\n';
  std::size_t nonvanishing = 0;
  parallel_for_each_ordered(cells, cfg.jobs, cell, [&](std::size_t, const HfReport& r) {
    nonvanishing += r.nonvanishing() ? 1 : 0;
    emit(out, cfg, r);
    out.flush();
  });
  emit_summary(out, cfg, command, cells, nonvanishing);
  return kExitOk;
}
}  // namespace detail

inline int cmd_spin_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.n < 1 || cfg.n > kSpinScanMaxN) {
    err << "error: spin-scan needs 1 <= n <= " << kSpinScanMaxN << " (2^n cells)\n";
    return kExitUsage;
  }
  const int n = cfg.n;
  return detail::run_scan(cfg, out, "spin-scan", spin_scan_size(n), [n](std::size_t i) { return spin_scan_cell(n, i); });
}

inline int cmd_brane_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.n < 1 || cfg.n > kBraneScanMaxN) {
    err << "error: brane-scan needs 1 <= n <= " << kBraneScanMaxN << " ((n+1)^n cells)\n";
    return kExitUsage;
  }
  const int n = cfg.n;
  return detail::run_scan(cfg, out, "brane-scan", brane_scan_size(n), [n](std::size_t i) { return brane_scan_cell(n, i); });
}

/// Draws `count` discs with gamma_0 free of zeros and compares 2 * sum(mu_i)
/// with the winding computation. The report depends only on count and seed.
inline int cmd_maslov_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.count < 0) {
    err << "error: --count must be >= 0\n";
    return kExitUsage;
  }
  DiscSampler sampler(cfg.seed);
  nlohmann::json mismatches = nlohmann::json::array();
  for (int i = 0; i < cfg.count; ++i) {
    const auto d = sampler.disc(kMaslovMaxRank, kMaslovMaxDegree, true);
    const int combinatorial = maslov_index(d);
    nlohmann::json entry;
    try {
      const int numeric = disc_boundary_maslov(d, cfg.tol);
      if (numeric == combinatorial) continue;
      entry["numeric"] = numeric;
    } catch (const Error& e) {
      entry["error"] = e.what();
    }
    entry["index"] = i;
    entry["combinatorial"] = combinatorial;
    entry["disc"] = disc_to_json(d);
    mismatches.push_back(std::move(entry));
  }
  nlohmann::json report{{"command", "maslov-check"},
                        {"count", cfg.count},
                        {"seed", cfg.seed},
                        {"max_rank", kMaslovMaxRank},
                        {"max_degree", kMaslovMaxDegree},
                        {"mismatch_count", mismatches.size()},
                        {"mismatches", mismatches}};
  out << report.dump() << '\n';
  return mismatches.empty() ? kExitOk : kExitCheckFailed;
}

/// Small versions of the library's main identities; one PASS/FAIL line each.
inline int cmd_selftest(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  int failures = 0;
  auto check = [&](const std::string& name, auto&& fn) {
    bool ok = false;
    std::string why;
    try {
      ok = fn();
    } catch (const std::exception& e) {
      why = e.what();
    }
    out << (ok ? "PASS " : "FAIL ") << name << (why.empty() ? "" : " (" + why + ")") << '\n';
    failures += ok ? 0 : 1;
  };

  check("spin scan n=1..4", [&] {
    for (int n = 1; n <= 4; ++n) {
      std::size_t live = 0;
      for (const auto& r : spin_scan(n, cfg.jobs)) live += r.nonvanishing() ? 1 : 0;
      if (live != (n % 2 == 0 ? 1u : 2u)) return false;
    }
    return true;
  });
  check("brane scan n=1..3", [&] {
    for (int n = 1; n <= 3; ++n)
      if (brane_scan(n, cfg.jobs).size() != static_cast<std::size_t>(n + 1)) return false;
    return true;
  });
  check("delta2 squares to zero n<=5", [&] {
    for (int n = 1; n <= 5; ++n) {
      std::vector<Cyclotomic> c;
      for (int j = 0; j <= n; ++j) c.push_back(root_of_unity(j * j, n + 2));
      if (!delta2_complex(WeightVector<Cyclotomic>::from_weights(c)).is_complex()) return false;
    }
    return true;
  });
  check("koszul rescaling n<=4", [&] {
    for (int n = 1; n <= 4; ++n) {
      std::vector<Cyclotomic> c{Cyclotomic(0)};
      for (int j = 1; j <= n; ++j) c.push_back(Cyclotomic(j));
      if (!koszul_rescale_check(n, WeightVector<Cyclotomic>::from_weights(c))) return false;
    }
    return true;
  });
  check("maslov cross-check 20 discs", [&] {
    std::ostringstream sink, sink_err;
    RunConfig m = cfg;
    m.count = 20;
    return cmd_maslov_check(m, sink, sink_err) == kExitOk;
  });
  check("sign conventions", [&] {
    for (int x = 1; x <= 5; ++x)
      for (int l = 1; l <= x; ++l)
        if (boundary_fibre_signs_replay(x, l, 1) != boundary_fibre_signs(x, l)) return false;
    for (int n = 1; n <= 6; ++n)
      for (int mu = 2; mu <= 10; mu += 2) {
        const auto c = squarezero_chain(n, mu);
        if (c.glued != -1 || c.boundary != -1) return false;
      }
    return true;
  });
  check("disc through a point n<=3", [&] {
    for (int n = 1; n <= 3; ++n)
      for (int i = 0; i <= n; ++i) {
        std::vector<Complex> target;
        for (int j = 0; j < n; ++j) target.push_back(std::polar(1.0, 0.5 + j));
        const auto x = disc_eval(solve_disc_through_point(i, target), 1.0);
        for (int j = 1; j <= n; ++j)
          if (std::abs(x[static_cast<std::size_t>(j)] / x[0] - target[static_cast<std::size_t>(j - 1)]) > cfg.tol) return false;
      }
    return true;
  });
  out << (failures == 0 ? "selftest: all checks passed" : "selftest: " + std::to_string(failures) + " check(s) failed") << '\n';
  return failures == 0 ? kExitOk : kExitCheckFailed;
}

/// Default tolerance, overridden by CF_TOL when set.
inline double default_tolerance(const char* env) {
  if (!env || !*env) return kDefaultTolerance;
  const auto s = std::string(cfloer::detail::trim_ws(env));
  const double v = cfloer::detail::parse_double(s);
  if (!(v > 0)) throw ParseError("CF_TOL must be a positive number");
  return v;
}

/// Parses argv and dispatches. `env_tol` is the value of CF_TOL (may be null).
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, const char* env_tol) {
  RunConfig cfg;
  try {
    cfg.tol = default_tolerance(env_tol);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  cfg.jobs = std::max(1u, std::thread::hardware_concurrency());

  CLI::App app{"Floer cohomology of the Clifford torus"};
  app.require_subcommand(1);
  std::string backend_text;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", cfg.tol, "rank / zero tolerance for the approx backend")->check(CLI::PositiveNumber);
    sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1u, 1024u));
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  };

  auto* hf = app.add_subcommand("hf", "ranks for one spin structure and holonomy");
  hf->add_option("n,--n", cfg.n, "torus dimension")->required();
  hf->add_option("--spin", cfg.spin, "0 | {i,j,..} | [e0,..,en]");
  hf->add_option("--holonomy", cfg.holonomy, "n entries: p/q turns or re,im pairs");
  hf->add_option("--backend", backend_text, "exact | approx")->check(CLI::IsMember({"exact", "approx"}));
  add_common(hf);

  auto* spin = app.add_subcommand("spin-scan", "all spin structures, trivial holonomy");
  spin->add_option("n,--n", cfg.n, "torus dimension")->required();
  add_common(spin);

  auto* brane = app.add_subcommand("brane-scan", "all (n+1)-th root of unity holonomies, standard spin");
  brane->add_option("n,--n", cfg.n, "torus dimension")->required();
  add_common(brane);

  auto* maslov = app.add_subcommand("maslov-check", "combinatorial vs numeric Maslov index on random discs");
  maslov->add_option("count,--count", cfg.count, "number of discs");
  maslov->add_option("--seed", cfg.seed, "random seed");
  add_common(maslov);

  auto* selftest = app.add_subcommand("selftest", "quick internal consistency checks");
  add_common(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (backend_text == "exact") cfg.backend = Backend::Exact;
  if (backend_text == "approx") cfg.backend = Backend::Approx;

  try {
    if (hf->parsed()) return cmd_hf(cfg, out, err);
    if (spin->parsed()) return cmd_spin_scan(cfg, out, err);
    if (brane->parsed()) return cmd_brane_scan(cfg, out, err);
    if (maslov->parsed()) return cmd_maslov_check(cfg, out, err);
    return cmd_selftest(cfg, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace cfloer::cli
