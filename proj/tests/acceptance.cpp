// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Expected values are computed here from scratch (Pascal's triangle, direct
// enumeration of constant tuples, zero counts), not taken from the library.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cfloer/discs.hpp"
#include "cfloer/floer.hpp"
#include "cfloer/maslov.hpp"
#include "cfloer/oracle.hpp"
#include "cfloer/signs.hpp"

using namespace cfloer;

namespace {

std::vector<std::vector<int>> pascal(int max_n) {
  std::vector<std::vector<int>> rows{{1}};
  for (int n = 1; n <= max_n; ++n) {
    std::vector<int> r(static_cast<std::size_t>(n + 1), 1);
    for (int k = 1; k < n; ++k) r[k] = rows[n - 1][k - 1] + rows[n - 1][k];
    rows.push_back(r);
  }
  return rows;
}
const auto kPascal = pascal(8);

int choose(int n, int k) { return (k < 0 || k > n || n < 0) ? 0 : kPascal[n][k]; }

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int g_failures = 0;

void criterion(int id, const std::string& name, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0 && secs > budget_s) {
    std::ostringstream s;
    s << "runtime " << secs << " s over budget " << budget_s << " s";
    o.fail(s.str());
  }
  std::printf("criterion %d %-34s %s  %.3f s%s%s\n", id, name.c_str(), o.ok ? "PASS" : "FAIL", secs, o.detail.empty() ? "" : "  ",
              o.detail.c_str());
  std::fflush(stdout);
  g_failures += o.ok ? 0 : 1;
}

std::string str(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::vector<int> binomial_row(int n) { return kPascal[n]; }

}  // namespace

int main() {
  const unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

  criterion(1, "spin dichotomy n=1..6", 10.0, [&](Outcome& o) {
    for (int n = 1; n <= 6; ++n) {
      const auto cells = spin_scan(n, jobs);
      if (cells.size() != (std::size_t{1} << n)) o.fail("wrong cell count at n=" + std::to_string(n));
      std::set<std::vector<int>> live, expected;
      expected.insert(std::vector<int>(n + 1, 1));
      if (n % 2 == 1) expected.insert(std::vector<int>(n + 1, -1));
      for (const auto& r : cells) {
        if (!r.nonvanishing()) continue;
        live.insert(r.spin.eps());
        if (r.table.by_lambda_degree != binomial_row(n)) o.fail("n=" + std::to_string(n) + " ranks " + str(r.table.by_lambda_degree));
        if (r.backend != Backend::Exact) o.fail("not exact");
      }
      if (live != expected) o.fail("n=" + std::to_string(n) + ": " + std::to_string(live.size()) + " nonvanishing structures");
    }
  });

  criterion(2, "brane count n=1..4", 60.0, [&](Outcome& o) {
    for (int n = 1; n <= 4; ++n) {
      std::set<std::vector<std::string>> expected;
      for (int k = 0; k <= n; ++k) {
        const Rational t(k, n + 1);
        std::string s = t.str();
        if (s.find('/') == std::string::npos) s += "/1";
        expected.insert(std::vector<std::string>(n, s));
      }
      std::set<std::vector<std::string>> live;
      std::size_t total = 0;
      for (const auto& r : brane_scan_cells(n, jobs)) {
        ++total;
        if (!r.nonvanishing()) continue;
        live.insert(r.holonomy);
        if (r.table.by_lambda_degree != binomial_row(n)) o.fail("ranks " + str(r.table.by_lambda_degree));
      }
      std::size_t cells = 1;
      for (int j = 0; j < n; ++j) cells *= static_cast<std::size_t>(n + 1);
      if (total != cells) o.fail("n=" + std::to_string(n) + ": scanned " + std::to_string(total) + " cells");
      if (live != expected) o.fail("n=" + std::to_string(n) + ": " + std::to_string(live.size()) + " branes");
    }
  });

  criterion(3, "generic vanishing n=1..4", 5.0, [&](Outcome& o) {
    std::mt19937_64 rng(20261016);
    std::uniform_real_distribution<double> ang(0.0, 2 * std::numbers::pi);
    for (int n = 1; n <= 4; ++n)
      for (int trial = 0; trial < 100; ++trial) {
        std::vector<UnitScalar> hol;
        std::vector<std::complex<double>> c(1, 1.0);
        for (int j = 0; j < n; ++j) {
          const double a = ang(rng);
          hol.push_back(UnitScalar::from_complex(std::cos(a), std::sin(a)));
          c.push_back(std::polar(1.0, a));
          c[0] /= std::polar(1.0, a);
        }
        bool all_equal = true;
        for (const auto& x : c) all_equal = all_equal && std::abs(x - c[0]) < 1e-6;
        if (all_equal) {
          --trial;
          continue;
        }
        const auto r = compute_hf<ApproxComplex>(SpinStructure::standard(n), hol, 1e-9);
        if (r.nonvanishing()) o.fail("nonzero ranks " + str(r.table.by_lambda_degree) + " at n=" + std::to_string(n));
      }
  });

  criterion(4, "maslov cross-check 200 discs", 30.0, [&](Outcome& o) {
    DiscSampler sampler(4);
    for (int i = 0; i < 200; ++i) {
      const auto d = sampler.disc(4, 4, true);
      int zeros = 0;
      for (const auto& c : d.components()) zeros += static_cast<int>(c.factors().size());
      if (d.component(0).degree() != 0) o.fail("sampler produced mu_0 > 0");
      const int numeric = disc_boundary_maslov(d);
      if (numeric != 2 * zeros) o.fail("disc " + std::to_string(i) + ": numeric " + std::to_string(numeric) + " vs " + std::to_string(2 * zeros));
    }
  });

  criterion(5, "delta2 squares to zero n<=6", 0, [&](Outcome& o) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> order(1, 12), bit(0, 1);
    std::uniform_real_distribution<double> ang(0.0, 2 * std::numbers::pi);
    for (int n = 1; n <= 6; ++n)
      for (int trial = 0; trial < 50; ++trial) {
        // One root order per vector: mixed orders would lift to their lcm.
        std::vector<Cyclotomic> ce;
        std::vector<ApproxComplex> ca;
        const int m = order(rng);
        for (int j = 0; j <= n; ++j) {
          ce.push_back(root_of_unity(std::uniform_int_distribution<int>(0, m - 1)(rng), m) * Cyclotomic(bit(rng) ? 1 : -1));
          ca.push_back(ApproxComplex::polar(ang(rng)));
        }
        const auto ex = delta2_complex(WeightVector<Cyclotomic>::from_weights(ce));
        for (std::size_t k = 0; k + 1 < ex.differentials.size(); ++k)
          if (!(ex.differentials[k + 1] * ex.differentials[k]).is_zero_matrix(0.0)) o.fail("exact composite nonzero, n=" + std::to_string(n));
        const auto ap = delta2_complex(WeightVector<ApproxComplex>::from_weights(ca));
        for (std::size_t k = 0; k + 1 < ap.differentials.size(); ++k)
          if (!((ap.differentials[k + 1] * ap.differentials[k]).max_abs() < 1e-12)) o.fail("approx composite >= 1e-12, n=" + std::to_string(n));
      }
  });

  criterion(6, "oracle equivalence n<=5", 0, [&](Outcome& o) {
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7), order(2, 9);
    for (int n = 1; n <= 5; ++n)
      for (int trial = 0; trial < 50; ++trial) {
        // Weights c_j = root of unity times a nonzero rational; redraw until all v_j != 0.
        std::vector<Cyclotomic> c;
        WeightVector<Cyclotomic> w;
        for (;;) {
          c.clear();
          const int m = order(rng);
          for (int j = 0; j <= n; ++j) {
            int p = 0;
            while (p == 0) p = num(rng);
            c.push_back(root_of_unity(std::uniform_int_distribution<int>(0, m - 1)(rng), m) * Cyclotomic(Rational(p, den(rng))));
          }
          w = WeightVector<Cyclotomic>::from_weights(c);
          bool ok = true;
          for (const auto& v : w.v) ok = ok && !v.is_zero();
          if (ok) break;
        }
        if (!koszul_rescale_check(n, w)) o.fail("rescale check false at n=" + std::to_string(n));
        const auto cx = delta2_complex(w);
        for (int k = 0; k <= n; ++k)
          if (static_cast<int>(rank(cx.differentials[k])) != choose(n - 1, k))
            o.fail("rank D_" + std::to_string(k) + " != C(n-1,k) at n=" + std::to_string(n));
      }
  });

  criterion(7, "sign conventions", 0, [&](Outcome& o) {
    for (int x = 0; x <= 5; ++x)
      for (int l = 0; l <= 5; ++l) {
        const int expect = ((x + l) % 2 == 0) ? 1 : -1;
        const auto closed = boundary_fibre_signs(x, l);
        if (closed.dx != 1 || closed.dp != expect) o.fail("closed form at x=" + std::to_string(x) + ",l=" + std::to_string(l));
        if (l > x) continue;
        for (int p = 1; p <= l; ++p) {
          const auto replay = boundary_fibre_signs_replay(x, l, p);
          if (replay.dx != 1 || replay.dp != expect) o.fail("replay at x=" + std::to_string(x) + ",l=" + std::to_string(l));
        }
      }
    for (int n = 1; n <= 6; ++n)
      for (int mu = 2; mu <= 10; mu += 2) {
        const auto c = squarezero_chain(n, mu);
        if (c.glued != -1 || c.boundary != -1) o.fail("squarezero_chain(" + std::to_string(n) + "," + std::to_string(mu) + ")");
      }
  });

  criterion(8, "ev0 bijectivity witness n<=3", 0, [&](Outcome& o) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> ang(0.0, 2 * std::numbers::pi);
    const double tau = kDefaultTolerance;
    for (int n = 1; n <= 3; ++n)
      for (int i = 0; i <= n; ++i) {
        std::vector<std::vector<Complex>> targets;
        std::vector<BlaschkeDisc> discs;
        for (int t = 0; t < 100; ++t) {
          std::vector<Complex> target;
          for (int j = 0; j < n; ++j) target.push_back(std::polar(1.0, ang(rng)));
          auto d = solve_disc_through_point(i, target);
          std::vector<int> mu(n + 1, 0);
          mu[i] = 1;
          std::vector<int> got;
          for (const auto& c : d.components()) got.push_back(c.degree());
          if (got != mu) o.fail("wrong class");
          const auto x = disc_eval(d, 1.0);
          for (int j = 1; j <= n; ++j)
            if (std::abs(x[j] / x[0] - target[j - 1]) > tau) o.fail("round trip off at n=" + std::to_string(n));
          targets.push_back(target);
          discs.push_back(std::move(d));
        }
        for (std::size_t a = 0; a < discs.size(); ++a)
          for (std::size_t b = a + 1; b < discs.size(); ++b) {
            double gap = 0;
            for (int j = 0; j < n; ++j) gap = std::max(gap, std::abs(targets[a][j] - targets[b][j]));
            if (gap > tau && !(disc_distance(discs[a], discs[b]) > 0)) o.fail("distinct targets share a disc");
          }
      }
  });

  std::printf("%s: %d of 8 criteria failed\n", g_failures ? "FAIL" : "PASS", g_failures);
  return g_failures ? 1 : 0;
}
