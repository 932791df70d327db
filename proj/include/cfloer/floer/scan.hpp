#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cfloer/errors.hpp"
#include "cfloer/floer/coboundary.hpp"
#include "cfloer/floer/holonomy.hpp"
#include "cfloer/floer/spin.hpp"
#include "cfloer/parallel.hpp"
#include "cfloer/scalars/holonomy_text.hpp"

namespace cfloer {

/// One computed configuration: what was asked and what came out.
struct HfReport {
  int n = 0;
  SpinStructure spin = SpinStructure::standard(1);
  std::vector<std::string> holonomy;
  RankTable table;
  Backend backend = Backend::Exact;

  bool nonvanishing() const { return table.nonvanishing(); }
};

template <FieldScalar S>
HfReport compute_hf(const SpinStructure& spin, const std::vector<UnitScalar>& holonomy, double tol = kDefaultTolerance) {
  const int n = spin.rank();
  if (static_cast<int>(holonomy.size()) != n)
    throw RankMismatch("expected " + std::to_string(n) + " holonomies, got " + std::to_string(holonomy.size()));
  auto hol = HolonomyAssignment<S>::from_text(holonomy, tol);
  HfReport r;
  r.n = n;
  r.spin = spin;
  for (const auto& h : holonomy) r.holonomy.push_back(h.str());
  r.table = floer_ranks_bruteforce(n, weights(spin, hol), tol);
  r.backend = backend_of<S>::value;
  return r;
}

inline std::vector<UnitScalar> trivial_holonomy(int n) {
  return std::vector<UnitScalar>(static_cast<std::size_t>(n), UnitScalar::from_turn(Rational(0)));
}

inline std::size_t spin_scan_size(int n) { return std::size_t{1} << n; }

/// Cell i of the spin scan: spin structure twisted on the subset with bitmask i,
/// trivial holonomy, exact arithmetic.
inline HfReport spin_scan_cell(int n, std::size_t i) {
  return compute_hf<Cyclotomic>(SpinStructure::from_subset(IndexSet::from_mask(static_cast<std::uint32_t>(i)), n),
                                trivial_holonomy(n));
}

/// All 2^n spin structures with trivial holonomy, in subset-bitmask order.
inline std::vector<HfReport> spin_scan(int n, unsigned jobs = 1) {
  if (n < 1 || n > kMaxRank) throw DomainError("spin_scan needs 1 <= n <= " + std::to_string(kMaxRank));
  return parallel_map(spin_scan_size(n), jobs, [n](std::size_t i) { return spin_scan_cell(n, i); });
}

inline std::size_t brane_scan_size(int n) {
  std::size_t total = 1;
  for (int j = 0; j < n; ++j) total *= static_cast<std::size_t>(n + 1);
  return total;
}

/// Exponents (k_1..k_n) of cell i, with h_j = zeta_{n+1}^{k_j}; k_1 varies slowest.
inline std::vector<int> brane_scan_exponents(int n, std::size_t i) {
  std::vector<int> k(static_cast<std::size_t>(n));
  for (int j = n - 1; j >= 0; --j) {
    k[static_cast<std::size_t>(j)] = static_cast<int>(i % static_cast<std::size_t>(n + 1));
    i /= static_cast<std::size_t>(n + 1);
  }
  return k;
}

inline HfReport brane_scan_cell(int n, std::size_t i) {
  std::vector<UnitScalar> hol;
  for (int k : brane_scan_exponents(n, i)) hol.push_back(UnitScalar::from_turn(Rational(k, n + 1)));
  return compute_hf<Cyclotomic>(SpinStructure::standard(n), hol);
}

/// Every tuple of (n+1)-th roots of unity under the standard spin structure.
inline std::vector<HfReport> brane_scan_cells(int n, unsigned jobs = 1) {
  if (n < 1 || n > 8) throw DomainError("brane_scan needs 1 <= n <= 8");
  return parallel_map(brane_scan_size(n), jobs, [n](std::size_t i) { return brane_scan_cell(n, i); });
}

/// The nonvanishing cells of the brane scan.
inline std::vector<HfReport> brane_scan(int n, unsigned jobs = 1) {
  std::vector<HfReport> out;
  for (auto& r : brane_scan_cells(n, jobs))
    if (r.nonvanishing()) out.push_back(std::move(r));
  return out;
}

}  // namespace cfloer
