#pragma once

// Vertices of Young modules from p-adic expansions of partitions, and the
// vertex report for the summands of Sym^r S^(n-1,1) and Sym^r D^(n-1,1).

#include <stdexcept>
#include <string>
#include <vector>

#include "combinatorics.hpp"
#include "repring.hpp"

namespace spechtsym {

/// rho with |mu(j)| parts of size p^j; Y^mu has a Sylow p-subgroup of S_rho
/// as a vertex. Parts of size 1 are kept.
inline Partition vertex_partition(const Partition& mu, int p) {
  const auto layers = p_adic_expansion_partition(mu, p);
  std::vector<int> parts;
  long long size = 1;
  for (const auto& layer : layers) {
    parts.insert(parts.end(), layer.size(), static_cast<int>(size));
    size *= p;
  }
  return Partition::from_unsorted(std::move(parts));
}

/// Sum of the parts of rho bigger than one.
inline int nontrivial_support(const Partition& rho) {
  int m = 0;
  for (int part : rho.parts())
    if (part > 1) m += part;
  return m;
}

/// Exponent of p in m!.
inline long long factorial_valuation(long long m, int p) {
  long long v = 0;
  for (long long q = p; q <= m; q *= p) v += m / q;
  return v;
}

/// True if a Sylow p-subgroup of S_rho is a Sylow p-subgroup of S_m, where
/// S_rho sits inside S_m through its nontrivial parts.
inline bool sylow_of_young_is_sylow_of(const Partition& rho, int m, int p) {
  if (nontrivial_support(rho) != m) return false;
  long long v = 0;
  for (int part : rho.parts()) v += factorial_valuation(part, p);
  return v == factorial_valuation(m, p);
}

enum class VertexCase { NMinusP, NMinus2P };

inline const char* case_name(VertexCase c) { return c == VertexCase::NMinusP ? "n-p" : "n-2p"; }

struct VertexClass {
  VertexCase which;
  int m;  // vertex is a Sylow p-subgroup of S_m
};

inline bool in_vertex_window(const Partition& mu, int n, int p) { return mu[1] > n - p && mu[1] < n; }

/// The two-case rule for p | n and n - p < mu_1 < n.
inline VertexClass vertex_case(const Partition& mu, int n, int p) {
  if (mu.size() != n) throw std::invalid_argument("vertex_case: mu is not a partition of n");
  if (n % p != 0) throw std::invalid_argument("vertex_case: need p | n");
  if (!in_vertex_window(mu, n, p))
    throw std::invalid_argument("vertex_case: need n - p < mu_1 < n, got mu = " + mu.str());
  if (mu[2] + n - p <= mu[1]) return {VertexCase::NMinusP, n - p};
  return {VertexCase::NMinus2P, n - 2 * p};
}

/// vertex_case against vertex_partition for one mu.
inline bool vertex_rules_agree(const Partition& mu, int n, int p) {
  return sylow_of_young_is_sylow_of(vertex_partition(mu, p), vertex_case(mu, n, p).m, p);
}

enum class SupportMode { Y, SDiff, DDiff };

inline long long support_coefficient(const Partition& lambda, int r, SupportMode mode) {
  auto y = [&](int k) { return static_cast<long long>(y_coefficient(lambda, k)); };
  switch (mode) {
    case SupportMode::Y:
      return y(r);
    case SupportMode::SDiff:
      return y(r) - y(r - 1);
    case SupportMode::DDiff:
      return y(r) + y(r - 2) - 2 * y(r - 1);
  }
  return 0;
}

/// Every lambda of n with a nonzero coefficient has n - r <= lambda_1 < n.
inline bool coefficient_support_check(int n, int r, SupportMode mode) {
  if (r >= n) throw std::invalid_argument("coefficient_support_check: need r < n");
  const int lowest = mode == SupportMode::Y ? 1 : mode == SupportMode::SDiff ? 2 : 3;
  if (r < lowest)
    throw std::invalid_argument("coefficient_support_check: need r >= " + std::to_string(lowest) + " in this mode");
  for (const auto& lambda : partitions_of(n))
    if (support_coefficient(lambda, r, mode) != 0 && !(lambda[1] >= n - r && lambda[1] < n)) return false;
  return true;
}

enum class PowerKind { S, D };

struct VertexEntry {
  Partition mu;
  int vertex_m;
  VertexCase which;
  bool certified;  // a summand for certain; otherwise a candidate
};

struct VertexReport {
  int n, p, r;
  PowerKind kind;
  RepRingElement formula;
  YoungConversion conversion;
  std::vector<VertexEntry> entries;
};

inline VertexReport sd_vertex_report(int n, int p, PowerKind kind, int r) {
  if (n < 3 || n % p != 0) throw std::invalid_argument("sd_vertex_report: need n >= 3 and p | n");
  VertexReport rep{n, p, r, kind, kind == PowerKind::S ? sym_S_formula(n, r, p) : sym_D_formula(n, r, p), {}, {}};
  rep.conversion = to_young_basis(rep.formula, n, p);

  auto add = [&](const Partition& mu, bool certified) {
    for (auto& e : rep.entries)
      if (e.mu == mu) {
        e.certified = e.certified || certified;
        return;
      }
    if (!in_vertex_window(mu, n, p)) {
      if (!certified) return;
      throw VerificationError("Young module Y^" + mu.str() + " lies outside the window n - p < mu_1 < n");
    }
    const auto vc = vertex_case(mu, n, p);
    if (!vertex_rules_agree(mu, n, p)) throw VerificationError("vertex rules disagree for " + mu.str());
    rep.entries.push_back({mu, vc.m, vc.which, certified});
  };

  // Young multiplicities are nonnegative, so with a nonnegative remainder a
  // positive converted coefficient is a genuine summand.
  const bool exact = rep.conversion.remainder.all_nonnegative();
  for (const auto& [l, c] : rep.conversion.converted.terms())
    if (c > 0) add(l.lambda, exact);
  // [M^lambda] only has summands Y^mu with mu dominating lambda.
  for (const auto& [l, c] : rep.conversion.remainder.terms())
    for (const auto& mu : partitions_of(n))
      if (dominates(mu, l.lambda) && in_vertex_window(mu, n, p)) add(mu, false);
  if (rep.conversion.remainder.is_zero() && !rep.conversion.converted.all_nonnegative())
    throw VerificationError("fully converted formula has negative Young multiplicities");
  return rep;
}

struct SmallDegreeDimension {
  PowerKind kind;
  int r;
  std::uint64_t dim;
  bool divisible;
};

/// dim Sym^r S^(n-1,1) = C(n+r-2, r) for r = 0, 1 and dim Sym^r D^(n-1,1) =
/// C(n+r-3, r) for r = 0, 1, 2.
inline std::vector<SmallDegreeDimension> small_degree_dimensions(int n, int p) {
  std::vector<SmallDegreeDimension> out;
  for (int r = 0; r <= 1; ++r) {
    const auto d = binomial(n + r - 2, r);
    out.push_back({PowerKind::S, r, d, d % p == 0});
  }
  for (int r = 0; r <= 2; ++r) {
    const auto d = binomial(n + r - 3, r);
    out.push_back({PowerKind::D, r, d, d % p == 0});
  }
  return out;
}

}  // namespace spechtsym
