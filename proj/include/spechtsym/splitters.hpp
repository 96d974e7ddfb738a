#pragma once

// Explicit splittings of the boundary map d_r : Sym^r V -> Sym^(r-1) V and of
// the multiplication map X_(r-1) : Sym^(r-1) V -> Sym^r V, and the lifting
// step that turns a splitting in degree r into one in degree r + 1.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gf.hpp"
#include "modact.hpp"
#include "spechtmod.hpp"
#include "symalg.hpp"

namespace spechtsym {

/// A section of d_r (Sym^(r-1) -> Sym^r) or a retraction of X_(r-1)
/// (Sym^r -> Sym^(r-1)).
struct SplitMap {
  int r;
  ModuleHom map;
};

namespace detail {

inline void require_sym_map(const SymContext& ctx, const ModuleHom& h, int from, int to, const char* who) {
  if (!ctx.in_range(from) || !ctx.in_range(to) || h.source().dim() != ctx.dim(from) ||
      h.target().dim() != ctx.dim(to))
    throw std::invalid_argument(std::string(who) + ": map is not Sym^" + std::to_string(from) + " -> Sym^" +
                                std::to_string(to) + " of this context");
}

inline void require_liftable_degree(int r, std::uint32_t p, const char* who) {
  if (r < 1) throw std::invalid_argument(std::string(who) + ": r must be positive");
  const auto m = static_cast<std::uint32_t>(r) % p;
  if (m == 0 || m == p - 1)
    throw std::invalid_argument(std::string(who) + ": r = " + std::to_string(r) + " is 0 or -1 mod " +
                                std::to_string(p));
}

}  // namespace detail

/// x_i -> x_i^2 / 2 on a permutation module; a section of d_2.
inline ModuleHom zeta(const SymContext& ctx) {
  const std::uint32_t p = ctx.modulus();
  if (p == 2) throw std::invalid_argument("zeta: characteristic must be odd");
  if (!is_permutation_module(ctx.base())) throw std::invalid_argument("zeta: basis is not a permutation basis");
  ctx.require_degree(2);
  const gf::Scalar half = gf::inv(2, p);
  Matrix z(ctx.dim(2), ctx.dim(1), p);
  for (std::size_t i = 0; i < ctx.vars(); ++i) {
    Composition sq{std::vector<int>(ctx.vars(), 0)};
    sq.entries[i] = 2;
    z(ctx.index_of(sq), i) = half;
  }
  ModuleHom h(sym_power(ctx, 1), sym_power(ctx, 2), std::move(z));
  require_equivariant(h, "zeta");
  if (!(boundary_component(ctx, 2) * h.matrix()).is_identity())
    throw VerificationError("zeta is not a section of d_2");
  return h;
}

/// Retraction of X_2 on Sym^* S^(n-1,1) for p odd and p | n. The context
/// must be built on specht_n11(n, p).module.
inline ModuleHom gamma(const SymContext& ctx) {
  const std::uint32_t p = ctx.modulus();
  const int n = ctx.base().n();
  if (p == 2) throw std::invalid_argument("gamma: characteristic must be odd");
  if (n < 3 || n % p != 0) throw std::invalid_argument("gamma: need n >= 3 and p | n");
  if (ctx.vars() != static_cast<std::size_t>(n - 1)) throw std::invalid_argument("gamma: base is not S^(n-1,1)");
  ctx.require_degree(3);
  const std::size_t t = ctx.vars();
  const gf::Scalar half = gf::inv(2, p);
  const gf::Scalar quarter = gf::inv(4, p);
  auto sq = [&](std::size_t i) {
    Composition c{std::vector<int>(t, 0)};
    c.entries[i] = 2;
    return ctx.index_of(c);
  };
  auto pair = [&](std::size_t i, std::size_t j) {
    Composition c{std::vector<int>(t, 0)};
    ++c.entries[i];
    ++c.entries[j];
    return ctx.index_of(c);
  };
  Matrix g(ctx.dim(2), ctx.dim(3), p);
  const auto& mons = ctx.monomials(3);
  for (std::size_t col = 0; col < mons.size(); ++col) {
    std::vector<std::size_t> ones, twos, threes;
    for (std::size_t i = 0; i < t; ++i) {
      if (mons[col].entries[i] == 1) ones.push_back(i);
      if (mons[col].entries[i] == 2) twos.push_back(i);
      if (mons[col].entries[i] == 3) threes.push_back(i);
    }
    auto addto = [&](std::size_t row, gf::Scalar v) { g(row, col) = gf::add(g(row, col), v, p); };
    auto sub = [&](std::size_t row, gf::Scalar v) { g(row, col) = gf::sub(g(row, col), v, p); };
    if (!threes.empty()) {
      // e_i^3 -> -1/2 e_i sum_l e_l
      const std::size_t i = threes[0];
      for (std::size_t l = 0; l < t; ++l) sub(l == i ? sq(i) : pair(i, l), half);
    } else if (!twos.empty()) {
      // e_i^2 e_j -> 1/2 (e_i e_j - e_i^2 - e_j^2) - 1/4 sum_l e_l^2
      const std::size_t i = twos[0], j = ones[0];
      addto(pair(i, j), half);
      sub(sq(i), half);
      sub(sq(j), half);
      for (std::size_t l = 0; l < t; ++l) sub(sq(l), quarter);
    } else {
      // e_i e_j e_k -> -1/4 (e_i^2 + e_j^2 + e_k^2 + sum_l e_l^2)
      for (auto i : ones) sub(sq(i), quarter);
      for (std::size_t l = 0; l < t; ++l) sub(sq(l), quarter);
    }
  }
  ModuleHom h(sym_power(ctx, 3), sym_power(ctx, 2), std::move(g));
  require_equivariant(h, "gamma");
  if (!(h.matrix() * mul_component(ctx, 2)).is_identity()) throw VerificationError("gamma is not a retraction of X_2");
  return h;
}

inline ModuleHom gamma(int n, std::uint32_t p) {
  if (n < 3) throw std::invalid_argument("gamma: need n >= 3");
  return gamma(SymContext(specht_n11(n, p).module, 3));
}

/// From a section phi of d_r, the section
///   theta = (1/r) (Psi(phi) - Psi(phi)^2 o d / (r + 1))   on Sym^r
/// of d_(r+1). Needs r != 0, -1 mod p and cap >= r + 1.
inline ModuleHom theta_up(const SymContext& ctx, const ModuleHom& phi, int r) {
  const std::uint32_t p = ctx.modulus();
  detail::require_liftable_degree(r, p, "theta_up");
  ctx.require_degree(r + 1);
  detail::require_sym_map(ctx, phi, r - 1, r, "theta_up");
  if (!(boundary_component(ctx, r) * phi.matrix()).is_identity())
    throw std::invalid_argument("theta_up: input is not a section of d_" + std::to_string(r));
  require_equivariant(phi, "theta_up input");

  const GradedEndo psi = lift(ctx, phi.matrix(), r - 1, r, r);
  const Matrix& psi_r = psi.at(r);
  const Matrix correction = (psi_r * (phi.matrix() * boundary_component(ctx, r))).scaled(gf::inv((r + 1) % p, p));
  Matrix theta = (psi_r - correction).scaled(gf::inv(r % p, p));

  ModuleHom h(phi.target(), sym_power(ctx, r + 1), std::move(theta));
  if (!(boundary_component(ctx, r + 1) * h.matrix()).is_identity())
    throw VerificationError("theta_up output is not a section of d_" + std::to_string(r + 1));
  require_equivariant(h, "theta_up output");
  return h;
}

/// From a retraction phi of X_(r-1), the retraction
///   theta = (1/r) (Psi(phi) - X o Psi(phi)^2 / (r + 1))   on Sym^(r+1)
/// of X_r. Needs r != 0, -1 mod p and cap >= r + 1.
inline ModuleHom theta_down(const SymContext& ctx, const ModuleHom& phi, int r) {
  const std::uint32_t p = ctx.modulus();
  detail::require_liftable_degree(r, p, "theta_down");
  ctx.require_degree(r + 1);
  detail::require_sym_map(ctx, phi, r, r - 1, "theta_down");
  if (!(phi.matrix() * mul_component(ctx, r - 1)).is_identity())
    throw std::invalid_argument("theta_down: input is not a retraction of X_" + std::to_string(r - 1));
  require_equivariant(phi, "theta_down input");

  const GradedEndo psi = lift(ctx, phi.matrix(), r, r - 1, r + 1);
  const Matrix& psi_top = psi.at(r + 1);
  const Matrix correction =
      (mul_component(ctx, r - 1) * (phi.matrix() * psi_top)).scaled(gf::inv((r + 1) % p, p));
  Matrix theta = (psi_top - correction).scaled(gf::inv(r % p, p));

  ModuleHom h(sym_power(ctx, r + 1), phi.source(), std::move(theta));
  if (!(h.matrix() * mul_component(ctx, r)).is_identity())
    throw VerificationError("theta_down output is not a retraction of X_" + std::to_string(r));
  require_equivariant(h, "theta_down output");
  return h;
}

/// Sections of d_r on Sym^* V for 2 <= r <= p-1, V a permutation module.
inline std::vector<SplitMap> split_chain_M(const SymContext& ctx) {
  const auto p = static_cast<int>(ctx.modulus());
  if (p < 3) throw std::invalid_argument("split_chain_M: need p >= 3");
  std::vector<SplitMap> out;
  out.push_back({2, zeta(ctx)});
  for (int r = 2; r + 1 <= p - 1; ++r) out.push_back({r + 1, theta_up(ctx, out.back().map, r)});
  return out;
}

inline std::vector<SplitMap> split_chain_M(int n, std::uint32_t p) {
  return split_chain_M(SymContext(natural_module(n, p), std::max<int>(2, p - 1)));
}

/// Retractions of X_(r-1) on Sym^* S^(n-1,1) for 3 <= r <= p-1; p >= 5, p | n.
inline std::vector<SplitMap> split_chain_S(const SymContext& ctx) {
  const auto p = static_cast<int>(ctx.modulus());
  const int n = ctx.base().n();
  if (p < 5) throw std::invalid_argument("split_chain_S: need p >= 5");
  if (n % p != 0) throw std::invalid_argument("split_chain_S: need p | n");
  std::vector<SplitMap> out;
  out.push_back({3, gamma(ctx)});
  for (int r = 3; r + 1 <= p - 1; ++r) out.push_back({r + 1, theta_down(ctx, out.back().map, r)});
  return out;
}

inline std::vector<SplitMap> split_chain_S(int n, std::uint32_t p) {
  if (p < 5) throw std::invalid_argument("split_chain_S: need p >= 5");
  if (n < 3 || n % p != 0) throw std::invalid_argument("split_chain_S: need n >= 3 and p | n");
  return split_chain_S(SymContext(specht_n11(n, p).module, p - 1));
}

/// Exhaustive linear search for an equivariant retraction of X_(r-1);
/// nullopt certifies that the sequence does not split in degree r.
inline std::optional<ModuleHom> search_mul_retraction(const SymContext& ctx, int r) {
  ctx.require_degree(r);
  if (r < 1) throw std::invalid_argument("search_mul_retraction: r must be positive");
  ModuleHom x(sym_power(ctx, r - 1), sym_power(ctx, r), mul_component(ctx, r - 1));
  return find_equivariant_retraction(x);
}

/// Exhaustive linear search for an equivariant section of d_r.
inline std::optional<ModuleHom> search_boundary_section(const SymContext& ctx, int r) {
  ctx.require_degree(r);
  if (r < 1) throw std::invalid_argument("search_boundary_section: r must be positive");
  ModuleHom d(sym_power(ctx, r), sym_power(ctx, r - 1), boundary_component(ctx, r));
  return find_equivariant_section(d);
}

}  // namespace spechtsym
