#pragma once

// The graded symmetric algebra Sym V = K[x_1..x_t] on a based module, cut off
// at a degree cap. Homogeneous elements of degree d are dense coefficient
// vectors over the degree-d monomials; graded maps are explicit matrices.
//
// Monomial order: within each degree the monomials x^alpha are listed in
// decreasing lexicographic order of alpha, so degree 1 is x_1, ..., x_t and
// x_1^d comes first in degree d.

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "gf.hpp"
#include "modact.hpp"

namespace spechtsym {

class SymContext {
 public:
  SymContext(GModule base, int cap) : base_(std::move(base)), t_(base_.dim()), cap_(cap) {
    if (cap < 0) throw std::invalid_argument("SymContext: negative degree cap");
    if (t_ == 0) throw std::invalid_argument("SymContext: base module has dimension zero");
    const std::uint32_t p = modulus();
    const std::size_t top = cap_ + t_ + 1;
    choose_.assign(top + 1, std::vector<std::uint64_t>(top + 1, 0));
    for (std::size_t m = 0; m <= top; ++m) {
      choose_[m][0] = 1;
      for (std::size_t k = 1; k <= m; ++k) choose_[m][k] = choose_[m - 1][k - 1] + choose_[m - 1][k];
    }
    binom_mod_.assign(cap_ + 1, std::vector<gf::Scalar>(cap_ + 1, 0));
    for (int b = 0; b <= cap_; ++b)
      for (int a = 0; a <= b; ++a) binom_mod_[b][a] = binom_mod_p(b, a, p).value();
    monomials_.resize(cap_ + 1);
    for (int d = 0; d <= cap_; ++d) {
      auto c = compositions(static_cast<int>(t_), d);
      monomials_[d].assign(c.rbegin(), c.rend());
    }
  }

  const GModule& base() const { return base_; }
  std::size_t vars() const { return t_; }
  int cap() const { return cap_; }
  std::uint32_t modulus() const { return base_.modulus(); }

  bool in_range(int d) const { return d >= 0 && d <= cap_; }

  std::size_t dim(int d) const { return in_range(d) ? monomials_[d].size() : 0; }

  const std::vector<Composition>& monomials(int d) const {
    require_degree(d);
    return monomials_[d];
  }
  const Composition& monomial(int d, std::size_t idx) const { return monomials(d).at(idx); }

  /// Position of x^alpha among the monomials of its degree.
  std::size_t index_of(const Composition& alpha) const {
    if (alpha.length() != t_) throw std::invalid_argument("index_of: composition has wrong length");
    int rem = alpha.degree();
    require_degree(rem);
    std::size_t idx = 0;
    for (std::size_t i = 0; i + 1 < t_; ++i) {
      const int a = alpha.entries[i];
      const std::size_t k = t_ - i - 1;
      // compositions agreeing before i and larger at i
      if (rem > a) idx += choose_[rem - a - 1 + k][k];
      rem -= a;
    }
    return idx;
  }

  /// C(b, a) mod p for 0 <= a, b <= cap.
  gf::Scalar binom(int b, int a) const {
    if (a < 0 || a > b) return 0;
    return binom_mod_.at(b).at(a);
  }

  void require_degree(int d) const {
    if (!in_range(d))
      throw std::out_of_range("degree " + std::to_string(d) + " outside [0, " + std::to_string(cap_) + "]");
  }

 private:
  GModule base_;
  std::size_t t_;
  int cap_;
  std::vector<std::vector<std::uint64_t>> choose_;
  std::vector<std::vector<gf::Scalar>> binom_mod_;
  std::vector<std::vector<Composition>> monomials_;
};

/// Matrix of Sym^r(f) for a linear map f from the base of src to the base of
/// tgt (columns of f are images of basis vectors).
inline Matrix induced_power_map(const SymContext& src, const SymContext& tgt, const Matrix& f, int r) {
  src.require_degree(r);
  tgt.require_degree(r);
  if (f.rows() != tgt.vars() || f.cols() != src.vars()) throw std::invalid_argument("induced_power_map: shape");
  const std::uint32_t p = src.modulus();
  std::vector<std::vector<std::pair<std::size_t, gf::Scalar>>> images(src.vars());
  for (std::size_t j = 0; j < f.cols(); ++j)
    for (std::size_t i = 0; i < f.rows(); ++i)
      if (auto v = f(i, j)) images[j].emplace_back(i, v);
  Matrix prev = Matrix::identity(1, p);
  for (int d = 1; d <= r; ++d) {
    Matrix cur(tgt.dim(d), src.dim(d), p);
    const auto& mons = src.monomials(d);
    for (std::size_t col = 0; col < mons.size(); ++col) {
      Composition lower = mons[col];
      std::size_t first = 0;
      while (lower.entries[first] == 0) ++first;
      --lower.entries[first];
      const std::size_t lower_idx = src.index_of(lower);
      for (std::size_t k = 0; k < prev.rows(); ++k) {
        const gf::Scalar c = prev(k, lower_idx);
        if (!c) continue;
        Composition gamma = tgt.monomial(d - 1, k);
        for (auto [j, v] : images[first]) {
          ++gamma.entries[j];
          auto& slot = cur(tgt.index_of(gamma), col);
          slot = gf::add(slot, gf::mul(c, v, p), p);
          --gamma.entries[j];
        }
      }
    }
    prev = std::move(cur);
  }
  return prev;
}

/// Sym^r V as an S_n-module on the monomial basis of degree r.
inline GModule sym_power(const SymContext& ctx, int r) {
  ctx.require_degree(r);
  std::vector<Matrix> gens;
  for (const auto& g : ctx.base().gens()) gens.push_back(induced_power_map(ctx, ctx, g, r));
  return GModule::derived(ctx.base().n(), ctx.modulus(), ctx.dim(r), std::move(gens));
}

/// Product of homogeneous elements of degrees a and b.
inline gf::Vector multiply(const SymContext& ctx, const gf::Vector& f, int a, const gf::Vector& g, int b) {
  ctx.require_degree(a + b);
  if (f.size() != ctx.dim(a) || g.size() != ctx.dim(b)) throw std::invalid_argument("multiply: wrong length");
  const std::uint32_t p = ctx.modulus();
  gf::Vector out(ctx.dim(a + b), 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!f[i]) continue;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (!g[j]) continue;
      auto& slot = out[ctx.index_of(ctx.monomial(a, i) + ctx.monomial(b, j))];
      slot = gf::add(slot, gf::mul(f[i], g[j], p), p);
    }
  }
  return out;
}

/// Basis vector for x^alpha.
inline gf::Vector monomial_vector(const SymContext& ctx, const Composition& alpha) {
  gf::Vector v(ctx.dim(alpha.degree()), 0);
  v[ctx.index_of(alpha)] = 1;
  return v;
}

namespace detail {

// Calls visit(alpha, coeff) for each alpha <= beta with |alpha| = a, where
// coeff = prod_i C(beta_i, alpha_i) mod p is nonzero.
inline void for_each_sub_composition(const SymContext& ctx, const Composition& beta, int a,
                                     const std::function<void(const Composition&, gf::Scalar)>& visit) {
  const std::uint32_t p = ctx.modulus();
  Composition alpha{std::vector<int>(beta.length(), 0)};
  std::vector<int> tail(beta.length() + 1, 0);
  for (std::size_t i = beta.length(); i-- > 0;) tail[i] = tail[i + 1] + beta.entries[i];
  std::function<void(std::size_t, int, gf::Scalar)> rec = [&](std::size_t i, int left, gf::Scalar coeff) {
    if (left == 0) {
      visit(alpha, coeff);
      return;
    }
    if (i == beta.length() || tail[i] < left) return;
    for (int v = std::min(left, beta.entries[i]); v >= 0; --v) {
      const gf::Scalar c = gf::mul(coeff, ctx.binom(beta.entries[i], v), p);
      if (!c) continue;
      alpha.entries[i] = v;
      rec(i + 1, left - v, c);
      alpha.entries[i] = 0;
    }
  };
  rec(0, a, 1 % p);
}

}  // namespace detail

/// Delta_a of a degree-d element, as a dim(a) x dim(d-a) coefficient table of
/// x^alpha (x) x^gamma. Zero (with no columns) when d < a.
inline Matrix comultiply_a(const SymContext& ctx, int a, const gf::Vector& f, int d) {
  ctx.require_degree(a);
  ctx.require_degree(d);
  if (f.size() != ctx.dim(d)) throw std::invalid_argument("comultiply_a: wrong length");
  const std::uint32_t p = ctx.modulus();
  Matrix out(ctx.dim(a), d >= a ? ctx.dim(d - a) : 0, p);
  if (d < a) return out;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (!f[k]) continue;
    const Composition& beta = ctx.monomial(d, k);
    detail::for_each_sub_composition(ctx, beta, a, [&](const Composition& alpha, gf::Scalar c) {
      auto& slot = out(ctx.index_of(alpha), ctx.index_of(beta - alpha));
      slot = gf::add(slot, gf::mul(c, f[k], p), p);
    });
  }
  return out;
}

/// The operator d^alpha / alpha! in its binomial form: x^beta goes to
/// prod_i C(beta_i, alpha_i) x^(beta - alpha) when alpha <= beta, else 0.
inline gf::Vector divided_diff(const SymContext& ctx, const Composition& alpha, const gf::Vector& f, int d) {
  const int a = alpha.degree();
  ctx.require_degree(d);
  if (f.size() != ctx.dim(d)) throw std::invalid_argument("divided_diff: wrong length");
  const std::uint32_t p = ctx.modulus();
  gf::Vector out(d >= a ? ctx.dim(d - a) : 0, 0);
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (!f[k]) continue;
    const Composition& beta = ctx.monomial(d, k);
    if (!alpha.below(beta)) continue;
    gf::Scalar c = f[k];
    for (std::size_t i = 0; i < beta.length(); ++i) c = gf::mul(c, ctx.binom(beta.entries[i], alpha.entries[i]), p);
    if (!c) continue;
    auto& slot = out[ctx.index_of(beta - alpha)];
    slot = gf::add(slot, c, p);
  }
  return out;
}

/// A family of matrices Sym^d -> Sym^(d+shift), keyed by source degree.
class GradedEndo {
 public:
  GradedEndo(int shift, std::map<int, Matrix> components) : shift_(shift), components_(std::move(components)) {}

  int shift() const { return shift_; }
  bool has(int d) const { return components_.count(d) != 0; }
  const Matrix& at(int d) const {
    auto it = components_.find(d);
    if (it == components_.end())
      throw std::out_of_range("graded map has no component in degree " + std::to_string(d));
    return it->second;
  }
  const std::map<int, Matrix>& components() const { return components_; }

 private:
  int shift_;
  std::map<int, Matrix> components_;
};

/// The degree-less lift of phi : Sym^a -> Sym^b, i.e. the graded map
/// m o (phi (x) id) o Delta_a, computed for source degrees up to max_degree
/// (default: as far as the cap allows) and zero below degree a.
inline GradedEndo lift(const SymContext& ctx, const Matrix& phi, int a, int b,
                       std::optional<int> max_degree = std::nullopt) {
  ctx.require_degree(a);
  ctx.require_degree(b);
  if (phi.rows() != ctx.dim(b) || phi.cols() != ctx.dim(a))
    throw std::invalid_argument("lift: matrix does not map degree " + std::to_string(a) + " to degree " +
                                std::to_string(b));
  const std::uint32_t p = ctx.modulus();
  const int shift = b - a;
  int top = std::min(ctx.cap(), ctx.cap() - shift);
  if (max_degree) top = std::min(top, *max_degree);
  std::vector<std::vector<std::pair<std::size_t, gf::Scalar>>> cols(phi.cols());
  for (std::size_t i = 0; i < phi.rows(); ++i)
    for (std::size_t j = 0; j < phi.cols(); ++j)
      if (auto v = phi(i, j)) cols[j].emplace_back(i, v);
  std::map<int, Matrix> comps;
  for (int d = std::max(0, -shift); d <= top; ++d) {
    Matrix m(ctx.dim(d + shift), ctx.dim(d), p);
    if (d >= a) {
      const auto& mons = ctx.monomials(d);
      for (std::size_t col = 0; col < mons.size(); ++col) {
        const Composition& beta = mons[col];
        detail::for_each_sub_composition(ctx, beta, a, [&](const Composition& alpha, gf::Scalar c) {
          const Composition rest = beta - alpha;
          for (auto [k, v] : cols[ctx.index_of(alpha)]) {
            auto& slot = m(ctx.index_of(ctx.monomial(b, k) + rest), col);
            slot = gf::add(slot, gf::mul(c, v, p), p);
          }
        });
      }
    }
    comps.emplace(d, std::move(m));
  }
  return GradedEndo(shift, std::move(comps));
}

/// Psi(eps) for eps : V -> K with eps(x_i) = 1; equals sum_i d/dx_i.
inline GradedEndo boundary(const SymContext& ctx, const Matrix& eps) {
  if (eps.rows() != 1 || eps.cols() != ctx.vars()) throw std::invalid_argument("boundary: eps must be 1 x t");
  for (std::size_t j = 0; j < eps.cols(); ++j)
    if (eps(0, j) != 1) throw std::invalid_argument("boundary: eps is not 1 on every basis vector");
  return lift(ctx, eps, 1, 0);
}

/// Psi(iota) for iota : K -> V with iota(1) = sum_i e_i; multiplication by sum_i e_i.
inline GradedEndo mul_map(const SymContext& ctx, const Matrix& iota) {
  if (iota.cols() != 1 || iota.rows() != ctx.vars()) throw std::invalid_argument("mul_map: iota must be t x 1");
  for (std::size_t i = 0; i < iota.rows(); ++i)
    if (iota(i, 0) != 1) throw std::invalid_argument("mul_map: iota(1) is not the sum of the basis");
  return lift(ctx, iota, 0, 1);
}

inline Matrix ones_row(const SymContext& ctx) {
  Matrix m(1, ctx.vars(), ctx.modulus());
  for (std::size_t j = 0; j < ctx.vars(); ++j) m(0, j) = 1;
  return m;
}

inline Matrix ones_column(const SymContext& ctx) { return ones_row(ctx).transpose(); }

/// d restricted to degree r, as a map Sym^r -> Sym^(r-1).
inline Matrix boundary_component(const SymContext& ctx, int r) {
  return lift(ctx, ones_row(ctx), 1, 0, r).at(r);
}

/// X restricted to degree r, as a map Sym^r -> Sym^(r+1).
inline Matrix mul_component(const SymContext& ctx, int r) {
  return lift(ctx, ones_column(ctx), 0, 1, r).at(r);
}

/// Which commutator to evaluate for a one-sided inverse phi.
enum class SplitKind {
  Section,     // phi : Sym^(r-1) -> Sym^r with d_r o phi = id; uses [d, Psi(phi)]
  Retraction,  // phi : Sym^r -> Sym^(r-1) with phi o X_(r-1) = id; uses [Psi(phi), X]
};

/// Checks the defining identity of phi and, on success, returns the scalar by
/// which the relevant commutator acts on degree d. Needs d + 1 <= cap.
/// A non-scalar commutator is reported as a VerificationError.
inline FieldElement commutator_scalar_check(const SymContext& ctx, const Matrix& phi, int r, SplitKind kind, int d,
                                            const GradedEndo* lifted = nullptr) {
  const std::uint32_t p = ctx.modulus();
  if (r < 1) throw std::invalid_argument("commutator_scalar_check: r must be positive");
  ctx.require_degree(d + 1);
  const int a = kind == SplitKind::Section ? r - 1 : r;
  const int b = kind == SplitKind::Section ? r : r - 1;
  std::optional<GradedEndo> own;
  if (!lifted) {
    own = lift(ctx, phi, a, b, d + 1);
    lifted = &*own;
  }
  const GradedEndo& psi = *lifted;
  Matrix c;
  if (kind == SplitKind::Section) {
    if (!(boundary_component(ctx, r) * phi).is_identity())
      throw std::invalid_argument("commutator_scalar_check: phi is not a section of the boundary map");
    c = boundary_component(ctx, d + 1) * psi.at(d);
    if (d >= 1) c = c - psi.at(d - 1) * boundary_component(ctx, d);
  } else {
    if (!(phi * mul_component(ctx, r - 1)).is_identity())
      throw std::invalid_argument("commutator_scalar_check: phi is not a retraction of the multiplication map");
    c = psi.at(d + 1) * mul_component(ctx, d);
    if (d >= 1) c = c - mul_component(ctx, d - 1) * psi.at(d);
  }
  auto s = c.scalar_value();
  if (!s) throw VerificationError("commutator does not act as a scalar in degree " + std::to_string(d));
  return {*s, p};
}

}  // namespace spechtsym
