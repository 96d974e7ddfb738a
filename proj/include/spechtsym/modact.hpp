#pragma once

// Modules for the symmetric group S_n over GF(p), presented by the action
// matrices of the Coxeter generators s_m = (m, m+1).

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gf.hpp"

namespace spechtsym {

class GModule {
 public:
  /// Validates the Coxeter presentation: s_m^2 = 1, (s_m s_{m+1})^3 = 1 and
  /// s_i s_j = s_j s_i for |i - j| >= 2.
  GModule(int n, std::uint32_t p, std::size_t dim, std::vector<Matrix> gens)
      : GModule(n, p, dim, std::move(gens), true) {}

  static GModule trivial(int n, std::uint32_t p) {
    return GModule(n, p, 1, std::vector<Matrix>(n > 0 ? n - 1 : 0, Matrix::identity(1, p)));
  }

  /// Skips the relation check; for modules whose action is derived from an
  /// already validated one.
  static GModule derived(int n, std::uint32_t p, std::size_t dim, std::vector<Matrix> gens) {
    return GModule(n, p, dim, std::move(gens), false);
  }

  int n() const { return n_; }
  std::uint32_t modulus() const { return p_; }
  std::size_t dim() const { return dim_; }
  std::size_t num_gens() const { return gens_->size(); }
  /// Action of s_{m+1} = (m+1, m+2) for 0-based m.
  const Matrix& gen(std::size_t m) const { return gens_->at(m); }
  const std::vector<Matrix>& gens() const { return *gens_; }

  /// Action matrix of s_{m_1} s_{m_2} ... for a word of 0-based generator ids.
  Matrix act_word(const std::vector<std::size_t>& word) const {
    Matrix m = Matrix::identity(dim_, p_);
    for (auto g : word) m = m * gen(g);
    return m;
  }

  bool satisfies_coxeter_relations() const {
    const auto& g = *gens_;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (!(g[i] * g[i]).is_identity()) return false;
      if (i + 1 < g.size()) {
        const Matrix b = g[i] * g[i + 1];
        if (!(b * b * b).is_identity()) return false;
      }
      for (std::size_t j = i + 2; j < g.size(); ++j)
        if (!(g[i] * g[j] == g[j] * g[i])) return false;
    }
    return true;
  }

 private:
  GModule(int n, std::uint32_t p, std::size_t dim, std::vector<Matrix> gens, bool check)
      : n_(n), p_(p), dim_(dim), gens_(std::make_shared<const std::vector<Matrix>>(std::move(gens))) {
    gf::require_prime(p);
    if (n < 1) throw std::invalid_argument("GModule: n must be positive");
    if (gens_->size() != static_cast<std::size_t>(n - 1))
      throw std::invalid_argument("GModule: expected " + std::to_string(n - 1) + " generators");
    for (const auto& m : *gens_)
      if (m.rows() != dim || m.cols() != dim || m.modulus() != p)
        throw std::invalid_argument("GModule: generator has wrong shape or modulus");
    if (check && !satisfies_coxeter_relations())
      throw std::invalid_argument("GModule: generators violate the Coxeter relations");
  }

  int n_;
  std::uint32_t p_;
  std::size_t dim_;
  std::shared_ptr<const std::vector<Matrix>> gens_;
};

inline bool same_group(const GModule& a, const GModule& b) {
  return a.n() == b.n() && a.modulus() == b.modulus();
}

/// A linear map between two modules. The shape is checked on construction;
/// equivariance is a separate, explicit check.
class ModuleHom {
 public:
  ModuleHom(GModule source, GModule target, Matrix matrix)
      : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (!same_group(source_, target_)) throw std::invalid_argument("ModuleHom: modules over different groups");
    if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim() ||
        matrix_.modulus() != source_.modulus())
      throw std::invalid_argument("ModuleHom: matrix shape does not match modules");
  }

  static ModuleHom identity(const GModule& m) { return {m, m, Matrix::identity(m.dim(), m.modulus())}; }
  static ModuleHom zero(const GModule& s, const GModule& t) { return {s, t, Matrix(t.dim(), s.dim(), s.modulus())}; }

  const GModule& source() const { return source_; }
  const GModule& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }

  /// this after other.
  ModuleHom after(const ModuleHom& other) const {
    if (other.target_.dim() != source_.dim()) throw std::invalid_argument("ModuleHom: composition shape mismatch");
    return {other.source_, target_, matrix_ * other.matrix_};
  }

 private:
  GModule source_, target_;
  Matrix matrix_;
};

inline bool check_equivariance(const ModuleHom& h) {
  const auto& s = h.source();
  const auto& t = h.target();
  for (std::size_t m = 0; m < s.num_gens(); ++m)
    if (!(h.matrix() * s.gen(m) == t.gen(m) * h.matrix())) return false;
  return true;
}

inline void require_equivariant(const ModuleHom& h, const std::string& what) {
  if (!check_equivariance(h)) throw VerificationError(what + " is not S_n-equivariant");
}

struct Submodule {
  GModule module;
  ModuleHom inclusion;
};

struct Quotient {
  GModule module;
  ModuleHom projection;
};

/// Kernel of h with the restricted action, in the echelon kernel basis.
inline Submodule kernel_module(const ModuleHom& h) {
  const auto& src = h.source();
  const std::uint32_t p = src.modulus();
  const auto basis = kernel_basis(h.matrix());
  const Matrix inc = Matrix::from_columns(basis, src.dim(), p);
  // each basis vector has a 1 in its own free coordinate and 0 in the others
  std::vector<bool> is_pivot(src.dim(), false);
  for (auto c : rref(h.matrix()).pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_rows;
  for (std::size_t i = 0; i < src.dim(); ++i)
    if (!is_pivot[i]) free_rows.push_back(i);
  std::vector<std::size_t> all_cols(basis.size());
  for (std::size_t j = 0; j < all_cols.size(); ++j) all_cols[j] = j;
  std::vector<Matrix> gens;
  for (const auto& g : src.gens()) {
    const Matrix image = g * inc;
    Matrix restricted = image.select(free_rows, all_cols);
    if (!(inc * restricted == image)) throw VerificationError("kernel is not preserved by the action");
    gens.push_back(std::move(restricted));
  }
  GModule sub = GModule::derived(src.n(), p, basis.size(), std::move(gens));
  return {sub, ModuleHom(sub, src, inc)};
}

/// Quotient of the target of an injective h by its image. The quotient basis
/// is the set of coordinates that are not pivots of the image's echelon form.
inline Quotient quotient_module(const ModuleHom& h) {
  const auto& tgt = h.target();
  const std::uint32_t p = tgt.modulus();
  if (rank(h.matrix()) != h.source().dim()) throw std::invalid_argument("quotient_module: map is not injective");
  const auto [red, pivots] = rref(h.matrix().transpose());
  std::vector<bool> is_pivot(tgt.dim(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < tgt.dim(); ++j)
    if (!is_pivot[j]) keep.push_back(j);
  // v -> v - sum_pivots v_c * row_c, then read off the kept coordinates
  Matrix proj(keep.size(), tgt.dim(), p);
  for (std::size_t q = 0; q < keep.size(); ++q) proj(q, keep[q]) = 1;
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t q = 0; q < keep.size(); ++q)
      if (auto v = red(i, keep[q])) proj(q, pivots[i]) = gf::neg(v, p);
  Matrix lift(tgt.dim(), keep.size(), p);
  for (std::size_t q = 0; q < keep.size(); ++q) lift(keep[q], q) = 1;
  if (!(proj * h.matrix()).is_zero()) throw VerificationError("projection does not kill the image");
  std::vector<Matrix> gens;
  for (const auto& g : tgt.gens()) {
    const Matrix image_gen = g * h.matrix();
    if (!(proj * image_gen).is_zero()) throw VerificationError("image is not preserved by the action");
    gens.push_back(proj * g * lift);
  }
  GModule quo = GModule::derived(tgt.n(), p, keep.size(), std::move(gens));
  return {quo, ModuleHom(tgt, quo, proj)};
}

/// surj after section is the identity.
inline bool verify_split(const ModuleHom& surj, const ModuleHom& section) {
  if (section.target().dim() != surj.source().dim() || section.source().dim() != surj.target().dim()) return false;
  return (surj.matrix() * section.matrix()).is_identity();
}

namespace detail {

// Unknown matrix X of shape rows x cols, flattened row-major. Appends the
// equations X * g_src - g_tgt * X = 0 for every generator.
inline void append_equivariance_equations(const GModule& src, const GModule& tgt,
                                          std::vector<std::vector<gf::Scalar>>& eqs) {
  const std::uint32_t p = src.modulus();
  const std::size_t rows = tgt.dim(), cols = src.dim();
  for (std::size_t m = 0; m < src.num_gens(); ++m) {
    const Matrix& gs = src.gen(m);
    const Matrix& gt = tgt.gen(m);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        std::vector<gf::Scalar> eq(rows * cols, 0);
        for (std::size_t l = 0; l < cols; ++l)
          if (auto v = gs(l, j)) eq[i * cols + l] = gf::add(eq[i * cols + l], v, p);
        for (std::size_t l = 0; l < rows; ++l)
          if (auto v = gt(i, l)) eq[l * cols + j] = gf::sub(eq[l * cols + j], v, p);
        eqs.push_back(std::move(eq));
      }
  }
}

inline std::optional<Matrix> solve_flattened(std::vector<std::vector<gf::Scalar>> eqs, gf::Vector rhs,
                                             std::size_t rows, std::size_t cols, std::uint32_t p) {
  Matrix a(eqs.size(), rows * cols, p);
  for (std::size_t e = 0; e < eqs.size(); ++e)
    for (std::size_t k = 0; k < rows * cols; ++k) a(e, k) = eqs[e][k];
  auto x = solve(a, rhs);
  if (!x) return std::nullopt;
  Matrix out(rows, cols, p);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = (*x)[i * cols + j];
  return out;
}

}  // namespace detail

/// Searches for an equivariant r with r after inj = id; nullopt certifies
/// that none exists.
inline std::optional<ModuleHom> find_equivariant_retraction(const ModuleHom& inj) {
  const GModule& src = inj.target();  // retraction goes target -> source
  const GModule& tgt = inj.source();
  const std::uint32_t p = src.modulus();
  const std::size_t rows = tgt.dim(), cols = src.dim();
  std::vector<std::vector<gf::Scalar>> eqs;
  detail::append_equivariance_equations(src, tgt, eqs);
  gf::Vector rhs(eqs.size(), 0);
  const Matrix& a = inj.matrix();
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      std::vector<gf::Scalar> eq(rows * cols, 0);
      for (std::size_t l = 0; l < cols; ++l) eq[i * cols + l] = a(l, j);
      eqs.push_back(std::move(eq));
      rhs.push_back(i == j ? 1 : 0);
    }
  auto x = detail::solve_flattened(std::move(eqs), std::move(rhs), rows, cols, p);
  if (!x) return std::nullopt;
  return ModuleHom(src, tgt, std::move(*x));
}

/// Searches for an equivariant s with surj after s = id.
inline std::optional<ModuleHom> find_equivariant_section(const ModuleHom& surj) {
  const GModule& src = surj.target();
  const GModule& tgt = surj.source();
  const std::uint32_t p = src.modulus();
  const std::size_t rows = tgt.dim(), cols = src.dim();
  std::vector<std::vector<gf::Scalar>> eqs;
  detail::append_equivariance_equations(src, tgt, eqs);
  gf::Vector rhs(eqs.size(), 0);
  const Matrix& a = surj.matrix();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      std::vector<gf::Scalar> eq(rows * cols, 0);
      for (std::size_t l = 0; l < rows; ++l) eq[l * cols + j] = a(i, l);
      eqs.push_back(std::move(eq));
      rhs.push_back(i == j ? 1 : 0);
    }
  auto x = detail::solve_flattened(std::move(eqs), std::move(rhs), rows, cols, p);
  if (!x) return std::nullopt;
  return ModuleHom(src, tgt, std::move(*x));
}

}  // namespace spechtsym
