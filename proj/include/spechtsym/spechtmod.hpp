#pragma once

// Concrete modules: the natural permutation module M^(n-1,1), the Specht
// module S^(n-1,1) in the basis e_i = x_i - x_n, Young permutation modules
// M^lambda realized on monomials, and the quotients Sym^r D^(n-1,1).

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "combinatorics.hpp"
#include "modact.hpp"
#include "symalg.hpp"

namespace spechtsym {

inline Matrix transposition_matrix(std::size_t dim, std::size_t a, std::size_t b, std::uint32_t p) {
  Matrix m = Matrix::identity(dim, p);
  m(a, a) = m(b, b) = 0;
  m(a, b) = m(b, a) = 1;
  return m;
}

/// True if every generator permutes the basis.
inline bool is_permutation_module(const GModule& v) {
  for (const auto& g : v.gens())
    for (std::size_t j = 0; j < g.cols(); ++j) {
      std::size_t ones = 0;
      for (std::size_t i = 0; i < g.rows(); ++i) {
        if (g(i, j) == 1)
          ++ones;
        else if (g(i, j) != 0)
          return false;
      }
      if (ones != 1) return false;
    }
  return true;
}

inline GModule natural_module(int n, std::uint32_t p) {
  if (n < 2) throw std::invalid_argument("natural_module: n must be at least 2");
  std::vector<Matrix> gens;
  for (int m = 0; m + 1 < n; ++m) gens.push_back(transposition_matrix(n, m, m + 1, p));
  return GModule(n, p, n, std::move(gens));
}

/// The all-ones map M^(n-1,1) -> K.
inline ModuleHom augmentation(const GModule& natural) {
  Matrix eps(1, natural.dim(), natural.modulus());
  for (std::size_t j = 0; j < natural.dim(); ++j) eps(0, j) = 1;
  return {natural, GModule::trivial(natural.n(), natural.modulus()), eps};
}

struct SpechtN11 {
  GModule module;
  ModuleHom inclusion;  // into M^(n-1,1)
};

inline SpechtN11 specht_n11(int n, std::uint32_t p) {
  if (n < 3) throw std::invalid_argument("specht_n11: n must be at least 3");
  const std::size_t t = n - 1;
  std::vector<Matrix> gens;
  for (std::size_t m = 0; m + 1 < t; ++m) gens.push_back(transposition_matrix(t, m, m + 1, p));
  // s_(n-1): e_i -> e_i - e_(n-1) for i < n-1, e_(n-1) -> -e_(n-1)
  Matrix last = Matrix::identity(t, p);
  for (std::size_t i = 0; i < t; ++i) last(t - 1, i) = gf::neg(1, p);
  gens.push_back(std::move(last));
  GModule s(n, p, t, std::move(gens));
  Matrix inc(n, t, p);
  for (std::size_t i = 0; i < t; ++i) {
    inc(i, i) = 1;
    inc(n - 1, i) = gf::neg(1, p);
  }
  return {s, ModuleHom(s, natural_module(n, p), std::move(inc))};
}

/// K -> S^(n-1,1), 1 -> sum_i e_i. Equivariant exactly when p divides n.
inline ModuleHom specht_trivial_inclusion(const GModule& specht) {
  Matrix iota(specht.dim(), 1, specht.modulus());
  for (std::size_t i = 0; i < specht.dim(); ++i) iota(i, 0) = 1;
  return {GModule::trivial(specht.n(), specht.modulus()), specht, iota};
}

/// Exponent value carried by each block of lambda: block j gets exponent j.
inline int young_model_degree(const Partition& lambda) {
  int deg = 0;
  for (int j = 0; j < lambda.length(); ++j) deg += j * lambda.parts()[j];
  return deg;
}

namespace detail {

// Permutation basis of monomials, sorted in the global monomial order
// (decreasing lexicographic on exponent vectors).
inline GModule permutation_module_on_monomials(int n, std::uint32_t p, std::vector<Composition> basis) {
  std::sort(basis.begin(), basis.end(), std::greater<>());
  std::map<Composition, std::size_t> where;
  for (std::size_t i = 0; i < basis.size(); ++i) where.emplace(basis[i], i);
  std::vector<Matrix> gens;
  for (int m = 0; m + 1 < n; ++m) {
    Matrix g(basis.size(), basis.size(), p);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      Composition img = basis[j];
      std::swap(img.entries[m], img.entries[m + 1]);
      g(where.at(img), j) = 1;
    }
    gens.push_back(std::move(g));
  }
  return GModule::derived(n, p, basis.size(), std::move(gens));
}

}  // namespace detail

/// Monomials of the Young permutation module model, in basis order.
inline std::vector<Composition> young_model_basis(const Partition& lambda) {
  std::vector<int> exps;
  for (int j = 0; j < lambda.length(); ++j) exps.insert(exps.end(), lambda.parts()[j], j);
  std::vector<Composition> basis;
  do basis.push_back(Composition{exps});
  while (std::next_permutation(exps.begin(), exps.end()));
  std::sort(basis.begin(), basis.end(), std::greater<>());
  return basis;
}

/// M^lambda on monomials in x_1..x_n whose exponents take the value j on
/// exactly lambda_(j+1) variables.
inline GModule young_permutation_module(const Partition& lambda, std::uint32_t p) {
  if (lambda.size() < 1) throw std::invalid_argument("young_permutation_module: empty partition");
  return detail::permutation_module_on_monomials(lambda.size(), p, young_model_basis(lambda));
}

struct MonomialBlock {
  std::vector<int> d_sequence;           // d_i = number of exponents equal to i
  Partition lambda;                      // nonzero d_i, sorted
  std::vector<std::size_t> basis_indices;  // into the degree-r monomials
  GModule block_module;                  // restriction of Sym^r M^(n-1,1)
  ModuleHom iso;                         // block_module -> young_permutation_module(lambda)
};

/// Splits the monomial basis of Sym^r M^(n-1,1) by exponent multiset. Each
/// block is invariant and is relabelled onto the model of M^lambda; every
/// block map is checked to be an equivariant bijection.
inline std::vector<MonomialBlock> sym_M_block_decomposition(const SymContext& ctx, int r) {
  const GModule sym = sym_power(ctx, r);
  const int n = ctx.base().n();
  const std::uint32_t p = ctx.modulus();
  const auto& mons = ctx.monomials(r);
  std::map<std::vector<int>, std::vector<std::size_t>> groups;
  for (std::size_t k = 0; k < mons.size(); ++k) {
    std::vector<int> d(r + 1, 0);
    for (int e : mons[k].entries) ++d[e];
    groups[d].push_back(k);
  }
  std::vector<MonomialBlock> blocks;
  // larger lambda first, then by d-sequence
  std::vector<std::pair<Partition, std::vector<int>>> order;
  for (const auto& [d, idx] : groups) order.emplace_back(Partition::from_unsorted(d), d);
  std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
    return x.first != y.first ? x.first > y.first : x.second < y.second;
  });
  for (const auto& [lambda, d] : order) {
    const auto& idx = groups.at(d);
    // exponent value i -> block index, by (d_i descending, i ascending)
    std::vector<int> values;
    for (int i = 0; i <= r; ++i)
      if (d[i]) values.push_back(i);
    std::stable_sort(values.begin(), values.end(), [&](int u, int v) { return d[u] > d[v]; });
    std::vector<int> relabel(r + 1, -1);
    for (std::size_t j = 0; j < values.size(); ++j) relabel[values[j]] = static_cast<int>(j);

    std::vector<Matrix> gens;
    for (const auto& g : sym.gens()) {
      Matrix sub = g.select(idx, idx);
      // invariance: columns of the block stay inside it
      for (std::size_t j = 0; j < idx.size(); ++j) {
        std::size_t inside = 0;
        for (std::size_t i = 0; i < idx.size(); ++i) inside += sub(i, j);
        if (inside != 1) throw VerificationError("monomial block is not invariant");
      }
      gens.push_back(std::move(sub));
    }
    GModule block = GModule::derived(n, p, idx.size(), std::move(gens));
    GModule model = young_permutation_module(lambda, p);
    const auto model_basis = young_model_basis(lambda);
    std::map<Composition, std::size_t> where;
    for (std::size_t i = 0; i < model_basis.size(); ++i) where.emplace(model_basis[i], i);
    Matrix iso(model.dim(), block.dim(), p);
    for (std::size_t j = 0; j < idx.size(); ++j) {
      Composition c = mons[idx[j]];
      for (int& e : c.entries) e = relabel[e];
      iso(where.at(c), j) = 1;
    }
    ModuleHom h(block, model, std::move(iso));
    if (model.dim() != block.dim() || !check_equivariance(h))
      throw VerificationError("block relabelling is not an equivariant bijection onto M^" + lambda.str());
    blocks.push_back({d, lambda, idx, block, h});
  }
  return blocks;
}

inline std::vector<MonomialBlock> sym_M_block_decomposition(int n, std::uint32_t p, int r) {
  return sym_M_block_decomposition(SymContext(natural_module(n, p), r), r);
}

/// Sym^r D^(n-1,1) as the cokernel of X_(r-1) on Sym^* S^(n-1,1); needs p | n.
inline Quotient sym_D_module(int n, std::uint32_t p, int r) {
  if (n < 3) throw std::invalid_argument("sym_D_module: n must be at least 3");
  if (n % p != 0) throw std::invalid_argument("sym_D_module: p must divide n");
  if (r < 0) throw std::invalid_argument("sym_D_module: negative degree");
  const SymContext ctx(specht_n11(n, p).module, r);
  const GModule top = sym_power(ctx, r);
  if (r == 0) return {top, ModuleHom::identity(top)};
  const GModule below = sym_power(ctx, r - 1);
  return quotient_module(ModuleHom(below, top, mul_component(ctx, r - 1)));
}

}  // namespace spechtsym
