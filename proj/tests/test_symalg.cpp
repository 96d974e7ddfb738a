#include <gtest/gtest.h>

#include <random>

#include "spechtsym/spechtmod.hpp"
#include "spechtsym/splitters.hpp"
#include "spechtsym/symalg.hpp"

using namespace spechtsym;

namespace {

Composition comp(std::vector<int> v) { return Composition{std::move(v)}; }

gf::Vector random_vector(std::size_t n, std::uint32_t p, std::mt19937& rng) {
  gf::Vector v(n);
  for (auto& x : v) x = rng() % p;
  return v;
}

// Delta_a (x) id versus id (x) Delta_b applied to a basis monomial, both as
// maps into deg a (x) deg b (x) deg (d-a-b), flattened.
std::vector<gf::Scalar> triple_tensor(const SymContext& ctx, int a, int b, const gf::Vector& f, int d, bool left) {
  const std::uint32_t p = ctx.modulus();
  const std::size_t da = ctx.dim(a), db = ctx.dim(b), dc = ctx.dim(d - a - b);
  std::vector<gf::Scalar> out(da * db * dc, 0);
  if (left) {
    // (Delta_a (x) id) o Delta_(a+b)
    const Matrix t = comultiply_a(ctx, a + b, f, d);
    for (std::size_t i = 0; i < t.rows(); ++i)
      for (std::size_t k = 0; k < t.cols(); ++k) {
        if (!t(i, k)) continue;
        const Matrix u = comultiply_a(ctx, a, monomial_vector(ctx, ctx.monomial(a + b, i)), a + b);
        for (std::size_t x = 0; x < u.rows(); ++x)
          for (std::size_t y = 0; y < u.cols(); ++y)
            if (u(x, y)) {
              auto& s = out[(x * db + y) * dc + k];
              s = gf::add(s, gf::mul(u(x, y), t(i, k), p), p);
            }
      }
  } else {
    // (id (x) Delta_b) o Delta_a
    const Matrix t = comultiply_a(ctx, a, f, d);
    for (std::size_t x = 0; x < t.rows(); ++x)
      for (std::size_t j = 0; j < t.cols(); ++j) {
        if (!t(x, j)) continue;
        const Matrix u = comultiply_a(ctx, b, monomial_vector(ctx, ctx.monomial(d - a, j)), d - a);
        for (std::size_t y = 0; y < u.rows(); ++y)
          for (std::size_t k = 0; k < u.cols(); ++k)
            if (u(y, k)) {
              auto& s = out[(x * db + y) * dc + k];
              s = gf::add(s, gf::mul(u(y, k), t(x, j), p), p);
            }
      }
  }
  return out;
}

}  // namespace

TEST(SymContext, MonomialOrderAndIndex) {
  const SymContext ctx(natural_module(4, 5), 4);
  EXPECT_EQ(ctx.monomial(1, 0).entries, (std::vector<int>{1, 0, 0, 0}));
  EXPECT_EQ(ctx.monomial(1, 3).entries, (std::vector<int>{0, 0, 0, 1}));
  EXPECT_EQ(ctx.monomial(3, 0).entries, (std::vector<int>{3, 0, 0, 0}));
  for (int d = 0; d <= 4; ++d) {
    EXPECT_EQ(ctx.dim(d), binomial(d + 3, 3));
    const auto& mons = ctx.monomials(d);
    for (std::size_t i = 0; i < mons.size(); ++i) {
      EXPECT_EQ(ctx.index_of(mons[i]), i);
      if (i) {
        EXPECT_GT(mons[i - 1], mons[i]);
      }
    }
  }
  EXPECT_EQ(ctx.dim(5), 0u);
  EXPECT_THROW(ctx.monomials(5), std::out_of_range);
  EXPECT_THROW(SymContext(natural_module(4, 5), -1), std::invalid_argument);
}

TEST(SymPower, LowDegreesAndDimension) {
  const GModule v = natural_module(5, 5);
  const SymContext ctx(v, 3);
  const GModule s0 = sym_power(ctx, 0);
  EXPECT_EQ(s0.dim(), 1u);
  for (const auto& g : s0.gens()) EXPECT_TRUE(g.is_identity());
  const GModule s1 = sym_power(ctx, 1);
  for (std::size_t m = 0; m < v.num_gens(); ++m) EXPECT_EQ(s1.gen(m), v.gen(m));
  EXPECT_EQ(sym_power(ctx, 3).dim(), 35u);
  EXPECT_THROW(sym_power(ctx, 4), std::out_of_range);
}

TEST(SymPower, GeneratorsSatisfyRelations) {
  const SymContext s_ctx(specht_n11(5, 5).module, 4);
  for (int r = 0; r <= 4; ++r) EXPECT_TRUE(sym_power(s_ctx, r).satisfies_coxeter_relations()) << r;
}

TEST(SymPower, InducedMapIsMultiplicative) {
  // Sym^(a+b)(g)(f*h) = Sym^a(g)(f) * Sym^b(g)(h)
  std::mt19937 rng(17);
  const SymContext ctx(specht_n11(4, 7).module, 4);
  const std::uint32_t p = 7;
  for (std::size_t m = 0; m < ctx.base().num_gens(); ++m)
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; a + b <= 4; ++b) {
        const auto f = random_vector(ctx.dim(a), p, rng);
        const auto h = random_vector(ctx.dim(b), p, rng);
        const auto& g = ctx.base().gen(m);
        const auto lhs = induced_power_map(ctx, ctx, g, a + b) * multiply(ctx, f, a, h, b);
        const auto rhs = multiply(ctx, induced_power_map(ctx, ctx, g, a) * f, a, induced_power_map(ctx, ctx, g, b) * h, b);
        EXPECT_EQ(lhs, rhs);
      }
}

TEST(Multiply, Examples) {
  const SymContext ctx(natural_module(2, 5), 2);
  const auto x1 = monomial_vector(ctx, comp({1, 0}));
  const auto x2 = monomial_vector(ctx, comp({0, 1}));
  EXPECT_EQ(multiply(ctx, x1, 1, x2, 1), monomial_vector(ctx, comp({1, 1})));
  const gf::Vector one{1};
  EXPECT_EQ(multiply(ctx, one, 0, x1, 1), x1);
  const gf::Vector sum{1, 1};
  const auto sq = multiply(ctx, sum, 1, sum, 1);
  EXPECT_EQ(sq[ctx.index_of(comp({2, 0}))], 1u);
  EXPECT_EQ(sq[ctx.index_of(comp({1, 1}))], 2u);
  EXPECT_EQ(sq[ctx.index_of(comp({0, 2}))], 1u);
  EXPECT_THROW(multiply(ctx, sq, 2, x1, 1), std::out_of_range);
}

TEST(Comultiply, Examples) {
  const SymContext ctx(natural_module(3, 5), 3);
  const auto f = monomial_vector(ctx, comp({2, 1, 0}));
  const Matrix d0 = comultiply_a(ctx, 0, f, 3);
  EXPECT_EQ(d0.rows(), 1u);
  EXPECT_EQ(gf::Vector(d0.row(0).begin(), d0.row(0).end()), f);

  const Matrix d1 = comultiply_a(ctx, 1, monomial_vector(ctx, comp({2, 0, 0})), 2);
  EXPECT_EQ(d1.nonzeros(), 1u);
  EXPECT_EQ(d1(ctx.index_of(comp({1, 0, 0})), ctx.index_of(comp({1, 0, 0}))), 2u);

  const Matrix d2 = comultiply_a(ctx, 2, f, 3);
  EXPECT_EQ(d2.nonzeros(), 2u);
  EXPECT_EQ(d2(ctx.index_of(comp({2, 0, 0})), ctx.index_of(comp({0, 1, 0}))), 1u);
  EXPECT_EQ(d2(ctx.index_of(comp({1, 1, 0})), ctx.index_of(comp({1, 0, 0}))), 2u);

  EXPECT_EQ(comultiply_a(ctx, 3, monomial_vector(ctx, comp({1, 0, 0})), 1).cols(), 0u);
}

TEST(Comultiply, Coassociative) {
  const SymContext ctx(natural_module(3, 3), 5);
  for (int d = 0; d <= 5; ++d)
    for (int a = 0; a <= d; ++a)
      for (int b = 0; a + b <= d; ++b)
        for (const auto& beta : ctx.monomials(d)) {
          const auto f = monomial_vector(ctx, beta);
          EXPECT_EQ(triple_tensor(ctx, a, b, f, d, true), triple_tensor(ctx, a, b, f, d, false));
        }
}

TEST(DividedDiff, Examples) {
  const SymContext ctx5(natural_module(3, 5), 5);
  std::mt19937 rng(2);
  const auto f = random_vector(ctx5.dim(4), 5, rng);
  EXPECT_EQ(divided_diff(ctx5, comp({0, 0, 0}), f, 4), f);
  const auto x15 = divided_diff(ctx5, comp({5, 0, 0}), monomial_vector(ctx5, comp({5, 0, 0})), 5);
  EXPECT_EQ(x15, gf::Vector{1});
  const auto g = divided_diff(ctx5, comp({1, 1, 0}), monomial_vector(ctx5, comp({2, 1, 0})), 3);
  EXPECT_EQ(g, gf::Vector({2, 0, 0}));
  EXPECT_TRUE(divided_diff(ctx5, comp({0, 3, 0}), monomial_vector(ctx5, comp({2, 1, 0})), 3) == gf::Vector{0});
}

TEST(Lift, IdentityActsByBinomials) {
  for (auto [n, p] : {std::pair{4, 5u}, {3, 3u}, {3, 2u}}) {
    const SymContext ctx(natural_module(n, p), 6);
    for (int a = 0; a <= 4; ++a) {
      const GradedEndo psi = lift(ctx, Matrix::identity(ctx.dim(a), p), a, a);
      for (int d = 0; d <= 6; ++d) {
        const auto s = psi.at(d).scalar_value();
        ASSERT_TRUE(s.has_value());
        EXPECT_EQ(*s, binom_mod_p(d, a, p).value()) << "a=" << a << " d=" << d << " p=" << p;
      }
    }
  }
}

TEST(Lift, RestrictsToPhiAndVanishesBelow) {
  const SymContext ctx(natural_module(5, 5), 4);
  const ModuleHom z = zeta(ctx);
  const GradedEndo psi = lift(ctx, z.matrix(), 1, 2);
  EXPECT_EQ(psi.shift(), 1);
  EXPECT_EQ(psi.at(1), z.matrix());
  EXPECT_TRUE(psi.at(0).is_zero());
  EXPECT_FALSE(psi.has(4));
  const GradedEndo zero = lift(ctx, Matrix(ctx.dim(3), ctx.dim(2), 5), 2, 3);
  for (const auto& [d, m] : zero.components()) EXPECT_TRUE(m.is_zero()) << d;
  EXPECT_THROW(lift(ctx, Matrix(3, 3, 5), 1, 1), std::invalid_argument);
}

TEST(Lift, IsEquivariant) {
  const SymContext ctx(natural_module(4, 5), 4);
  const GradedEndo psi = lift(ctx, zeta(ctx).matrix(), 1, 2);
  for (const auto& [d, m] : psi.components())
    EXPECT_TRUE(check_equivariance(ModuleHom(sym_power(ctx, d), sym_power(ctx, d + 1), m))) << d;
}

TEST(Boundary, Examples) {
  const SymContext ctx(natural_module(5, 5), 3);
  const GradedEndo d = boundary(ctx, ones_row(ctx));
  EXPECT_EQ(d.at(1) * monomial_vector(ctx, comp({1, 0, 0, 0, 0})), gf::Vector{1});
  gf::Vector expect(ctx.dim(1), 0);
  expect[0] = expect[1] = 1;
  EXPECT_EQ(d.at(2) * monomial_vector(ctx, comp({1, 1, 0, 0, 0})), expect);
  EXPECT_EQ(rank(boundary_component(ctx, 3)), 15u);
  Matrix bad = ones_row(ctx);
  bad(0, 2) = 2;
  EXPECT_THROW(boundary(ctx, bad), std::invalid_argument);
}

TEST(MulMap, Examples) {
  const SymContext ctx(specht_n11(10, 5).module, 3);
  const GradedEndo x = mul_map(ctx, ones_column(ctx));
  EXPECT_EQ(x.at(0) * gf::Vector{1}, gf::Vector(9, 1));
  const auto e1 = monomial_vector(ctx, ctx.monomial(1, 0));
  EXPECT_EQ(x.at(1) * e1, multiply(ctx, e1, 1, gf::Vector(9, 1), 1));
  EXPECT_EQ(rank(mul_component(ctx, 2)), 45u);
}

TEST(Commutator, Examples) {
  const SymContext ctx(natural_module(5, 5), 3);
  const ModuleHom z = zeta(ctx);
  EXPECT_EQ(commutator_scalar_check(ctx, z.matrix(), 2, SplitKind::Section, 2).value(), 2u);
  EXPECT_EQ(commutator_scalar_check(ctx, z.matrix(), 2, SplitKind::Section, 1).value(), 1u);
  EXPECT_THROW(commutator_scalar_check(ctx, Matrix(ctx.dim(2), ctx.dim(1), 5), 2, SplitKind::Section, 1),
               std::invalid_argument);

  const SymContext s_ctx(specht_n11(5, 5).module, 6);
  const ModuleHom g = gamma(s_ctx);
  EXPECT_EQ(commutator_scalar_check(s_ctx, g.matrix(), 3, SplitKind::Retraction, 5).value(), 0u);
  EXPECT_EQ(commutator_scalar_check(s_ctx, g.matrix(), 3, SplitKind::Retraction, 4).value(),
            binom_mod_p(4, 2, 5).value());
}
