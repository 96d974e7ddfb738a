#include <gtest/gtest.h>

#include "spechtsym/spechtmod.hpp"
#include "spechtsym/splitters.hpp"

using namespace spechtsym;

namespace {

Composition comp(std::vector<int> v) { return Composition{std::move(v)}; }

ModuleHom boundary_hom(const SymContext& ctx, int r) {
  return {sym_power(ctx, r), sym_power(ctx, r - 1), boundary_component(ctx, r)};
}

}  // namespace

TEST(Zeta, SectionOfBoundary) {
  const SymContext ctx(natural_module(5, 5), 2);
  const ModuleHom z = zeta(ctx);
  EXPECT_TRUE(verify_split(boundary_hom(ctx, 2), z));
  EXPECT_TRUE(check_equivariance(z));
  // 2^-1 = 3 in GF(5)
  EXPECT_EQ(z.matrix()(ctx.index_of(comp({2, 0, 0, 0, 0})), 0), 3u);
  EXPECT_EQ(z.matrix().nonzeros(), 5u);
}

TEST(Zeta, Preconditions) {
  EXPECT_THROW(zeta(SymContext(natural_module(4, 2), 2)), std::invalid_argument);
  EXPECT_THROW(zeta(SymContext(specht_n11(5, 5).module, 2)), std::invalid_argument);
  EXPECT_THROW(zeta(SymContext(natural_module(4, 5), 1)), std::out_of_range);
}

TEST(Gamma, CubeGoesToMinusHalfTimesSum) {
  const SymContext ctx(specht_n11(5, 5).module, 3);
  const ModuleHom g = gamma(ctx);
  const auto e1 = monomial_vector(ctx, comp({1, 0, 0, 0}));
  const gf::Vector sum(4, 1);
  const gf::Vector expect = multiply(ctx, e1, 1, sum, 1);
  const gf::Vector got = g.matrix() * monomial_vector(ctx, comp({3, 0, 0, 0}));
  const gf::Scalar minus_half = gf::neg(gf::inv(2, 5), 5);
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(got[i], gf::mul(expect[i], minus_half, 5)) << i;
}

TEST(Gamma, RetractionForSeveralN) {
  for (auto [n, p] : {std::pair{5, 5u}, {10, 5u}, {3, 3u}, {6, 3u}, {7, 7u}}) {
    const SymContext ctx(specht_n11(n, p).module, 3);
    const ModuleHom g = gamma(ctx);
    EXPECT_TRUE(check_equivariance(g)) << n << " " << p;
    EXPECT_TRUE((g.matrix() * mul_component(ctx, 2)).is_identity()) << n << " " << p;
  }
  EXPECT_THROW(gamma(7, 5), std::invalid_argument);
  EXPECT_THROW(gamma(4, 2), std::invalid_argument);
}

TEST(Gamma, FailsOffTheDivisibilityLocus) {
  const SymContext ctx(specht_n11(4, 5).module, 3);
  EXPECT_THROW(gamma(ctx), std::invalid_argument);
}

TEST(ThetaUp, BuildsHigherSections) {
  const SymContext ctx(natural_module(5, 5), 4);
  const ModuleHom t3 = theta_up(ctx, zeta(ctx), 2);
  EXPECT_TRUE(verify_split(boundary_hom(ctx, 3), t3));
  const ModuleHom t4 = theta_up(ctx, t3, 3);
  EXPECT_TRUE(verify_split(boundary_hom(ctx, 4), t4));
  EXPECT_TRUE(check_equivariance(t4));
  EXPECT_THROW(theta_up(ctx, t4, 4), std::invalid_argument);
}

TEST(ThetaUp, RejectsBadInput) {
  const SymContext ctx(natural_module(5, 7), 4);
  EXPECT_THROW(theta_up(ctx, ModuleHom::zero(sym_power(ctx, 1), sym_power(ctx, 2)), 2), std::invalid_argument);
  const SymContext small(natural_module(5, 7), 2);
  EXPECT_THROW(theta_up(small, zeta(small), 2), std::out_of_range);
}

TEST(ThetaDown, BuildsHigherRetractions) {
  const SymContext ctx(specht_n11(10, 5).module, 4);
  const ModuleHom t = theta_down(ctx, gamma(ctx), 3);
  EXPECT_TRUE((t.matrix() * mul_component(ctx, 3)).is_identity());
  EXPECT_TRUE(check_equivariance(t));
  const SymContext ctx7(specht_n11(7, 7).module, 5);
  EXPECT_THROW(theta_down(ctx7, gamma(ctx7), 7), std::invalid_argument);
}

TEST(ChainM, Lengths) {
  EXPECT_EQ(split_chain_M(5, 5).size(), 3u);
  EXPECT_EQ(split_chain_M(10, 5).size(), 3u);
  EXPECT_EQ(split_chain_M(4, 3).size(), 1u);
  EXPECT_EQ(split_chain_M(4, 7).size(), 5u);
  EXPECT_THROW(split_chain_M(4, 2), std::invalid_argument);
  const SymContext ctx(natural_module(6, 7), 6);
  for (const auto& s : split_chain_M(ctx)) {
    EXPECT_TRUE(verify_split(boundary_hom(ctx, s.r), s.map)) << s.r;
    EXPECT_TRUE(check_equivariance(s.map)) << s.r;
  }
}

TEST(ChainS, Lengths) {
  EXPECT_EQ(split_chain_S(10, 5).size(), 2u);
  EXPECT_EQ(split_chain_S(5, 5).size(), 2u);
  EXPECT_EQ(split_chain_S(7, 7).size(), 4u);
  EXPECT_THROW(split_chain_S(10, 3), std::invalid_argument);
  EXPECT_THROW(split_chain_S(12, 5), std::invalid_argument);
}

TEST(Commutator, ChainScalars) {
  auto check = [](const SymContext& ctx, const std::vector<SplitMap>& chain, SplitKind kind) {
    const auto p = ctx.modulus();
    for (const auto& s : chain) {
      const int a = kind == SplitKind::Section ? s.r - 1 : s.r;
      const int b = kind == SplitKind::Section ? s.r : s.r - 1;
      const GradedEndo psi = lift(ctx, s.map.matrix(), a, b, static_cast<int>(p) + 1);
      for (int d = 0; d <= static_cast<int>(p); ++d)
        EXPECT_EQ(commutator_scalar_check(ctx, s.map.matrix(), s.r, kind, d, &psi).value(),
                  binom_mod_p(d, s.r - 1, p).value())
            << "r=" << s.r << " d=" << d;
    }
  };
  const SymContext m_ctx(natural_module(4, 7), 8);
  check(m_ctx, split_chain_M(m_ctx), SplitKind::Section);
  const SymContext s_ctx(specht_n11(5, 5).module, 6);
  check(s_ctx, split_chain_S(s_ctx), SplitKind::Retraction);
}

TEST(Commutator, RejectsNonSplitting) {
  const SymContext ctx(natural_module(4, 5), 3);
  EXPECT_THROW(commutator_scalar_check(ctx, Matrix(ctx.dim(2), ctx.dim(1), 5), 2, SplitKind::Section, 1),
               std::invalid_argument);
}

TEST(NegativeControl, NoRetractionOfFirstMultiplication) {
  const SymContext s_ctx(specht_n11(5, 5).module, 2);
  EXPECT_FALSE(search_mul_retraction(s_ctx, 2).has_value());
  const auto found = search_boundary_section(SymContext(natural_module(5, 5), 2), 2);
  ASSERT_TRUE(found.has_value());
  EXPECT_TRUE(check_equivariance(*found));
}
