#include <gtest/gtest.h>

#include <set>

#include "spechtsym/vertexcalc.hpp"

using namespace spechtsym;

namespace {

// Size of the non-restricted part of mu: n minus |mu(0)|, where the column
// differences of mu(0) are those of mu reduced mod p.
int moved_points(const Partition& mu, int p) {
  int restricted = 0;
  for (int i = 1; i <= mu.length(); ++i) restricted += i * ((mu[i] - mu[i + 1]) % p);
  return mu.size() - restricted;
}

long long valuation_by_division(long long m, int p) {
  long long v = 0;
  for (long long k = 2; k <= m; ++k)
    for (long long x = k; x % p == 0; x /= p) ++v;
  return v;
}

std::set<Partition> mus(const VertexReport& rep, bool certified) {
  std::set<Partition> out;
  for (const auto& e : rep.entries)
    if (e.certified == certified) out.insert(e.mu);
  return out;
}

}  // namespace

TEST(VertexPartition, Examples) {
  EXPECT_EQ(vertex_partition(Partition{8, 2}, 5), Partition({5, 1, 1, 1, 1, 1}));
  EXPECT_EQ(vertex_partition(Partition{10}, 5), Partition({5, 5}));
  EXPECT_EQ(vertex_partition(Partition{7, 3}, 5), Partition(std::vector<int>(10, 1)));
  EXPECT_EQ(vertex_partition(Partition{25}, 5), Partition({25}));
  EXPECT_EQ(nontrivial_support(Partition{5, 1, 1, 1, 1, 1}), 5);
}

TEST(VertexPartition, MovedPointsOracle) {
  for (int p : {2, 3, 5})
    for (int n = 1; n <= 14; ++n)
      for (const auto& mu : partitions_of(n)) {
        const Partition rho = vertex_partition(mu, p);
        EXPECT_EQ(rho.size(), n);
        EXPECT_EQ(nontrivial_support(rho), moved_points(mu, p)) << mu.str() << " p=" << p;
      }
}

TEST(FactorialValuation, AgreesWithDivision) {
  for (int p : {2, 3, 5, 7})
    for (long long m = 0; m <= 60; ++m) EXPECT_EQ(factorial_valuation(m, p), valuation_by_division(m, p));
}

TEST(Sylow, Examples) {
  EXPECT_TRUE(sylow_of_young_is_sylow_of(Partition{5, 5}, 10, 5));
  EXPECT_TRUE(sylow_of_young_is_sylow_of(Partition{5, 1}, 5, 5));
  EXPECT_FALSE(sylow_of_young_is_sylow_of(Partition{5, 5}, 5, 5));
  EXPECT_TRUE(sylow_of_young_is_sylow_of(Partition{3, 3}, 6, 3));
  // S_3^3 inside S_9 at p = 3 misses a factor of 3
  EXPECT_FALSE(sylow_of_young_is_sylow_of(Partition{3, 3, 3}, 9, 3));
  EXPECT_TRUE(sylow_of_young_is_sylow_of(Partition{9}, 9, 3));
  EXPECT_TRUE(sylow_of_young_is_sylow_of(Partition(std::vector<int>(4, 1)), 0, 3));
}

TEST(VertexCase, Examples) {
  EXPECT_EQ(vertex_case(Partition{8, 2}, 10, 5).m, 5);
  EXPECT_EQ(vertex_case(Partition{8, 2}, 10, 5).which, VertexCase::NMinusP);
  EXPECT_EQ(vertex_case(Partition{8, 1, 1}, 10, 5).m, 5);
  EXPECT_EQ(vertex_case(Partition{7, 3}, 10, 5).m, 0);
  EXPECT_EQ(vertex_case(Partition{7, 3}, 10, 5).which, VertexCase::NMinus2P);
  EXPECT_STREQ(case_name(VertexCase::NMinus2P), "n-2p");
  EXPECT_THROW(vertex_case(Partition{10}, 10, 5), std::invalid_argument);
  EXPECT_THROW(vertex_case(Partition{5, 5}, 10, 5), std::invalid_argument);
  EXPECT_THROW(vertex_case(Partition{8, 3}, 11, 5), std::invalid_argument);
  EXPECT_THROW(vertex_case(Partition{8, 2}, 11, 5), std::invalid_argument);
}

TEST(VertexCase, AgreesWithPAdicRuleInWindow) {
  for (int p : {2, 3, 5, 7})
    for (int n = p; n <= 20; n += p)
      for (const auto& mu : partitions_of(n)) {
        if (!in_vertex_window(mu, n, p)) continue;
        EXPECT_TRUE(vertex_rules_agree(mu, n, p)) << mu.str() << " p=" << p;
        EXPECT_EQ(vertex_case(mu, n, p).m, moved_points(mu, p)) << mu.str() << " p=" << p;
      }
}

TEST(Support, Checks) {
  EXPECT_TRUE(coefficient_support_check(10, 4, SupportMode::Y));
  EXPECT_TRUE(coefficient_support_check(10, 4, SupportMode::DDiff));
  EXPECT_TRUE(coefficient_support_check(5, 4, SupportMode::Y));
  for (int n = 3; n <= 12; ++n)
    for (int r = 3; r < n; ++r) {
      EXPECT_TRUE(coefficient_support_check(n, r, SupportMode::Y));
      EXPECT_TRUE(coefficient_support_check(n, r, SupportMode::SDiff));
      EXPECT_TRUE(coefficient_support_check(n, r, SupportMode::DDiff));
    }
  EXPECT_EQ(support_coefficient(Partition{8, 2}, 3, SupportMode::DDiff), -2);
  EXPECT_THROW(coefficient_support_check(5, 5, SupportMode::Y), std::invalid_argument);
  EXPECT_THROW(coefficient_support_check(10, 2, SupportMode::DDiff), std::invalid_argument);
  EXPECT_THROW(coefficient_support_check(10, 1, SupportMode::SDiff), std::invalid_argument);
}

TEST(VertexReport, FullyConverted) {
  const auto d3 = sd_vertex_report(10, 5, PowerKind::D, 3);
  EXPECT_EQ(mus(d3, true), (std::set<Partition>{{8, 1, 1}, {7, 3}}));
  EXPECT_TRUE(mus(d3, false).empty());
  for (const auto& e : d3.entries) EXPECT_EQ(e.vertex_m, e.mu == Partition({7, 3}) ? 0 : 5);

  const auto s2 = sd_vertex_report(10, 5, PowerKind::S, 2);
  EXPECT_EQ(mus(s2, true), (std::set<Partition>{{9, 1}, {8, 2}}));
  EXPECT_TRUE(s2.conversion.remainder.is_zero());
}

TEST(VertexReport, CandidatesFromRemainder) {
  const auto d4 = sd_vertex_report(10, 5, PowerKind::D, 4);
  EXPECT_EQ(d4.conversion.remainder, RepRingElement::M(Partition{7, 2, 1}));
  EXPECT_EQ(mus(d4, true), (std::set<Partition>{{6, 4}}));
  EXPECT_EQ(mus(d4, false), (std::set<Partition>{{9, 1}, {8, 2}, {8, 1, 1}, {7, 3}, {7, 2, 1}}));
  for (const auto& e : d4.entries) EXPECT_EQ(e.vertex_m, moved_points(e.mu, 5));
  EXPECT_THROW(sd_vertex_report(11, 5, PowerKind::S, 2), std::invalid_argument);
  EXPECT_THROW(sd_vertex_report(10, 5, PowerKind::D, 5), std::invalid_argument);
}

TEST(VertexReport, EntriesStayInWindowForLargerN) {
  for (auto [n, p] : {std::pair{14, 7}, {21, 7}, {20, 5}, {15, 5}})
    for (int r = 3; r <= p - 1; ++r)
      for (auto kind : {PowerKind::S, PowerKind::D}) {
        const auto rep = sd_vertex_report(n, p, kind, r);
        EXPECT_FALSE(rep.entries.empty());
        for (const auto& e : rep.entries) {
          EXPECT_TRUE(in_vertex_window(e.mu, n, p));
          EXPECT_TRUE(e.vertex_m == n - p || e.vertex_m == n - 2 * p);
        }
      }
}

TEST(SmallDegree, DimensionsPrimeToP) {
  for (int p : {3, 5, 7})
    for (int n = p; n <= 30; n += p)
      for (const auto& d : small_degree_dimensions(n, p)) {
        EXPECT_FALSE(d.divisible) << n << " " << p;
        const int k = d.kind == PowerKind::S ? n - 1 : n - 2;
        EXPECT_EQ(d.dim, binomial(k + d.r - 1, d.r));
      }
}
