#pragma once

// The acceptance suite: ten exact checks, each reporting pass/fail with a
// one-line detail. Criteria are independent and may run concurrently.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "combinatorics.hpp"
#include "gf.hpp"
#include "modact.hpp"
#include "repring.hpp"
#include "spechtmod.hpp"
#include "splitters.hpp"
#include "symalg.hpp"
#include "vertexcalc.hpp"

namespace spechtsym::acceptance {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  std::function<Outcome()> run;
};

struct Result {
  int id;
  std::string name;
  bool pass;
  std::string detail;
  double seconds;
};

namespace detail {

// Collects failures; the first one becomes the detail line.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failure_.empty()) failure_ = what;
    pass_ = pass_ && ok;
  }
  Outcome done(const std::string& summary) const {
    return {pass_, pass_ ? summary + " (" + std::to_string(checks_) + " checks)" : "FAILED: " + failure_};
  }

 private:
  bool pass_ = true;
  long checks_ = 0;
  std::string failure_;
};

inline std::string pair_str(int n, int p) { return "(n,p)=(" + std::to_string(n) + "," + std::to_string(p) + ")"; }

inline std::set<Partition> lambda_set(std::initializer_list<Partition> l) { return {l}; }

}  // namespace detail

inline Outcome splitting_suite() {
  detail::Tally t;
  int sections = 0;
  for (auto [n, p] : {std::pair{5, 5}, {10, 5}, {6, 3}}) {
    const SymContext ctx(natural_module(n, p), std::max(2, p - 1));
    const auto chain = split_chain_M(ctx);
    t.expect(static_cast<int>(chain.size()) == std::max(0, p - 2), "wrong chain length at " + detail::pair_str(n, p));
    for (int r = 2; r <= p - 1; ++r) {
      auto it = std::find_if(chain.begin(), chain.end(), [&](const SplitMap& s) { return s.r == r; });
      if (it == chain.end()) {
        t.expect(false, "no section for r=" + std::to_string(r));
        continue;
      }
      t.expect((boundary_component(ctx, r) * it->map.matrix()).is_identity(),
               "d_r o theta != id at r=" + std::to_string(r) + ", " + detail::pair_str(n, p));
      t.expect(check_equivariance(it->map), "section not equivariant at r=" + std::to_string(r));
      ++sections;
    }
  }
  return t.done(std::to_string(sections) + " sections");
}

inline Outcome gamma_suite() {
  detail::Tally t;
  for (auto [n, p] : {std::pair{5, 5}, {10, 5}}) {
    const SymContext ctx(specht_n11(n, p).module, 3);
    const ModuleHom g = gamma(ctx);
    const GModule& src = g.source();
    const GModule& tgt = g.target();
    t.expect(src.num_gens() == static_cast<std::size_t>(n - 1), "wrong number of generators");
    for (std::size_t m = 0; m < src.num_gens(); ++m)
      t.expect(g.matrix() * src.gen(m) == tgt.gen(m) * g.matrix(),
               "gamma fails generator " + std::to_string(m + 1) + " at " + detail::pair_str(n, p));
    t.expect((g.matrix() * mul_component(ctx, 2)).is_identity(), "gamma o X_2 != id at " + detail::pair_str(n, p));
  }
  return t.done("gamma equivariant and a retraction at n=5,10");
}

inline Outcome s_chain_suite() {
  detail::Tally t;
  const int n = 10, p = 5;
  const SymContext ctx(specht_n11(n, p).module, p - 1);
  const auto chain = split_chain_S(ctx);
  std::set<int> degrees;
  for (const auto& s : chain) {
    degrees.insert(s.r);
    t.expect((s.map.matrix() * mul_component(ctx, s.r - 1)).is_identity(),
             "retraction identity fails for X_" + std::to_string(s.r - 1));
    t.expect(check_equivariance(s.map), "retraction of X_" + std::to_string(s.r - 1) + " not equivariant");
  }
  t.expect(degrees == std::set<int>{3, 4}, "expected retractions of X_2 and X_3");
  return t.done("retractions of X_2, X_3 at (10,5)");
}

inline Outcome commutator_suite() {
  detail::Tally t;
  long scalars = 0;
  auto check_chain = [&](const SymContext& ctx, const std::vector<SplitMap>& chain, SplitKind kind) {
    const auto p = ctx.modulus();
    for (const auto& s : chain) {
      const int a = kind == SplitKind::Section ? s.r - 1 : s.r;
      const int b = kind == SplitKind::Section ? s.r : s.r - 1;
      const GradedEndo psi = lift(ctx, s.map.matrix(), a, b, static_cast<int>(p) + 1);
      for (int d = 0; d <= static_cast<int>(p); ++d) {
        const FieldElement c = commutator_scalar_check(ctx, s.map.matrix(), s.r, kind, d, &psi);
        t.expect(c == binom_mod_p(d, s.r - 1, p), "commutator scalar wrong at r=" + std::to_string(s.r) +
                                                      ", d=" + std::to_string(d) + ", p=" + std::to_string(p));
        ++scalars;
      }
    }
  };
  for (auto [n, p] : {std::pair{5, 5}, {10, 5}, {6, 3}}) {
    const SymContext ctx(natural_module(n, p), p + 1);
    check_chain(ctx, split_chain_M(ctx), SplitKind::Section);
  }
  {
    const SymContext ctx(specht_n11(10, 5).module, 6);
    check_chain(ctx, split_chain_S(ctx), SplitKind::Retraction);
  }
  for (auto [n, p] : {std::pair{5, 5}, {10, 5}}) {
    const SymContext ctx(natural_module(n, p), p);
    for (int a = 0; a <= 4; ++a) {
      const GradedEndo psi = lift(ctx, Matrix::identity(ctx.dim(a), p), a, a);
      for (int d = 0; d <= p; ++d) {
        const Matrix& m = psi.at(d);
        const auto s = m.scalar_value();
        t.expect(s && FieldElement(*s, p) == binom_mod_p(d, a, p),
                 "lift(id on Sym^" + std::to_string(a) + ") wrong on degree " + std::to_string(d));
        ++scalars;
      }
    }
  }
  return t.done(std::to_string(scalars) + " scalars");
}

inline Outcome decomposition_suite() {
  detail::Tally t;
  const int n = 10;
  using detail::lambda_set;
  const std::vector<std::set<Partition>> table{
      {},
      lambda_set({{n - 1, 1}}),
      lambda_set({{n - 1, 1}, {n - 2, 2}}),
      lambda_set({{n - 1, 1}, {n - 2, 1, 1}, {n - 3, 3}}),
      lambda_set({{n - 1, 1}, {n - 2, 2}, {n - 2, 1, 1}, {n - 3, 2, 1}, {n - 4, 4}}),
  };
  for (int r = 1; r <= 4; ++r) {
    const auto blocks = sym_M_block_decomposition(n, 5, r);
    std::multiset<Partition> seen;
    for (const auto& b : blocks) seen.insert(b.lambda);
    t.expect(std::set<Partition>(seen.begin(), seen.end()) == table[r], "block types differ at r=" + std::to_string(r));
    for (const auto& l : table[r]) t.expect(seen.count(l) == 1, "multiplicity of M^" + l.str() + " is not 1");
  }
  const std::vector<std::pair<RepRingElement, std::string>> displayed{
      {sym_S_formula(n, 2, 5), "[M 8,2]"},
      {sym_S_formula(n, 3, 5), "[M 8,1,1] + [M 7,3] - [M 8,2]"},
      {sym_S_formula(n, 4, 5), "[M 8,2] + [M 7,2,1] + [M 6,4] - [M 7,3]"},
      {sym_D_formula(n, 3, 5), "[M 8,1,1] + [M 7,3] - 2[M 8,2]"},
      {sym_D_formula(n, 4, 5), "2[M 8,2] + [M 7,2,1] + [M 6,4] - [M 8,1,1] - 2[M 7,3]"},
  };
  for (const auto& [e, s] : displayed) t.expect(e.str() == s, "formula '" + e.str() + "' != '" + s + "'");
  return t.done("block types for r=1..4 and five formulas");
}

inline Outcome dimension_suite() {
  detail::Tally t;
  const int p = 5;
  for (int n : {5, 10}) {
    const SymContext m_ctx(natural_module(n, p), 4);
    for (int r = 0; r <= 4; ++r) {
      std::size_t s_dim = 1;
      if (r >= 1) {
        const ModuleHom d(sym_power(m_ctx, r), sym_power(m_ctx, r - 1), boundary_component(m_ctx, r));
        s_dim = kernel_module(d).module.dim();
      }
      t.expect(s_dim == binomial(n + r - 2, r),
               "dim Sym^" + std::to_string(r) + " S at n=" + std::to_string(n) + " is " + std::to_string(s_dim));
      const std::size_t d_dim = sym_D_module(n, p, r).module.dim();
      t.expect(d_dim == binomial(n + r - 3, r),
               "dim Sym^" + std::to_string(r) + " D at n=" + std::to_string(n) + " is " + std::to_string(d_dim));
    }
  }
  return t.done("n=5,10, r<=4");
}

inline Outcome young_expansion_suite() {
  detail::Tally t;
  for (auto [n, p] : {std::pair{10, 5}, {20, 5}, {14, 7}, {21, 7}}) {
    using E = RepRingElement;
    const E y1 = E::Y({n - 1, 1}), y2 = E::Y({n - 2, 2}), y3 = E::Y({n - 3, 3}), y4 = E::Y({n - 4, 4});
    const E four = p == 5 ? y4 + y3 + y1 : y4 + y3 + y2 + y1;
    t.expect(young_expansion_two_row({n - 2, 2}, p) == y2 + y1, "M^(n-2,2) at " + detail::pair_str(n, p));
    t.expect(young_expansion_two_row({n - 3, 3}, p) == y3 + y2 + y1, "M^(n-3,3) at " + detail::pair_str(n, p));
    t.expect(young_expansion_two_row({n - 4, 4}, p) == four, "M^(n-4,4) at " + detail::pair_str(n, p));
    t.expect(young_expansion_hook2(n, p) == y1 + y2 + E::Y({n - 2, 1, 1}), "M^(n-2,1^2) at " + detail::pair_str(n, p));
  }
  const auto sym3 = sym_D_formula(10, 3, 5);
  const auto conv = to_young_basis(sym3, 10, 5);
  t.expect(conv.converted == RepRingElement::Y({8, 1, 1}) + RepRingElement::Y({7, 3}),
           "Sym^3 D^(9,1) converts to " + conv.converted.str());
  t.expect(conv.remainder.is_zero(), "nonempty remainder " + conv.remainder.str());
  t.expect(m_basis_dimension(sym3) == 120, "dimension of the M-basis formula is not 120");
  t.expect(sym_D_module(10, 5, 3).module.dim() == 120, "cokernel dimension is not 120");
  return t.done("two-row and hook expansions, Sym^3 D^(9,1)");
}

inline Outcome kostka_suite() {
  detail::Tally t;
  struct Case {
    int n, p;
    std::string mixed;
    std::set<Partition> mus;
  };
  const std::vector<Case> cases{
      {10, 5, "[M 7,2,1] + [Y 6,4] - [Y 7,3] - [Y 8,2] - [Y 8,1,1]", {{7, 3}, {8, 2}, {8, 1, 1}}},
      {14, 7, "[M 11,2,1] + [Y 10,4] - [Y 11,3] - [Y 12,1,1]", {{11, 3}, {12, 1, 1}}},
  };
  for (const auto& c : cases) {
    const auto rep = kostka_positivity_report(c.n, c.p);
    t.expect(rep.mixed == RepRingElement::parse(c.mixed), "mixed equation is " + rep.mixed.str());
    std::set<Partition> mus;
    for (const auto& cert : rep.certificates) {
      mus.insert(cert.mu);
      t.expect(cert.lower_bound >= 1, "non-positive bound");
      t.expect(cert.lambda == Partition({c.n - 3, 2, 1}), "certificate for the wrong M^lambda");
    }
    t.expect(rep.certificates.size() == c.mus.size() && mus == c.mus,
             std::to_string(rep.certificates.size()) + " certificates at " + detail::pair_str(c.n, c.p));
  }
  return t.done("3 certificates at (10,5), 2 at (14,7)");
}

inline Outcome vertex_suite() {
  detail::Tally t;
  const int n = 10, p = 5;
  long entries = 0;
  auto scan = [&](PowerKind kind, int r) {
    const auto rep = sd_vertex_report(n, p, kind, r);
    t.expect(!rep.entries.empty(), "empty vertex report");
    for (const auto& e : rep.entries) {
      t.expect(e.vertex_m == n - p || e.vertex_m == n - 2 * p, "vertex outside {S_5, S_0} for " + e.mu.str());
      t.expect(e.vertex_m < n, "vertex not properly contained in a Sylow of S_n");
      ++entries;
    }
  };
  for (int r = 2; r <= 4; ++r) scan(PowerKind::S, r);
  for (int r = 3; r <= 4; ++r) scan(PowerKind::D, r);

  long window = 0;
  for (int m = 3; m <= 20; ++m)
    for (int q = 2; q <= m; ++q) {
      if (!is_prime(q) || m % q) continue;
      for (const auto& mu : partitions_of(m)) {
        if (!in_vertex_window(mu, m, q)) continue;
        t.expect(vertex_rules_agree(mu, m, q), "vertex rules disagree for " + mu.str() + " at p=" + std::to_string(q));
        ++window;
      }
      if (q == 2) continue;
      for (const auto& s : small_degree_dimensions(m, q))
        t.expect(!s.divisible, "small-degree dimension divisible by p at " + detail::pair_str(m, q));
    }
  return t.done(std::to_string(entries) + " report entries, " + std::to_string(window) + " window partitions");
}

inline Outcome negative_control_suite() {
  detail::Tally t;
  const SymContext ctx(specht_n11(5, 5).module, 2);
  t.expect(!search_mul_retraction(ctx, 2).has_value(), "found an equivariant retraction of X_1 over GF(5)");
  // the same search finds the known section of d_2 on Sym^2 M^(4,1)
  const SymContext m_ctx(natural_module(5, 5), 2);
  const auto found = search_boundary_section(m_ctx, 2);
  t.expect(found && verify_split(ModuleHom(sym_power(m_ctx, 2), sym_power(m_ctx, 1), boundary_component(m_ctx, 2)),
                                 *found),
           "search misses the section of d_2 on Sym^2 M^(4,1)");
  return t.done("no retraction of X_1: S^(4,1) -> Sym^2 S^(4,1)");
}

inline std::vector<Criterion> criteria() {
  return {
      {1, "splitting-suite", splitting_suite},
      {2, "gamma-suite", gamma_suite},
      {3, "s-chain-suite", s_chain_suite},
      {4, "commutator-scalars", commutator_suite},
      {5, "decomposition-suite", decomposition_suite},
      {6, "dimension-identities", dimension_suite},
      {7, "young-expansions", young_expansion_suite},
      {8, "kostka-positivity", kostka_suite},
      {9, "vertex-suite", vertex_suite},
      {10, "negative-control", negative_control_suite},
  };
}

/// Worker count: SPECHT_SYM_THREADS if set to a positive integer, otherwise
/// the hardware concurrency.
inline unsigned thread_budget() {
  if (const char* env = std::getenv("SPECHT_SYM_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

inline Result run_one(const Criterion& c) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o = {false, std::string("FAILED: exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {c.id, c.name, o.pass, o.detail, secs};
}

/// Runs the criteria on up to `threads` workers; results are in criterion order.
inline std::vector<Result> run(const std::vector<Criterion>& cs, unsigned threads) {
  std::vector<Result> results(cs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < cs.size();) results[i] = run_one(cs[i]);
  };
  const unsigned k = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(cs.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < k; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return results;
}

inline std::string format_line(const Result& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << "  criterion " << r.id << "  " << r.name << "  " << r.detail << "  ["
     << std::fixed << std::setprecision(3) << r.seconds << " s]";
  return os.str();
}

}  // namespace spechtsym::acceptance
