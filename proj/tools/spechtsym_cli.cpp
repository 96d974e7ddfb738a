// spechtsym: symmetric powers of S^(n-1,1) and D^(n-1,1) over GF(p).
//
// Exit codes: 0 success, 1 a verification failed, 2 bad input.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

#include "spechtsym.hpp"
#include "spechtsym/acceptance.hpp"

using namespace spechtsym;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kBadInput = 2;

struct Options {
  int n = 10;
  int p = 5;
  int r = 3;
  std::string module = "S";
  std::string target;
  int cap = 0;  // 0: the default of each command
  bool json = false;
};

json partition_json(const Partition& lambda) { return lambda.parts(); }

json element_json(const RepRingElement& e) {
  json out = json::array();
  for (const auto& [l, c] : e.terms())
    out.push_back({{"basis", std::string(1, basis_tag(l.basis))}, {"partition", partition_json(l.lambda)},
                   {"coefficient", c}});
  return out;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

std::uint32_t checked_prime(int p) {
  if (p < 2) throw std::invalid_argument("p must be a prime, got " + std::to_string(p));
  gf::require_prime(static_cast<std::uint32_t>(p));
  return static_cast<std::uint32_t>(p);
}

PowerKind parse_kind(const std::string& m) {
  if (m == "S") return PowerKind::S;
  if (m == "D") return PowerKind::D;
  throw std::invalid_argument("module must be S or D for this command, got '" + m + "'");
}

int cmd_decompose(const Options& o) {
  checked_prime(o.p);
  if (o.n < 1) throw std::invalid_argument("n must be positive");
  RepRingElement formula;
  std::uint64_t expected = 0;
  if (o.module == "M") {
    if (o.r < 0) throw std::invalid_argument("r must be nonnegative");
    formula = sym_M_formula(o.n, o.r);
    expected = binomial(o.n + o.r - 1, o.r);
  } else if (o.module == "S") {
    formula = sym_S_formula(o.n, o.r, o.p);
    expected = binomial(o.n + o.r - 2, o.r);
  } else if (o.module == "D") {
    formula = sym_D_formula(o.n, o.r, o.p);
    expected = binomial(o.n + o.r - 3, o.r);
  } else {
    throw std::invalid_argument("module must be M, S or D, got '" + o.module + "'");
  }
  const auto conv = to_young_basis(formula, o.n, o.p);
  const long long dim = m_basis_dimension(formula);
  const bool dim_ok = dim == static_cast<long long>(expected);
  if (o.json) {
    print_json({{"module", o.module},
                {"n", o.n},
                {"p", o.p},
                {"r", o.r},
                {"formula", element_json(formula)},
                {"young", {{"converted", element_json(conv.converted)}, {"remainder", element_json(conv.remainder)}}},
                {"dimension", dim},
                {"expected_dimension", expected},
                {"dimension_ok", dim_ok}});
  } else {
    std::cout << formula.str() << "\n";
    std::cout << "= " << conv.total().str() << "\n";
    std::cout << "dimension " << dim << (dim_ok ? " = " : " != ") << expected << "\n";
  }
  return dim_ok ? kOk : kVerifyFailed;
}

int cmd_verify(const Options& o) {
  const std::uint32_t p = checked_prime(o.p);
  const int n = o.n;
  auto cap_or = [&](int fallback) { return o.cap > 0 ? o.cap : fallback; };
  std::string summary;
  if (o.target == "zeta") {
    if (p == 2) throw std::invalid_argument("zeta needs p odd");
    const SymContext ctx(natural_module(n, p), cap_or(2));
    zeta(ctx);
    summary = "zeta: equivariant on " + std::to_string(n - 1) + " generators, d_2 o zeta = id";
  } else if (o.target == "gamma") {
    const SymContext ctx(specht_n11(n, p).module, cap_or(3));
    gamma(ctx);
    summary = "gamma: equivariant on " + std::to_string(n - 1) + " generators, gamma o X_2 = id";
  } else if (o.target == "chainM") {
    if (p < 3) throw std::invalid_argument("chainM needs p >= 3");
    const SymContext ctx(natural_module(n, p), cap_or(std::max<int>(2, p - 1)));
    const auto chain = split_chain_M(ctx);
    summary = "chainM (" + std::to_string(chain.size()) + " sections)";
  } else if (o.target == "chainS") {
    if (p < 5) throw std::invalid_argument("chainS needs p >= 5");
    if (n < 3 || n % p) throw std::invalid_argument("chainS needs n >= 3 and p | n");
    const SymContext ctx(specht_n11(n, p).module, cap_or(p - 1));
    const auto chain = split_chain_S(ctx);
    summary = "chainS (" + std::to_string(chain.size()) + " retractions)";
  } else if (o.target == "commutator") {
    if (p < 3) throw std::invalid_argument("commutator needs p >= 3");
    const int cap = cap_or(p + 1);
    if (cap < std::max<int>(2, p - 1) + 1)
      throw std::invalid_argument("commutator needs --cap >= " + std::to_string(std::max<int>(2, p - 1) + 1));
    long count = 0;
    auto run = [&](const SymContext& ctx, const std::vector<SplitMap>& chain, SplitKind kind) {
      for (const auto& s : chain) {
        const int a = kind == SplitKind::Section ? s.r - 1 : s.r;
        const int b = kind == SplitKind::Section ? s.r : s.r - 1;
        const GradedEndo psi = lift(ctx, s.map.matrix(), a, b, cap);
        for (int d = 0; d + 1 <= cap; ++d) {
          const FieldElement c = commutator_scalar_check(ctx, s.map.matrix(), s.r, kind, d, &psi);
          if (c != binom_mod_p(d, s.r - 1, p))
            throw VerificationError("commutator at r=" + std::to_string(s.r) + ", d=" + std::to_string(d) +
                                    " is " + std::to_string(c.value()));
          ++count;
        }
      }
    };
    const SymContext m_ctx(natural_module(n, p), cap);
    run(m_ctx, split_chain_M(m_ctx), SplitKind::Section);
    if (p >= 5 && n >= 3 && n % p == 0) {
      const SymContext s_ctx(specht_n11(n, p).module, cap);
      run(s_ctx, split_chain_S(s_ctx), SplitKind::Retraction);
    }
    summary = "commutator (" + std::to_string(count) + " scalars equal binom(d, r-1) mod p)";
  } else {
    throw std::invalid_argument("unknown verify target '" + o.target + "'");
  }
  if (o.json)
    print_json({{"target", o.target}, {"n", n}, {"p", o.p}, {"pass", true}, {"summary", summary}});
  else
    std::cout << "PASS " << summary << "\n";
  return kOk;
}

int cmd_vertex(const Options& o) {
  checked_prime(o.p);
  const PowerKind kind = parse_kind(o.module);
  const auto rep = sd_vertex_report(o.n, o.p, kind, o.r);
  json entries = json::array();
  for (const auto& e : rep.entries)
    entries.push_back({{"mu", partition_json(e.mu)},
                       {"vertex_m", e.vertex_m},
                       {"case", case_name(e.which)},
                       {"certified", e.certified}});
  print_json({{"n", o.n},
              {"p", o.p},
              {"kind", o.module},
              {"r", o.r},
              {"formula", rep.formula.str()},
              {"young", rep.conversion.total().str()},
              {"entries", entries}});
  return kOk;
}

int cmd_kostka(const Options& o) {
  checked_prime(o.p);
  const auto rep = kostka_positivity_report(o.n, o.p);
  if (o.json) {
    json certs = json::array();
    for (const auto& c : rep.certificates)
      certs.push_back({{"lambda", partition_json(c.lambda)}, {"mu", partition_json(c.mu)}, {"lower_bound", c.lower_bound}});
    print_json({{"n", o.n},
                {"p", o.p},
                {"sym4_D", element_json(rep.sym4_D)},
                {"mixed", element_json(rep.mixed)},
                {"certificates", certs}});
  } else {
    std::cout << "[Sym^4 D] = " << rep.sym4_D.str() << "\n";
    std::cout << "          = " << rep.mixed.str() << "\n";
    for (const auto& c : rep.certificates)
      std::cout << "[M " << c.lambda.str() << " : Y " << c.mu.str() << "] >= " << c.lower_bound << "\n";
  }
  return kOk;
}

int cmd_accept(const Options& o) {
  namespace acc = acceptance;
  const auto results = acc::run(acc::criteria(), acc::thread_budget());
  int failed = 0;
  for (const auto& r : results) failed += !r.pass;
  if (o.json) {
    json rows = json::array();
    for (const auto& r : results)
      rows.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    print_json({{"criteria", rows}, {"failed", failed}});
  } else {
    for (const auto& r : results) std::cout << acc::format_line(r) << "\n";
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << "\n";
  }
  return failed ? kVerifyFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric powers of S^(n-1,1) and D^(n-1,1) over GF(p)"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("-n", o.n, "degree of the symmetric group")->capture_default_str();
    sub->add_option("-p", o.p, "characteristic (prime)")->capture_default_str();
    sub->add_flag("--json", o.json, "machine-readable output");
  };

  auto* decompose = app.add_subcommand("decompose", "[Sym^r V] in the representation ring");
  common(decompose);
  decompose->add_option("-r", o.r, "symmetric power")->capture_default_str();
  decompose->add_option("-m,--module", o.module, "M, S or D")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "build and check splitting maps");
  common(verify);
  verify->add_option("target", o.target, "zeta, gamma, chainM, chainS or commutator")->required();
  verify->add_option("--cap", o.cap, "degree cap of the symmetric algebra");

  auto* vertex = app.add_subcommand("vertex", "vertices of Young summands (JSON)");
  common(vertex);
  vertex->add_option("-r", o.r, "symmetric power")->capture_default_str();
  vertex->add_option("-m,--module", o.module, "S or D")->capture_default_str();

  auto* kostka = app.add_subcommand("kostka", "positive p-Kostka numbers from [Sym^4 D]");
  common(kostka);

  auto* accept = app.add_subcommand("accept", "run the acceptance suite");
  accept->add_flag("--json", o.json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }

  try {
    if (decompose->parsed()) return cmd_decompose(o);
    if (verify->parsed()) return cmd_verify(o);
    if (vertex->parsed()) return cmd_vertex(o);
    if (kostka->parsed()) return cmd_kostka(o);
    if (accept->parsed()) return cmd_accept(o);
  } catch (const VerificationError& e) {
    std::cerr << "FAIL " << e.what() << "\n";
    return kVerifyFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
