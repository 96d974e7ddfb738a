#pragma once

// Integer combinations of the classes [M^lambda] and [Y^mu] in the
// representation ring of K S_n, and the formulas for symmetric powers of
// S^(n-1,1) and D^(n-1,1) in terms of them.

#include <cstdint>
#include <map>
#include <optional>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "combinatorics.hpp"

namespace spechtsym {

enum class Basis { M, Y };

inline char basis_tag(Basis b) { return b == Basis::M ? 'M' : 'Y'; }

struct Label {
  Basis basis;
  Partition lambda;

  friend bool operator==(const Label&, const Label&) = default;
};

// Display order: M before Y, then larger partitions (lexicographically) first.
struct LabelOrder {
  bool operator()(const Label& a, const Label& b) const {
    if (a.basis != b.basis) return a.basis == Basis::M;
    return a.lambda > b.lambda;
  }
};

class RepRingElement {
 public:
  using Terms = std::map<Label, long long, LabelOrder>;

  RepRingElement() = default;

  static RepRingElement M(const Partition& lambda, long long c = 1) { return single({Basis::M, lambda}, c); }
  static RepRingElement Y(const Partition& mu, long long c = 1) { return single({Basis::Y, mu}, c); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  long long coefficient(const Label& l) const {
    auto it = terms_.find(l);
    return it == terms_.end() ? 0 : it->second;
  }
  long long coefficient(Basis b, const Partition& lambda) const { return coefficient({b, lambda}); }

  void add(const Label& l, long long c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(l, c);
    if (!fresh && (it->second += c) == 0) terms_.erase(it);
  }

  RepRingElement& operator+=(const RepRingElement& o) {
    for (const auto& [l, c] : o.terms_) add(l, c);
    return *this;
  }
  RepRingElement& operator-=(const RepRingElement& o) {
    for (const auto& [l, c] : o.terms_) add(l, -c);
    return *this;
  }
  friend RepRingElement operator+(RepRingElement a, const RepRingElement& b) { return a += b; }
  friend RepRingElement operator-(RepRingElement a, const RepRingElement& b) { return a -= b; }
  friend RepRingElement operator*(long long k, RepRingElement a) {
    if (k == 0) return {};
    for (auto& [l, c] : a.terms_) c *= k;
    return a;
  }
  friend bool operator==(const RepRingElement& a, const RepRingElement& b) { return a.terms_ == b.terms_; }

  /// Restriction to one basis.
  RepRingElement part(Basis b) const {
    RepRingElement out;
    for (const auto& [l, c] : terms_)
      if (l.basis == b) out.add(l, c);
    return out;
  }

  bool all_nonnegative() const {
    for (const auto& [l, c] : terms_)
      if (c < 0) return false;
    return true;
  }

  /// Signed sum, positive terms first, e.g. "[M 8,1,1] + [M 7,3] - 2[M 8,2]".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (bool positive : {true, false})
      for (const auto& [l, c] : terms_) {
        if ((c > 0) != positive) continue;
        const long long mag = c > 0 ? c : -c;
        if (out.empty())
          out += c < 0 ? "-" : "";
        else
          out += c < 0 ? " - " : " + ";
        if (mag != 1) out += std::to_string(mag);
        out += '[';
        out += basis_tag(l.basis);
        out += ' ' + l.lambda.str() + ']';
      }
    return out;
  }

  /// Inverse of str(); also accepts explicit unit coefficients like "1[M 8,2]".
  static RepRingElement parse(const std::string& text) {
    RepRingElement out;
    if (text == "0") return out;
    static const std::regex term(R"(\s*([+-]?)\s*(\d*)\[([MY]) ([0-9,]*)\]\s*)");
    auto it = text.cbegin();
    std::smatch m;
    bool first = true;
    while (it != text.cend()) {
      if (!std::regex_search(it, text.cend(), m, term, std::regex_constants::match_continuous))
        throw std::invalid_argument("cannot parse representation ring element '" + text + "'");
      if (!first && m[1].str().empty()) throw std::invalid_argument("missing sign in '" + text + "'");
      long long c = m[2].str().empty() ? 1 : std::stoll(m[2].str());
      if (m[1].str() == "-") c = -c;
      out.add({m[3].str() == "M" ? Basis::M : Basis::Y, Partition::parse(m[4].str())}, c);
      it = m[0].second;
      first = false;
    }
    return out;
  }

 private:
  static RepRingElement single(const Label& l, long long c) {
    RepRingElement e;
    e.add(l, c);
    return e;
  }

  Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const RepRingElement& e) { return os << e.str(); }

/// Dimension of an element written purely in the M basis.
inline long long m_basis_dimension(const RepRingElement& e) {
  long long d = 0;
  for (const auto& [l, c] : e.terms()) {
    if (l.basis != Basis::M) throw std::invalid_argument("m_basis_dimension: element has Young-module terms");
    d += c * static_cast<long long>(young_permutation_dimension(l.lambda));
  }
  return d;
}

/// [Sym^r M^(n-1,1)] = sum_lambda y_r^lambda [M^lambda].
inline RepRingElement sym_M_formula(int n, int r) {
  if (n < 1 || r < 0) throw std::invalid_argument("sym_M_formula: need n >= 1 and r >= 0");
  RepRingElement e;
  for (const auto& lambda : partitions_of(n))
    e.add({Basis::M, lambda}, static_cast<long long>(y_coefficient(lambda, r)));
  return e;
}

/// [Sym^r S^(n-1,1)] = sum_lambda (y_r - y_(r-1)) [M^lambda], 2 <= r <= p-1.
inline RepRingElement sym_S_formula(int n, int r, int p) {
  if (n < 2) throw std::invalid_argument("sym_S_formula: need n >= 2");
  if (r < 2 || r > p - 1)
    throw std::invalid_argument("sym_S_formula: need 2 <= r <= p-1, got r = " + std::to_string(r));
  return sym_M_formula(n, r) - sym_M_formula(n, r - 1);
}

/// [Sym^r D^(n-1,1)] = sum_lambda (y_r + y_(r-2) - 2 y_(r-1)) [M^lambda],
/// p | n and 3 <= r <= p-1.
inline RepRingElement sym_D_formula(int n, int r, int p) {
  if (n < 3 || n % p != 0) throw std::invalid_argument("sym_D_formula: need n >= 3 and p | n");
  if (r < 3 || r > p - 1)
    throw std::invalid_argument("sym_D_formula: need 3 <= r <= p-1, got r = " + std::to_string(r));
  return sym_M_formula(n, r) + sym_M_formula(n, r - 2) - 2 * sym_M_formula(n, r - 1);
}

inline bool is_two_row(const Partition& lambda) { return lambda.length() <= 2 && !lambda.empty(); }

/// [M^(n-s,s)] in Young modules: [M^(n-s,s) : Y^(n-r,r)] = 1 exactly when
/// s - r is p-contained in n - 2r.
inline RepRingElement young_expansion_two_row(const Partition& lambda, int p) {
  if (!is_two_row(lambda)) throw std::invalid_argument("young_expansion_two_row: not a one- or two-row partition");
  const int n = lambda.size(), s = lambda[2];
  RepRingElement e;
  for (int r = 0; r <= s; ++r)
    if (p_contained(s - r, n - 2 * r, p)) e.add({Basis::Y, r ? Partition{n - r, r} : Partition{n}}, 1);
  return e;
}

inline Partition hook2(int n) { return Partition{n - 2, 1, 1}; }

/// [M^(n-2,1^2)] = [Y^(n-1,1)] + [Y^(n-2,2)] + [Y^(n-2,1^2)] when p | n.
inline RepRingElement young_expansion_hook2(int n, int p) {
  if (n < 4) throw std::invalid_argument("young_expansion_hook2: need n >= 4 so that (n-2,2) is a partition");
  if (n % p != 0) throw std::invalid_argument("young_expansion_hook2: need p | n");
  return RepRingElement::Y(Partition{n - 1, 1}) + RepRingElement::Y(Partition{n - 2, 2}) +
         RepRingElement::Y(hook2(n));
}

struct YoungConversion {
  RepRingElement converted;  // Y basis
  RepRingElement remainder;  // M terms with no known expansion

  RepRingElement total() const { return converted + remainder; }
};

/// Rewrites every [M^lambda] with a known Young expansion: one or two rows,
/// or (n-2,1^2) when p | n. Other M terms are returned untouched.
inline YoungConversion to_young_basis(const RepRingElement& e, int n, int p) {
  YoungConversion out;
  for (const auto& [l, c] : e.terms()) {
    if (l.basis == Basis::Y) {
      out.converted.add(l, c);
    } else if (is_two_row(l.lambda)) {
      out.converted += c * young_expansion_two_row(l.lambda, p);
    } else if (n >= 4 && n % p == 0 && l.lambda == hook2(n)) {
      out.converted += c * young_expansion_hook2(n, p);
    } else {
      out.remainder.add(l, c);
    }
  }
  return out;
}

struct KostkaCertificate {
  Partition lambda;       // always (n-3,2,1)
  Partition mu;
  long long lower_bound;  // [M^lambda : Y^mu] >= lower_bound > 0
};

struct KostkaReport {
  int n, p;
  RepRingElement sym4_D;      // M basis
  RepRingElement mixed;       // [M^(n-3,2,1)] plus Young terms
  std::vector<KostkaCertificate> certificates;
};

/// Positivity of p-Kostka numbers [M^(n-3,2,1) : Y^mu] read off from
/// [Sym^4 D^(n-1,1)] being a sum of Young modules. Needs p > 3 and p | n.
inline KostkaReport kostka_positivity_report(int n, int p) {
  if (p <= 3) throw std::invalid_argument("kostka_positivity_report: need p > 3");
  if (n % p != 0) throw std::invalid_argument("kostka_positivity_report: need p | n");
  const Partition lambda{n - 3, 2, 1};
  KostkaReport rep{n, p, sym_D_formula(n, 4, p), {}, {}};
  const auto conv = to_young_basis(rep.sym4_D, n, p);
  if (!(conv.remainder == RepRingElement::M(lambda)))
    throw VerificationError("unexpected remainder " + conv.remainder.str() + " in [Sym^4 D]");
  rep.mixed = conv.total();
  // [Sym^4 D] has nonnegative Young multiplicities, so every negative Young
  // coefficient c forces [M^lambda : Y^mu] >= -c.
  for (const auto& [l, c] : conv.converted.terms()) {
    if (c >= 0) continue;
    if (!dominates(l.lambda, lambda)) throw VerificationError("Young module outside the dominance range");
    rep.certificates.push_back({lambda, l.lambda, -c});
  }
  return rep;
}

}  // namespace spechtsym
