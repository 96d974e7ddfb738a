#pragma once

// Partitions, compositions and the p-adic bookkeeping around them.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gf.hpp"

namespace spechtsym {

/// Exact binomial coefficient; throws on overflow of 64 bits.
inline std::uint64_t binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (long long i = 1; i <= k; ++i) {
    const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    if (r > UINT64_MAX / num) throw std::overflow_error("binomial overflow");
    r = r * num / static_cast<std::uint64_t>(i);
  }
  return r;
}

/// A weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
      if (i && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be non-increasing");
    }
  }

  /// Sorts and drops zeros.
  static Partition from_unsorted(std::vector<int> parts) {
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
  }

  /// Parses "8,1,1"; the empty string is the empty partition.
  static Partition parse(const std::string& text) {
    std::vector<int> parts;
    if (text.empty()) return {};
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad partition '" + text + "'");
      }
      if (used != tok.size()) throw std::invalid_argument("bad partition '" + text + "'");
      parts.push_back(v);
    }
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// lambda_i with the convention lambda_i = 0 beyond the length (1-based).
  int operator[](int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
    return s;
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << "(" << p.str() << ")"; }

/// Sequence of nonnegative integers of fixed length; indexes monomials.
struct Composition {
  std::vector<int> entries;

  int degree() const { return std::accumulate(entries.begin(), entries.end(), 0); }
  std::size_t length() const { return entries.size(); }

  /// Componentwise alpha <= beta.
  bool below(const Composition& other) const {
    for (std::size_t i = 0; i < entries.size(); ++i)
      if (entries[i] > other.entries[i]) return false;
    return true;
  }

  friend Composition operator+(const Composition& a, const Composition& b) {
    Composition c = a;
    for (std::size_t i = 0; i < c.entries.size(); ++i) c.entries[i] += b.entries[i];
    return c;
  }
  friend Composition operator-(const Composition& a, const Composition& b) {
    Composition c = a;
    for (std::size_t i = 0; i < c.entries.size(); ++i) c.entries[i] -= b.entries[i];
    return c;
  }
  friend auto operator<=>(const Composition&, const Composition&) = default;
};

/// All length-t compositions of d in increasing lexicographic order.
inline std::vector<Composition> compositions(int t, int d) {
  if (t < 1) throw std::invalid_argument("compositions: length must be positive");
  if (d < 0) return {};
  std::vector<Composition> out;
  Composition cur{std::vector<int>(t, 0)};
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == t - 1) {
      cur.entries[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur.entries[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, d);
  return out;
}

/// Partitions of n in decreasing lexicographic order, starting with (n).
inline std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int v = std::min(left, max_part); v >= 1; --v) {
      cur.push_back(v);
      rec(left - v, v);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

inline bool dominates(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("dominates: partitions of different sizes");
  int sl = 0, sm = 0;
  for (int i = 1; i <= std::max(lambda.length(), mu.length()); ++i) {
    sl += lambda[i];
    sm += mu[i];
    if (sl < sm) return false;
  }
  return true;
}

inline bool is_p_restricted(const Partition& lambda, int p) {
  for (int i = 1; i <= lambda.length(); ++i)
    if (lambda[i] - lambda[i + 1] > p - 1) return false;
  return true;
}

inline bool is_p_regular(const Partition& lambda, int p) {
  const auto& v = lambda.parts();
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if (static_cast<int>(j - i) >= p) return false;
    i = j;
  }
  return true;
}

/// Base-p digits, least significant first; 0 has no digits.
inline std::vector<int> p_adic_expansion_int(long long n, int p) {
  if (n < 0) throw std::invalid_argument("p_adic_expansion_int: negative input");
  std::vector<int> digits;
  for (; n > 0; n /= p) digits.push_back(static_cast<int>(n % p));
  return digits;
}

/// The layers lambda(0), lambda(1), ... with every layer p-restricted and
/// lambda_i = sum_j lambda(j)_i p^j.
inline std::vector<Partition> p_adic_expansion_partition(const Partition& lambda, int p) {
  std::vector<Partition> layers;
  std::vector<int> cur = lambda.parts();
  while (!cur.empty()) {
    const std::size_t len = cur.size();
    std::vector<int> layer(len, 0);
    int acc = 0;
    for (std::size_t i = len; i-- > 0;) {
      const int next = i + 1 < len ? cur[i + 1] : 0;
      acc += (cur[i] - next) % p;
      layer[i] = acc;
    }
    for (std::size_t i = 0; i < len; ++i) cur[i] = (cur[i] - layer[i]) / p;
    std::erase(cur, 0);
    layers.push_back(Partition::from_unsorted(std::move(layer)));
  }
  return layers;
}

/// Every base-p digit of m is at most the matching digit of n.
inline bool p_contained(long long m, long long n, int p) {
  for (; m > 0; m /= p, n /= p)
    if (m % p > n % p) return false;
  return true;
}

/// Number of sequences (d_0, d_1, ...) whose nonzero entries are the parts of
/// lambda and with sum_i i*d_i = r.
inline std::uint64_t y_coefficient(const Partition& lambda, int r) {
  if (r < 0) return 0;
  // distinct part values with multiplicities
  std::vector<std::pair<int, int>> groups;
  for (int v : lambda.parts()) {
    if (!groups.empty() && groups.back().first == v)
      ++groups.back().second;
    else
      groups.emplace_back(v, 1);
  }
  if (lambda.length() > r + 1) return 0;
  std::vector<bool> used(r + 1, false);
  std::uint64_t count = 0;
  // choose an increasing set of positions for each group in turn
  std::function<void(std::size_t, int, int, int)> place = [&](std::size_t g, int left, int from, int weight) {
    if (weight > r) return;
    if (g == groups.size()) {
      count += weight == r;
      return;
    }
    if (left == 0) {
      place(g + 1, g + 1 < groups.size() ? groups[g + 1].second : 0, 0, weight);
      return;
    }
    for (int pos = from; pos <= r; ++pos) {
      if (used[pos]) continue;
      used[pos] = true;
      place(g, left - 1, pos + 1, weight + pos * groups[g].first);
      used[pos] = false;
    }
  };
  if (groups.empty()) return r == 0 ? 1 : 0;
  place(0, groups[0].second, 0, 0);
  return count;
}

/// dim M^lambda = n! / (lambda_1! lambda_2! ...).
inline std::uint64_t young_permutation_dimension(const Partition& lambda) {
  std::uint64_t d = 1;
  int left = lambda.size();
  for (int part : lambda.parts()) {
    const std::uint64_t b = binomial(left, part);
    if (b && d > UINT64_MAX / b) throw std::overflow_error("dimension overflow");
    d *= b;
    left -= part;
  }
  return d;
}

}  // namespace spechtsym
