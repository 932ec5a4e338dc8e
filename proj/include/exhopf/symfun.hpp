#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "exhopf/polynomial.hpp"
#include "exhopf/weight_steenrod.hpp"

namespace exhopf {

class SymmetryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Partition {
  std::vector<unsigned> parts;

  Partition() = default;
  explicit Partition(std::vector<unsigned> p) : parts(std::move(p)) {
    std::erase(parts, 0u);
    std::sort(parts.begin(), parts.end(), std::greater<>());
  }

  unsigned size() const {
    unsigned s = 0;
    for (auto x : parts) s += x;
    return s;
  }
  std::size_t length() const { return parts.size(); }

  Partition conjugate() const {
    Partition c;
    if (parts.empty()) return c;
    c.parts.assign(parts.front(), 0);
    for (auto x : parts)
      for (unsigned i = 0; i < x; ++i) ++c.parts[i];
    return c;
  }

  /// Builds (1^ones, a^na, b^nb, ...) style shapes from multiplicities.
  static Partition from_multiplicities(const std::map<unsigned, unsigned>& mult) {
    std::vector<unsigned> v;
    for (auto [part, count] : mult)
      for (unsigned i = 0; i < count; ++i) v.push_back(part);
    return Partition(v);
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
    return s + ")";
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// All partitions of n with at most max_len parts, in lexicographically decreasing order.
inline std::vector<Partition> partitions_of(unsigned n, unsigned max_len = ~0u) {
  std::vector<Partition> out;
  std::vector<unsigned> cur;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned left, unsigned max_part) {
    if (left == 0) {
      Partition p;
      p.parts = cur;
      out.push_back(p);
      return;
    }
    if (cur.size() >= max_len) return;
    for (unsigned x = std::min(left, max_part); x >= 1; --x) {
      cur.push_back(x);
      rec(left - x, x);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

inline bool dominates(const Partition& a, const Partition& b) {
  unsigned sa = 0, sb = 0;
  std::size_t len = std::max(a.length(), b.length());
  for (std::size_t i = 0; i < len; ++i) {
    sa += i < a.length() ? a.parts[i] : 0;
    sb += i < b.length() ? b.parts[i] : 0;
    if (sa < sb) return false;
  }
  return true;
}

/// Symmetric functions in n variables t_i of weight 1, with c_i = e_i(t).
class SymContext {
 public:
  SymContext(unsigned n, unsigned p) : n_(n) {
    if (n == 0 || n > kMaxVariables) throw RingError("symmetric context needs 1..16 variables");
    std::vector<Variable> tv, cv;
    for (unsigned i = 1; i <= n; ++i) {
      tv.push_back({"t" + std::to_string(i), 1});
      cv.push_back({"c" + std::to_string(i), i});
    }
    t_ring_ = RingContext::make(p, tv);
    c_ring_ = RingContext::make(p, cv);
  }

  unsigned n() const { return n_; }
  unsigned p() const { return t_ring_->p(); }
  const RingPtr& t_ring() const { return t_ring_; }
  const RingPtr& c_ring() const { return c_ring_; }

  Polynomial c(unsigned i) const {
    if (i == 0) return Polynomial::constant(c_ring_, 1);
    if (i > n_) return Polynomial(c_ring_);
    return Polynomial::variable(c_ring_, i - 1);
  }

 private:
  unsigned n_;
  RingPtr t_ring_, c_ring_;
};

inline Polynomial elementary(unsigned k, const SymContext& ctx) {
  if (k > ctx.n()) throw RingError("elementary index out of range");
  const auto& R = ctx.t_ring();
  std::vector<Term> terms;
  std::vector<unsigned> exps(ctx.n(), 0);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned start, unsigned left) {
    if (left == 0) {
      terms.push_back({R->make_monomial(exps), 1});
      return;
    }
    for (unsigned i = start; i + left <= ctx.n(); ++i) {
      exps[i] = 1;
      rec(i + 1, left - 1);
      exps[i] = 0;
    }
  };
  rec(0, k);
  return Polynomial::from_terms(R, std::move(terms));
}

namespace detail {

/// Number of 0-1 matrices with the given row and column sums, reduced mod p.
class ZeroOneCounter {
 public:
  explicit ZeroOneCounter(unsigned p) : p_(p) {}

  Coeff count(const std::vector<unsigned>& rows, std::vector<unsigned> cols) {
    std::sort(cols.begin(), cols.end(), std::greater<>());
    std::erase(cols, 0u);
    return rec(rows, 0, cols);
  }

 private:
  Coeff rec(const std::vector<unsigned>& rows, std::size_t r, const std::vector<unsigned>& cols) {
    if (r == rows.size()) return cols.empty() ? 1 : 0;
    unsigned need = 0;
    for (std::size_t i = r; i < rows.size(); ++i) need += rows[i];
    unsigned have = 0;
    for (auto c : cols) have += c;
    if (need != have) return 0;
    auto key = std::make_pair(std::vector<unsigned>(rows.begin() + static_cast<long>(r), rows.end()), cols);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    // group equal column values
    std::vector<std::pair<unsigned, unsigned>> groups;
    for (auto c : cols) {
      if (!groups.empty() && groups.back().first == c) ++groups.back().second;
      else groups.push_back({c, 1});
    }
    unsigned long long total = 0;
    std::vector<unsigned> pick(groups.size(), 0);
    std::function<void(std::size_t, unsigned, unsigned long long)> choose = [&](std::size_t g, unsigned left, unsigned long long ways) {
      if (g == groups.size()) {
        if (left) return;
        std::vector<unsigned> next;
        for (std::size_t i = 0; i < groups.size(); ++i)
          for (unsigned j = 0; j < groups[i].second; ++j)
            next.push_back(j < pick[i] ? groups[i].first - 1 : groups[i].first);
        std::sort(next.begin(), next.end(), std::greater<>());
        std::erase(next, 0u);
        total = (total + ways * rec(rows, r + 1, next)) % p_;
        return;
      }
      for (unsigned j = 0; j <= std::min(left, groups[g].second); ++j) {
        pick[g] = j;
        choose(g + 1, left - j, ways * binomial_mod(groups[g].second, j, p_) % p_);
      }
      pick[g] = 0;
    };
    choose(0, rows[r], 1);
    Coeff v = static_cast<Coeff>(total);
    memo_.emplace(std::move(key), v);
    return v;
  }

  unsigned p_;
  std::map<std::pair<std::vector<unsigned>, std::vector<unsigned>>, Coeff> memo_;
};

}  // namespace detail

/// Expresses a symmetric polynomial in t_1..t_n through c_i = e_i.
inline Polynomial rewrite_in_elementary(const Polynomial& f, const SymContext& ctx) {
  if (!f.ring()->same_as(*ctx.t_ring())) throw RingError("ring mismatch");
  const unsigned n = ctx.n();
  const auto& F = ctx.t_ring()->field();
  // coefficient on each monomial symmetric function, with an orbit census
  std::map<Partition, Coeff, std::greater<>> mbasis;
  std::map<Partition, unsigned long long> seen;
  for (auto& t : f.terms()) {
    std::vector<unsigned> e(t.monomial.exponents.begin(), t.monomial.exponents.begin() + n);
    bool dominant = std::is_sorted(e.begin(), e.end(), std::greater<>());
    Partition lam(e);
    ++seen[lam];
    if (dominant) mbasis[lam] = t.coeff;
  }
  for (auto& t : f.terms()) {
    std::vector<unsigned> e(t.monomial.exponents.begin(), t.monomial.exponents.begin() + n);
    Partition lam(e);
    auto it = mbasis.find(lam);
    if (it == mbasis.end() || it->second != t.coeff) throw SymmetryError("polynomial is not symmetric");
  }
  for (auto& [lam, count] : seen) {
    // orbit size n! / prod(multiplicities!)
    std::map<unsigned, unsigned> mult;
    for (auto x : lam.parts) ++mult[x];
    mult[0] = n - static_cast<unsigned>(lam.length());
    unsigned long long orbit = 1;
    unsigned placed = 0;
    for (auto [part, m] : mult) {
      for (unsigned i = 1; i <= m; ++i) {
        ++placed;
        orbit = orbit * placed / i;
      }
    }
    if (orbit != count) throw SymmetryError("polynomial is not symmetric");
  }
  detail::ZeroOneCounter counter(ctx.p());
  Polynomial out(ctx.c_ring());
  std::map<unsigned, std::vector<Partition>> by_size;
  while (!mbasis.empty()) {
    auto it = mbasis.begin();
    Partition lam = it->first;
    Coeff a = it->second;
    mbasis.erase(it);
    if (a == 0) continue;
    Partition conj = lam.conjugate();
    Polynomial e = Polynomial::constant(ctx.c_ring(), a);
    for (auto x : conj.parts) {
      if (x > n) throw SymmetryError("elimination left the e-basis");
      e = e * ctx.c(x);
    }
    out += e;
    auto& candidates = by_size[lam.size()];
    if (candidates.empty()) candidates = partitions_of(lam.size(), n);
    for (auto& nu : candidates) {
      if (!(nu < lam) || !dominates(lam, nu)) continue;
      Coeff m = counter.count(conj.parts, nu.parts);
      if (!m) continue;
      Coeff& slot = mbasis[nu];
      slot = F.sub(slot, F.mul(a, m));
      if (slot == 0) mbasis.erase(nu);
    }
  }
  return out;
}

/// Kostka numbers and their inverse for all partitions of a fixed size.
class KostkaTable {
 public:
  explicit KostkaTable(unsigned size) : size_(size), parts_(partitions_of(size)) {
    const std::size_t N = parts_.size();
    for (std::size_t i = 0; i < N; ++i) index_[parts_[i]] = i;
    K_.assign(N, std::vector<long long>(N, 0));
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = i; j < N; ++j) K_[i][j] = count_ssyt(parts_[i], parts_[j]);
    // K is upper unitriangular in this ordering; invert exactly
    Kinv_.assign(N, std::vector<long long>(N, 0));
    for (std::size_t j = 0; j < N; ++j) {
      Kinv_[j][j] = 1;
      for (std::size_t i = j; i-- > 0;) {
        long long s = 0;
        for (std::size_t l = i + 1; l <= j; ++l) s += K_[i][l] * Kinv_[l][j];
        Kinv_[i][j] = -s;
      }
    }
  }

  unsigned size() const { return size_; }
  const std::vector<Partition>& partitions() const { return parts_; }
  long long kostka(const Partition& lam, const Partition& mu) const { return K_.at(idx(lam)).at(idx(mu)); }
  long long inverse(const Partition& mu, const Partition& lam) const { return Kinv_.at(idx(mu)).at(idx(lam)); }

  /// Shared table per size, built once under a lock.
  static std::shared_ptr<const KostkaTable> get(unsigned size) {
    static std::mutex mu;
    static std::map<unsigned, std::shared_ptr<const KostkaTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[size];
    if (!slot) slot = std::make_shared<const KostkaTable>(size);
    return slot;
  }

 private:
  std::size_t idx(const Partition& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw RingError("partition size mismatch");
    return it->second;
  }

  // semistandard tableaux of shape lam and content mu: peel horizontal strips
  static long long count_ssyt(const Partition& lam, const Partition& mu) {
    std::map<std::pair<std::vector<unsigned>, std::size_t>, long long> memo;
    std::function<long long(const std::vector<unsigned>&, std::size_t)> rec =
        [&](const std::vector<unsigned>& shape, std::size_t level) -> long long {
      if (level == 0) return std::all_of(shape.begin(), shape.end(), [](unsigned x) { return x == 0; }) ? 1 : 0;
      auto key = std::make_pair(shape, level);
      if (auto it = memo.find(key); it != memo.end()) return it->second;
      unsigned strip = mu.parts[level - 1];
      long long total = 0;
      std::vector<unsigned> inner(shape.size(), 0);
      std::function<void(std::size_t, unsigned)> pick = [&](std::size_t row, unsigned left) {
        if (row == shape.size()) {
          if (left == 0) total += rec(inner, level - 1);
          return;
        }
        unsigned lo = row + 1 < shape.size() ? shape[row + 1] : 0;
        for (unsigned v = shape[row]; v + 1 > lo && shape[row] - v <= left; --v) {
          inner[row] = v;
          pick(row + 1, left - (shape[row] - v));
          if (v == 0) break;
        }
      };
      pick(0, strip);
      memo.emplace(key, total);
      return total;
    };
    std::vector<unsigned> shape = lam.parts;
    shape.resize(std::max(shape.size(), mu.length()), 0);
    return rec(shape, mu.length());
  }

  unsigned size_;
  std::vector<Partition> parts_;
  std::map<Partition, std::size_t> index_;
  std::vector<std::vector<long long>> K_, Kinv_;
};

inline long long kostka_inverse(const Partition& mu, const Partition& lam) {
  if (mu.size() != lam.size()) throw RingError("partition size mismatch");
  return KostkaTable::get(mu.size())->inverse(mu, lam);
}

/// s_lambda = det(c_{lambda'_i - i + j}).
inline Polynomial schur_giambelli(const Partition& lam, const SymContext& ctx) {
  Partition conj = lam.conjugate();
  const std::size_t L = conj.length();
  if (L == 0) return ctx.c(0);
  std::vector<std::vector<Polynomial>> M(L);
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; j < L; ++j) {
      long long idx = static_cast<long long>(conj.parts[i]) - static_cast<long long>(i) + static_cast<long long>(j);
      M[i].push_back(idx < 0 ? Polynomial(ctx.c_ring()) : ctx.c(static_cast<unsigned>(idx)));
    }
  // Laplace expansion along rows with column-subset memo
  std::map<std::pair<std::size_t, unsigned>, Polynomial> memo;
  std::function<Polynomial(std::size_t, unsigned)> det = [&](std::size_t row, unsigned used) -> Polynomial {
    if (row == L) return ctx.c(0);
    auto key = std::make_pair(row, used);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Polynomial acc(ctx.c_ring());
    int sign = 1;
    for (std::size_t j = 0; j < L; ++j) {
      if (used & (1u << j)) continue;
      if (!M[row][j].is_zero()) {
        Polynomial t = M[row][j] * det(row + 1, used | (1u << j));
        acc = sign > 0 ? acc + t : acc - t;
      }
      sign = -sign;
    }
    memo.emplace(key, acc);
    return acc;
  };
  return det(0, 0);
}

/// P^k c_m for a rank-n bundle, produced from P^k e_m in the t-ring.
inline Polynomial wu_formula_rank(unsigned p, unsigned k, unsigned m, unsigned n) {
  SymContext ctx(n, p);
  if (m == 0) throw RingError("Chern index must be positive");
  if (m > n) return Polynomial(ctx.c_ring());
  if (k == 0) return ctx.c(m);
  Polynomial e = elementary(m, ctx);
  Polynomial image = weight_power(k, e);
  return rewrite_in_elementary(image, ctx);
}

/// Universal formula: n = m + k(p-1), so no Chern class is truncated.
inline Polynomial wu_formula(unsigned p, unsigned k, unsigned m) {
  return wu_formula_rank(p, k, m, std::max(m, m + k * (p - 1)));
}

}  // namespace exhopf
