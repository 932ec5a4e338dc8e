#pragma once

#include <unordered_map>
#include <vector>

#include "exhopf/polynomial.hpp"

namespace exhopf {

class SteenrodError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// P^k on a ring whose generators all have weight 1 (degree 2 classes):
/// P(t) = t + t^p, extended by the Cartan formula.
inline Polynomial weight_power(unsigned k, const Polynomial& f) {
  const RingPtr& ring = f.ring();
  if (!ring->all_weights_one()) throw SteenrodError("weight-ring mode needs weight-1 generators");
  if (k == 0) return f;
  const unsigned p = ring->p();
  const auto& F = ring->field();
  const std::size_t n = ring->size();
  std::unordered_map<Monomial, Coeff, MonomialHash> acc;
  std::vector<unsigned> split(n, 0);
  for (auto& t : f.terms()) {
    const auto& a = t.monomial.exponents;
    // distribute k among variables, j_i <= a_i
    std::vector<unsigned> suffix(n + 1, 0);
    for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] + a[i];
    if (suffix[0] < k) continue;
    auto rec = [&](auto&& self, std::size_t i, unsigned left, Coeff c) -> void {
      if (i == n) {
        if (left) return;
        Monomial m;
        for (std::size_t v = 0; v < n; ++v) m.exponents[v] = static_cast<std::uint16_t>(a[v] + split[v] * (p - 1));
        m.weight = t.monomial.weight + k * (p - 1);
        auto [it, fresh] = acc.try_emplace(m, 0);
        it->second = F.add(it->second, c);
        return;
      }
      unsigned lo = left > suffix[i + 1] ? left - suffix[i + 1] : 0;
      unsigned hi = std::min<unsigned>(left, a[i]);
      for (unsigned j = lo; j <= hi; ++j) {
        Coeff b = binomial_mod(a[i], j, p);
        if (!b) continue;
        split[i] = j;
        self(self, i + 1, left - j, F.mul(c, b));
      }
      split[i] = 0;
    };
    rec(rec, 0, k, t.coeff);
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c) terms.push_back({m, c});
  return Polynomial::from_terms(ring, std::move(terms));
}

/// Total power P = sum_k P^k.
inline Polynomial weight_total(const Polynomial& f) {
  Polynomial out(f.ring());
  for (unsigned k = 0; k <= f.max_weight(); ++k) out += weight_power(k, f);
  return out;
}

}  // namespace exhopf
