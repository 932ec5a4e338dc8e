#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "exhopf/polynomial.hpp"

namespace exhopf {

class GroebnerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoSolution : public GroebnerError {
 public:
  using GroebnerError::GroebnerError;
};

class Ambiguous : public GroebnerError {
 public:
  using GroebnerError::GroebnerError;
};

struct GroebnerBasis {
  RingPtr ring;
  std::vector<Polynomial> generators;
  unsigned truncation = 0;
  std::vector<Polynomial> basis;
};

struct ReductionResult {
  Polynomial remainder;
  std::vector<Polynomial> quotients;
};

namespace detail {

struct DescendingOrder {
  const RingContext* ring;
  bool operator()(const Monomial& a, const Monomial& b) const { return ring->compare(a, b) > 0; }
};

/// Full reduction of f by divisors; quotients are accumulated when requested.
inline Polynomial reduce_by(const Polynomial& f, const std::vector<Polynomial>& divisors,
                            std::vector<Polynomial>* quotients = nullptr) {
  const RingPtr& R = f.ring();
  const auto& F = R->field();
  std::map<Monomial, Coeff, DescendingOrder> work(DescendingOrder{R.get()});
  for (auto& t : f.terms()) work.emplace(t.monomial, t.coeff);
  std::vector<Term> rem;
  if (quotients) quotients->assign(divisors.size(), Polynomial(R));
  std::vector<std::vector<Term>> qterms(quotients ? divisors.size() : 0);
  while (!work.empty()) {
    auto it = work.begin();
    Monomial m = it->first;
    Coeff c = it->second;
    work.erase(it);
    std::size_t hit = divisors.size();
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (R->divides(divisors[i].leading_term().monomial, m)) {
        hit = i;
        break;
      }
    }
    if (hit == divisors.size()) {
      rem.push_back({m, c});
      continue;
    }
    const auto& g = divisors[hit];
    const auto& lt = g.leading_term();
    Monomial q = R->divide(m, lt.monomial);
    Coeff a = F.div(c, lt.coeff);
    if (quotients) qterms[hit].push_back({q, a});
    Coeff na = F.neg(a);
    for (std::size_t j = 1; j < g.terms().size(); ++j) {
      const auto& t = g.terms()[j];
      Monomial mm = R->multiply(t.monomial, q);
      Coeff add = F.mul(na, t.coeff);
      auto [slot, fresh] = work.try_emplace(mm, add);
      if (!fresh) {
        slot->second = F.add(slot->second, add);
        if (!slot->second) work.erase(slot);
      }
    }
  }
  if (quotients)
    for (std::size_t i = 0; i < divisors.size(); ++i) (*quotients)[i] = Polynomial::from_terms(R, std::move(qterms[i]));
  return Polynomial::from_terms(R, std::move(rem));
}

inline Polynomial make_monic(const Polynomial& f) {
  if (f.is_zero()) return f;
  return f.scaled(f.ring()->field().inv(f.leading_term().coeff));
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const RingPtr& R = f.ring();
  const auto& F = R->field();
  const auto& lf = f.leading_term();
  const auto& lg = g.leading_term();
  Monomial l = R->lcm(lf.monomial, lg.monomial);
  return f.mul_term(R->divide(l, lf.monomial), F.inv(lf.coeff)) - g.mul_term(R->divide(l, lg.monomial), F.inv(lg.coeff));
}

}  // namespace detail

/// Degree-truncated Buchberger for homogeneous ideals: normal selection strategy,
/// Gebauer-Moeller pair criteria, pairs above weight d discarded.
inline GroebnerBasis buchberger(std::vector<Polynomial> gens, unsigned d, RingPtr ring = nullptr) {
  if (!ring) {
    if (gens.empty()) throw GroebnerError("ring required for empty generator list");
    ring = gens.front().ring();
  }
  for (auto& g : gens) {
    if (!g.ring()->same_as(*ring)) throw RingError("ring mismatch");
    if (!g.is_zero() && !g.is_homogeneous()) throw GroebnerError("inhomogeneous generator");
  }
  const RingContext& R = *ring;
  GroebnerBasis out{ring, gens, d, {}};

  std::vector<Polynomial> G;
  std::vector<bool> active;
  struct Pair {
    std::uint32_t weight;
    Monomial lcm;
    std::size_t i, j;  // j == npos marks an input generator i
  };
  constexpr std::size_t kGen = static_cast<std::size_t>(-1);
  auto later = [&](const Pair& a, const Pair& b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    int c = R.compare(a.lcm, b.lcm);
    if (c != 0) return c > 0;
    if (a.i != b.i) return a.i > b.i;
    return a.j > b.j;
  };
  std::vector<Pair> B;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!gens[i].is_zero() && gens[i].max_weight() <= d)
      B.push_back({gens[i].max_weight(), gens[i].leading_term().monomial, i, kGen});

  auto lm = [&](std::size_t i) -> const Monomial& { return G[i].leading_term().monomial; };

  auto update = [&](std::size_t h) {
    const Monomial& H = lm(h);
    std::vector<Pair> C, D;
    for (std::size_t g = 0; g < h; ++g) {
      if (!active[g]) continue;
      Monomial l = R.lcm(H, lm(g));
      if (l.weight > d) continue;
      C.push_back({l.weight, l, g, h});
    }
    for (std::size_t a = 0; a < C.size(); ++a) {
      const Pair& p = C[a];
      bool keep = R.coprime(H, lm(p.i));
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < C.size() && keep; ++b)
          if (R.divides(C[b].lcm, p.lcm)) keep = false;
        for (std::size_t b = 0; b < D.size() && keep; ++b)
          if (R.divides(D[b].lcm, p.lcm)) keep = false;
      }
      if (keep) D.push_back(p);
    }
    std::vector<Pair> next;
    for (auto& p : B) {
      if (p.j == kGen) {
        next.push_back(p);
        continue;
      }
      bool drop = R.divides(H, p.lcm) && !(R.lcm(lm(p.i), H) == p.lcm) && !(R.lcm(lm(p.j), H) == p.lcm);
      if (!drop) next.push_back(p);
    }
    for (auto& p : D)
      if (!R.coprime(H, lm(p.i))) next.push_back(p);
    B = std::move(next);
    for (std::size_t g = 0; g < h; ++g)
      if (active[g] && R.divides(H, lm(g))) active[g] = false;
  };

  while (!B.empty()) {
    auto it = std::min_element(B.begin(), B.end(), [&](const Pair& a, const Pair& b) { return later(b, a); });
    Pair p = *it;
    B.erase(it);
    Polynomial h = p.j == kGen ? gens[p.i] : detail::s_polynomial(G[p.i], G[p.j]);
    std::vector<Polynomial> reducers;
    for (std::size_t g = 0; g < G.size(); ++g)
      if (active[g]) reducers.push_back(G[g]);
    h = detail::reduce_by(h, reducers);
    if (h.is_zero()) continue;
    G.push_back(detail::make_monic(h));
    active.push_back(true);
    update(G.size() - 1);
  }

  // minimal, then inter-reduced and monic
  std::vector<Polynomial> minimal;
  for (std::size_t g = 0; g < G.size(); ++g)
    if (active[g]) minimal.push_back(G[g]);
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const auto& lt = minimal[i].leading_term();
    Polynomial tail = minimal[i] - Polynomial::monomial(ring, lt.monomial, lt.coeff);
    Polynomial r = Polynomial::monomial(ring, lt.monomial, lt.coeff) + detail::reduce_by(tail, others);
    reduced.push_back(detail::make_monic(r));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return R.compare(a.leading_term().monomial, b.leading_term().monomial) < 0;
  });
  out.basis = std::move(reduced);
  return out;
}

inline ReductionResult normal_form(const Polynomial& f, const GroebnerBasis& gb, bool with_quotients = false) {
  if (!f.ring()->same_as(*gb.ring)) throw RingError("ring mismatch");
  if (f.max_weight() > gb.truncation) throw GroebnerError("weight exceeds truncation");
  ReductionResult r;
  r.remainder = detail::reduce_by(f, gb.basis, with_quotients ? &r.quotients : nullptr);
  return r;
}

/// The unique a with NF(lhs - a * pivot) = 0.
inline Coeff solve_linear_coefficient(const Polynomial& lhs, const Polynomial& pivot, const GroebnerBasis& gb) {
  Polynomial r1 = normal_form(lhs, gb).remainder;
  Polynomial r2 = normal_form(pivot, gb).remainder;
  const auto& F = gb.ring->field();
  if (r2.is_zero()) {
    if (r1.is_zero()) throw Ambiguous("pivot lies in the ideal");
    throw NoSolution("pivot lies in the ideal but the left side does not");
  }
  if (r1.is_zero()) return 0;
  Coeff a = F.div(r1.leading_term().coeff, r2.leading_term().coeff);
  if (!(r1.leading_term().monomial == r2.leading_term().monomial) || !(r1 == r2.scaled(a)))
    throw NoSolution("remainders are not proportional");
  return a;
}

}  // namespace exhopf
