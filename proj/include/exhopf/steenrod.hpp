#pragma once

#include <map>
#include <mutex>
#include <string>
#include <unordered_map>

#include "exhopf/groebner.hpp"
#include "exhopf/liedata.hpp"
#include "exhopf/symfun.hpp"
#include "exhopf/weight_steenrod.hpp"

namespace exhopf {

enum class SteenrodMode { WeightRing, AbstractChern };

/// Reduced powers on a polynomial ring: either generated in degree 2 (mode A),
/// or by Chern classes c_m of a rank-n bundle (mode B).
class SteenrodContext {
 public:
  static SteenrodContext weights(RingPtr ring) {
    if (!ring->all_weights_one()) throw SteenrodError("weight mode needs weight-1 generators");
    return SteenrodContext(SteenrodMode::WeightRing, std::move(ring), 0);
  }

  /// Variables must be named c<m> with weight m; absent Chern classes act as 0.
  static SteenrodContext chern(RingPtr ring, unsigned rank) {
    for (auto& v : ring->variables()) {
      if (v.name.size() < 2 || v.name[0] != 'c' || std::to_string(v.weight) != v.name.substr(1))
        throw SteenrodError("chern mode needs variables c<m> of weight m, got " + v.name);
      if (v.weight > rank) throw SteenrodError("Chern class above the bundle rank");
    }
    return SteenrodContext(SteenrodMode::AbstractChern, std::move(ring), rank);
  }

  SteenrodContext(const SteenrodContext& o) : mode_(o.mode_), ring_(o.ring_), rank_(o.rank_) {}

  SteenrodMode mode() const { return mode_; }
  const RingPtr& ring() const { return ring_; }
  unsigned rank() const { return rank_; }

  Polynomial total(const Polynomial& f) const {
    if (mode_ != SteenrodMode::WeightRing) throw SteenrodError("total operation needs weight mode");
    check(f);
    return weight_total(f);
  }

  Polynomial power(unsigned k, const Polynomial& f) const {
    check(f);
    if (!f.is_zero() && !f.is_homogeneous()) throw SteenrodError("inhomogeneous input");
    if (k == 0 || f.is_zero()) return f;
    if (mode_ == SteenrodMode::WeightRing) return weight_power(k, f);
    Polynomial out(ring_);
    for (auto& t : f.terms()) out += monomial_power(k, t.monomial).scaled(t.coeff);
    return out;
  }

  /// P^j of the generator c_m, pulled into this ring.
  Polynomial generator_power(unsigned j, unsigned m) const {
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(j, m);
    auto it = wu_cache_.find(key);
    if (it != wu_cache_.end()) return it->second;
    Polynomial g = rename_into(wu_formula_rank(ring_->p(), j, m, rank_), ring_, true);
    return wu_cache_.emplace(key, g).first->second;
  }

 private:
  SteenrodContext(SteenrodMode mode, RingPtr ring, unsigned rank) : mode_(mode), ring_(std::move(ring)), rank_(rank) {}

  void check(const Polynomial& f) const {
    if (!f.ring()->same_as(*ring_)) throw RingError("ring mismatch");
  }

  // Cartan formula over the factors of a monomial; partial products are kept
  // together with the amount of k already spent.
  Polynomial monomial_power(unsigned k, const Monomial& m) const {
    const auto& F = ring_->field();
    using Layer = std::vector<std::unordered_map<Monomial, Coeff, MonomialHash>>;
    Layer layer(k + 1);
    layer[0].emplace(ring_->one(), 1);
    for (std::size_t i = 0; i < ring_->size(); ++i) {
      unsigned w = ring_->variable(i).weight;
      std::vector<Polynomial> gens;
      for (unsigned j = 0; j <= std::min(w, k) && m.exponents[i]; ++j) gens.push_back(generator_power(j, w));
      for (unsigned copy = 0; copy < m.exponents[i]; ++copy) {
        Layer next(k + 1);
        for (unsigned used = 0; used <= k; ++used) {
          for (auto& [mono, c] : layer[used]) {
            for (unsigned j = 0; j < gens.size() && used + j <= k; ++j) {
              for (auto& t : gens[j].terms()) {
                auto [slot, fresh] = next[used + j].try_emplace(ring_->multiply(mono, t.monomial), 0);
                slot->second = F.add(slot->second, F.mul(c, t.coeff));
              }
            }
          }
        }
        layer = std::move(next);
      }
    }
    std::vector<Term> terms;
    for (auto& [mono, c] : layer[k])
      if (c) terms.push_back({mono, c});
    return Polynomial::from_terms(ring_, std::move(terms));
  }

  SteenrodMode mode_;
  RingPtr ring_;
  unsigned rank_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<unsigned, unsigned>, Polynomial> wu_cache_;
};

struct Case1Report {
  std::string label;
  bool p1_theta8 = false;       // P^1 θ8 = θ9 + ω2^4 θ5
  bool p4_theta5 = false;       // P^4 θ5 = θ9 + c4 θ5 + (ω2^2 c4 + c6) θ3 + (ω2^2 c5 + c7) θ2
  bool p1_theta8_bare = false;  // P^1 θ8 = θ9
  bool p1_theta8_modulo = false;
  bool ok() const { return p1_theta8 && p4_theta5; }
  /// b_{8,9} = b_{5,9} = 1 follow from exact identities.
  bool certifies() const { return (p1_theta8 || p1_theta8_bare) && p4_theta5; }
};

/// The two identities behind b_{8,9} = b_{5,9} = 1, checked in the weight ring.
inline Case1Report verify_case1(const std::string& group, unsigned p) {
  if (p != 2 || (group != "E6" && group != "E7" && group != "E8"))
    throw SteenrodError("case 1 applies to E6, E7, E8 at p = 2");
  auto ts = theta_set(group, p);
  const RingPtr& W = ts->weight_ring();
  auto ctx = SteenrodContext::weights(W);
  auto theta = [&](unsigned s) { return ts->theta_omega(s); };
  auto c = [&](unsigned i) { return i < ts->chern_defs().size() ? ts->chern_defs()[i] : Polynomial(W); };
  Polynomial w = Polynomial::variable(W, 1);
  Case1Report r{ts->profile().label()};
  Polynomial p1 = ctx.power(1, theta(8));
  r.p1_theta8 = (p1 - theta(9) - w.pow(4) * theta(5)).is_zero();
  r.p1_theta8_bare = (p1 - theta(9)).is_zero();
  auto gb = buchberger({theta(2), theta(3), theta(5)}, 9);
  r.p1_theta8_modulo = normal_form(p1 - theta(9), gb).remainder.is_zero();
  Polynomial rhs = theta(9) + c(4) * theta(5) + (w.pow(2) * c(4) + c(6)) * theta(3) + (w.pow(2) * c(5) + c(7)) * theta(2);
  r.p4_theta5 = (ctx.power(4, theta(5)) - rhs).is_zero();
  return r;
}

}  // namespace exhopf
