#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "exhopf/field.hpp"

namespace exhopf {

inline constexpr std::size_t kMaxVariables = 16;

class RingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Monomial {
  std::array<std::uint16_t, kMaxVariables> exponents{};
  std::uint32_t weight = 0;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exponents == b.exponents;
  }
  bool is_one() const { return weight == 0 && std::all_of(exponents.begin(), exponents.end(), [](auto e) { return e == 0; }); }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto e : m.exponents) {
      h ^= e;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

struct Variable {
  std::string name;
  unsigned weight = 1;
};

/// Variables, weights, coefficient field and the monomial order.
///
/// The order is weighted grevlex: higher weight first, ties broken by
/// reverse lexicographic comparison starting from the variable of lowest
/// precedence. Precedence defaults to declaration order, the first declared
/// variable being the smallest.
class RingContext {
 public:
  RingContext(PrimeField field, std::vector<Variable> vars, std::vector<std::size_t> ascending = {})
      : field_(field), vars_(std::move(vars)), ascending_(std::move(ascending)) {
    if (vars_.size() > kMaxVariables) throw RingError("too many variables");
    if (ascending_.empty()) {
      ascending_.resize(vars_.size());
      std::iota(ascending_.begin(), ascending_.end(), std::size_t{0});
    }
    if (ascending_.size() != vars_.size()) throw RingError("precedence has wrong length");
    std::vector<bool> seen(vars_.size(), false);
    for (auto i : ascending_) {
      if (i >= vars_.size() || seen[i]) throw RingError("precedence is not a permutation");
      seen[i] = true;
    }
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i].weight == 0) throw RingError("variable weight must be positive");
      if (!index_.emplace(vars_[i].name, i).second) throw RingError("duplicate variable " + vars_[i].name);
    }
  }

  static std::shared_ptr<const RingContext> make(unsigned p, std::vector<Variable> vars,
                                                 std::vector<std::size_t> ascending = {}) {
    return std::make_shared<const RingContext>(PrimeField(p), std::move(vars), std::move(ascending));
  }

  const PrimeField& field() const { return field_; }
  unsigned p() const { return field_.p(); }
  std::size_t size() const { return vars_.size(); }
  const Variable& variable(std::size_t i) const { return vars_.at(i); }
  const std::vector<Variable>& variables() const { return vars_; }
  const std::vector<std::size_t>& ascending() const { return ascending_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool all_weights_one() const {
    return std::all_of(vars_.begin(), vars_.end(), [](const Variable& v) { return v.weight == 1; });
  }

  Monomial one() const { return Monomial{}; }

  Monomial var(std::size_t i, unsigned e = 1) const {
    Monomial m;
    m.exponents.at(i) = static_cast<std::uint16_t>(e);
    m.weight = vars_.at(i).weight * e;
    return m;
  }

  Monomial make_monomial(const std::vector<unsigned>& exps) const {
    if (exps.size() > vars_.size()) throw RingError("exponent vector too long");
    Monomial m;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      m.exponents[i] = static_cast<std::uint16_t>(exps[i]);
      m.weight += vars_[i].weight * exps[i];
    }
    return m;
  }

  Monomial multiply(const Monomial& a, const Monomial& b) const {
    Monomial m;
    for (std::size_t i = 0; i < vars_.size(); ++i) m.exponents[i] = a.exponents[i] + b.exponents[i];
    m.weight = a.weight + b.weight;
    return m;
  }

  bool divides(const Monomial& a, const Monomial& b) const {
    if (a.weight > b.weight) return false;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (a.exponents[i] > b.exponents[i]) return false;
    return true;
  }

  /// b / a, assuming a divides b.
  Monomial divide(const Monomial& b, const Monomial& a) const {
    Monomial m;
    for (std::size_t i = 0; i < vars_.size(); ++i) m.exponents[i] = b.exponents[i] - a.exponents[i];
    m.weight = b.weight - a.weight;
    return m;
  }

  Monomial lcm(const Monomial& a, const Monomial& b) const {
    Monomial m;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      m.exponents[i] = std::max(a.exponents[i], b.exponents[i]);
      m.weight += vars_[i].weight * m.exponents[i];
    }
    return m;
  }

  bool coprime(const Monomial& a, const Monomial& b) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (a.exponents[i] && b.exponents[i]) return false;
    return true;
  }

  /// Positive if a > b, negative if a < b, zero if equal.
  int compare(const Monomial& a, const Monomial& b) const {
    if (a.weight != b.weight) return a.weight > b.weight ? 1 : -1;
    for (auto i : ascending_) {
      if (a.exponents[i] != b.exponents[i]) return a.exponents[i] < b.exponents[i] ? 1 : -1;
    }
    return 0;
  }

  bool same_as(const RingContext& o) const {
    if (this == &o) return true;
    if (!(field_ == o.field_) || vars_.size() != o.vars_.size() || ascending_ != o.ascending_) return false;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i].name != o.vars_[i].name || vars_[i].weight != o.vars_[i].weight) return false;
    return true;
  }

 private:
  PrimeField field_;
  std::vector<Variable> vars_;
  std::vector<std::size_t> ascending_;
  std::unordered_map<std::string, std::size_t> index_;
};

using RingPtr = std::shared_ptr<const RingContext>;

struct Term {
  Monomial monomial;
  Coeff coeff = 0;
};

/// Sparse polynomial over F_p; terms are kept in strictly descending order.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, long long c) {
    Polynomial f(ring);
    Coeff r = ring->field().reduce(c);
    if (r) f.terms_.push_back({ring->one(), r});
    return f;
  }

  static Polynomial monomial(RingPtr ring, const Monomial& m, Coeff c = 1) {
    Polynomial f(ring);
    c = ring->field().reduce(c);
    if (c) f.terms_.push_back({m, c});
    return f;
  }

  static Polynomial variable(RingPtr ring, std::size_t i) {
    auto m = ring->var(i);
    return monomial(std::move(ring), m, 1);
  }

  static Polynomial variable(RingPtr ring, std::string_view name) {
    auto i = ring->index_of(name);
    if (!i) throw RingError("unknown variable " + std::string(name));
    return variable(std::move(ring), *i);
  }

  /// Builds from arbitrary terms: merges duplicates, drops zeros, sorts.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms) {
    std::unordered_map<Monomial, Coeff, MonomialHash> acc;
    const auto& F = ring->field();
    for (auto& t : terms) {
      auto [it, fresh] = acc.try_emplace(t.monomial, 0);
      it->second = F.add(it->second, F.reduce(t.coeff));
    }
    return from_accumulator(std::move(ring), acc);
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  const Term& leading_term() const {
    if (terms_.empty()) throw RingError("leading term of zero polynomial");
    return terms_.front();
  }

  bool is_homogeneous() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return t.monomial.weight == terms_.front().monomial.weight; });
  }

  /// Weight of a nonzero homogeneous polynomial.
  std::optional<unsigned> weight() const {
    if (terms_.empty() || !is_homogeneous()) return std::nullopt;
    return terms_.front().monomial.weight;
  }

  unsigned max_weight() const { return terms_.empty() ? 0 : terms_.front().monomial.weight; }

  Polynomial homogeneous_component(unsigned w) const {
    Polynomial f(ring_);
    for (auto& t : terms_)
      if (t.monomial.weight == w) f.terms_.push_back(t);
    return f;
  }

  Coeff coefficient(const Monomial& m) const {
    for (auto& t : terms_)
      if (t.monomial == m) return t.coeff;
    return 0;
  }

  Polynomial operator-() const {
    Polynomial f(*this);
    for (auto& t : f.terms_) t.coeff = ring_->field().neg(t.coeff);
    return f;
  }

  Polynomial operator+(const Polynomial& o) const { return merge(o, false); }
  Polynomial operator-(const Polynomial& o) const { return merge(o, true); }
  Polynomial& operator+=(const Polynomial& o) { return *this = merge(o, false); }
  Polynomial& operator-=(const Polynomial& o) { return *this = merge(o, true); }

  Polynomial scaled(Coeff c) const {
    c = ring_->field().reduce(c);
    Polynomial f(ring_);
    if (c == 0) return f;
    f.terms_ = terms_;
    for (auto& t : f.terms_) t.coeff = ring_->field().mul(t.coeff, c);
    return f;
  }

  /// c * m * this; order is preserved by monomial multiplication.
  Polynomial mul_term(const Monomial& m, Coeff c) const {
    Polynomial f(ring_);
    c = ring_->field().reduce(c);
    if (c == 0) return f;
    f.terms_.reserve(terms_.size());
    for (auto& t : terms_) f.terms_.push_back({ring_->multiply(t.monomial, m), ring_->field().mul(t.coeff, c)});
    return f;
  }

  Polynomial operator*(const Polynomial& o) const {
    check_ring(o);
    if (is_zero() || o.is_zero()) return Polynomial(ring_);
    if (size() == 1) return o.mul_term(terms_[0].monomial, terms_[0].coeff);
    if (o.size() == 1) return mul_term(o.terms_[0].monomial, o.terms_[0].coeff);
    const auto& F = ring_->field();
    std::unordered_map<Monomial, Coeff, MonomialHash> acc;
    acc.reserve(size() * o.size());
    for (auto& a : terms_)
      for (auto& b : o.terms_) {
        auto [it, fresh] = acc.try_emplace(ring_->multiply(a.monomial, b.monomial), 0);
        it->second = F.add(it->second, F.mul(a.coeff, b.coeff));
      }
    return from_accumulator(ring_, acc);
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(unsigned e) const {
    Polynomial r = constant(ring_, 1), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    if (a.ring_ && b.ring_ && !a.ring_->same_as(*b.ring_)) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
  }

  void check_ring(const Polynomial& o) const {
    if (!ring_ || !o.ring_ || !ring_->same_as(*o.ring_)) throw RingError("ring mismatch");
  }

 private:
  static Polynomial from_accumulator(RingPtr ring, const std::unordered_map<Monomial, Coeff, MonomialHash>& acc) {
    Polynomial f(std::move(ring));
    f.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (c) f.terms_.push_back({m, c});
    const RingContext& R = *f.ring_;
    std::sort(f.terms_.begin(), f.terms_.end(),
              [&](const Term& a, const Term& b) { return R.compare(a.monomial, b.monomial) > 0; });
    return f;
  }

  Polynomial merge(const Polynomial& o, bool subtract) const {
    check_ring(o);
    const auto& F = ring_->field();
    const RingContext& R = *ring_;
    Polynomial f(ring_);
    f.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      int c = i == terms_.size() ? -1 : j == o.terms_.size() ? 1 : R.compare(terms_[i].monomial, o.terms_[j].monomial);
      if (c > 0) {
        f.terms_.push_back(terms_[i++]);
      } else {
        Coeff oc = subtract ? F.neg(o.terms_[j].coeff) : o.terms_[j].coeff;
        if (c < 0) {
          f.terms_.push_back({o.terms_[j].monomial, oc});
        } else {
          Coeff s = F.add(terms_[i].coeff, oc);
          if (s) f.terms_.push_back({terms_[i].monomial, s});
          ++i;
        }
        ++j;
      }
    }
    return f;
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Ring homomorphism sending source variable i to images[i] in target.
/// Images must be homogeneous of the variable's weight, or zero.
inline Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images, const RingPtr& target) {
  const RingContext& src = *f.ring();
  if (images.size() != src.size()) throw RingError("unmapped variable");
  for (std::size_t i = 0; i < images.size(); ++i) {
    const auto& g = images[i];
    if (!g.ring() || !g.ring()->same_as(*target)) throw RingError("image in wrong ring for " + src.variable(i).name);
    if (!g.is_zero() && (!g.weight() || *g.weight() != src.variable(i).weight))
      throw RingError("inhomogeneous image for " + src.variable(i).name);
  }
  std::map<std::pair<std::size_t, unsigned>, Polynomial> cache;
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto key = std::make_pair(i, e);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(key, images[i].pow(e)).first->second;
  };
  std::unordered_map<Monomial, Coeff, MonomialHash> acc;
  const auto& F = target->field();
  for (auto& t : f.terms()) {
    Polynomial prod = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < src.size() && !prod.is_zero(); ++i)
      if (t.monomial.exponents[i]) prod = prod * power(i, t.monomial.exponents[i]);
    for (auto& u : prod.terms()) {
      auto [it, fresh] = acc.try_emplace(u.monomial, 0);
      it->second = F.add(it->second, u.coeff);
    }
  }
  std::vector<Term> terms;
  for (auto& [m, c] : acc)
    if (c) terms.push_back({m, c});
  return Polynomial::from_terms(target, std::move(terms));
}

/// Maps variables by name; names absent from target go to zero when allowed.
inline Polynomial rename_into(const Polynomial& f, const RingPtr& target, bool missing_to_zero = false) {
  const RingContext& src = *f.ring();
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < src.size(); ++i) {
    auto j = target->index_of(src.variable(i).name);
    if (j) {
      if (target->variable(*j).weight != src.variable(i).weight)
        throw RingError("weight mismatch for " + src.variable(i).name);
      images.push_back(Polynomial::variable(target, *j));
    } else if (missing_to_zero) {
      images.emplace_back(target);
    } else {
      throw RingError("unmapped variable " + src.variable(i).name);
    }
  }
  return substitute(f, images, target);
}

}  // namespace exhopf
