#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exhopf/poly_io.hpp"
#include "exhopf/symfun.hpp"
#include "exhopf/theta_tables.hpp"

namespace exhopf {

class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GroupProfile {
  std::string group;
  unsigned rank = 0;
  unsigned dim = 0;
  unsigned prime = 0;
  std::vector<unsigned> r;
  std::vector<unsigned> e;
  std::map<unsigned, unsigned> k;
  std::optional<unsigned> distinguished;

  std::string label() const { return "(" + group + "," + std::to_string(prime) + ")"; }

  /// Number of Chern classes in the bundle of the group (6 for F4).
  unsigned chern_rank() const { return group == "F4" ? 6 : rank; }
};

namespace detail {

inline GroupProfile make_profile(std::string g, unsigned n, unsigned dim, unsigned p, std::vector<unsigned> r,
                                 std::map<unsigned, unsigned> k) {
  GroupProfile out;
  out.group = std::move(g);
  out.rank = n;
  out.dim = dim;
  out.prime = p;
  out.r = std::move(r);
  for (auto& [t, kt] : k) out.e.push_back(t);
  out.k = std::move(k);
  if (out.group == "F4") out.distinguished = 1;
  else if (out.group != "G2") out.distinguished = 2;
  return out;
}

inline const std::vector<GroupProfile>& profile_table() {
  static const std::vector<GroupProfile> table = {
      make_profile("G2", 2, 14, 2, {2, 3}, {{3, 2}}),
      make_profile("F4", 4, 52, 2, {2, 3, 8, 12}, {{3, 2}}),
      make_profile("E6", 6, 78, 2, {2, 3, 5, 8, 9, 12}, {{3, 2}}),
      make_profile("E7", 7, 133, 2, {2, 3, 5, 8, 9, 12, 14}, {{3, 2}, {5, 2}, {9, 2}}),
      make_profile("E8", 8, 248, 2, {2, 3, 5, 8, 9, 12, 14, 15}, {{3, 8}, {5, 4}, {9, 2}, {15, 2}}),
      make_profile("F4", 4, 52, 3, {2, 4, 6, 8}, {{4, 3}}),
      make_profile("E6", 6, 78, 3, {2, 4, 5, 6, 8, 9}, {{4, 3}}),
      make_profile("E7", 7, 133, 3, {2, 4, 6, 8, 10, 14, 18}, {{4, 3}}),
      make_profile("E8", 8, 248, 3, {2, 4, 8, 10, 14, 18, 20, 24}, {{4, 3}, {10, 3}}),
      make_profile("E8", 8, 248, 5, {2, 6, 8, 12, 14, 18, 20, 24}, {{6, 5}}),
  };
  return table;
}

}  // namespace detail

inline const std::vector<GroupProfile>& supported_pairs() { return detail::profile_table(); }

inline const GroupProfile& profile(const std::string& group, unsigned p) {
  for (auto& g : detail::profile_table())
    if (g.group == group && g.prime == p) return g;
  throw DataError("unsupported pair (" + group + "," + std::to_string(p) + ")");
}

inline unsigned group_rank(const std::string& group) {
  if (group == "G2") return 2;
  if (group == "F4") return 4;
  if (group == "E6") return 6;
  if (group == "E7") return 7;
  if (group == "E8") return 8;
  throw DataError("unknown group " + group);
}

inline RingPtr make_weight_ring(const std::string& group, unsigned p) {
  std::vector<Variable> v;
  for (unsigned i = 1; i <= group_rank(group); ++i) v.push_back({"w" + std::to_string(i), 1});
  return RingContext::make(p, std::move(v));
}

/// The linear forms t_i in the weights whose elementary symmetric functions give c_k(G).
inline std::vector<Polynomial> chern_substitution(const std::string& group, const RingPtr& weights) {
  if (group == "G2") throw DataError("G2 has no Chern substitution");
  auto w = [&](unsigned i) { return Polynomial::variable(weights, i - 1); };
  if (group == "F4") {
    return {w(4), w(3) - w(4), w(2) - w(3), w(1) - w(2) + w(3), w(1) - w(3) + w(4), w(1) - w(4)};
  }
  unsigned n = group_rank(group);
  std::vector<Polynomial> t;
  t.push_back(w(n));
  for (unsigned i = 2; i <= n - 3; ++i) t.push_back(w(n + 1 - i) - w(n + 2 - i));
  t.push_back(w(3) - w(4) + w(2));
  t.push_back(w(1) - w(3) + w(2));
  t.push_back(w(2) - w(1));
  return t;
}

/// c_0..c_N of the group as polynomials in the weights.
inline std::vector<Polynomial> chern_polys(const std::string& group, const RingPtr& weights) {
  auto t = chern_substitution(group, weights);
  const std::size_t N = t.size();
  std::vector<Polynomial> e(N + 1, Polynomial(weights));
  e[0] = Polynomial::constant(weights, 1);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = i + 1; k >= 1; --k) e[k] += e[k - 1] * t[i];
  return e;
}

inline Polynomial chern_poly(const std::string& group, unsigned k, const RingPtr& weights) {
  auto c = chern_polys(group, weights);
  if (k >= c.size()) throw DataError("Chern class index out of range");
  return c[k];
}

/// θ data of one pair in the printed (mixed), restricted and weight presentations.
class ThetaSet {
 public:
  explicit ThetaSet(const GroupProfile& prof) : profile_(prof) {
    const unsigned p = prof.prime;
    weight_ring_ = make_weight_ring(prof.group, p);
    if (prof.group == "G2") {
      mixed_ring_ = weight_ring_;
    } else {
      std::vector<Variable> mixed = {{"w" + std::to_string(*prof.distinguished), 1}};
      std::vector<Variable> restricted;
      for (unsigned i = 1; i <= prof.chern_rank(); ++i) {
        mixed.push_back({"c" + std::to_string(i), i});
        if (i >= 2) restricted.push_back({"c" + std::to_string(i), i});
      }
      mixed_ring_ = RingContext::make(p, mixed);
      restricted_ring_ = RingContext::make(p, restricted);
      chern_defs_ = chern_polys(prof.group, weight_ring_);
    }
    load_tables();
  }

  const GroupProfile& profile() const { return profile_; }
  const RingPtr& weight_ring() const { return weight_ring_; }
  const RingPtr& mixed_ring() const { return mixed_ring_; }
  const RingPtr& restricted_ring() const {
    if (!restricted_ring_) throw DataError("G2 has no restricted ring");
    return restricted_ring_;
  }
  const std::vector<Polynomial>& chern_defs() const { return chern_defs_; }
  bool has_chern_layer() const { return restricted_ring_ != nullptr; }

  const Polynomial& theta_c(unsigned s) const { return lookup(theta_c_, s); }
  const std::map<unsigned, Polynomial>& theta_c_all() const { return theta_c_; }
  const Polynomial& theta_restricted(unsigned s) const {
    if (!has_chern_layer()) throw DataError("G2 has no restricted presentation");
    return lookup(theta_restricted_, s);
  }

  /// Images of the mixed variables in the weight ring.
  std::vector<Polynomial> mixed_to_weights() const {
    std::vector<Polynomial> images;
    if (!has_chern_layer()) {
      for (std::size_t i = 0; i < weight_ring_->size(); ++i) images.push_back(Polynomial::variable(weight_ring_, i));
      return images;
    }
    images.push_back(Polynomial::variable(weight_ring_, *profile_.distinguished - 1));
    for (unsigned i = 1; i <= profile_.chern_rank(); ++i) images.push_back(chern_defs_[i]);
    return images;
  }

  /// θ_s fully expanded in the weights; computed on first use.
  const Polynomial& theta_omega(unsigned s) const {
    std::lock_guard lock(omega_mutex_);
    auto it = theta_omega_.find(s);
    if (it != theta_omega_.end()) return it->second;
    Polynomial f = substitute(theta_c(s), mixed_to_weights(), weight_ring_);
    return theta_omega_.emplace(s, std::move(f)).first->second;
  }

  Polynomial restrict_kappa(const Polynomial& f) const {
    if (!has_chern_layer()) throw DataError("G2 has no restriction");
    if (!f.ring()->same_as(*mixed_ring_)) throw RingError("restriction expects the mixed ring");
    return rename_into(f, restricted_ring_, true);
  }

 private:
  static const Polynomial& lookup(const std::map<unsigned, Polynomial>& m, unsigned s) {
    auto it = m.find(s);
    if (it == m.end()) throw DataError("no theta of degree " + std::to_string(s));
    return it->second;
  }

  void load_tables() {
    const auto& g = profile_.group;
    const unsigned p = profile_.prime;
    bool from_e8 = p == 2 && (g == "E6" || g == "E7");
    RingPtr source_ring = mixed_ring_;
    if (from_e8) {
      std::vector<Variable> v = {{"w2", 1}};
      for (unsigned i = 1; i <= 8; ++i) v.push_back({"c" + std::to_string(i), i});
      source_ring = RingContext::make(p, v);
    }
    std::string_view source_group = from_e8 ? std::string_view("E8") : std::string_view(g);
    for (auto& entry : tables::kTheta) {
      if (entry.group != source_group || entry.prime != p) continue;
      if (std::find(profile_.r.begin(), profile_.r.end(), entry.degree) == profile_.r.end()) continue;
      Polynomial f = parse(entry.text, source_ring);
      if (from_e8) f = rename_into(f, mixed_ring_, true);
      if (f.is_zero() || !f.weight() || *f.weight() != entry.degree)
        throw DataError("theta " + std::to_string(entry.degree) + " of " + profile_.label() + " has wrong weight");
      theta_c_.emplace(entry.degree, std::move(f));
    }
    if (theta_c_.size() != profile_.r.size()) throw DataError("incomplete theta table for " + profile_.label());
    if (has_chern_layer())
      for (auto& [s, f] : theta_c_) theta_restricted_.emplace(s, restrict_kappa(f));
  }

  GroupProfile profile_;
  RingPtr weight_ring_, mixed_ring_, restricted_ring_;
  std::vector<Polynomial> chern_defs_;
  std::map<unsigned, Polynomial> theta_c_, theta_restricted_;
  mutable std::mutex omega_mutex_;
  mutable std::map<unsigned, Polynomial> theta_omega_;
};

using ThetaSetPtr = std::shared_ptr<const ThetaSet>;

inline ThetaSetPtr theta_set(const std::string& group, unsigned p) {
  static std::mutex mutex;
  static std::map<std::pair<std::string, unsigned>, ThetaSetPtr> cache;
  const GroupProfile& prof = profile(group, p);
  std::lock_guard lock(mutex);
  auto& slot = cache[{group, p}];
  if (!slot) slot = std::make_shared<const ThetaSet>(prof);
  return slot;
}

/// FNV-1a over the transcription text, used to pin the θ tables.
inline std::uint64_t text_checksum(std::string_view text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace exhopf
