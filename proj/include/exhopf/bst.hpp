#pragma once

#include <future>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "exhopf/groebner.hpp"
#include "exhopf/liedata.hpp"
#include "exhopf/parallel.hpp"
#include "exhopf/steenrod.hpp"

namespace exhopf {

enum class BstMethod { MethodI, MethodII, Case1, InstabilityZero };
enum class BstStrategy { MethodI, MethodII, Both };

inline const char* to_string(BstMethod m) {
  switch (m) {
    case BstMethod::MethodI: return "method1";
    case BstMethod::MethodII: return "method2";
    case BstMethod::Case1: return "case1";
    case BstMethod::InstabilityZero: return "instability";
  }
  return "?";
}

inline const char* to_string(BstStrategy s) {
  switch (s) {
    case BstStrategy::MethodI: return "method1";
    case BstStrategy::MethodII: return "method2";
    case BstStrategy::Both: return "both";
  }
  return "?";
}

inline BstStrategy parse_strategy(const std::string& s) {
  if (s == "method1") return BstStrategy::MethodI;
  if (s == "method2") return BstStrategy::MethodII;
  if (s == "both") return BstStrategy::Both;
  throw DataError("unknown strategy " + s);
}

class Case1Required : public GroebnerError {
 public:
  using GroebnerError::GroebnerError;
};

class MethodMismatch : public GroebnerError {
 public:
  using GroebnerError::GroebnerError;
};

struct BstEntry {
  unsigned s = 0, t = 0, k = 0;
  Coeff value = 0;
  BstMethod method = BstMethod::InstabilityZero;
};

struct BstTable {
  GroupProfile profile;
  std::vector<BstEntry> entries;

  std::map<std::pair<unsigned, unsigned>, Coeff> nonzero() const {
    std::map<std::pair<unsigned, unsigned>, Coeff> out;
    for (auto& e : entries)
      if (e.value) out[{e.s, e.t}] = e.value;
    return out;
  }
};

/// Pairs s < t in r(G,p) with t - s a positive multiple of p - 1.
inline std::vector<BstEntry> admissible_pairs(const GroupProfile& g) {
  std::vector<BstEntry> out;
  for (unsigned s : g.r)
    for (unsigned t : g.r)
      if (t > s && (t - s) % (g.prime - 1) == 0) out.push_back({s, t, (t - s) / (g.prime - 1), 0, BstMethod::InstabilityZero});
  return out;
}

namespace detail {

inline void check_pair(const GroupProfile& g, unsigned s, unsigned t) {
  auto in_r = [&](unsigned x) { return std::find(g.r.begin(), g.r.end(), x) != g.r.end(); };
  if (!in_r(s) || !in_r(t) || t <= s || (t - s) % (g.prime - 1))
    throw DataError("inadmissible pair (" + std::to_string(s) + "," + std::to_string(t) + ") for " + g.label());
}

class BasisCache {
 public:
  using Key = std::tuple<std::string, unsigned, unsigned, int>;

  template <class Build>
  std::shared_ptr<const GroebnerBasis> get(const Key& key, Build&& build) {
    std::shared_future<std::shared_ptr<const GroebnerBasis>> fut;
    std::promise<std::shared_ptr<const GroebnerBasis>> promise;
    bool owner = false;
    {
      std::lock_guard lock(mutex_);
      auto it = cache_.find(key);
      if (it == cache_.end()) {
        fut = promise.get_future().share();
        cache_.emplace(key, fut);
        owner = true;
      } else {
        fut = it->second;
      }
    }
    if (owner) {
      try {
        promise.set_value(std::make_shared<const GroebnerBasis>(build()));
      } catch (...) {
        promise.set_exception(std::current_exception());
      }
    }
    return fut.get();
  }

  static BasisCache& instance() {
    static BasisCache cache;
    return cache;
  }

 private:
  std::mutex mutex_;
  std::map<Key, std::shared_future<std::shared_ptr<const GroebnerBasis>>> cache_;
};

}  // namespace detail

/// Basis of <θ_j : j in r, j < t> in the weight ring, truncated at weight t.
inline std::shared_ptr<const GroebnerBasis> weight_basis(const ThetaSet& ts, unsigned t) {
  const auto& g = ts.profile();
  return detail::BasisCache::instance().get({g.group, g.prime, t, 1}, [&] {
    std::vector<Polynomial> gens;
    for (unsigned j : g.r)
      if (j < t) gens.push_back(ts.theta_omega(j));
    return buchberger(gens, t, ts.weight_ring());
  });
}

/// Same for the restricted thetas in the abstract Chern ring.
inline std::shared_ptr<const GroebnerBasis> restricted_basis(const ThetaSet& ts, unsigned t) {
  const auto& g = ts.profile();
  return detail::BasisCache::instance().get({g.group, g.prime, t, 2}, [&] {
    std::vector<Polynomial> gens;
    for (unsigned j : g.r)
      if (j < t && !ts.theta_restricted(j).is_zero()) gens.push_back(ts.theta_restricted(j));
    return buchberger(gens, t, ts.restricted_ring());
  });
}

inline Coeff compute_bst_method1(const std::string& group, unsigned p, unsigned s, unsigned t) {
  auto ts = theta_set(group, p);
  const auto& g = ts->profile();
  detail::check_pair(g, s, t);
  unsigned k = (t - s) / (p - 1);
  if (k >= s) return 0;
  auto gb = weight_basis(*ts, t);
  auto ctx = SteenrodContext::weights(ts->weight_ring());
  return solve_linear_coefficient(ctx.power(k, ts->theta_omega(s)), ts->theta_omega(t), *gb);
}

inline Coeff compute_bst_method2(const std::string& group, unsigned p, unsigned s, unsigned t) {
  auto ts = theta_set(group, p);
  const auto& g = ts->profile();
  detail::check_pair(g, s, t);
  if (!ts->has_chern_layer()) throw DataError("G2 has no restricted ring");
  unsigned k = (t - s) / (p - 1);
  if (k >= s) return 0;
  const auto& pivot = ts->theta_restricted(t);
  if (pivot.is_zero()) throw Case1Required("restricted theta " + std::to_string(t) + " vanishes");
  auto gb = restricted_basis(*ts, t);
  auto ctx = SteenrodContext::chern(ts->restricted_ring(), g.chern_rank());
  return solve_linear_coefficient(ctx.power(k, ts->theta_restricted(s)), pivot, *gb);
}

/// b_{5,9} and b_{8,9} at p = 2 from the exact Case 1 identities.
inline Coeff compute_bst_case1(const std::string& group, unsigned s, unsigned t) {
  if (t != 9 || (s != 5 && s != 8)) throw DataError("case 1 covers (5,9) and (8,9) only");
  auto r = verify_case1(group, 2);
  if (!r.certifies()) throw GroebnerError("case 1 identities fail for " + r.label);
  return 1;
}

inline BstEntry compute_entry(const GroupProfile& g, BstEntry e, BstStrategy strategy) {
  if (e.k >= e.s) {
    e.value = 0;
    e.method = BstMethod::InstabilityZero;
    return e;
  }
  auto ts = theta_set(g.group, g.prime);
  bool case1 = ts->has_chern_layer() && ts->theta_restricted(e.t).is_zero();
  auto secondary = [&]() -> std::pair<Coeff, BstMethod> {
    if (!ts->has_chern_layer()) return {compute_bst_method1(g.group, g.prime, e.s, e.t), BstMethod::MethodI};
    if (case1) return {compute_bst_case1(g.group, e.s, e.t), BstMethod::Case1};
    try {
      return {compute_bst_method2(g.group, g.prime, e.s, e.t), BstMethod::MethodII};
    } catch (const Ambiguous&) {
      // restricted pivot falls into the lower ideal; the weight ring decides
      return {compute_bst_method1(g.group, g.prime, e.s, e.t), BstMethod::MethodI};
    }
  };
  if (strategy == BstStrategy::MethodI) {
    e.value = compute_bst_method1(g.group, g.prime, e.s, e.t);
    e.method = BstMethod::MethodI;
    return e;
  }
  auto [v, m] = secondary();
  e.value = v;
  e.method = m;
  if (strategy == BstStrategy::Both && m != BstMethod::MethodI) {
    Coeff v1 = compute_bst_method1(g.group, g.prime, e.s, e.t);
    if (v1 != v)
      throw MethodMismatch(g.label() + " b(" + std::to_string(e.s) + "," + std::to_string(e.t) +
                           "): method1 " + std::to_string(v1) + " vs " + to_string(m) + " " + std::to_string(v));
  }
  return e;
}

inline BstTable full_table(const std::string& group, unsigned p, BstStrategy strategy = BstStrategy::MethodII,
                           unsigned jobs = 1) {
  const GroupProfile& g = profile(group, p);
  BstTable table{g, admissible_pairs(g)};
  parallel_for(table.entries.size(), jobs,
               [&](std::size_t i) { table.entries[i] = compute_entry(g, table.entries[i], strategy); });
  return table;
}

/// The nonzero structure constants as listed for each pair.
inline std::map<std::pair<unsigned, unsigned>, Coeff> listed_nonzero(const std::string& group, unsigned p) {
  profile(group, p);
  std::map<std::pair<unsigned, unsigned>, Coeff> out;
  auto among = [&](std::initializer_list<const char*> gs) {
    for (auto x : gs)
      if (group == x) return true;
    return false;
  };
  if (p == 2) {
    out[{2, 3}] = 1;
    if (among({"F4", "E6", "E7", "E8"})) out[{8, 12}] = 1;
    if (among({"E6", "E7", "E8"})) out[{3, 5}] = out[{5, 9}] = out[{8, 9}] = 1;
    if (among({"E7", "E8"})) out[{12, 14}] = 1;
    if (among({"E8"})) out[{12, 15}] = out[{14, 15}] = 1;
  } else if (p == 3) {
    out[{2, 4}] = 1;
    if (among({"F4", "E6", "E7"})) out[{6, 8}] = 1;
    if (among({"E7", "E8"})) out[{4, 10}] = out[{8, 14}] = out[{8, 10}] = 1;
    if (among({"E7"})) out[{6, 10}] = 2;
    if (among({"E8"})) out[{18, 20}] = out[{14, 20}] = out[{18, 24}] = 1;
  } else if (p == 5) {
    for (unsigned k : {2u, 8u, 14u, 20u}) out[{k, k + 4}] = 1;
  }
  return out;
}

struct ListedTableReport {
  GroupProfile profile;
  BstTable table;
  std::map<std::pair<unsigned, unsigned>, Coeff> expected, missing, unexpected;
  bool pass() const { return missing.empty() && unexpected.empty(); }
};

inline ListedTableReport verify_listed_table(const std::string& group, unsigned p, BstStrategy strategy = BstStrategy::MethodII,
                                    unsigned jobs = 1) {
  ListedTableReport r{profile(group, p), full_table(group, p, strategy, jobs), listed_nonzero(group, p), {}, {}};
  auto got = r.table.nonzero();
  for (auto& [st, v] : r.expected) {
    auto it = got.find(st);
    if (it == got.end() || it->second != v) r.missing[st] = v;
  }
  for (auto& [st, v] : got) {
    auto it = r.expected.find(st);
    if (it == r.expected.end() || it->second != v) r.unexpected[st] = v;
  }
  return r;
}

}  // namespace exhopf
