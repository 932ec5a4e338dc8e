#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "exhopf/bst.hpp"
#include "exhopf/hopf.hpp"
#include "exhopf/liedata.hpp"
#include "exhopf/poly_io.hpp"
#include "exhopf/reductions.hpp"
#include "exhopf/symfun.hpp"

namespace exhopf {

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Section {
  std::string title;
  std::vector<CheckLine> lines;
  bool pass() const {
    for (auto& l : lines)
      if (!l.pass) return false;
    return true;
  }
  void add(std::string name, bool ok, std::string detail = {}) { lines.push_back({std::move(name), ok, std::move(detail)}); }
};

namespace printed {

/// Closed forms for P^k c_m.
inline Polynomial wu_closed_form(unsigned p, unsigned k, unsigned m, const SymContext& X) {
  auto c = [&](long long j) { return j < 0 ? Polynomial(X.c_ring()) : X.c(static_cast<unsigned>(j)); };
  auto K = [&](long long v) { return Polynomial::constant(X.c_ring(), v); };
  auto choose = [](long long n, long long t) {
    long long num = 1, den = 1;
    for (long long i = 0; i < t; ++i) {
      num *= n - i;
      den *= i + 1;
    }
    return num / den;
  };
  long long M = m;
  if (p == 2) {
    Polynomial out(X.c_ring());
    for (long long t = 0; t <= k; ++t) out += K(choose(static_cast<long long>(k) - M, t)) * c(k - t) * c(M + t);
    return out;
  }
  if (p == 3 && k == 1) return K(M + 2) * c(M + 2) - c(1) * c(M + 1) + (c(1).pow(2) + c(2)) * c(M);
  if (p == 3 && k == 2)
    return c(2).pow(2) * c(M) + c(1) * c(3) * c(M) - c(4) * c(M) - c(1) * c(2) * c(1 + M) + K(M + 1) * c(1).pow(2) * c(2 + M) +
           K(M - 1) * c(2) * c(2 + M) - K(M + 1) * c(1) * c(3 + M) + K((M * M + 3 * M + 2) / 2) * c(4 + M);
  if (p == 3 && k == 3)
    return c(3).pow(2) * c(M) + c(2) * c(4) * c(M) - c(1) * c(5) * c(M) + c(6) * c(M) - c(2) * c(3) * c(1 + M) + c(5) * c(1 + M) +
           K(M) * c(2).pow(2) * c(2 + M) + K(1 + M) * c(1) * c(3) * c(2 + M) - K(1 + M) * c(4) * c(2 + M) -
           K(M) * c(1) * c(2) * c(3 + M) - c(3) * c(3 + M) + K((M * M + M) / 2) * c(1).pow(2) * c(4 + M) -
           K(M * M) * c(2) * c(4 + M) - K((M * M + M) / 2) * c(1) * c(5 + M) +
           K((M * M * M + 3 * M * M + 2 * M - 6) / 6) * c(6 + M);
  if (p == 5 && k == 1)
    return K(M + 4) * c(M + 4) - c(1) * c(M + 3) + (c(1).pow(2) - K(2) * c(2)) * c(M + 2) +
           (-c(1).pow(3) - K(2) * c(1) * c(2) + K(2) * c(3)) * c(M + 1) +
           (c(1).pow(4) + c(1).pow(2) * c(2) + K(2) * c(2).pow(2) - c(1) * c(3) + c(4)) * c(M);
  throw DataError("no closed form for p=" + std::to_string(p) + " k=" + std::to_string(k));
}

/// One printed Schur term: coefficient as a function of m, shape as 1^{m+ones} and fixed parts.
struct SchurTerm {
  std::function<long long(long long)> coeff;
  long long ones;
  std::map<unsigned, unsigned> parts;
};

inline std::vector<SchurTerm> schur_list(unsigned p, unsigned k) {
  auto K = [](long long v) { return [v](long long) { return v; }; };
  if (p == 3 && k == 1)
    return {{[](long long m) { return m; }, 2, {}}, {K(1), -1, {{3, 1}}}, {K(-1), 0, {{2, 1}}}, {K(-1), -2, {{2, 2}}}};
  if (p == 3 && k == 2)
    return {{K(1), -2, {{3, 2}}},
            {[](long long m) { return m - 1; }, 1, {{3, 1}}},
            {K(-1), -1, {{2, 1}, {3, 1}}},
            {K(-1), -3, {{2, 2}, {3, 1}}},
            {[](long long m) { return m * (m - 1) / 2; }, 4, {}},
            {[](long long m) { return -(m - 1); }, 2, {{2, 1}}},
            {[](long long m) { return -(m - 2); }, 0, {{2, 2}}},
            {K(2), -2, {{2, 3}}},
            {K(1), -4, {{2, 4}}}};
  if (p == 3 && k == 3)
    return {{K(1), -3, {{3, 3}}},
            {[](long long m) { return m - 2; }, 0, {{3, 2}}},
            {K(-1), -2, {{2, 1}, {3, 2}}},
            {K(-1), -4, {{2, 2}, {3, 2}}},
            {[](long long m) { return (m - 1) * (m - 2) / 2; }, 3, {{3, 1}}},
            {[](long long m) { return -(m - 2); }, 1, {{2, 1}, {3, 1}}},
            {[](long long m) { return -(m - 3); }, -1, {{2, 2}, {3, 1}}},
            {K(2), -3, {{2, 3}, {3, 1}}},
            {K(1), -5, {{2, 4}, {3, 1}}},
            {[](long long m) { return m * (m - 1) * (m - 2) / 6; }, 6, {}},
            {[](long long m) { return -(m - 1) * (m - 2) / 2; }, 4, {{2, 1}}},
            {[](long long m) { return -(m - 2) * (m - 3) / 2; }, 2, {{2, 2}}},
            {[](long long m) { return 2 * m - 5; }, 0, {{2, 3}}},
            {[](long long m) { return m - 5; }, -2, {{2, 4}}},
            {K(-3), -4, {{2, 5}}},
            {K(-1), -6, {{2, 6}}}};
  // the (1^{m+3},2) term of the p = 5 list read as (1^{m+2},2)
  if (p == 5 && k == 1)
    return {{[](long long m) { return m; }, 4, {}},
            {K(1), -1, {{5, 1}}},
            {K(-1), 0, {{4, 1}}},
            {K(-1), -2, {{2, 1}, {4, 1}}},
            {K(1), 1, {{3, 1}}},
            {K(1), -1, {{2, 1}, {3, 1}}},
            {K(1), -3, {{2, 2}, {3, 1}}},
            {K(-1), 2, {{2, 1}}},
            {K(-1), 0, {{2, 2}}},
            {K(-1), -2, {{2, 3}}},
            {K(-1), -4, {{2, 4}}}};
  throw DataError("no printed expansion for p=" + std::to_string(p) + " k=" + std::to_string(k));
}

/// Smallest m at which every printed shape has non-negative multiplicities.
inline unsigned schur_list_threshold(unsigned p, unsigned k) {
  long long t = k;
  for (auto& term : schur_list(p, k)) t = std::max(t, -term.ones);
  return static_cast<unsigned>(t);
}

/// κ*θ_s for (E8,5) as displayed.
inline const std::map<unsigned, std::string>& kappa_e8_five() {
  static const std::map<unsigned, std::string> v = {
      {2, "-c2"},
      {6, "-c6-2*c3^2"},
      {8, "-c8-c3*c5-c4^2"},
      {12, "-2*c5*c7+2*c6^2-c3*c4*c5+c3^4"},
      {14, "-c3^2*c8+c7^2+2*c3*c4*c7+c4^2*c6+c4*c5^2+c3^2*c4^2"},
      {18, "-2*c3*c7*c8-c3^2*c4*c8+c4*c7^2+c3^2*c5*c7-2*c3*c4^2*c7+2*c3*c4*c5*c6-c3*c5^3"},
      {20, "c4^3*c8+2*c3^4*c8+c3^2*c7^2+c3^3*c4*c7-2*c5^4+2*c3*c4^3*c5+2*c4^5"},
      {24, "2*c3*c5*c8^2+c3*c6*c7*c8-2*c5^2*c6*c8+c3^4*c4*c8"},
  };
  return v;
}

inline const std::map<std::string, unsigned>& group_dimensions() {
  static const std::map<std::string, unsigned> v = {{"G2", 14}, {"F4", 52}, {"E6", 78}, {"E7", 133}, {"E8", 248}};
  return v;
}

}  // namespace printed

inline std::string fixture_dir() {
  if (const char* env = std::getenv("EXHOPF_FIXTURES")) return env;
#ifdef EXHOPF_FIXTURE_DIR
  return EXHOPF_FIXTURE_DIR;
#else
  return "fixtures";
#endif
}

// ---- global checks ----

inline Section wu_section() {
  Section s{"wu formulas", {}};
  struct Case {
    unsigned p, kmax;
  };
  for (auto [p, kmax] : {Case{2, 4}, Case{3, 3}, Case{5, 1}}) {
    std::string bad;
    unsigned count = 0;
    for (unsigned k = 1; k <= kmax; ++k)
      for (unsigned m = 1; m <= 8; ++m) {
        SymContext X(m + k * (p - 1), p);
        if (!(wu_formula(p, k, m) == printed::wu_closed_form(p, k, m, X)))
          bad += " k=" + std::to_string(k) + ",m=" + std::to_string(m);
        ++count;
      }
    s.add("closed form p=" + std::to_string(p), bad.empty(), bad.empty() ? std::to_string(count) + " formulas" : "differs at" + bad);
  }
  return s;
}

inline Section schur_section() {
  Section s{"schur expansions", {}};
  for (auto [p, k] : {std::pair{3u, 1u}, {3u, 2u}, {3u, 3u}, {5u, 1u}}) {
    std::string tag = "p=" + std::to_string(p) + " k=" + std::to_string(k);
    std::string sum_bad, printed_bad;
    PrimeField F(p);
    for (unsigned m = k; m <= 8; ++m) {
      unsigned N = m + k * (p - 1);
      SymContext X(N, p);
      auto mu = Partition::from_multiplicities({{1, m - k}, {p, k}});
      Polynomial sum(X.c_ring());
      std::map<Partition, Coeff> computed;
      for (auto& lam : partitions_of(N)) {
        Coeff a = F.reduce(kostka_inverse(mu, lam));
        if (!a) continue;
        computed[lam] = a;
        sum += schur_giambelli(lam, X).scaled(a);
      }
      if (!(sum == wu_formula(p, k, m))) sum_bad += " m=" + std::to_string(m);
      if (m < printed::schur_list_threshold(p, k)) continue;
      std::map<Partition, Coeff> listed;
      for (auto& t : printed::schur_list(p, k)) {
        std::map<unsigned, unsigned> mult = t.parts;
        mult[1] = static_cast<unsigned>(static_cast<long long>(m) + t.ones);
        auto lam = Partition::from_multiplicities(mult);
        Coeff& slot = listed[lam];
        slot = F.add(slot, F.reduce(t.coeff(m)));
        if (!slot) listed.erase(lam);
      }
      if (listed != computed) printed_bad += " m=" + std::to_string(m);
    }
    s.add("schur sum equals wu " + tag, sum_bad.empty(), sum_bad);
    s.add("printed coefficients " + tag, printed_bad.empty(),
          printed_bad.empty() ? "m=" + std::to_string(printed::schur_list_threshold(p, k)) + "..8" : "differs at" + printed_bad);
  }
  return s;
}

inline Section data_section() {
  Section s{"data layer", {}};
  for (std::string g : {"F4", "E6", "E7", "E8"}) {
    auto R = make_weight_ring(g, 5);
    auto w = Polynomial::variable(R, g == "F4" ? 0 : 1).scaled(3);
    s.add("c1 = 3w " + g, chern_poly(g, 1, R) == w);
  }
  for (auto& g : supported_pairs()) {
    unsigned sum = 0;
    for (unsigned r : g.r) sum += 2 * r - 1;
    for (auto& [t, k] : g.k) sum += 2 * (k - 1) * t;
    s.add("dimension " + g.label(), sum == g.dim && printed::group_dimensions().at(g.group) == g.dim, std::to_string(sum));
  }
  auto ts = theta_set("E8", 5);
  std::string bad;
  for (auto& [j, text] : printed::kappa_e8_five())
    if (!(ts->theta_restricted(j) == parse(text, ts->restricted_ring()))) bad += " " + std::to_string(j);
  s.add("kappa thetas (E8,5)", bad.empty(), bad);
  return s;
}

// ---- per pair ----

/// `deep` also expands the large E8 thetas in the weights.
inline Section theta_section(const GroupProfile& g, bool deep = false) {
  Section s{"theta", {}};
  auto ts = theta_set(g.group, g.prime);
  std::string bad;
  for (unsigned r : g.r) {
    auto w = ts->theta_c(r).weight();
    if (!w || *w != r) bad += " " + std::to_string(r);
  }
  s.add("homogeneous", bad.empty(), bad);
  bad.clear();
  for (unsigned r : g.r) {
    if (r > 14 && g.group == "E8" && !deep) continue;
    const auto& f = ts->theta_omega(r);
    if (!f.is_zero() && (!f.weight() || *f.weight() != r)) bad += " " + std::to_string(r);
  }
  s.add("weight expansion", bad.empty(), bad);
  if (ts->has_chern_layer()) {
    bad.clear();
    // κ* sends the distinguished weight and c1 to zero
    std::vector<Polynomial> images{Polynomial(ts->restricted_ring()), Polynomial(ts->restricted_ring())};
    for (unsigned i = 2; i <= g.chern_rank(); ++i) images.push_back(Polynomial::variable(ts->restricted_ring(), i - 2));
    for (unsigned r : g.r)
      if (!(substitute(ts->theta_c(r), images, ts->restricted_ring()) == ts->theta_restricted(r))) bad += " " + std::to_string(r);
    s.add("restriction", bad.empty(), bad);
  }
  std::ifstream in(fixture_dir() + "/theta_checksums.txt");
  if (!in) {
    s.add("checksums", false, "missing " + fixture_dir() + "/theta_checksums.txt");
    return s;
  }
  std::map<unsigned, std::string> pinned;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string grp, hex;
    unsigned p, deg;
    ls >> grp >> p >> deg >> hex;
    if (grp == g.group && p == g.prime) pinned[deg] = hex;
  }
  bad.clear();
  std::size_t seen = 0;
  for (auto& e : tables::kTheta) {
    if (e.group != g.group || e.prime != g.prime) continue;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(text_checksum(e.text)));
    auto it = pinned.find(e.degree);
    if (it == pinned.end() || it->second != buf) bad += " " + std::to_string(e.degree);
    ++seen;
  }
  if (seen != pinned.size()) bad += " count";
  s.add("checksums", bad.empty(), bad);
  return s;
}

inline Section kappa_section(const GroupProfile& g) {
  Section s{"kappa", {}};
  auto ts = theta_set(g.group, g.prime);
  if (!ts->has_chern_layer()) {
    s.add("restricted ring", true, "none for G2");
    return s;
  }
  std::string bad;
  for (unsigned r : g.r) {
    bool zero = ts->theta_restricted(r).is_zero();
    if (zero != (g.prime == 2 && r == 9)) bad += " " + std::to_string(r);
  }
  s.add("vanishing", bad.empty(), bad);
  if (g.group == "E8" && g.prime == 5) {
    bad.clear();
    for (auto& [j, text] : printed::kappa_e8_five())
      if (!(ts->theta_restricted(j) == parse(text, ts->restricted_ring()))) bad += " " + std::to_string(j);
    s.add("printed values", bad.empty(), bad);
  }
  return s;
}

inline std::string render_b(const std::map<std::pair<unsigned, unsigned>, Coeff>& m, unsigned p) {
  std::string out;
  for (auto& [st, v] : m)
    out += (out.empty() ? "" : " ") + std::string("b(") + std::to_string(st.first) + "," + std::to_string(st.second) + ")=" + render_coeff(v, p);
  return out;
}

inline Section listed_section(const ListedTableReport& r) {
  Section s{"bst", {}};
  std::string detail;
  if (!r.missing.empty()) detail += "missing " + render_b(r.missing, r.profile.prime);
  if (!r.unexpected.empty()) detail += std::string(detail.empty() ? "" : "; ") + "unexpected " + render_b(r.unexpected, r.profile.prime);
  s.add("listed entries", r.pass(), detail.empty() ? std::to_string(r.expected.size()) + " nonzero entries" : detail);
  return s;
}

inline Section hopf_section(const HopfModel& m) {
  Section s{"hopf", {}};
  for (auto& c : check_suite(m).checks) s.add(c.name, c.pass, c.detail);
  return s;
}

/// Generators whose coproduct the solver must pin down uniquely.
inline std::vector<std::pair<unsigned, std::string>> worked_coproducts(const GroupProfile& g) {
  if (g.group == "E8" && g.prime == 2) return {{15, "x10|a5+x6|a9+x6^2|a3"}};
  if (g.group == "E8" && g.prime == 3) return {{15, "-x8|a7"}, {35, "x8|a27+x8^2|a19+x8*x20|a7-x20|a15"}};
  return {};
}

inline Section solver_section(const HopfModel& m) {
  Section s{"solver", {}};
  auto worked = worked_coproducts(m.profile());
  for (std::size_t i = 0; i < m.odd_count(); ++i) {
    unsigned deg = 2 * m.odd_weights()[i] - 1;
    std::string name = "a" + std::to_string(deg);
    auto w = std::find_if(worked.begin(), worked.end(), [&](auto& x) { return x.first == deg; });
    try {
      auto sol = solve_coproduct(m, deg);
      bool ok = sol.value == *m.odd_coproduct(i);
      if (w != worked.end()) ok = ok && sol.value == parse_tensor(m, w->second);
      s.add(name, ok, render(m, sol.value));
    } catch (const Underdetermined& e) {
      s.add(name, w == worked.end(), "free " + std::to_string(e.dimension));
    } catch (const HopfError& e) {
      s.add(name, false, e.what());
    }
  }
  return s;
}

struct PairConfig {
  BstStrategy strategy = BstStrategy::MethodII;
  unsigned jobs = 1;
  bool deep = false;
};

struct PairReport {
  GroupProfile profile;
  std::vector<Section> sections;
  bool pass() const {
    for (auto& s : sections)
      if (!s.pass()) return false;
    return true;
  }
};

inline PairReport run_pair(const GroupProfile& g, const PairConfig& cfg) {
  PairReport r{g, {}};
  r.sections.push_back(theta_section(g, cfg.deep));
  r.sections.push_back(kappa_section(g));
  auto l22 = verify_listed_table(g.group, g.prime, cfg.strategy, cfg.jobs);
  r.sections.push_back(listed_section(l22));
  auto model = build_model(g.group, g.prime, l22.table);
  r.sections.push_back(hopf_section(model));
  r.sections.push_back(solver_section(model));
  return r;
}

}  // namespace exhopf
