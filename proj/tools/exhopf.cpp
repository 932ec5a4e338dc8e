#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "exhopf/bst.hpp"
#include "exhopf/groebner.hpp"
#include "exhopf/hopf.hpp"
#include "exhopf/liedata.hpp"
#include "exhopf/parallel.hpp"
#include "exhopf/poly_io.hpp"
#include "exhopf/reproduction.hpp"
#include "exhopf/steenrod.hpp"
#include "exhopf/symfun.hpp"

using json = nlohmann::ordered_json;
using namespace exhopf;

namespace {

struct Options {
  std::string format = "text";
  unsigned jobs = 1;
  std::string output;
  bool deep = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Result of a subcommand: report text plus the first failing item, if any.
struct Outcome {
  std::string report;
  std::string failure;
};

long long signed_coeff(Coeff c, unsigned p) { return p > 2 && c == p - 1 ? -1 : static_cast<long long>(c); }

json schema_root() { return json{{"schema", 1}}; }

std::string finish(const json& j) { return j.dump(2) + "\n"; }

// ---- rings and polynomial files ----

RingPtr parse_ring(const std::string& spec) {
  static const std::regex whole(R"(\s*F(\d+)\s*\[(.*)\]\s*)");
  static const std::regex var(R"(\s*([A-Za-z]+\d*)\s*(?::\s*(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(spec, m, whole)) throw UsageError("ring spec must look like F3[x:1,y:1,c2:2]");
  unsigned p = static_cast<unsigned>(std::stoul(m[1]));
  std::vector<Variable> vars;
  std::string body = m[2];
  std::stringstream ss(body);
  for (std::string item; std::getline(ss, item, ',');) {
    std::smatch v;
    if (!std::regex_match(item, v, var)) throw UsageError("bad variable '" + item + "' in ring spec");
    vars.push_back({v[1], v[2].matched ? static_cast<unsigned>(std::stoul(v[2])) : 1u});
  }
  return RingContext::make(p, std::move(vars));
}

std::string ring_spec(const RingContext& R) {
  std::string out = "F" + std::to_string(R.p()) + "[";
  for (std::size_t i = 0; i < R.size(); ++i)
    out += (i ? "," : "") + R.variable(i).name + ":" + std::to_string(R.variable(i).weight);
  return out + "]";
}

/// Polynomial lines plus `# key value` header comments.
struct PolyFile {
  std::map<std::string, std::string> header;
  std::vector<std::string> lines;
};

PolyFile read_poly_stream(std::istream& in) {
  PolyFile f;
  for (std::string line; std::getline(in, line);) {
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    line = line.substr(b, line.find_last_not_of(" \t\r") - b + 1);
    if (line[0] == '#') {
      std::istringstream ls(line.substr(1));
      std::string key, rest;
      ls >> key;
      std::getline(ls >> std::ws, rest);
      if (!key.empty()) f.header[key] = rest;
      continue;
    }
    f.lines.push_back(line);
  }
  return f;
}

PolyFile read_poly_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return read_poly_stream(in);
}

RingPtr ring_for(const std::string& flag, const PolyFile& f) {
  if (!flag.empty()) return parse_ring(flag);
  auto it = f.header.find("ring");
  if (it == f.header.end()) throw UsageError("no ring given: pass --ring or a '# ring' header");
  return parse_ring(it->second);
}

std::vector<Polynomial> parse_all(const PolyFile& f, const RingPtr& R) {
  std::vector<Polynomial> out;
  for (auto& l : f.lines) out.push_back(parse(l, R));
  return out;
}

json terms_json(const Polynomial& f) {
  json terms = json::array();
  for (auto& t : f.terms())
    terms.push_back({{"monomial", render_monomial(t.monomial, *f.ring())}, {"coeff", signed_coeff(t.coeff, f.ring()->p())}});
  return terms;
}

// ---- wu ----

Outcome cmd_wu(const Options& o, unsigned p, unsigned k, unsigned m, bool check) {
  Polynomial f = wu_formula(p, k, m);
  Outcome out;
  std::optional<bool> agrees;
  if (check) {
    SymContext X(m + k * (p - 1), p);
    agrees = f == printed::wu_closed_form(p, k, m, X);
    if (!*agrees) out.failure = "prop51 p=" + std::to_string(p) + " k=" + std::to_string(k) + " m=" + std::to_string(m);
  }
  if (o.format == "json") {
    json j = schema_root();
    j["p"] = p;
    j["k"] = k;
    j["m"] = m;
    j["terms"] = terms_json(f);
    if (agrees) j["prop51"] = *agrees ? "PASS" : "FAIL";
    out.report = finish(j);
  } else {
    out.report = render(f) + "\n";
    if (agrees) out.report += std::string("prop51 ") + (*agrees ? "PASS" : "FAIL") + "\n";
  }
  return out;
}

// ---- data ----

Outcome cmd_data(const Options& o, const std::string& group, unsigned p, const std::string& what) {
  const GroupProfile& g = profile(group, p);
  json j = schema_root();
  j["group"] = g.group;
  j["prime"] = g.prime;
  std::ostringstream text;
  if (what == "profile") {
    j["rank"] = g.rank;
    j["dim"] = g.dim;
    j["r"] = g.r;
    j["e"] = g.e;
    json k = json::object();
    for (auto& [t, kt] : g.k) k[std::to_string(t)] = kt;
    j["k"] = k;
    j["distinguished_weight"] = g.distinguished ? json(*g.distinguished) : json(nullptr);
    text << g.label() << " rank " << g.rank << " dim " << g.dim << "\nr";
    for (auto r : g.r) text << ' ' << r;
    text << "\nk";
    for (auto& [t, kt] : g.k) text << ' ' << t << ':' << kt;
    text << "\n";
    if (g.distinguished) text << "distinguished w" << *g.distinguished << "\n";
  } else if (what == "theta" || what == "theta-restricted") {
    auto ts = theta_set(group, p);
    bool restricted = what == "theta-restricted";
    const RingPtr& R = restricted ? ts->restricted_ring() : ts->mixed_ring();
    j["ring"] = ring_spec(*R);
    json th = json::object();
    for (unsigned r : g.r) {
      auto f = render(restricted ? ts->theta_restricted(r) : ts->theta_c(r));
      th[std::to_string(r)] = f;
      text << "theta" << r << " = " << f << "\n";
    }
    j["theta"] = th;
  } else if (what == "chern") {
    auto R = make_weight_ring(group, p);
    auto c = chern_polys(group, R);
    j["ring"] = ring_spec(*R);
    json cj = json::object();
    for (std::size_t i = 1; i < c.size(); ++i) {
      cj[std::to_string(i)] = render(c[i]);
      text << "c" << i << " = " << render(c[i]) << "\n";
    }
    j["chern"] = cj;
  } else {
    throw UsageError("unknown dump " + what);
  }
  return {o.format == "json" ? finish(j) : text.str(), {}};
}

// ---- gb / nf ----

Outcome cmd_gb(const Options& o, const std::string& ring_flag, const std::string& gens_path, unsigned d) {
  auto file = read_poly_file(gens_path);
  auto R = ring_for(ring_flag, file);
  auto gb = buchberger(parse_all(file, R), d, R);
  if (o.format == "json") {
    json j = schema_root();
    j["ring"] = ring_spec(*R);
    j["truncate"] = d;
    json b = json::array();
    for (auto& f : gb.basis) b.push_back(render(f));
    j["basis"] = b;
    return {finish(j), {}};
  }
  std::string out = "# ring " + ring_spec(*R) + "\n# truncate " + std::to_string(d) + "\n";
  for (auto& f : gb.basis) out += render(f) + "\n";
  return {out, {}};
}

Outcome cmd_nf(const Options& o, const std::string& ring_flag, const std::string& basis_path, std::istream& in) {
  auto file = read_poly_file(basis_path);
  auto R = ring_for(ring_flag, file);
  auto input = read_poly_stream(in);
  auto polys = parse_all(input, R);
  unsigned d = 0;
  if (auto it = file.header.find("truncate"); it != file.header.end()) d = static_cast<unsigned>(std::stoul(it->second));
  for (auto& f : polys) d = std::max(d, f.max_weight());
  // recomputing makes a hand-edited basis file safe to use
  auto gb = buchberger(parse_all(file, R), d, R);
  json arr = json::array();
  std::string text;
  for (auto& f : polys) {
    auto r = render(normal_form(f, gb).remainder);
    arr.push_back(r);
    text += r + "\n";
  }
  if (o.format == "json") {
    json j = schema_root();
    j["ring"] = ring_spec(*R);
    j["remainders"] = arr;
    return {finish(j), {}};
  }
  return {text, {}};
}

// ---- steenrod ----

Outcome cmd_steenrod(const Options& o, const std::string& mode, unsigned p, unsigned k, const std::string& path,
                     const std::string& ring_flag, unsigned rank) {
  auto file = read_poly_file(path);
  auto R = ring_for(ring_flag, file);
  if (R->p() != p) throw UsageError("--p does not match the ring");
  std::optional<SteenrodContext> ctx;
  if (mode == "weight") {
    ctx.emplace(SteenrodContext::weights(R));
  } else if (mode == "chern") {
    unsigned n = rank;
    for (auto& v : R->variables()) n = std::max(n, v.weight);
    ctx.emplace(SteenrodContext::chern(R, n));
  } else {
    throw UsageError("mode must be weight or chern");
  }
  json arr = json::array();
  std::string text;
  for (auto& f : parse_all(file, R)) {
    auto g = render(ctx->power(k, f));
    arr.push_back({{"input", render(f)}, {"output", g}});
    text += g + "\n";
  }
  if (o.format == "json") {
    json j = schema_root();
    j["ring"] = ring_spec(*R);
    j["mode"] = mode;
    j["p"] = p;
    j["k"] = k;
    j["results"] = arr;
    return {finish(j), {}};
  }
  return {text, {}};
}

// ---- bst / lemma22 ----

BstStrategy strategy_for(const Options& o, const std::string& flag) {
  if (!flag.empty()) return parse_strategy(flag);
  return o.deep ? BstStrategy::Both : BstStrategy::MethodII;
}

json entry_json(const BstEntry& e, unsigned p) {
  return {{"s", e.s}, {"t", e.t}, {"k", e.k}, {"b", signed_coeff(e.value, p)}, {"method", to_string(e.method)}};
}

std::string entry_text(const BstEntry& e, unsigned p) {
  return "b(" + std::to_string(e.s) + "," + std::to_string(e.t) + ") = " + std::to_string(signed_coeff(e.value, p)) +
         "  k=" + std::to_string(e.k) + "  " + to_string(e.method) + "\n";
}

Outcome cmd_bst(const Options& o, const std::string& group, unsigned p, std::optional<unsigned> s, std::optional<unsigned> t,
                const std::string& strategy_flag) {
  const GroupProfile& g = profile(group, p);
  auto strategy = strategy_for(o, strategy_flag);
  std::vector<BstEntry> entries;
  bool pass;
  if (s || t) {
    if (!s || !t) throw UsageError("--s and --t go together");
    detail::check_pair(g, *s, *t);
    BstEntry e{*s, *t, (*t - *s) / (p - 1), 0, BstMethod::InstabilityZero};
    e = compute_entry(g, e, strategy);
    auto expected = listed_nonzero(group, p);
    auto it = expected.find({*s, *t});
    pass = e.value == (it == expected.end() ? 0 : it->second);
    entries.push_back(e);
  } else {
    auto r = verify_listed_table(group, p, strategy, o.jobs);
    entries = r.table.entries;
    pass = r.pass();
  }
  Outcome out;
  if (!pass) out.failure = g.label() + " b-table";
  std::string verdict = pass ? "PASS" : "FAIL";
  if (o.format == "json") {
    json j = schema_root();
    j["group"] = group;
    j["prime"] = p;
    json arr = json::array();
    for (auto& e : entries) arr.push_back(entry_json(e, p));
    j["entries"] = arr;
    j["verdict"] = verdict;
    out.report = finish(j);
  } else {
    for (auto& e : entries) out.report += entry_text(e, p);
    out.report += "verdict " + verdict + "\n";
  }
  return out;
}

json b_map_json(const std::map<std::pair<unsigned, unsigned>, Coeff>& m, unsigned p) {
  json arr = json::array();
  for (auto& [st, v] : m) arr.push_back({{"s", st.first}, {"t", st.second}, {"b", signed_coeff(v, p)}});
  return arr;
}

Outcome cmd_lemma22(const Options& o, std::vector<const GroupProfile*> pairs, const std::string& strategy_flag) {
  auto strategy = strategy_for(o, strategy_flag);
  std::vector<ListedTableReport> reports(pairs.size());
  // parallel over pairs; entries inside a pair run serially
  parallel_for(pairs.size(), o.jobs,
               [&](std::size_t i) { reports[i] = verify_listed_table(pairs[i]->group, pairs[i]->prime, strategy, 1); });
  Outcome out;
  json arr = json::array();
  for (auto& r : reports) {
    unsigned p = r.profile.prime;
    auto got = r.table.nonzero();
    if (!r.pass() && out.failure.empty()) out.failure = r.profile.label() + " lemma22";
    std::string line = r.profile.label() + " " + (r.pass() ? "PASS" : "FAIL") + ", " + std::to_string(got.size()) + " nonzero entries";
    if (!r.missing.empty()) line += "; missing " + render_b(r.missing, p);
    if (!r.unexpected.empty()) line += "; unexpected " + render_b(r.unexpected, p);
    out.report += line + "\n";
    arr.push_back({{"group", r.profile.group},
                   {"prime", p},
                   {"verdict", r.pass() ? "PASS" : "FAIL"},
                   {"nonzero", b_map_json(got, p)},
                   {"missing", b_map_json(r.missing, p)},
                   {"unexpected", b_map_json(r.unexpected, p)}});
  }
  if (o.format == "json") {
    json j = schema_root();
    j["pairs"] = arr;
    j["verdict"] = out.failure.empty() ? "PASS" : "FAIL";
    out.report = finish(j);
  }
  return out;
}

// ---- hopf ----

std::string gen_name(unsigned degree) { return (degree % 2 ? "a" : "x") + std::to_string(degree); }

json hopf_dump(const HopfModel& m) {
  json j;
  j["basis_dim"] = m.basis().size();
  json odd = json::array();
  for (unsigned s : m.odd_weights()) odd.push_back(2 * s - 1);
  json even = json::array();
  for (std::size_t i = 0; i < m.even_count(); ++i) even.push_back({{"t", m.even_weights()[i]}, {"k_t", m.truncations()[i]}});
  j["generators"] = {{"odd", odd}, {"even", even}};

  json bock = json::object(), power = json::array(), cop = json::object(), squares = json::object();
  for (std::size_t i = 0; i < m.odd_count(); ++i) {
    unsigned deg = 2 * m.odd_weights()[i] - 1;
    if (!m.bockstein_table(i).is_zero()) bock[gen_name(deg)] = render(m, m.bockstein_table(i));
    if (m.p() == 2 && !m.square_table(i).is_zero()) squares[gen_name(deg)] = render(m, m.square_table(i));
  }
  for (auto g : m.generators()) {
    unsigned deg = m.generator_degree(g);
    Element e = m.generator(g);
    // P^k vanishes on classes of degree below 2k
    for (unsigned k = 1; 2 * k <= deg; ++k) {
      auto v = m.reduced_power(k, e);
      if (!v.is_zero()) power.push_back({{"k", k}, {"generator", gen_name(deg)}, {"value", render(m, v)}});
    }
  }
  for (auto& [deg, t] : derive_coproducts(m)) cop[gen_name(deg)] = render(m, t);
  j["tables"] = {{"bockstein", bock}, {"power", power}, {"coproduct", cop}, {"squares", squares}};
  return j;
}

Outcome cmd_hopf(const Options& o, const std::string& group, unsigned p, bool check, std::optional<unsigned> coproduct,
                 bool zeta_flag, bool dump, const std::string& strategy_flag) {
  if (check + coproduct.has_value() + zeta_flag + dump != 1)
    throw UsageError("hopf needs exactly one of --check, --coproduct, --zeta, --dump");
  const GroupProfile& g = profile(group, p);
  auto model = build_model(group, p, full_table(group, p, strategy_for(o, strategy_flag), o.jobs));
  json j = schema_root();
  j["group"] = group;
  j["prime"] = p;
  std::string text;
  Outcome out;
  if (check) {
    auto rep = check_suite(model);
    json arr = json::array();
    for (auto& c : rep.checks) {
      arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      text += std::string(c.pass ? "[PASS] " : "[FAIL] ") + c.name + (c.detail.empty() ? "" : "  " + c.detail) + "\n";
      if (!c.pass && out.failure.empty()) out.failure = g.label() + " hopf " + c.name;
    }
    j["checks"] = arr;
    j["verdict"] = rep.pass() ? "PASS" : "FAIL";
    text += std::string("verdict ") + (rep.pass() ? "PASS" : "FAIL") + "\n";
  } else if (coproduct) {
    unsigned deg = *coproduct;
    auto all = derive_coproducts(model);
    auto it = all.find(deg);
    if (it == all.end()) throw UsageError("no generator of degree " + std::to_string(deg));
    j["generator"] = gen_name(deg);
    j["coproduct"] = render(model, it->second);
    text += gen_name(deg) + ": " + render(model, it->second) + "\n";
    if (deg % 2) {
      json sol;
      try {
        auto s = solve_coproduct(model, deg);
        sol = {{"status", "unique"}, {"value", render(model, s.value)}};
      } catch (const Underdetermined& e) {
        sol = {{"status", "underdetermined"}, {"free", e.dimension}};
      } catch (const Inconsistent& e) {
        sol = {{"status", "inconsistent"}, {"detail", e.what()}};
      }
      text += "solver: " + sol["status"].get<std::string>();
      if (sol.contains("value")) text += " " + sol["value"].get<std::string>();
      if (sol.contains("free")) text += ", " + std::to_string(sol["free"].get<std::size_t>()) + " free";
      text += "\n";
      j["solver"] = sol;
    }
  } else if (zeta_flag) {
    json z = json::object();
    for (auto& [deg, e] : zeta_basis(model)) {
      z[std::to_string(deg)] = render(model, e);
      text += "zeta" + std::to_string(deg) + " = " + render(model, e) + "\n";
    }
    j["zeta"] = z;
  } else {
    json d = hopf_dump(model);
    for (auto& [k, v] : d.items()) j[k] = v;
    text = j.dump(2) + "\n";
  }
  out.report = o.format == "json" ? finish(j) : text;
  return out;
}

// ---- all ----

json section_json(const Section& s) {
  json lines = json::array();
  for (auto& l : s.lines) lines.push_back({{"name", l.name}, {"pass", l.pass}, {"detail", l.detail}});
  return {{"title", s.title}, {"pass", s.pass()}, {"lines", lines}};
}

std::string section_text(const Section& s) {
  std::string out;
  for (auto& l : s.lines)
    out += std::string("  [") + (l.pass ? "PASS" : "FAIL") + "] " + s.title + ": " + l.name + (l.detail.empty() ? "" : "  " + l.detail) + "\n";
  return out;
}

json pair_json(const PairReport& r) {
  json secs = json::array();
  for (auto& s : r.sections) secs.push_back(section_json(s));
  return {{"group", r.profile.group}, {"prime", r.profile.prime}, {"verdict", r.pass() ? "PASS" : "FAIL"}, {"sections", secs}};
}

Outcome cmd_all(const Options& o, std::vector<const GroupProfile*> pairs, const std::string& strategy_flag) {
  PairConfig cfg;
  cfg.strategy = strategy_for(o, strategy_flag);
  cfg.deep = o.deep;
  cfg.jobs = 1;
  std::vector<PairReport> reports(pairs.size());
  parallel_for(pairs.size(), o.jobs, [&](std::size_t i) { reports[i] = run_pair(*pairs[i], cfg); });
  Outcome out;
  json arr = json::array();
  std::string text;
  for (auto& r : reports) {
    arr.push_back(pair_json(r));
    text += r.profile.label() + " " + (r.pass() ? "PASS" : "FAIL") + "\n";
    for (auto& s : r.sections) {
      text += section_text(s);
      if (!s.pass() && out.failure.empty()) out.failure = r.profile.label() + " " + s.title;
    }
  }
  if (o.format == "json") {
    json j = schema_root();
    j["pairs"] = arr;
    j["verdict"] = out.failure.empty() ? "PASS" : "FAIL";
    out.report = finish(j);
  } else {
    out.report = text;
  }
  return out;
}

std::vector<const GroupProfile*> parse_pairs(const std::string& list) {
  std::vector<const GroupProfile*> out;
  if (list.empty()) {
    for (auto& g : supported_pairs()) out.push_back(&g);
    return out;
  }
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("pairs are written G:p, got " + item);
    out.push_back(&profile(item.substr(0, colon), static_cast<unsigned>(std::stoul(item.substr(colon + 1)))));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomology of exceptional Lie groups: b-tables, Steenrod operations, Hopf models"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--output", o.output, "write the report here instead of stdout");
  app.add_flag("--deep", o.deep, "cross-check every entry with both methods and expand all thetas");

  std::function<Outcome()> run;

  unsigned wp = 0, wk = 0, wm = 0;
  bool check51 = false;
  auto* wu = app.add_subcommand("wu", "P^k c_m in Chern classes");
  wu->add_option("--p", wp)->required();
  wu->add_option("--k", wk)->required();
  wu->add_option("--m", wm)->required();
  wu->add_flag("--check-prop51", check51);
  wu->callback([&] { run = [&] { return cmd_wu(o, wp, wk, wm, check51); }; });

  std::string group, dump, ring, gens, against, mode, input, strategy, pairs_list;
  unsigned prime = 0, truncate = 0, sp = 0, sk = 0, rank = 0;
  auto* data = app.add_subcommand("data", "group data and theta tables");
  data->add_option("--group", group)->required();
  data->add_option("--prime", prime)->required();
  data->add_option("--dump", dump)->required()->check(CLI::IsMember({"profile", "theta", "theta-restricted", "chern"}));
  data->callback([&] { run = [&] { return cmd_data(o, group, prime, dump); }; });

  auto* gb = app.add_subcommand("gb", "truncated Groebner basis");
  gb->add_option("--ring", ring, "e.g. F3[x:1,y:1,c2:2]; default from a '# ring' header");
  gb->add_option("--gens", gens)->required();
  gb->add_option("--truncate", truncate)->required();
  gb->callback([&] { run = [&] { return cmd_gb(o, ring, gens, truncate); }; });

  auto* nf = app.add_subcommand("nf", "normal forms of stdin polynomials");
  nf->add_option("--against", against)->required();
  nf->add_option("--ring", ring);
  nf->callback([&] { run = [&] { return cmd_nf(o, ring, against, std::cin); }; });

  auto* st = app.add_subcommand("steenrod", "reduced powers of polynomials");
  st->add_option("--mode", mode)->required()->check(CLI::IsMember({"weight", "chern"}));
  st->add_option("--p", sp)->required();
  st->add_option("--k", sk)->required();
  st->add_option("--in", input)->required();
  st->add_option("--ring", ring);
  st->add_option("--rank", rank, "bundle rank in chern mode; default the top Chern class present");
  st->callback([&] { run = [&] { return cmd_steenrod(o, mode, sp, sk, input, ring, rank); }; });

  std::optional<unsigned> bs, bt;
  auto* bst = app.add_subcommand("bst", "structure constants b(s,t)");
  bst->add_option("--group", group)->required();
  bst->add_option("--prime", prime)->required();
  bst->add_option("--s", bs);
  bst->add_option("--t", bt);
  bst->add_option("--strategy", strategy)->check(CLI::IsMember({"method1", "method2", "both"}));
  bst->callback([&] { run = [&] { return cmd_bst(o, group, prime, bs, bt, strategy); }; });

  bool all_pairs = false;
  auto* l22 = app.add_subcommand("lemma22", "b-tables against the listed nonzero entries");
  l22->add_option("--group", group);
  l22->add_option("--prime", prime);
  l22->add_flag("--all", all_pairs);
  l22->add_option("--strategy", strategy)->check(CLI::IsMember({"method1", "method2", "both"}));
  l22->callback([&] {
    run = [&] {
      std::vector<const GroupProfile*> ps;
      if (group.empty() != (prime == 0)) throw UsageError("--group and --prime go together");
      if (!group.empty() && all_pairs) throw UsageError("--all excludes --group");
      if (group.empty()) ps = parse_pairs("");
      else ps.push_back(&profile(group, prime));
      return cmd_lemma22(o, ps, strategy);
    };
  });

  bool hcheck = false, hzeta = false, hdump = false;
  std::optional<unsigned> hcop;
  auto* hopf = app.add_subcommand("hopf", "Hopf algebra model of the cohomology");
  hopf->add_option("--group", group)->required();
  hopf->add_option("--prime", prime)->required();
  hopf->add_flag("--check", hcheck);
  hopf->add_option("--coproduct", hcop, "degree of a generator");
  hopf->add_flag("--zeta", hzeta);
  hopf->add_flag("--dump", hdump);
  hopf->add_option("--strategy", strategy)->check(CLI::IsMember({"method1", "method2", "both"}));
  hopf->callback([&] { run = [&] { return cmd_hopf(o, group, prime, hcheck, hcop, hzeta, hdump, strategy); }; });

  auto* all = app.add_subcommand("all", "reproduction report, one section per pair");
  all->add_option("--pairs", pairs_list, "comma separated G:p, default all ten");
  all->add_option("--strategy", strategy)->check(CLI::IsMember({"method1", "method2", "both"}));
  all->callback([&] { run = [&] { return cmd_all(o, parse_pairs(pairs_list), strategy); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  Outcome out;
  try {
    out = run();
  } catch (const UsageError& e) {
    std::cerr << "exhopf: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "exhopf: error: " << e.what() << "\n";
    return 2;
  }

  if (o.output.empty()) {
    std::cout << out.report;
  } else {
    std::ofstream f(o.output, std::ios::binary);
    if (!f) {
      std::cerr << "exhopf: cannot write " << o.output << "\n";
      return 2;
    }
    f << out.report;
  }
  if (!out.failure.empty()) {
    std::cerr << "FAIL: " << out.failure << "\n";
    return 1;
  }
  return 0;
}
