#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "exhopf/bst.hpp"
#include "exhopf/field.hpp"
#include "exhopf/hopf_tables.hpp"
#include "exhopf/liedata.hpp"

namespace exhopf {

class HopfError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnreachableGenerator : public HopfError {
 public:
  using HopfError::HopfError;
};

class Inconsistent : public HopfError {
 public:
  using HopfError::HopfError;
};

class Underdetermined : public HopfError {
 public:
  Underdetermined(const std::string& what, std::size_t dim) : HopfError(what), dimension(dim) {}
  std::size_t dimension;
};

inline constexpr std::size_t kMaxEven = 4;

/// x-exponents and a bit set of odd generators (bit i is the i-th odd generator by degree).
struct Basis {
  std::array<std::uint8_t, kMaxEven> x{};
  std::uint16_t odd = 0;
  auto operator<=>(const Basis&) const = default;
};

template <class Key>
struct Linear {
  std::map<Key, Coeff> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const Linear&) const = default;

  void add(const Key& k, Coeff c, const PrimeField& F) {
    if (!c) return;
    auto [it, fresh] = terms.try_emplace(k, 0);
    it->second = F.add(it->second, c);
    if (!it->second) terms.erase(it);
  }
  void add(const Linear& o, Coeff c, const PrimeField& F) {
    for (auto& [k, v] : o.terms) add(k, F.mul(v, c), F);
  }
};

using Element = Linear<Basis>;
using TensorKey = std::pair<Basis, Basis>;
using Tensor = Linear<TensorKey>;
using Triple = Linear<std::array<Basis, 3>>;

/// Generator handle: even generators x_{2t} or odd generators alpha_{2s-1}, by index.
struct Generator {
  bool odd = false;
  std::size_t index = 0;
};

namespace detail {

struct LinearSolution {
  bool consistent = false;
  std::vector<Coeff> particular;
  std::vector<std::vector<Coeff>> kernel;
};

/// Solves sum_j v_j columns[j] = rhs over F_p.
template <class Key>
LinearSolution solve_columns(const std::vector<Linear<Key>>& columns, const Linear<Key>& rhs, const PrimeField& F) {
  std::map<Key, std::size_t> row_of;
  auto row = [&](const Key& k) { return row_of.try_emplace(k, row_of.size()).first->second; };
  for (auto& c : columns)
    for (auto& [k, v] : c.terms) row(k);
  for (auto& [k, v] : rhs.terms) row(k);
  std::size_t n = columns.size(), m = row_of.size();
  std::vector<std::vector<Coeff>> A(m, std::vector<Coeff>(n + 1, 0));
  for (std::size_t j = 0; j < n; ++j)
    for (auto& [k, v] : columns[j].terms) A[row_of[k]][j] = v;
  for (auto& [k, v] : rhs.terms) A[row_of[k]][n] = v;

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t piv = r;
    while (piv < m && !A[piv][c]) ++piv;
    if (piv == m) continue;
    std::swap(A[piv], A[r]);
    Coeff inv = F.inv(A[r][c]);
    for (auto& v : A[r]) v = F.mul(v, inv);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || !A[i][c]) continue;
      Coeff f = A[i][c];
      for (std::size_t j = 0; j <= n; ++j) A[i][j] = F.sub(A[i][j], F.mul(f, A[r][j]));
    }
    pivot_col.push_back(c);
    ++r;
  }
  LinearSolution out;
  for (std::size_t i = r; i < m; ++i)
    if (A[i][n]) return out;
  out.consistent = true;
  out.particular.assign(n, 0);
  for (std::size_t i = 0; i < r; ++i) out.particular[pivot_col[i]] = A[i][n];
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Coeff> v(n, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < r; ++i) v[pivot_col[i]] = F.neg(A[i][f]);
    out.kernel.push_back(std::move(v));
  }
  return out;
}

inline bool in_groups(std::string_view list, std::string_view g) {
  std::size_t pos = 0;
  while (pos < list.size()) {
    std::size_t end = list.find(' ', pos);
    if (end == std::string_view::npos) end = list.size();
    if (list.substr(pos, end - pos) == g) return true;
    pos = end + 1;
  }
  return false;
}

}  // namespace detail

class HopfModel {
 public:
  HopfModel(const GroupProfile& g, std::map<std::pair<unsigned, unsigned>, Coeff> b)
      : profile_(g), F_(g.prime), b_(std::move(b)) {
    for (auto& [t, k] : g.k) {
      even_t_.push_back(t);
      even_k_.push_back(k);
    }
    if (even_t_.size() > kMaxEven) throw HopfError("too many even generators");
    odd_s_ = g.r;
    bockstein_.assign(odd_s_.size(), Element{});
    square_.assign(odd_s_.size(), Element{});
    odd_coproduct_.assign(odd_s_.size(), std::nullopt);
    mu_even_.assign(even_t_.size(), Tensor{});
  }

  const GroupProfile& profile() const { return profile_; }
  unsigned p() const { return profile_.prime; }
  const PrimeField& field() const { return F_; }
  const std::vector<unsigned>& even_weights() const { return even_t_; }
  const std::vector<unsigned>& truncations() const { return even_k_; }
  const std::vector<unsigned>& odd_weights() const { return odd_s_; }
  std::size_t even_count() const { return even_t_.size(); }
  std::size_t odd_count() const { return odd_s_.size(); }

  // ---- generators and basis ----

  std::optional<std::size_t> even_index(unsigned degree) const {
    for (std::size_t i = 0; i < even_t_.size(); ++i)
      if (2 * even_t_[i] == degree) return i;
    return std::nullopt;
  }
  std::optional<std::size_t> odd_index(unsigned degree) const {
    for (std::size_t i = 0; i < odd_s_.size(); ++i)
      if (2 * odd_s_[i] - 1 == degree) return i;
    return std::nullopt;
  }

  Element unit() const { return single(Basis{}); }
  Element x(std::size_t i) const {
    Basis b;
    b.x[i] = 1;
    return even_k_[i] > 1 ? single(b) : Element{};
  }
  Element alpha(std::size_t i) const {
    Basis b;
    b.odd = static_cast<std::uint16_t>(1u << i);
    return single(b);
  }
  Element generator(Generator g) const { return g.odd ? alpha(g.index) : x(g.index); }
  std::vector<Generator> generators() const {
    std::vector<Generator> out;
    for (std::size_t i = 0; i < even_t_.size(); ++i) out.push_back({false, i});
    for (std::size_t i = 0; i < odd_s_.size(); ++i) out.push_back({true, i});
    return out;
  }
  unsigned generator_degree(Generator g) const { return g.odd ? 2 * odd_s_[g.index] - 1 : 2 * even_t_[g.index]; }

  unsigned degree(const Basis& b) const {
    unsigned d = 0;
    for (std::size_t i = 0; i < even_t_.size(); ++i) d += 2 * even_t_[i] * b.x[i];
    for (std::size_t i = 0; i < odd_s_.size(); ++i)
      if (b.odd >> i & 1) d += 2 * odd_s_[i] - 1;
    return d;
  }

  std::vector<Basis> basis() const {
    std::vector<Basis> out;
    for (auto& m : even_monomials()) {
      for (std::uint32_t S = 0; S < (1u << odd_s_.size()); ++S) {
        Basis b = m;
        b.odd = static_cast<std::uint16_t>(S);
        out.push_back(b);
      }
    }
    return out;
  }

  /// Basis of the even subring F_p[x]/<x^k>.
  std::vector<Basis> even_monomials() const {
    std::vector<Basis> out{Basis{}};
    for (std::size_t i = 0; i < even_t_.size(); ++i) {
      std::vector<Basis> next;
      for (auto& b : out)
        for (unsigned e = 0; e < even_k_[i]; ++e) {
          Basis c = b;
          c.x[i] = static_cast<std::uint8_t>(e);
          next.push_back(c);
        }
      out = std::move(next);
    }
    return out;
  }

  // ---- algebra ----

  Element multiply(const Basis& a, const Basis& b) const {
    Basis r;
    for (std::size_t i = 0; i < even_t_.size(); ++i) {
      unsigned e = a.x[i] + b.x[i];
      if (e >= even_k_[i]) return {};
      r.x[i] = static_cast<std::uint8_t>(e);
    }
    if (p() != 2) {
      if (a.odd & b.odd) return {};
      r.odd = a.odd | b.odd;
      // sign of moving the odd factors of b past those of a
      unsigned inversions = 0;
      for (std::size_t i = 0; i < odd_s_.size(); ++i)
        if (b.odd >> i & 1) inversions += std::popcount(static_cast<unsigned>(a.odd >> (i + 1)));
      Element out;
      out.add(r, inversions % 2 ? F_.neg(1) : 1, F_);
      return out;
    }
    std::uint16_t common = a.odd & b.odd;
    r.odd = a.odd ^ b.odd;
    Element out = single(r);
    for (std::size_t i = 0; i < odd_s_.size() && !out.is_zero(); ++i)
      if (common >> i & 1) out = multiply(out, square_[i]);
    return out;
  }

  Element multiply(const Element& a, const Element& b) const {
    Element out;
    for (auto& [ba, ca] : a.terms)
      for (auto& [bb, cb] : b.terms) out.add(multiply(ba, bb), F_.mul(ca, cb), F_);
    return out;
  }

  Element power(const Element& a, unsigned e) const {
    Element out = unit();
    for (unsigned i = 0; i < e; ++i) out = multiply(out, a);
    return out;
  }

  Element bockstein(const Element& a) const {
    Element out;
    for (auto& [b, c] : a.terms) {
      unsigned before = 0;
      for (std::size_t i = 0; i < odd_s_.size(); ++i) {
        if (!(b.odd >> i & 1)) continue;
        Basis rest = b;
        rest.odd = static_cast<std::uint16_t>(b.odd & ~(1u << i));
        Coeff sign = before % 2 ? F_.neg(c) : c;
        out.add(multiply(bockstein_[i], single(rest)), sign, F_);
        ++before;
      }
    }
    return out;
  }

  /// P^k (Sq^{2k} at p = 2) extended by the Cartan formula.
  Element reduced_power(unsigned k, const Element& a) const {
    if (k == 0) return a;
    unsigned units = p() == 2 ? 2 * k : k;
    Element out;
    for (auto& [b, c] : a.terms) {
      std::vector<Generator> factors;
      for (std::size_t i = 0; i < even_t_.size(); ++i)
        for (unsigned e = 0; e < b.x[i]; ++e) factors.push_back({false, i});
      for (std::size_t i = 0; i < odd_s_.size(); ++i)
        if (b.odd >> i & 1) factors.push_back({true, i});
      std::vector<Element> layer(units + 1);
      layer[0] = unit();
      for (auto g : factors) {
        std::vector<Element> ops(units + 1);
        for (unsigned j = 0; j <= units; ++j) ops[j] = generator_operation(j, g);
        std::vector<Element> next(units + 1);
        for (unsigned used = 0; used <= units; ++used) {
          if (layer[used].is_zero()) continue;
          for (unsigned j = 0; used + j <= units; ++j)
            if (!ops[j].is_zero()) next[used + j].add(multiply(layer[used], ops[j]), 1, F_);
        }
        layer = std::move(next);
      }
      out.add(layer[units], c, F_);
    }
    return out;
  }

  /// Sq^j at p = 2.
  Element square_operation(unsigned j, const Element& a) const {
    if (p() != 2) throw HopfError("Sq^j needs p = 2");
    if (j % 2 == 0) return reduced_power(j / 2, a);
    return bockstein(reduced_power((j - 1) / 2, a));
  }

  Coeff power_coefficient(unsigned s, unsigned t) const {
    auto it = b_.find({s, t});
    return it == b_.end() ? 0 : it->second;
  }

  // ---- tensors ----

  Tensor tensor(const Element& a, const Element& b) const {
    Tensor out;
    for (auto& [ba, ca] : a.terms)
      for (auto& [bb, cb] : b.terms) out.add({ba, bb}, F_.mul(ca, cb), F_);
    return out;
  }

  Tensor multiply(const Tensor& a, const Tensor& b) const {
    Tensor out;
    for (auto& [ka, ca] : a.terms)
      for (auto& [kb, cb] : b.terms) {
        bool odd = degree(ka.second) % 2 && degree(kb.first) % 2;
        Coeff c = F_.mul(ca, cb);
        out.add(tensor(multiply(ka.first, kb.first), multiply(ka.second, kb.second)), odd ? F_.neg(c) : c, F_);
      }
    return out;
  }

  Tensor bockstein(const Tensor& a) const {
    Tensor out;
    for (auto& [k, c] : a.terms) {
      out.add(tensor(bockstein(single(k.first)), single(k.second)), c, F_);
      Coeff sign = degree(k.first) % 2 ? F_.neg(c) : c;
      out.add(tensor(single(k.first), bockstein(single(k.second))), sign, F_);
    }
    return out;
  }

  Tensor reduced_power(unsigned k, const Tensor& a) const {
    if (k == 0) return a;
    Tensor out;
    unsigned units = p() == 2 ? 2 * k : k;
    auto op = [&](unsigned j, const Basis& b) {
      return p() == 2 ? square_operation(j, single(b)) : reduced_power(j, single(b));
    };
    for (auto& [key, c] : a.terms) {
      for (unsigned j = 0; j <= units; ++j) {
        Element l = op(j, key.first);
        if (l.is_zero()) continue;
        Element r = op(units - j, key.second);
        if (!r.is_zero()) out.add(tensor(l, r), c, F_);
      }
    }
    return out;
  }

  /// mu^* as an algebra map.
  Tensor coproduct(const Element& a) const {
    Tensor out;
    for (auto& [b, c] : a.terms) {
      Tensor prod = tensor(unit(), unit());
      for (std::size_t i = 0; i < even_t_.size(); ++i)
        for (unsigned e = 0; e < b.x[i]; ++e) prod = multiply(prod, mu_even_[i]);
      for (std::size_t i = 0; i < odd_s_.size(); ++i)
        if (b.odd >> i & 1) prod = multiply(prod, mu_odd(i));
      out.add(prod, c, F_);
    }
    return out;
  }

  Tensor reduced_coproduct(const Element& a) const {
    Tensor out = coproduct(a);
    out.add(tensor(a, unit()), F_.neg(1), F_);
    out.add(tensor(unit(), a), F_.neg(1), F_);
    // the unit component is not part of the reduced coproduct
    for (auto& [b, c] : a.terms)
      if (b == Basis{}) out.add({Basis{}, Basis{}}, c, F_);
    return out;
  }

  Triple left_coproduct(const Tensor& t) const {
    Triple out;
    for (auto& [k, c] : t.terms)
      for (auto& [k2, c2] : coproduct(single(k.first)).terms) out.add({k2.first, k2.second, k.second}, F_.mul(c, c2), F_);
    return out;
  }
  Triple right_coproduct(const Tensor& t) const {
    Triple out;
    for (auto& [k, c] : t.terms)
      for (auto& [k2, c2] : coproduct(single(k.second)).terms) out.add({k.first, k2.first, k2.second}, F_.mul(c, c2), F_);
    return out;
  }

  // ---- tables ----

  const Element& bockstein_table(std::size_t i) const { return bockstein_[i]; }
  const Element& square_table(std::size_t i) const { return square_[i]; }
  const std::map<std::size_t, Tensor>& listed_coproducts() const { return listed_; }
  const std::optional<Tensor>& odd_coproduct(std::size_t i) const { return odd_coproduct_[i]; }
  const std::map<std::pair<unsigned, std::size_t>, Element>& even_powers() const { return even_power_; }
  const std::vector<std::string>& notes() const { return notes_; }

  void set_bockstein(std::size_t i, Element e) { bockstein_[i] = std::move(e); }
  void set_square(std::size_t i, Element e) { square_[i] = std::move(e); }
  void set_listed_coproduct(std::size_t i, Tensor t) { listed_[i] = std::move(t); }
  void set_even_power(unsigned k, std::size_t i, Element e) {
    if (e.is_zero()) even_power_.erase({k, i});
    else even_power_[{k, i}] = std::move(e);
  }
  void set_odd_coproducts(std::vector<std::optional<Tensor>> v) { odd_coproduct_ = std::move(v); }
  void add_note(std::string s) { notes_.push_back(std::move(s)); }

  /// Recomputes mu^* on the even generators from their defining relations.
  void refresh_even_coproducts() {
    for (std::size_t i = 0; i < even_t_.size(); ++i) {
      auto [j, c, rest] = even_source(i);
      Tensor mu;
      if (p() == 2) mu = multiply(mu_odd(j), mu_odd(j));
      else mu = bockstein(mu_odd(j));
      mu.add(coproduct(rest), F_.neg(1), F_);
      Coeff inv = F_.inv(c);
      Tensor scaled;
      scaled.add(mu, inv, F_);
      mu_even_[i] = std::move(scaled);
    }
  }

  /// The relation defining x_i: alpha_j^2 (p = 2) or delta(alpha_j) equals c x_i + rest.
  std::tuple<std::size_t, Coeff, Element> even_source(std::size_t i) const {
    Basis xi;
    xi.x[i] = 1;
    const auto& table = p() == 2 ? square_ : bockstein_;
    for (std::size_t j = 0; j < odd_s_.size(); ++j) {
      auto it = table[j].terms.find(xi);
      if (it == table[j].terms.end()) continue;
      Element rest = table[j];
      Coeff c = it->second;
      rest.terms.erase(xi);
      bool clean = true;
      for (auto& [b, v] : rest.terms)
        if (b.x[i] || b.odd) clean = false;
      if (clean) return {j, c, rest};
    }
    throw HopfError("no defining relation for x" + std::to_string(2 * even_t_[i]));
  }

  Element single(const Basis& b) const {
    Element e;
    e.add(b, 1, F_);
    return e;
  }

 private:
  Element generator_operation(unsigned j, Generator g) const {
    if (j == 0) return generator(g);
    if (p() == 2 && j % 2) return bockstein(generator_operation(j - 1, g));
    unsigned k = p() == 2 ? j / 2 : j;
    if (g.odd) {
      unsigned s = odd_s_[g.index], t = s + k * (p() - 1);
      Coeff c = power_coefficient(s, t);
      auto idx = odd_index(2 * t - 1);
      if (!c || !idx) return {};
      Element out;
      out.add(alpha(*idx).terms.begin()->first, c, F_);
      return out;
    }
    unsigned t = even_t_[g.index];
    if (k > t) return {};
    if (k == t) return power(x(g.index), p());
    auto it = even_power_.find({k, g.index});
    return it == even_power_.end() ? Element{} : it->second;
  }

  Tensor mu_odd(std::size_t i) const {
    if (!odd_coproduct_[i]) throw UnreachableGenerator("no coproduct for a" + std::to_string(2 * odd_s_[i] - 1));
    Tensor out = *odd_coproduct_[i];
    out.add(tensor(alpha(i), unit()), 1, F_);
    out.add(tensor(unit(), alpha(i)), 1, F_);
    return out;
  }

  GroupProfile profile_;
  PrimeField F_;
  std::map<std::pair<unsigned, unsigned>, Coeff> b_;
  std::vector<unsigned> even_t_, even_k_, odd_s_;
  std::vector<Element> bockstein_, square_;
  std::map<std::size_t, Tensor> listed_;
  std::map<std::pair<unsigned, std::size_t>, Element> even_power_;
  std::vector<std::optional<Tensor>> odd_coproduct_;
  std::vector<Tensor> mu_even_;
  std::vector<std::string> notes_;
};

// ---- text ----

namespace detail {

inline Element parse_product(const HopfModel& m, std::string_view s) {
  Element out = m.unit();
  if (s == "1") return out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = s.find('*', pos);
    if (end == std::string_view::npos) end = s.size();
    std::string_view f = s.substr(pos, end - pos);
    if (f.size() < 2 || (f[0] != 'x' && f[0] != 'a')) throw HopfError("bad factor '" + std::string(f) + "'");
    std::size_t caret = f.find('^');
    unsigned deg = std::stoul(std::string(f.substr(1, caret == std::string_view::npos ? f.npos : caret - 1)));
    unsigned e = caret == std::string_view::npos ? 1 : std::stoul(std::string(f.substr(caret + 1)));
    Element g;
    if (f[0] == 'x') {
      auto i = m.even_index(deg);
      if (!i) throw HopfError("no generator x" + std::to_string(deg));
      g = m.x(*i);
    } else {
      auto i = m.odd_index(deg);
      if (!i) throw HopfError("no generator a" + std::to_string(deg));
      g = m.alpha(*i);
    }
    out = m.multiply(out, m.power(g, e));
    pos = end + 1;
  }
  return out;
}

// Splits "t1+t2-t3" into signed terms with optional leading integer coefficients.
inline std::vector<std::pair<long long, std::string>> split_terms(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s.push_back(ch);
  std::vector<std::pair<long long, std::string>> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    long long sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
    }
    std::size_t end = s.find_first_of("+-", pos);
    if (end == std::string::npos) end = s.size();
    std::string term = s.substr(pos, end - pos);
    if (term.empty()) throw HopfError("empty term in '" + std::string(text) + "'");
    long long coeff = 1;
    std::size_t digits = 0;
    while (digits < term.size() && std::isdigit(static_cast<unsigned char>(term[digits]))) ++digits;
    if (digits && (digits == term.size() || term[digits] == '*')) {
      coeff = std::stoll(term.substr(0, digits));
      term = digits == term.size() ? "1" : term.substr(digits + 1);
    }
    out.emplace_back(sign * coeff, term);
    pos = end;
  }
  return out;
}

}  // namespace detail

inline Element parse_element(const HopfModel& m, std::string_view text) {
  Element out;
  if (text == "0") return out;
  for (auto& [c, term] : detail::split_terms(text)) out.add(detail::parse_product(m, term), m.field().reduce(c), m.field());
  return out;
}

inline Tensor parse_tensor(const HopfModel& m, std::string_view text) {
  Tensor out;
  if (text == "0") return out;
  for (auto& [c, term] : detail::split_terms(text)) {
    std::size_t bar = term.find('|');
    if (bar == std::string::npos) throw HopfError("tensor term without '|': " + term);
    Tensor t = m.tensor(detail::parse_product(m, term.substr(0, bar)), detail::parse_product(m, term.substr(bar + 1)));
    out.add(t, m.field().reduce(c), m.field());
  }
  return out;
}

inline std::string render_basis(const HopfModel& m, const Basis& b) {
  std::string out;
  auto put = [&](const std::string& f) { out += (out.empty() ? "" : "*") + f; };
  for (std::size_t i = 0; i < m.even_count(); ++i)
    if (b.x[i]) put("x" + std::to_string(2 * m.even_weights()[i]) + (b.x[i] > 1 ? "^" + std::to_string(b.x[i]) : ""));
  for (std::size_t i = 0; i < m.odd_count(); ++i)
    if (b.odd >> i & 1) put("a" + std::to_string(2 * m.odd_weights()[i] - 1));
  return out.empty() ? "1" : out;
}

namespace detail {

inline std::string render_terms(const HopfModel& m, const std::vector<std::pair<std::string, Coeff>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  unsigned p = m.p();
  for (auto& [body, c] : terms) {
    bool minus = p > 2 && c == p - 1;
    if (!out.empty() || minus) out += minus ? "-" : "+";
    if (!minus && c != 1) out += std::to_string(c) + "*";
    out += body;
  }
  return out;
}

}  // namespace detail

inline std::string render(const HopfModel& m, const Element& e) {
  std::vector<std::pair<unsigned, Basis>> order;
  for (auto& [b, c] : e.terms) order.push_back({m.degree(b), b});
  std::sort(order.begin(), order.end());
  std::vector<std::pair<std::string, Coeff>> terms;
  for (auto& [d, b] : order) terms.push_back({render_basis(m, b), e.terms.at(b)});
  return detail::render_terms(m, terms);
}

inline std::string render(const HopfModel& m, const Tensor& t) {
  std::vector<std::tuple<unsigned, TensorKey>> order;
  for (auto& [k, c] : t.terms) order.push_back({m.degree(k.first), k});
  std::sort(order.begin(), order.end());
  std::vector<std::pair<std::string, Coeff>> terms;
  for (auto& [d, k] : order) terms.push_back({render_basis(m, k.first) + "|" + render_basis(m, k.second), t.terms.at(k)});
  return detail::render_terms(m, terms);
}

// ---- coproducts ----

/// phi on every odd generator reachable from the listed ones through P^k alpha_s = b alpha_t.
/// `exclude` drops one listed generator; unreachable generators stay empty unless `strict`.
inline std::vector<std::optional<Tensor>> derive_odd_coproducts(const HopfModel& m, std::optional<std::size_t> exclude = {},
                                                                bool strict = true) {
  const auto& F = m.field();
  std::vector<std::optional<Tensor>> phi(m.odd_count());
  for (auto& [i, t] : m.listed_coproducts())
    if (i != exclude) phi[i] = t;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t t = 0; t < m.odd_count(); ++t) {
      if (phi[t] || t == exclude) continue;
      unsigned tw = m.odd_weights()[t];
      for (std::size_t s = 0; s < m.odd_count() && !phi[t]; ++s) {
        unsigned sw = m.odd_weights()[s];
        if (!phi[s] || sw >= tw || (tw - sw) % (m.p() - 1)) continue;
        Coeff b = m.power_coefficient(sw, tw);
        if (!b) continue;
        Tensor v;
        v.add(m.reduced_power((tw - sw) / (m.p() - 1), *phi[s]), F.inv(b), F);
        phi[t] = std::move(v);
        changed = true;
      }
    }
  }
  if (strict)
    for (std::size_t t = 0; t < m.odd_count(); ++t)
      if (!phi[t]) throw UnreachableGenerator("a" + std::to_string(2 * m.odd_weights()[t] - 1) + " is not reachable from the listed coproducts");
  return phi;
}

struct CoproductSolution {
  std::size_t generator = 0;
  std::vector<TensorKey> ansatz;
  std::vector<Coeff> coefficients;
  Tensor value;
};

/// Solves for phi(alpha) from the ansatz sum of g (x) alpha_j with g in the even subring,
/// using delta- and P-compatibility against the other generators.
inline CoproductSolution solve_coproduct(const HopfModel& model, unsigned degree) {
  auto idx = model.odd_index(degree);
  if (!idx) throw HopfError("no odd generator of degree " + std::to_string(degree));
  std::size_t i = *idx;
  const auto& F = model.field();
  unsigned p = model.p();
  auto known = derive_odd_coproducts(model, i, false);
  HopfModel m = model;
  {
    auto full = known;
    full[i] = model.odd_coproduct(i) ? model.odd_coproduct(i) : std::optional<Tensor>(Tensor{});
    m.set_odd_coproducts(full);
  }

  CoproductSolution sol;
  sol.generator = i;
  std::vector<std::pair<unsigned, TensorKey>> ordered;
  for (std::size_t j = 0; j < model.odd_count(); ++j) {
    unsigned dj = 2 * model.odd_weights()[j] - 1;
    if (dj >= degree) continue;
    for (auto& g : model.even_monomials()) {
      unsigned dg = model.degree(g);
      if (dg == 0 || dg + dj != degree) continue;
      ordered.push_back({dg, {g, model.alpha(j).terms.begin()->first}});
    }
  }
  std::sort(ordered.begin(), ordered.end());
  for (auto& [d, k] : ordered) sol.ansatz.push_back(k);

  // each constraint is a linear map on tensors; tag its output keys with the constraint number
  using Key = std::pair<std::size_t, TensorKey>;
  std::vector<Linear<Key>> columns(sol.ansatz.size());
  Linear<Key> rhs;
  std::size_t tag = 0;
  auto add_constraint = [&](auto&& op, const Tensor& target) {
    for (std::size_t c = 0; c < sol.ansatz.size(); ++c) {
      Tensor unit_term;
      unit_term.add(sol.ansatz[c], 1, F);
      for (auto& [k, v] : op(unit_term).terms) columns[c].add({tag, k}, v, F);
    }
    for (auto& [k, v] : target.terms) rhs.add({tag, k}, v, F);
    ++tag;
  };

  Tensor dphi = m.reduced_coproduct(m.bockstein(m.alpha(i)));
  add_constraint([&](const Tensor& t) { return m.bockstein(t); }, dphi);

  unsigned sw = model.odd_weights()[i];
  for (std::size_t t = 0; t < model.odd_count(); ++t) {
    unsigned tw = model.odd_weights()[t];
    if (tw > sw && (tw - sw) % (p - 1) == 0 && known[t]) {
      Coeff b = model.power_coefficient(sw, tw);
      if (!b) continue;
      unsigned k = (tw - sw) / (p - 1);
      Tensor target;
      target.add(*known[t], b, F);
      add_constraint([&](const Tensor& x) { return m.reduced_power(k, x); }, target);
    }
    if (tw < sw && (sw - tw) % (p - 1) == 0 && known[t]) {
      Coeff b = model.power_coefficient(tw, sw);
      if (!b) continue;
      unsigned k = (sw - tw) / (p - 1);
      add_constraint([&](const Tensor& x) {
        Tensor out;
        out.add(x, b, F);
        return out;
      }, m.reduced_power(k, *known[t]));
    }
  }

  auto solved = detail::solve_columns(columns, rhs, F);
  std::string name = "a" + std::to_string(degree);
  if (!solved.consistent) throw Inconsistent("no coproduct for " + name + " satisfies the constraints");
  if (!solved.kernel.empty())
    throw Underdetermined(name + " has " + std::to_string(solved.kernel.size()) + " free coefficients", solved.kernel.size());
  sol.coefficients = solved.particular;
  for (std::size_t c = 0; c < sol.ansatz.size(); ++c) sol.value.add(sol.ansatz[c], sol.coefficients[c], F);
  return sol;
}

// ---- checks ----

struct HopfCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct HopfReport {
  std::string label;
  std::vector<HopfCheck> checks;
  bool pass() const {
    for (auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const HopfCheck* find(std::string_view name) const {
    for (auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

inline Element zeta(const HopfModel& m, std::size_t i) {
  unsigned deg = 2 * m.odd_weights()[i] - 1;
  for (auto& e : tables::kHopf)
    if (e.kind == tables::Zeta && e.prime == m.p() && e.degree == deg && detail::in_groups(e.groups, m.profile().group))
      return parse_element(m, e.text);
  return m.alpha(i);
}

/// zeta_{2s-1} for every odd generator, keyed by degree.
inline std::map<unsigned, Element> zeta_basis(const HopfModel& m) {
  std::map<unsigned, Element> out;
  for (std::size_t i = 0; i < m.odd_count(); ++i) out[2 * m.odd_weights()[i] - 1] = zeta(m, i);
  return out;
}

/// Reduced coproduct on every generator, keyed by degree (odd degrees are the alphas).
inline std::map<unsigned, Tensor> derive_coproducts(const HopfModel& m) {
  auto phi = derive_odd_coproducts(m);
  HopfModel full = m;
  full.set_odd_coproducts(phi);
  full.refresh_even_coproducts();
  std::map<unsigned, Tensor> out;
  for (auto g : full.generators())
    out[full.generator_degree(g)] = g.odd ? *phi[g.index] : full.reduced_coproduct(full.generator(g));
  return out;
}

namespace detail {

inline std::string generator_name(const HopfModel& m, Generator g) {
  return (g.odd ? "a" : "x") + std::to_string(m.generator_degree(g));
}

// delta- and Cartan-compatibility of mu^* on every generator, one entry per failing generator.
inline std::vector<std::string> compatibility_failures(const HopfModel& m, bool delta, bool cartan) {
  std::vector<std::string> out;
  for (auto g : m.generators()) {
    Element e = m.generator(g);
    if (e.is_zero()) continue;
    Tensor mu = m.coproduct(e);
    if (delta && !(m.coproduct(m.bockstein(e)) == m.bockstein(mu))) {
      out.push_back("delta on " + generator_name(m, g));
      continue;
    }
    if (!cartan) continue;
    for (unsigned k = 1; 2 * k <= m.generator_degree(g); ++k)
      if (!(m.coproduct(m.reduced_power(k, e)) == m.reduced_power(k, mu))) {
        out.push_back("P^" + std::to_string(k) + " on " + generator_name(m, g));
        break;
      }
  }
  return out;
}

inline std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (auto& s : v) out += (out.empty() ? "" : ", ") + s;
  return out;
}

}  // namespace detail

/// Reduced powers of the even generators, where the tables do not print them.
/// p = 2: from x = alpha^2 + (lower). Odd p: from Cartan compatibility of mu^* on x,
/// then any remaining freedom is fixed by compatibility on the odd generators.
inline void derive_even_powers(HopfModel& m) {
  const auto& F = m.field();
  unsigned p = m.p();
  if (p == 2) {
    for (std::size_t i = 0; i < m.even_count(); ++i) {
      auto [j, c, rest] = m.even_source(i);
      for (unsigned k = 1; k < m.even_weights()[i]; ++k) {
        Element sq = m.square_operation(k, m.alpha(j));
        Element v = m.multiply(sq, sq);
        v.add(m.reduced_power(k, rest), F.neg(1), F);
        Element scaled;
        scaled.add(v, F.inv(c), F);
        m.set_even_power(k, i, scaled);
      }
    }
    return;
  }
  struct Free {
    unsigned k;
    std::size_t i;
    Element particular;
    std::vector<Element> directions;
  };
  std::vector<Free> free;
  for (std::size_t i = 0; i < m.even_count(); ++i) {
    unsigned t = m.even_weights()[i];
    Element xi = m.x(i);
    Tensor phi_x = m.reduced_coproduct(xi);
    for (unsigned k = 1; k < t; ++k) {
      unsigned target = 2 * t + 2 * k * (p - 1);
      std::vector<Basis> cands;
      for (auto& b : m.even_monomials())
        if (m.degree(b) == target) cands.push_back(b);
      if (cands.empty()) continue;
      std::vector<Tensor> columns;
      for (auto& b : cands) columns.push_back(m.reduced_coproduct(m.single(b)));
      Tensor rhs = m.reduced_power(k, phi_x);
      for (unsigned a = 1; a < k; ++a) rhs.add(m.tensor(m.reduced_power(a, xi), m.reduced_power(k - a, xi)), 1, F);
      auto s = detail::solve_columns(columns, rhs, F);
      if (!s.consistent) {
        m.add_note("P^" + std::to_string(k) + " x" + std::to_string(2 * t) + ": no value is compatible with the coproduct");
        continue;
      }
      Element part;
      for (std::size_t c = 0; c < cands.size(); ++c) part.add(cands[c], s.particular[c], F);
      m.set_even_power(k, i, part);
      if (!s.kernel.empty()) {
        Free f{k, i, part, {}};
        for (auto& v : s.kernel) {
          Element d;
          for (std::size_t c = 0; c < cands.size(); ++c) d.add(cands[c], v[c], F);
          f.directions.push_back(d);
        }
        free.push_back(std::move(f));
      }
    }
  }
  std::size_t dims = 0;
  for (auto& f : free) dims += f.directions.size();
  if (!dims) return;
  if (dims > 8) {
    m.add_note("even reduced powers: too many free coefficients to search");
    return;
  }
  std::size_t total = 1;
  for (std::size_t d = 0; d < dims; ++d) total *= p;
  // keep the choices with the fewest failing generators
  std::vector<std::vector<Coeff>> best;
  std::size_t best_failures = SIZE_MAX;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<Coeff> digits(dims);
    for (std::size_t d = 0, c = code; d < dims; ++d, c /= p) digits[d] = static_cast<Coeff>(c % p);
    HopfModel trial = m;
    std::size_t d = 0;
    for (auto& f : free) {
      Element v = f.particular;
      for (auto& dir : f.directions) v.add(dir, digits[d++], F);
      trial.set_even_power(f.k, f.i, v);
    }
    std::size_t failures;
    try {
      trial.set_odd_coproducts(derive_odd_coproducts(trial));
      trial.refresh_even_coproducts();
      failures = detail::compatibility_failures(trial, true, true).size();
    } catch (const UnreachableGenerator&) {
      continue;
    }
    if (failures < best_failures) {
      best_failures = failures;
      best.clear();
    }
    if (failures == best_failures) best.push_back(digits);
  }
  auto describe = [&](const Free& f) { return "P^" + std::to_string(f.k) + " x" + std::to_string(2 * m.even_weights()[f.i]); };
  if (best.size() != 1) {
    std::string what;
    for (auto& f : free) what += (what.empty() ? "" : ", ") + describe(f);
    m.add_note(what + ": " + std::to_string(best.size()) + " equally compatible choices");
    return;
  }
  const auto& passing = best;
  std::size_t d = 0;
  for (auto& f : free) {
    Element v = f.particular;
    for (auto& dir : f.directions) v.add(dir, passing[0][d++], F);
    m.set_even_power(f.k, f.i, v);
  }
}

inline HopfModel build_model(const std::string& group, unsigned p, const BstTable& table) {
  const GroupProfile& g = profile(group, p);
  if (table.profile.group != group || table.profile.prime != p) throw HopfError("b-table is for another pair");
  HopfModel m(g, table.nonzero());
  for (auto& e : tables::kHopf) {
    if (e.prime != p || !detail::in_groups(e.groups, group)) continue;
    auto i = m.odd_index(e.degree);
    if (!i) throw HopfError("table names a missing generator a" + std::to_string(e.degree));
    switch (e.kind) {
      case tables::Bockstein: m.set_bockstein(*i, parse_element(m, e.text)); break;
      case tables::Square: m.set_square(*i, parse_element(m, e.text)); break;
      case tables::Coproduct: m.set_listed_coproduct(*i, parse_tensor(m, e.text)); break;
      default: break;
    }
  }
  // lenient first pass: coproducts may still change once the even powers are known
  m.set_odd_coproducts(derive_odd_coproducts(m, {}, false));
  if (p != 2) m.refresh_even_coproducts();
  derive_even_powers(m);
  m.set_odd_coproducts(derive_odd_coproducts(m));
  m.refresh_even_coproducts();
  return m;
}

inline HopfModel build_model(const std::string& group, unsigned p) {
  return build_model(group, p, full_table(group, p));
}

/// Coefficients of the Poincare polynomial from the closed form.
inline std::vector<unsigned long long> poincare_closed_form(const HopfModel& m) {
  std::vector<unsigned long long> poly{1};
  auto times = [&](const std::vector<std::pair<unsigned, unsigned long long>>& factor) {
    unsigned top = 0;
    for (auto& [d, c] : factor) top = std::max(top, d);
    std::vector<unsigned long long> out(poly.size() + top, 0);
    for (std::size_t a = 0; a < poly.size(); ++a)
      for (auto& [d, c] : factor) out[a + d] += poly[a] * c;
    poly = std::move(out);
  };
  for (unsigned s : m.odd_weights()) times({{0, 1}, {2 * s - 1, 1}});
  for (std::size_t i = 0; i < m.even_count(); ++i) {
    std::vector<std::pair<unsigned, unsigned long long>> f;
    for (unsigned e = 0; e < m.truncations()[i]; ++e) f.push_back({2 * m.even_weights()[i] * e, 1});
    times(f);
  }
  while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
  return poly;
}

inline std::vector<unsigned long long> poincare_census(const HopfModel& m) {
  std::vector<unsigned long long> poly;
  for (auto& b : m.basis()) {
    unsigned d = m.degree(b);
    if (poly.size() <= d) poly.resize(d + 1, 0);
    ++poly[d];
  }
  return poly;
}

inline HopfReport check_suite(const HopfModel& m) {
  const auto& F = m.field();
  unsigned p = m.p();
  HopfReport r{m.profile().label(), {}};
  auto add = [&](std::string name, bool ok, std::string detail = {}) { r.checks.push_back({std::move(name), ok, std::move(detail)}); };
  auto gname = [&](std::size_t i) { return "a" + std::to_string(2 * m.odd_weights()[i] - 1); };
  auto table_entry = [&](tables::HopfKind kind, std::size_t i) -> std::optional<std::string_view> {
    unsigned deg = 2 * m.odd_weights()[i] - 1;
    for (auto& e : tables::kHopf)
      if (e.kind == kind && e.prime == p && e.degree == deg && detail::in_groups(e.groups, m.profile().group)) return e.text;
    return std::nullopt;
  };

  {
    std::string bad;
    for (auto& b : m.basis())
      if (!m.bockstein(m.bockstein(m.single(b))).is_zero()) {
        bad = render_basis(m, b);
        break;
      }
    add("bockstein_squared", bad.empty(), bad);
  }
  {
    std::string bad;
    for (auto g : m.generators()) {
      Element e = m.generator(g);
      if (e.is_zero()) continue;
      Tensor mu = m.coproduct(e);
      if (!(m.left_coproduct(mu) == m.right_coproduct(mu))) {
        bad = detail::generator_name(m, g);
        break;
      }
    }
    add("coassociativity", bad.empty(), bad);
  }
  {
    auto d = detail::compatibility_failures(m, true, false);
    add("bockstein_compatibility", d.empty(), detail::join(d));
    auto c = detail::compatibility_failures(m, false, true);
    add("cartan_compatibility", c.empty(), detail::join(c));
  }
  {
    auto census = poincare_census(m);
    auto closed = poincare_closed_form(m);
    unsigned long long dim = 0;
    for (auto v : census) dim += v;
    unsigned long long expect = 1u << m.odd_count();
    for (auto k : m.truncations()) expect *= k;
    add("graded_dimension", census == closed && dim == expect, "dim " + std::to_string(dim));
  }
  {
    std::string bad;
    for (std::size_t i = 0; i < m.odd_count(); ++i) {
      unsigned s = m.odd_weights()[i];
      Element expect;
      if (auto e = m.even_index(2 * s)) expect.add(m.x(*e), F.neg(1), F);
      if (!(m.bockstein(zeta(m, i)) == expect)) {
        bad = gname(i);
        break;
      }
    }
    add("zeta_bockstein", bad.empty(), bad);
  }
  if (p == 2) {
    std::string bad;
    for (std::size_t i = 0; i < m.odd_count(); ++i) {
      Element derived = m.bockstein(m.reduced_power(m.odd_weights()[i] - 1, m.alpha(i)));
      if (!(derived == m.square_table(i)) || !(m.multiply(m.alpha(i), m.alpha(i)) == derived)) {
        bad = gname(i) + "^2 = " + render(m, derived);
        break;
      }
    }
    add("squares", bad.empty(), bad);
    bad.clear();
    for (std::size_t i = 0; i < m.odd_count(); ++i) {
      Element z = zeta(m, i);
      auto text = table_entry(tables::ZetaSquare, i);
      Element expect = text ? parse_element(m, *text) : Element{};
      if (!(m.multiply(z, z) == expect)) {
        bad = "zeta" + std::to_string(2 * m.odd_weights()[i] - 1);
        break;
      }
    }
    add("zeta_squares", bad.empty(), bad);
    bad.clear();
    for (std::size_t i = 0; i < m.odd_count(); ++i) {
      auto text = table_entry(tables::Sq1, i);
      if (text && !(m.bockstein(m.alpha(i)) == parse_element(m, *text))) {
        bad = gname(i);
        break;
      }
    }
    add("sq1_values", bad.empty(), bad);
  } else {
    std::string bad;
    for (auto& b : m.basis()) {
      Element e = m.single(b);
      Element lhs = m.reduced_power(1, m.reduced_power(1, e));
      Element rhs;
      rhs.add(m.reduced_power(2, e), 2, F);
      if (!(lhs == rhs)) {
        bad = render_basis(m, b);
        break;
      }
    }
    add("adem_p1p1", bad.empty(), bad);
  }
  {
    std::string bad;
    for (auto& n : m.notes()) bad += (bad.empty() ? "" : "; ") + n;
    add("even_powers_determined", m.notes().empty(), bad);
  }
  return r;
}

}  // namespace exhopf
