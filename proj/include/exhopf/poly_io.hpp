#pragma once

#include <ostream>

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "exhopf/polynomial.hpp"

namespace exhopf {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool negate = false;
    if (peek() == '-') {
      ++pos_;
      negate = true;
    }
    terms.push_back(term(negate));
    while (true) {
      skip();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') throw ParseError(std::string("unexpected '") + c + "'", pos_);
      ++pos_;
      negate = c == '-';
      skip();
      if (!at_end() && peek() == '-') {
        ++pos_;
        negate = !negate;
      }
      terms.push_back(term(negate));
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  unsigned long long number() {
    skip();
    std::size_t start = pos_;
    unsigned long long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<unsigned>(peek() - '0');
      if (v > 1000000000ull) throw ParseError("number too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected number", start);
    return v;
  }

  Term term(bool negate) {
    skip();
    const auto& F = ring_->field();
    Coeff coeff = 1;
    Monomial m = ring_->one();
    bool need_factor = true;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = F.reduce(static_cast<long long>(number() % ring_->p()));
      need_factor = false;
      skip();
      if (at_end() || peek() != '*') return {m, negate ? F.neg(coeff) : coeff};
      ++pos_;
      need_factor = true;
    }
    while (need_factor) {
      m = ring_->multiply(m, factor());
      skip();
      if (!at_end() && peek() == '*') {
        ++pos_;
      } else {
        need_factor = false;
      }
    }
    return {m, negate ? F.neg(coeff) : coeff};
  }

  Monomial factor() {
    skip();
    std::size_t start = pos_;
    while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) throw ParseError("expected variable", start);
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    auto idx = ring_->index_of(name);
    if (!idx) throw ParseError("unknown variable " + name, start);
    unsigned e = 1;
    skip();
    if (!at_end() && peek() == '^') {
      ++pos_;
      auto v = number();
      if (v > 60000) throw ParseError("exponent too large", pos_);
      e = static_cast<unsigned>(v);
    }
    return ring_->var(*idx, e);
  }

  std::string_view text_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Accepts the canonical grammar plus '-' as a term separator and signs without digits.
inline Polynomial parse(std::string_view text, const RingPtr& ring) {
  return detail::PolyParser(text, ring).parse();
}

inline std::string render_monomial(const Monomial& m, const RingContext& ring) {
  std::string out;
  for (std::size_t i = ring.size(); i-- > 0;) {
    auto e = m.exponents[i];
    if (!e) continue;
    if (!out.empty()) out += '*';
    out += ring.variable(i).name;
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

inline std::string render_coeff(Coeff c, unsigned p) {
  if (p > 2 && c == p - 1) return "-1";
  return std::to_string(c);
}

inline std::string render(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const RingContext& R = *f.ring();
  std::string out;
  for (auto& t : f.terms()) {
    if (!out.empty()) out += '+';
    if (t.monomial.is_one()) {
      out += render_coeff(t.coeff, R.p());
    } else {
      if (t.coeff != 1) out += render_coeff(t.coeff, R.p()) + '*';
      out += render_monomial(t.monomial, R);
    }
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << render(f); }

}  // namespace exhopf
