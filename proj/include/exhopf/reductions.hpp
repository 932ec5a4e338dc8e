#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "exhopf/groebner.hpp"
#include "exhopf/steenrod.hpp"

namespace exhopf {

/// A displayed reduction P^1 κ*θ_s = Σ coefficient_j κ*θ_j on κ*F_5[E8].
struct Reduction {
  unsigned s;
  std::vector<std::pair<unsigned, std::string>> printed;  // (j, coefficient of κ*θ_j)
  std::vector<unsigned> flipped;                          // slots whose printed sign is reversed
};

inline std::vector<Reduction> e8_five_reductions() {
  return {
      {2, {{6, "1"}, {2, "c4-2*c2^2"}}, {2}},
      {8, {{12, "1"}, {8, "-c2^2+2*c4"}, {6, "-2*c3^2+2*c6"}, {2, "2*c2*c8+2*c3*c7-c4*c6+2*c5^2"}}, {2}},
      {14,
       {{18, "1"},
        {8, "-(c2^2*c3^2+c2*c8+c3^2*c4+2*c3*c7-c4*c6+2*c5^2)"},
        {6, "2*c4^3"},
        {2, "-(c2*c3^3*c5-c2*c3^2*c4^2+2*c2*c3*c4*c7+c2*c4^2*c6+c2*c4*c5^2-c2*c7^2+c3^2*c4*c6+c3*c4^2*c5"
            "+c3*c6*c7-c4^2*c8+2*c4*c5*c7+c4*c6^2-2*c5^2*c6+c8^2)"}},
       {8, 6}},
      {20,
       {{24, "1"},
        {18, "c6"},
        {14, "c3^2*c4-c3*c7-c4*c6+2*c5^2"},
        {12, "-(-c3*c4*c5+c4^3-2*c4*c8+c5*c7)"},
        {8, "-(c2*c4^2*c6+2*c3*c5*c8+c4^2*c8-c4*c5*c7+c4*c6^2)"},
        {6, "-(c2^2*c7^2+c2*c3*c6*c7+2*c3^3*c4*c5+c3^2*c4^3+2*c3^2*c5*c7-c3*c4*c5*c6-c3*c7*c8+c4^2*c5^2"
            "-2*c5^2*c8+2*c5*c6*c7)"},
        {2, "-(-2*c2*c4^3*c8-c2*c5^4+c2*c6*c7^2-c3^3*c5*c8-c3^2*c4*c5*c7+c3*c4^3*c7-c3*c4^2*c5*c6"
            "+c3*c5*c7^2+c3*c6^2*c7+c4^4*c6+c4^3*c5^2+c5^3*c7)"}},
       {12, 8, 6}},
  };
}

struct ReductionReport {
  unsigned s = 0;
  bool printed_exact = false;    // as displayed
  bool corrected_exact = false;  // with the sign reversals in `flipped`
  bool printed_in_ideal = false; // displayed difference lies in the lower κ*θ ideal
};

inline std::vector<ReductionReport> verify_e8_five_reductions() {
  auto ts = theta_set("E8", 5);
  auto C = ts->restricted_ring();
  auto ctx = SteenrodContext::chern(C, 8);
  auto parse_signed = [&](const std::string& text) {
    if (text.rfind("-(", 0) == 0) return -parse(text.substr(2, text.size() - 3), C);
    return parse(text, C);
  };
  std::vector<ReductionReport> out;
  for (auto& red : e8_five_reductions()) {
    Polynomial lhs = ctx.power(1, ts->theta_restricted(red.s));
    Polynomial printed(C), corrected(C);
    for (auto& [j, coeff] : red.printed) {
      Polynomial term = parse_signed(coeff) * ts->theta_restricted(j);
      printed += term;
      bool flip = std::find(red.flipped.begin(), red.flipped.end(), j) != red.flipped.end();
      corrected += flip ? -term : term;
    }
    std::vector<Polynomial> lower;
    for (unsigned j : ts->profile().r)
      if (j < red.s + 4) lower.push_back(ts->theta_restricted(j));
    auto gb = buchberger(lower, red.s + 4);
    out.push_back({red.s, (lhs - printed).is_zero(), (lhs - corrected).is_zero(),
                   normal_form(lhs - printed, gb).remainder.is_zero()});
  }
  return out;
}

}  // namespace exhopf
