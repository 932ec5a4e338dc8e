#pragma once

#include <string_view>

// Printed generator data for the Hopf models. Generators are named by
// topological degree: x6 is the even class of degree 6, a15 is alpha_15.
// `groups` is a space separated list; an entry applies to each of them.

namespace exhopf::tables {

enum class HopfKind { Bockstein, Square, Coproduct, Zeta, ZetaSquare, Sq1 };

struct HopfEntry {
  HopfKind kind;
  unsigned prime;
  std::string_view groups;
  unsigned degree;  // degree of the odd generator the entry is about
  std::string_view text;
};

using enum HopfKind;

inline constexpr HopfEntry kHopf[] = {
    // Bockstein on the odd generators; absent entries are zero.
    {Bockstein, 2, "G2 F4 E6 E7 E8", 5, "x6"},
    {Bockstein, 2, "E7 E8", 9, "x10"},
    {Bockstein, 2, "E7 E8", 17, "x18"},
    {Bockstein, 2, "E7 E8", 15, "x6*x10"},
    {Bockstein, 2, "E7 E8", 27, "x10*x18"},
    {Bockstein, 2, "E7", 23, "x6*x18"},
    {Bockstein, 2, "E8", 23, "x6*x18+x6^4"},
    {Bockstein, 2, "E8", 29, "x30+x6^2*x18"},
    {Bockstein, 3, "F4 E6 E7 E8", 7, "-x8"},
    {Bockstein, 3, "F4 E6 E7 E8", 15, "-x8^2"},
    {Bockstein, 3, "E8", 19, "x20"},
    {Bockstein, 3, "E8", 27, "-x8*x20"},
    {Bockstein, 3, "E8", 35, "x8^2*x20"},
    {Bockstein, 3, "E8", 39, "x20^2"},
    {Bockstein, 3, "E8", 47, "x8*x20^2"},
    {Bockstein, 5, "E8", 11, "-x12"},
    {Bockstein, 5, "E8", 23, "-x12^2"},
    {Bockstein, 5, "E8", 35, "x12^3"},
    {Bockstein, 5, "E8", 47, "2*x12^4"},

    // Squares of the odd generators at p = 2; absent entries square to zero.
    {Square, 2, "G2 F4 E6 E7 E8", 3, "x6"},
    {Square, 2, "E7 E8", 5, "x10"},
    {Square, 2, "E7 E8", 9, "x18"},
    {Square, 2, "E8", 15, "x30+x6^2*x18"},

    // Reduced coproduct on the listed generators.
    {Coproduct, 2, "G2 F4 E6 E7 E8", 3, "0"},
    {Coproduct, 2, "F4", 15, "0"},
    {Coproduct, 2, "E6", 15, "x6|a9"},
    {Coproduct, 2, "E7", 15, "x10|a5+x6|a9"},
    {Coproduct, 2, "E8", 15, "x10|a5+x6|a9+x6^2|a3"},
    {Coproduct, 3, "F4 E6 E7 E8", 3, "0"},
    {Coproduct, 3, "F4 E6 E7 E8", 7, "0"},
    {Coproduct, 3, "E6", 9, "0"},
    {Coproduct, 3, "E6", 17, "0"},
    {Coproduct, 3, "E7 E8", 19, "0"},
    {Coproduct, 3, "F4 E6 E7", 11, "-x8|a3"},
    {Coproduct, 3, "E8", 15, "-x8|a7"},
    {Coproduct, 3, "E7", 35, "x8|a27+x8^2|a19"},
    {Coproduct, 3, "E8", 35, "x8|a27+x8^2|a19+x8*x20|a7-x20|a15"},
    {Coproduct, 5, "E8", 3, "0"},
    {Coproduct, 5, "E8", 15, "2*x12|a3"},
    {Coproduct, 5, "E8", 27, "2*x12|a15+2*x12^2|a3"},
    {Coproduct, 5, "E8", 39, "3*x12|a27+3*x12^2|a15+2*x12^3|a3"},

    // Primary generators in terms of the transgressive ones; absent entries are zeta = alpha.
    {Zeta, 2, "E7 E8", 15, "a15+x6*a9"},
    {Zeta, 2, "E7 E8", 27, "a27+x10*a17"},
    {Zeta, 2, "E7", 23, "a23+x6*a17"},
    {Zeta, 2, "E8", 23, "a23+x6*a17+x6^3*a5"},
    {Zeta, 2, "E8", 29, "a29+x6^2*a17"},
    {Zeta, 3, "F4 E6 E7 E8", 15, "a15-x8*a7"},
    {Zeta, 3, "E7 E8", 35, "a35+x8*a27"},
    {Zeta, 3, "E8", 19, "-a19"},
    {Zeta, 3, "E8", 27, "a27+x8*a19"},
    {Zeta, 3, "E8", 39, "a39-x20*a19"},
    {Zeta, 3, "E8", 47, "a47-x8*a39"},
    {Zeta, 5, "E8", 15, "3*a15"},
    {Zeta, 5, "E8", 23, "3*a23+2*x12*a11"},
    {Zeta, 5, "E8", 35, "-a35-x12^2*a11"},
    {Zeta, 5, "E8", 47, "3*a47+x12^3*a11"},

    // Squares of the primary generators at p = 2; absent entries square to zero.
    {ZetaSquare, 2, "G2 F4 E6 E7 E8", 3, "x6"},
    {ZetaSquare, 2, "E7 E8", 5, "x10"},
    {ZetaSquare, 2, "E7 E8", 9, "x18"},
    {ZetaSquare, 2, "E8", 15, "x30"},
    {ZetaSquare, 2, "E8", 23, "x6^6*x10"},

    // Sq^1 on exterior generators written through squares of generators.
    {Sq1, 2, "E7 E8", 15, "a3^2*a5^2"},
    {Sq1, 2, "E7 E8", 27, "a5^2*a9^2"},
    {Sq1, 2, "E7", 23, "a3^2*a9^2"},
    {Sq1, 2, "E8", 23, "a3^2*a9^2+a3^8"},
    {Sq1, 2, "E8", 29, "a15^2"},
};

}  // namespace exhopf::tables
