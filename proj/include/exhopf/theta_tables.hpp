#pragma once

#include <string_view>

namespace exhopf::tables {

struct ThetaEntry {
  std::string_view group;
  unsigned prime;
  unsigned degree;
  std::string_view text;
};

// E6 and E7 at p = 2 are obtained from the E8 entries.
inline constexpr ThetaEntry kTheta[] = {
    {"G2", 2, 2, "w1^2+w1*w2+w2^2"},
    {"G2", 2, 3, "w2^3"},
    {"F4", 2, 2, "c2"},
    {"F4", 2, 3, "c3"},
    {"F4", 2, 8, "c4^2+w1^2*c6"},
    {"F4", 2, 12, "c6^2+c4^3"},
    {"E8", 2, 2, "c2"},
    {"E8", 2, 3, "c3"},
    {"E8", 2, 5, "c5+w2*c4"},
    {"E8", 2, 8, "c8+c4^2+w2^2*c6+w2^3*c5+w2^8"},
    {"E8", 2, 9, "w2^2*c7+w2*c8+w2^3*c6"},
    {"E8", 2, 12, "c6^2+c4^3"},
    {"E8", 2, 14, "c7^2+c4^2*c6+w2^2*c6^2"},
    {"E8", 2, 15, "c7*c8+w2^7*c8+w2^3*c4*c8"},
    {"F4", 3, 2, "w1^2-c2"},
    {"F4", 3, 4, "c2^2-c4"},
    {"F4", 3, 6, "c2*c4-c6"},
    {"F4", 3, 8, "-c2*c6"},
    {"E6", 3, 2, "w2^2-c2"},
    {"E6", 3, 4, "c2^2-c4"},
    {"E6", 3, 5, "c5+c2*c3"},
    {"E6", 3, 6, "c2*c4+c3^2-c6"},
    {"E6", 3, 8, "-c4^2"},
    {"E6", 3, 9, "c6*c3"},
    {"E7", 3, 2, "w2^2-c2"},
    {"E7", 3, 4, "c2^2-c4"},
    {"E7", 3, 6, "-w2^3*c3+c2*c4-w2*c5+c3^2-c6"},
    {"E7", 3, 8, "-c4^2+c2*c3^2-w2*c7+c3*c5"},
    {"E7", 3, 10, "-c4*c3^2+c2*c3*c5+c3*c7-c5^2"},
    {"E7", 3, 14, "c4*c5^2+c2*c5*c7+c7^2"},
    {"E7", 3, 18, "c2*c3^3*c7+c3^6+c3^2*c5*c7+c3*c5^3"},
    {"E8", 3, 2, "w2^2-c2"},
    {"E8", 3, 4, "c2^2-c4"},
    {"E8", 3, 8, "-w2^5*c3-w2^3*c5-w2^2*c3^2-w2^2*c6-w2*c7+c3*c5"},
    {"E8", 3, 10, "-c4*c3^2+c2*c3*c5+c2*c8+c3*c7-c5^2"},
    {"E8", 3, 14,
     "c4*c3*c7+w2^3*c3*c8+c2*c3^2*c6+c2*c5*c7-w2*c5*c8-c3^2*c8+c3*c5*c6+c7^2"},
    {"E8", 3, 18,
     "-c2*c4^4+c4*c3^2*c8+c4*c6*c8-c4*c7^2-c2*c3^3*c7-c2*c3*c5*c8+c2*c3*c6*c7-w2*c3*c6*c8"
     "-c3^6-c3^2*c6^2-c5*c6*c7+c6^3"},
    {"E8", 3, 20, "-c2*c3*c7*c8+w2*c3*c8^2+c3^2*c6*c8+c5*c7*c8"},
    {"E8", 3, 24,
     "c8^3+c2*c3^2*c8^2-w2*c3*c6^2*c8+c2*c3*c5*c6*c8-c3^2*c5^2*c8-w2*c3*c5*c7*c8-c3*c7^3"
     "-w2*c3*c6*c7^2-c2*c3*c5*c7^2+c5^2*c7^2+c2*c4^2*c7^2-c5*c6^2*c7-c3^2*c5*c6*c7"
     "+c3^4*c5*c7-c2*c5^3*c7-c3^2*c6^3+c2*c4*c6^3+c3^4*c6^2"},
    {"E8", 5, 2, "-w2^2-c2"},
    {"E8", 5, 6, "2*w2^6-2*w2^3*c3-2*w2*c5-2*c3^2-c6"},
    {"E8", 5, 8, "-w2^8-w2^4*c4-2*w2^3*c5-w2*c3*c4-w2*c7-c3*c5-c4^2-c8"},
    {"E8", 5, 12,
     "-2*w2^4*c4^2-w2^4*c8+w2^3*c3^3+2*w2^3*c4*c5-2*w2^2*c3^2*c4-w2^2*c3*c7-2*w2*c3*c4^2"
     "+c3^4-c3*c4*c5-2*c5*c7+2*c6^2"},
    {"E8", 5, 14,
     "-2*w2^10*c4+2*w2^8*c3^2-2*w2^7*c7+w2^5*c3*c6-2*w2^4*c3*c7+2*w2^4*c5^2+w2^3*c3^2*c5"
     "+w2^3*c4*c7+w2*c3*c4*c6-w2*c4^2*c5+w2*c5*c8-2*w2*c6*c7+c3^2*c4^2-c3^2*c8+2*c3*c4*c7"
     "+c4^2*c6+c4*c5^2+c7^2"},
    {"E8", 5, 18,
     "-2*w2^8*c5^2+2*w2^7*c3^2*c5-2*w2^6*c3^2*c6+w2^6*c3*c4*c5+2*w2^5*c3^2*c7"
     "+2*w2^4*c3^2*c8+w2^4*c4*c5^2+2*w2^3*c3*c4^3-w2^3*c3*c5*c7+2*w2^3*c4^2*c7-2*w2^3*c5^3"
     "-w2^2*c3^4*c4-2*w2^2*c3^3*c7+w2^2*c3*c4^2*c5+2*w2^2*c4^4-w2^2*c4^2*c8-w2*c3^4*c5"
     "-2*w2*c3*c7^2+w2*c4^3*c5-2*w2*c4*c5*c8+w2*c5^2*c7-c3^2*c4*c8+c3^2*c5*c7-2*c3*c4^2*c7"
     "+2*c3*c4*c5*c6-c3*c5^3-2*c3*c7*c8+c4*c7^2"},
    {"E8", 5, 20,
     "-w2^17*c3-w2^13*c7+2*w2^12*c4^2+2*w2^12*c8+2*w2^11*c3*c6+w2^10*c3^2*c4-w2^9*c4*c7"
     "+2*w2^8*c4^3-w2^7*c3*c5^2-w2^6*c3^3*c5-w2^6*c3^2*c8+w2^6*c4*c5^2-2*w2^5*c3^5"
     "+w2^5*c3*c4^3+w2^5*c4^2*c7+2*w2^5*c5^3-w2^4*c3^4*c4-2*w2^4*c3*c4^2*c5"
     "-2*w2^4*c4*c5*c7+w2^3*c3^4*c5-2*w2^3*c3^2*c4*c7-w2^3*c3*c4*c5^2+w2^2*c3^6"
     "+2*w2^2*c3^2*c4^3-w2^2*c3^2*c5*c7-2*w2*c3^5*c4+2*w2*c3^3*c5^2+2*w2*c3^2*c6*c7"
     "+w2*c4*c5^3+2*c3^4*c8+c3^3*c4*c7+c3^2*c7^2+2*c3*c4^3*c5+2*c4^5+c4^3*c8-2*c5^4"},
    {"E8", 5, 24,
     "-w2^16*c8-w2^13*c3*c8-2*w2^9*c3*c4*c8+2*w2^7*c4*c5*c8+w2^6*c4*c6*c8-2*w2^6*c5^2*c8"
     "+2*w2^5*c3*c8^2+w2^5*c4*c7*c8-w2^5*c5*c6*c8+2*w2^4*c4*c8^2-w2^4*c5*c7*c8"
     "+w2^3*c3^3*c4*c8-2*w2^3*c3^2*c7*c8+w2^3*c3*c4*c6*c8-2*w2^3*c3*c5^2*c8+w2^3*c6*c7*c8"
     "+w2^2*c4*c5^2*c8-w2^2*c6*c8^2-2*w2*c3*c4*c8^2-w2*c4*c5*c6*c8-2*w2*c7*c8^2+c3^4*c4*c8"
     "+2*c3*c5*c8^2+c3*c6*c7*c8-2*c5^2*c6*c8"},
};

}  // namespace exhopf::tables
