#pragma once

// Closed forms of G_r(q, t) for q >= 2, written with t1 = t - 1 as
//
//   G_r(q, t) = q^lead * ( sum_j P_j(t1) q^(t1 + j) + sum_j K_j q^j ) / (q - 1)^(r + 1)
//
// where P_j are integer polynomials in t1 (ascending coefficients) and K_j
// integer constants. r = 0 is handled separately as (q^t - 1) / (q - 1).

#include <array>
#include <span>
#include <vector>

namespace cff::detail {

struct ShiftedPower {
  unsigned shift;               // j in q^(t1 + j)
  std::vector<long> poly;       // coefficients of t1^0, t1^1, ...
};

struct ConstPower {
  unsigned power;  // j in q^j
  long coeff;
};

struct GClosedForm {
  unsigned r;
  unsigned lead;            // power of q multiplying the bracket
  unsigned denominator;     // exponent of (q - 1)
  std::vector<ShiftedPower> shifted;
  std::vector<ConstPower> constants;
};

inline const GClosedForm* g_closed_form(unsigned r) {
  static const std::array<GClosedForm, 3> forms{{
      {1, 1, 2, {{1, {0, 1}}, {0, {-1, -1}}}, {{0, 1}}},
      {2, 1, 3, {{2, {0, 0, 1}}, {1, {1, -2, -2}}, {0, {1, 2, 1}}}, {{1, -1}, {0, -1}}},
      {4, 1, 5,
       {{4, {0, 0, 0, 0, 1}},
        {1, {11, 12, -6, -12, -4}},
        {2, {11, -12, -6, 12, 6}},
        {3, {1, -4, 6, -4, -4}},
        {0, {1, 4, 6, 4, 1}}},
       {{3, -1}, {2, -11}, {1, -11}, {0, -1}}},
  }};
  for (const auto& f : forms)
    if (f.r == r) return &f;
  return nullptr;
}

}  // namespace cff::detail
