// Copyright 2026 The twodom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "twodom/rational.hpp"

namespace twodom {

/// The parameters (s, a, y_0..y_{d+1}, b_0..b_{d+1}) of a weight assignment.
/// Well-formedness is checked by validate(); the conditions of the bound
/// theorem are not part of the type and are checked separately.
struct CoefficientSet {
  int d = 0;
  Rational s;
  Rational a;
  std::vector<Rational> y;  // y[0..d+1]
  std::vector<Rational> b;  // b[0..d+1], b[0] == 0

  void validate() const {
    if (d < 4) throw std::invalid_argument("coefficient set needs d >= 4, got " + std::to_string(d));
    const auto len = static_cast<std::size_t>(d + 2);
    if (y.size() != len || b.size() != len)
      throw std::invalid_argument("y and b must each have d+2 = " + std::to_string(d + 2) + " entries");
    if (s <= 0) throw std::invalid_argument("s must be positive");
    if (a < 0) throw std::invalid_argument("a must be non-negative");
    if (b[0] != 0) throw std::invalid_argument("b_0 must be 0");
    for (std::size_t i = 0; i < len; ++i)
      if (y[i] < 0 || b[i] < 0) throw std::invalid_argument("y_i and b_i must be non-negative");
  }

  /// a/s in lowest terms.
  Rational ratio() const { return a / s; }

  /// Same set rescaled so that s == 1.
  CoefficientSet normalized() const {
    CoefficientSet out = *this;
    out.s = 1;
    out.a = a / s;
    for (auto& v : out.y) v /= s;
    for (auto& v : out.b) v /= s;
    return out;
  }

  friend bool operator==(const CoefficientSet&, const CoefficientSet&) = default;
};

namespace detail {

inline std::vector<Rational> ints(std::initializer_list<const char*> digits) {
  std::vector<Rational> out;
  for (const char* d : digits) out.emplace_back(mpz_class(d));
  return out;
}

}  // namespace detail

/// Built-in integer weights for minimum degree 6, 7, 8 and 9.
inline CoefficientSet builtin_table2(int delta) {
  CoefficientSet c;
  c.d = delta;
  switch (delta) {
    case 6:
      c.a = mpz_class("502562162340");
      c.s = mpz_class("1010109434040");
      c.y = detail::ints({"254021681340", "296456709780", "357968691360", "387969820875", "401052708000",
                          "409645123200", "422846061750", "422846061750"});
      c.b = detail::ints({"0", "151217550540", "226888474680", "264487991040", "289076943960",
                          "313665896880", "338254849800", "338254849800"});
      break;
    case 7:
      c.a = mpz_class("9858456650");
      c.s = mpz_class("21118330730");
      c.y = detail::ints({"4492799990", "5196793700", "6598921770", "7321226150", "7754608778", "7981810970",
                          "8093880725", "8265018290", "8265018290"});
      c.b = detail::ints({"0", "2770921790", "4278173340", "5021360750", "5545512770", "5915830130",
                          "6286147490", "6656464850", "6656464850"});
      break;
    case 8:
      c.a = mpz_class("215321625855");
      c.s = mpz_class("489195209055");
      c.y = detail::ints({"87943795415", "105895928425", "138571857655", "153359038875", "164408232975",
                          "170236790715", "176196828255", "180637395519", "180637395519", "180637395519"});
      c.b = detail::ints({"0", "57321630520", "89997559750", "107061717735", "118110911835", "126835767555",
                          "133341576375", "139847385195", "146353194015", "146353194015"});
      break;
    case 9:
      c.a = mpz_class("93641183816180");
      c.s = mpz_class("224551068595700");
      c.y = detail::ints({"33987088151324", "43483590947181", "57524154844772", "64634747985500",
                          "69343125357044", "73000318746740", "75612599739380", "77277448218740",
                          "78747157548500", "78747157548500", "78747157548500"});
      c.b = detail::ints({"0", "23820497555547", "37861061453138", "45588781601132", "50365444145324",
                          "54125243789540", "57102072080900", "59456970201860", "61811868322820",
                          "64166766443780", "64166766443780"});
      break;
    default:
      throw std::invalid_argument("built-in weights exist only for delta in 6..9, got " + std::to_string(delta));
  }
  return c;
}

}  // namespace twodom
