// Copyright 2026 The Liquidity Games Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "liqgame/rational.h"

#include "liqgame/error.h"

namespace liqgame {

std::string ToString(const Rational& value) {
  return value.numerator().str() + "/" + value.denominator().str();
}

Rational ParseRational(std::string_view text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      return Rational(BigInt(std::string(text)));
    }
    BigInt num(std::string(text.substr(0, slash)));
    BigInt den(std::string(text.substr(slash + 1)));
    if (den == 0) throw std::domain_error("zero denominator");
    // boost::rational rejects negative unbounded denominators.
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return Rational(num, den);
  } catch (const std::exception& e) {
    throw GameError(ErrorCode::kParseError, std::string(text),
                    "not a rational: " + std::string(e.what()));
  }
}

double ToDouble(const Rational& value) {
  return value.numerator().convert_to<double>() /
         value.denominator().convert_to<double>();
}

}  // namespace liqgame
