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

#ifndef LIQGAME_RATIONAL_H_
#define LIQGAME_RATIONAL_H_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace liqgame {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<BigInt>;

// Always "num/den" with a positive denominator, e.g. "1/3", "0/1", "1/1".
std::string ToString(const Rational& value);
Rational ParseRational(std::string_view text);
double ToDouble(const Rational& value);

}  // namespace liqgame

#endif  // LIQGAME_RATIONAL_H_
