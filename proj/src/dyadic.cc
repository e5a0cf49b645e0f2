// Copyright 2026 The xchain Authors
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

#include "xchain/dyadic.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace xchain {

DyadicReal DyadicReal::make(int sign, int half_log) {
    if (sign < -1 || sign > 1 || half_log < 0) {
        throw std::invalid_argument("invalid dyadic real");
    }
    return sign == 0 ? zero() : DyadicReal{sign, half_log};
}

DyadicReal DyadicReal::from_scaled(int64_t value, int half_log) {
    if (value == 0) {
        return zero();
    }
    int sign = value < 0 ? -1 : 1;
    uint64_t mag = static_cast<uint64_t>(value < 0 ? -value : value);
    if (!std::has_single_bit(mag)) {
        throw std::logic_error("value " + std::to_string(value) + " is not a power of two");
    }
    int m = half_log - 2 * std::countr_zero(mag);
    if (m < 0) {
        throw std::logic_error("dyadic magnitude exceeds one");
    }
    return {sign, m};
}

DyadicReal DyadicReal::operator*(const DyadicReal &o) const {
    if (is_zero() || o.is_zero()) {
        return zero();
    }
    return {sign * o.sign, half_log + o.half_log};
}

std::string DyadicReal::str() const {
    if (sign == 0) {
        return "0";
    }
    return std::string(sign < 0 ? "-" : "+") + "2^-" + std::to_string(half_log) + "/2";
}

double DyadicReal::approx() const { return sign * std::pow(2.0, -half_log / 2.0); }

DyadicFraction DyadicFraction::make(int64_t num, int log2_den) {
    if (num < 0 || log2_den < 0) {
        throw std::invalid_argument("invalid dyadic fraction");
    }
    if (num == 0) {
        return {0, 0};
    }
    while (log2_den > 0 && (num & 1) == 0) {
        num >>= 1;
        --log2_den;
    }
    return {num, log2_den};
}

DyadicFraction DyadicFraction::operator+(const DyadicFraction &o) const {
    int den = std::max(log2_den, o.log2_den);
    return make((num << (den - log2_den)) + (o.num << (den - o.log2_den)), den);
}

std::string DyadicFraction::str() const {
    if (log2_den == 0) {
        return std::to_string(num);
    }
    return std::to_string(num) + "/" + std::to_string(int64_t{1} << log2_den);
}

}  // namespace xchain
