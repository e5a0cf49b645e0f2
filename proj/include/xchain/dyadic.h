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

#ifndef XCHAIN_DYADIC_H
#define XCHAIN_DYADIC_H

#include <cstdint>
#include <string>

namespace xchain {

/// sign * 2^{-half_log/2}, sign in {-1, 0, +1}. Zero is stored with
/// half_log = 0. Every graph-state overlap and amplitude has this form.
struct DyadicReal {
    int sign = 0;
    int half_log = 0;

    static DyadicReal zero() { return {0, 0}; }
    static DyadicReal one() { return {1, 0}; }
    /// Throws std::invalid_argument unless sign in {-1,0,1} and half_log >= 0.
    static DyadicReal make(int sign, int half_log);
    /// Converts value * 2^{-half_log/2}; throws std::logic_error when the
    /// value is not zero or a signed power of sqrt(2).
    static DyadicReal from_scaled(int64_t value, int half_log);

    bool is_zero() const { return sign == 0; }
    DyadicReal operator*(const DyadicReal &o) const;
    DyadicReal operator-() const { return {-sign, half_log}; }
    bool operator==(const DyadicReal &o) const = default;

    /// "0", "+2^-m/2" or "-2^-m/2".
    std::string str() const;
    /// Display only; never used in comparisons.
    double approx() const;
};

/// Non-negative exact probability num / 2^log2_den in lowest terms.
struct DyadicFraction {
    int64_t num = 0;
    int log2_den = 0;

    static DyadicFraction make(int64_t num, int log2_den);
    bool operator==(const DyadicFraction &o) const = default;
    DyadicFraction operator+(const DyadicFraction &o) const;
    std::string str() const;
};

}  // namespace xchain

#endif
