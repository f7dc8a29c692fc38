/* Copyright 2016 Google Inc. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "ehaw/nat.hpp"

#include <cmath>
#include <stdexcept>

namespace ehaw {

Nat isqrt(const Nat& n)
{
    if (n < 0) throw std::invalid_argument("isqrt of negative");
    if (bit_length(n) <= 52) {
        uint64_t v = to_u64(n);
        uint64_t r = (uint64_t)std::sqrt((double)v);
        while (r * r > v) --r;
        while ((r + 1) * (r + 1) <= v) ++r;
        return Nat(r);
    }
    return boost::multiprecision::sqrt(n);
}

Nat pair(const Nat& a, const Nat& b)
{
    Nat s = a + b;
    Nat t = s * (s + 1);
    t >>= 1;
    return t + b;
}

void unpair(const Nat& z, Nat& a, Nat& b)
{
    if (bit_length(z) <= 30) {
        uint64_t v = to_u64(z);
        uint64_t w = (uint64_t)((std::sqrt(8.0 * (double)v + 1.0) - 1.0) / 2.0);
        while (w * (w + 1) / 2 > v) --w;
        while ((w + 1) * (w + 2) / 2 <= v) ++w;
        uint64_t t = w * (w + 1) / 2;
        b = v - t;
        a = w - (v - t);
        return;
    }
    Nat w = (isqrt(8 * z + 1) - 1) / 2;
    Nat t = w * (w + 1) / 2;
    b = z - t;
    a = w - b;
}

Nat proj(unsigned i, const Nat& z)
{
    Nat a, b;
    unpair(z, a, b);
    return i == 0 ? a : b;
}

Nat tuple(const std::vector<Nat>& xs)
{
    if (xs.empty()) return Nat(0);
    Nat acc = xs.back();
    for (size_t i = xs.size() - 1; i-- > 0;)
        acc = pair(xs[i], acc);
    return acc;
}

Nat component(const Nat& n, unsigned i, unsigned len)
{
    if (len == 0) return Nat(0);
    Nat cur = n;
    for (unsigned k = 0; k < i && k + 1 < len; ++k)
        cur = proj1(cur);
    if (i + 1 >= len) return cur;
    return proj0(cur);
}

std::string to_string(const Nat& n) { return n.str(); }

Nat parse_nat(const std::string& s)
{
    if (s.empty()) throw std::invalid_argument("empty numeral");
    for (char c : s)
        if (c < '0' || c > '9') throw std::invalid_argument("bad numeral: " + s);
    return Nat(s);
}

}  // namespace ehaw
