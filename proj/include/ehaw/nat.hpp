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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ehaw {

using Nat = boost::multiprecision::cpp_int;

// Cantor pairing: <a,b> = (a+b)(a+b+1)/2 + b.
Nat pair(const Nat& a, const Nat& b);
void unpair(const Nat& z, Nat& a, Nat& b);
Nat proj(unsigned i, const Nat& z);
inline Nat proj0(const Nat& z) { return proj(0, z); }
inline Nat proj1(const Nat& z) { return proj(1, z); }

// Right nested without terminator: tuple([x]) = x, tuple([]) = 0.
Nat tuple(const std::vector<Nat>& xs);

// i-th entry of a tuple of length len.
Nat component(const Nat& n, unsigned i, unsigned len);

Nat isqrt(const Nat& n);

std::string to_string(const Nat& n);
Nat parse_nat(const std::string& s);  // throws std::invalid_argument

inline bool fits_u64(const Nat& n) { return n >= 0 && boost::multiprecision::msb(n | 1) < 64; }
inline uint64_t to_u64(const Nat& n) { return n.convert_to<uint64_t>(); }
inline size_t bit_length(const Nat& n) { return n == 0 ? 0 : boost::multiprecision::msb(n) + 1; }

}  // namespace ehaw
