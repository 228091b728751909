// Copyright 2026 The swipt-ee Authors
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

#ifndef SWIPT_SEEDING_HPP_
#define SWIPT_SEEDING_HPP_

#include <cstdint>

namespace swipt {

// SplitMix64 finalizer (Steele, Lea & Flood). A bijection on 64-bit words
// with full avalanche, used to derive independent stream seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed of stream `index` under `parent`. Depends only on the two inputs, so
// trial t sees the same channel however trials are partitioned.
constexpr std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index) {
  return splitmix64(splitmix64(parent) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

}  // namespace swipt

#endif  // SWIPT_SEEDING_HPP_
