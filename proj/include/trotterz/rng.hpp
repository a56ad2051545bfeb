// Copyright 2026 The trotterz Authors
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

#ifndef TROTTERZ_RNG_HPP
#define TROTTERZ_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace trotterz {

/// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);

/// Child seed for a named component. Stable across platforms and releases.
std::uint64_t derive_seed(std::uint64_t master, std::string_view label);
std::uint64_t derive_seed(std::uint64_t master, std::string_view label, std::uint64_t index);

/// Uniform double in [0, 1) from the top 53 bits.
double uniform01(std::mt19937_64& rng);

/// Standard normal draw via Box-Muller; unlike std::normal_distribution the
/// output sequence is identical on every standard library.
double standard_normal(std::mt19937_64& rng);

}  // namespace trotterz

#endif
