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

#ifndef TROTTERZ_SYK_HPP
#define TROTTERZ_SYK_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "trotterz/hamiltonian.hpp"
#include "trotterz/pauli.hpp"

namespace trotterz {

/// Coupling variance as a function of the Majorana count.
struct VarianceRule {
  /// "standard": 3! J^2 / n^3. "fixed": the value of `variance`.
  std::string label = "standard";
  double j = 1.0;
  double variance = 1.0;

  double evaluate(int n_majorana) const;
};

struct SykCouplings {
  int n_majorana = 0;
  /// 1-based, strictly increasing, lexicographic order.
  std::vector<std::array<int, 4>> indices;
  std::vector<double> values;
  std::uint64_t seed = 0;
  VarianceRule variance_rule;
};

std::uint64_t binomial(int n, int k);

SykCouplings sample_syk(int n_majorana, std::uint64_t seed, const VarianceRule& rule = {});

/// All couplings set to `value`.
SykCouplings constant_syk(int n_majorana, double value);

struct MajoranaString {
  double prefactor = 0.0;
  PauliString string;
};

/// gamma_{2k-1} = Z..Z X_k / sqrt(2), gamma_{2k} = Z..Z Y_k / sqrt(2).
MajoranaString jordan_wigner_majorana(int index, int n_majorana);

/// (1 / (4 * 4!)) sum_{i<j<k<l} J_ijkl gamma_i gamma_j gamma_k gamma_l.
HamiltonianTerms build_syk_hamiltonian(const SykCouplings& couplings);

}  // namespace trotterz

#endif
