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

#ifndef TROTTERZ_HAMILTONIAN_HPP
#define TROTTERZ_HAMILTONIAN_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trotterz/dense.hpp"
#include "trotterz/pauli.hpp"

namespace trotterz {

struct PauliTerm {
  double coeff = 0.0;
  PauliString string;
};

/// H = sum_gamma coeff_gamma * string_gamma, with commuting groups.
struct HamiltonianTerms {
  std::size_t n_qubits = 0;
  std::vector<PauliTerm> terms;
  double one_norm = 0.0;
  /// Partition of term indices into mutually commuting sets. Empty until
  /// group_commuting runs.
  std::vector<std::vector<std::size_t>> groups;
  std::optional<std::uint64_t> seed;
  std::string provenance;

  std::size_t size() const { return terms.size(); }
};

inline constexpr double kMergeDropThreshold = 1e-14;

/// Validates strings, folds real phases into coefficients, merges equal
/// strings (first occurrence order) and drops merged coefficients below 1e-14.
HamiltonianTerms make_hamiltonian(std::size_t n_qubits, const std::vector<PauliTerm>& terms);

double compute_one_norm(const HamiltonianTerms& h);

DenseOperator hamiltonian_dense(const HamiltonianTerms& h, std::size_t max_qubits = kDefaultDenseCap);

struct NormalizedHamiltonian {
  HamiltonianTerms hamiltonian;
  /// Original one-norm; Z_original(beta) = Z_normalized(beta * scale).
  double scale = 1.0;
};

NormalizedHamiltonian normalize_one_norm(const HamiltonianTerms& h);

/// Greedy first-fit coloring of the anticommutation graph in term order.
HamiltonianTerms group_commuting(const HamiltonianTerms& h);

/// Random model with distinct non-identity strings and coefficients of
/// magnitude in [0.5, 1]. When require_noncommuting is set, at least one pair
/// of terms anticommutes.
HamiltonianTerms random_pauli_model(std::size_t n_qubits, std::size_t n_terms, std::uint64_t seed,
                                    bool require_noncommuting = true);

/// Random model whose terms all commute (products of Z strings).
HamiltonianTerms random_commuting_model(std::size_t n_qubits, std::size_t n_terms, std::uint64_t seed);

/// JSON document {n_qubits, terms: [{coeff, pauli}], seed, provenance}.
std::string hamiltonian_to_json(const HamiltonianTerms& h);
HamiltonianTerms hamiltonian_from_json(std::string_view text);

}  // namespace trotterz

#endif
