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

#ifndef TROTTERZ_PAULI_HPP
#define TROTTERZ_PAULI_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "trotterz/dense.hpp"

namespace trotterz {

inline constexpr std::size_t kDefaultDenseCap = 12;

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// A phase i^k times a tensor product of single-qubit Pauli letters.
///
/// Letter 0 is the leftmost Kronecker factor, i.e. the most significant bit of
/// a computational basis index.
class PauliString {
 public:
  PauliString() = default;
  /// Identity on n qubits.
  explicit PauliString(std::size_t n_qubits);
  explicit PauliString(std::vector<Pauli> letters, int phase_power = 0);

  /// Parses "XZIY", "+XZ", "-iYY", "iX". '_' is accepted for identity.
  static PauliString parse(std::string_view text);

  std::size_t n_qubits() const { return letters_.size(); }
  Pauli letter(std::size_t q) const { return letters_.at(q); }
  const std::vector<Pauli>& letters() const { return letters_; }
  /// Phase is i^phase_power(), phase_power() in {0, 1, 2, 3}.
  int phase_power() const { return phase_power_; }
  Complex phase() const;
  bool is_hermitian() const { return phase_power_ % 2 == 0; }
  bool is_identity() const;

  /// Bit masks over basis indices: bit (n-1-q) corresponds to letter q.
  std::uint64_t x_mask() const;
  std::uint64_t z_mask() const;

  /// Letters only, e.g. "XZIY".
  std::string letters_string() const;
  /// Phase prefix and letters, e.g. "-iXZ".
  std::string str() const;

  PauliString with_phase_power(int k) const;

  bool operator==(const PauliString& other) const = default;

 private:
  std::vector<Pauli> letters_;
  int phase_power_ = 0;
};

PauliString pauli_multiply(const PauliString& a, const PauliString& b);
inline PauliString operator*(const PauliString& a, const PauliString& b) { return pauli_multiply(a, b); }

/// True iff the two strings anticommute on an even number of sites.
bool pauli_commutes(const PauliString& a, const PauliString& b);

DenseOperator to_dense(const PauliString& p, std::size_t max_qubits = kDefaultDenseCap);

/// Amplitude of P|c> = amplitude * |c xor x_mask>.
Complex pauli_column_amplitude(const PauliString& p, std::uint64_t column);

/// U <- U * exp(i * angle * P) for a Hermitian string P, in O(dim^2).
void right_multiply_rotation(DenseOperator& u, const PauliString& p, Complex angle);

}  // namespace trotterz

#endif
