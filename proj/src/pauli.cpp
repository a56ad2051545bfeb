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

#include "trotterz/pauli.hpp"

#include <bit>
#include <sstream>

#include "trotterz/errors.hpp"

namespace trotterz {

namespace {

constexpr Complex kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void require_same_size(const PauliString& a, const PauliString& b, const char* what) {
  if (a.n_qubits() != b.n_qubits()) {
    std::ostringstream msg;
    msg << what << ": size mismatch (" << a.n_qubits() << " vs " << b.n_qubits() << " qubits)";
    throw InvalidArgument(msg.str());
  }
}

// Single-site product a*b = i^k c.
struct SiteProduct {
  Pauli letter;
  int phase_power;
};

SiteProduct multiply_site(Pauli a, Pauli b) {
  if (a == Pauli::I) return {b, 0};
  if (b == Pauli::I) return {a, 0};
  if (a == b) return {Pauli::I, 0};
  int ia = static_cast<int>(a);
  int ib = static_cast<int>(b);
  Pauli c = static_cast<Pauli>(ia ^ ib);
  // Cyclic order X -> Y -> Z gives +i, anticyclic gives -i.
  bool cyclic = (ib - ia + 3) % 3 == 1;
  return {c, cyclic ? 1 : 3};
}

}  // namespace

PauliString::PauliString(std::size_t n_qubits) : letters_(n_qubits, Pauli::I) {}

PauliString::PauliString(std::vector<Pauli> letters, int phase_power)
    : letters_(std::move(letters)), phase_power_(((phase_power % 4) + 4) % 4) {}

PauliString PauliString::parse(std::string_view text) {
  int k = 0;
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') k += 2;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    k += 1;
    ++pos;
  }
  std::vector<Pauli> letters;
  for (; pos < text.size(); ++pos) {
    switch (text[pos]) {
      case 'I':
      case '_':
        letters.push_back(Pauli::I);
        break;
      case 'X':
        letters.push_back(Pauli::X);
        break;
      case 'Y':
        letters.push_back(Pauli::Y);
        break;
      case 'Z':
        letters.push_back(Pauli::Z);
        break;
      default:
        throw InvalidArgument("invalid Pauli string '" + std::string(text) + "'");
    }
  }
  if (letters.empty()) throw InvalidArgument("empty Pauli string");
  return PauliString(std::move(letters), k);
}

Complex PauliString::phase() const { return kPhases[phase_power_]; }

bool PauliString::is_identity() const {
  for (Pauli p : letters_) {
    if (p != Pauli::I) return false;
  }
  return true;
}

std::uint64_t PauliString::x_mask() const {
  if (letters_.size() > 64) throw CapExceeded("bit masks support at most 64 qubits");
  std::uint64_t m = 0;
  std::size_t n = letters_.size();
  for (std::size_t q = 0; q < n; ++q) {
    if (letters_[q] == Pauli::X || letters_[q] == Pauli::Y) m |= std::uint64_t{1} << (n - 1 - q);
  }
  return m;
}

std::uint64_t PauliString::z_mask() const {
  if (letters_.size() > 64) throw CapExceeded("bit masks support at most 64 qubits");
  std::uint64_t m = 0;
  std::size_t n = letters_.size();
  for (std::size_t q = 0; q < n; ++q) {
    if (letters_[q] == Pauli::Z || letters_[q] == Pauli::Y) m |= std::uint64_t{1} << (n - 1 - q);
  }
  return m;
}

std::string PauliString::letters_string() const {
  static constexpr char kNames[4] = {'I', 'X', 'Y', 'Z'};
  std::string out;
  out.reserve(letters_.size());
  for (Pauli p : letters_) out.push_back(kNames[static_cast<int>(p)]);
  return out;
}

std::string PauliString::str() const {
  static constexpr const char* kPrefix[4] = {"+", "+i", "-", "-i"};
  return kPrefix[phase_power_] + letters_string();
}

PauliString PauliString::with_phase_power(int k) const { return PauliString(letters_, k); }

PauliString pauli_multiply(const PauliString& a, const PauliString& b) {
  require_same_size(a, b, "pauli_multiply");
  std::vector<Pauli> letters(a.n_qubits());
  int k = a.phase_power() + b.phase_power();
  for (std::size_t q = 0; q < letters.size(); ++q) {
    SiteProduct sp = multiply_site(a.letter(q), b.letter(q));
    letters[q] = sp.letter;
    k += sp.phase_power;
  }
  return PauliString(std::move(letters), k);
}

bool pauli_commutes(const PauliString& a, const PauliString& b) {
  require_same_size(a, b, "pauli_commutes");
  int anti = 0;
  for (std::size_t q = 0; q < a.n_qubits(); ++q) {
    Pauli x = a.letter(q);
    Pauli y = b.letter(q);
    if (x != Pauli::I && y != Pauli::I && x != y) ++anti;
  }
  return anti % 2 == 0;
}

Complex pauli_column_amplitude(const PauliString& p, std::uint64_t column) {
  // Y|b> = i(-1)^b |1-b>, Z|b> = (-1)^b |b>.
  std::uint64_t z = p.z_mask();
  std::uint64_t x = p.x_mask();
  int n_y = std::popcount(z & x);
  int sign_flips = std::popcount(z & column);
  int k = p.phase_power() + n_y + 2 * sign_flips;
  return kPhases[k & 3];
}

DenseOperator to_dense(const PauliString& p, std::size_t max_qubits) {
  if (p.n_qubits() > max_qubits) {
    std::ostringstream msg;
    msg << "to_dense: " << p.n_qubits() << " qubits exceeds the dense cap of " << max_qubits;
    throw CapExceeded(msg.str());
  }
  std::uint64_t dim = std::uint64_t{1} << p.n_qubits();
  std::uint64_t x = p.x_mask();
  DenseOperator out = DenseOperator::Zero(dim, dim);
  for (std::uint64_t c = 0; c < dim; ++c) out(c ^ x, c) = pauli_column_amplitude(p, c);
  return out;
}

void right_multiply_rotation(DenseOperator& u, const PauliString& p, Complex angle) {
  if (!p.is_hermitian()) throw InvalidArgument("rotation generator must be Hermitian");
  std::uint64_t dim = std::uint64_t{1} << p.n_qubits();
  if (static_cast<std::uint64_t>(u.cols()) != dim) throw InvalidArgument("rotation: dimension mismatch");
  Complex c = std::cos(angle);
  Complex is = Complex(0, 1) * std::sin(angle);
  std::uint64_t x = p.x_mask();
  if (x == 0) {
    // Diagonal string: scale columns.
    for (std::uint64_t col = 0; col < dim; ++col) {
      u.col(col) *= c + is * pauli_column_amplitude(p, col);
    }
    return;
  }
  // Columns pair up as (col, col^x); (U P)[:, col] = amp(col) U[:, col^x].
  for (std::uint64_t col = 0; col < dim; ++col) {
    std::uint64_t partner = col ^ x;
    if (partner < col) continue;
    Complex a_col = pauli_column_amplitude(p, col);
    Complex a_par = pauli_column_amplitude(p, partner);
    Eigen::VectorXcd uc = u.col(col);
    Eigen::VectorXcd up = u.col(partner);
    u.col(col) = c * uc + is * a_col * up;
    u.col(partner) = c * up + is * a_par * uc;
  }
}

}  // namespace trotterz
