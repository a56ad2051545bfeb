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

#include "trotterz/syk.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "trotterz/errors.hpp"
#include "trotterz/rng.hpp"

namespace trotterz {

namespace {

void require_valid_count(int n_majorana) {
  if (n_majorana < 4 || n_majorana % 2 != 0) {
    std::ostringstream msg;
    msg << "n_majorana must be even and at least 4, got " << n_majorana;
    throw InvalidArgument(msg.str());
  }
}

std::vector<std::array<int, 4>> quadruples(int n) {
  std::vector<std::array<int, 4>> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) out.push_back({i, j, k, l});
  return out;
}

}  // namespace

double VarianceRule::evaluate(int n_majorana) const {
  if (label == "standard") return 6.0 * j * j / std::pow(static_cast<double>(n_majorana), 3);
  if (label == "fixed") return variance;
  throw InvalidArgument("unknown variance rule '" + label + "'");
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

SykCouplings sample_syk(int n_majorana, std::uint64_t seed, const VarianceRule& rule) {
  require_valid_count(n_majorana);
  double sigma = std::sqrt(rule.evaluate(n_majorana));
  if (!std::isfinite(sigma)) throw InvalidArgument("variance rule produced a non-finite width");
  SykCouplings c;
  c.n_majorana = n_majorana;
  c.seed = seed;
  c.variance_rule = rule;
  c.indices = quadruples(n_majorana);
  std::mt19937_64 rng(derive_seed(seed, "syk-couplings"));
  c.values.reserve(c.indices.size());
  for (std::size_t i = 0; i < c.indices.size(); ++i) c.values.push_back(sigma * standard_normal(rng));
  return c;
}

SykCouplings constant_syk(int n_majorana, double value) {
  require_valid_count(n_majorana);
  SykCouplings c;
  c.n_majorana = n_majorana;
  c.indices = quadruples(n_majorana);
  c.values.assign(c.indices.size(), value);
  c.variance_rule.label = "fixed";
  c.variance_rule.variance = 0.0;
  return c;
}

MajoranaString jordan_wigner_majorana(int index, int n_majorana) {
  if (n_majorana < 2 || n_majorana % 2 != 0) throw InvalidArgument("n_majorana must be even and positive");
  if (index < 1 || index > n_majorana) {
    std::ostringstream msg;
    msg << "Majorana index " << index << " out of range 1.." << n_majorana;
    throw InvalidArgument(msg.str());
  }
  int n_qubits = n_majorana / 2;
  int k = (index + 1) / 2;
  std::vector<Pauli> letters(n_qubits, Pauli::I);
  for (int q = 0; q < k - 1; ++q) letters[q] = Pauli::Z;
  letters[k - 1] = (index % 2 == 1) ? Pauli::X : Pauli::Y;
  return {1.0 / std::sqrt(2.0), PauliString(std::move(letters))};
}

HamiltonianTerms build_syk_hamiltonian(const SykCouplings& couplings) {
  require_valid_count(couplings.n_majorana);
  if (couplings.indices.size() != couplings.values.size()) {
    throw InvalidArgument("coupling indices and values differ in length");
  }
  int n = couplings.n_majorana;
  std::vector<MajoranaString> gamma;
  for (int i = 1; i <= n; ++i) gamma.push_back(jordan_wigner_majorana(i, n));
  const double prefactor = 1.0 / (4.0 * 24.0);
  std::vector<PauliTerm> terms;
  terms.reserve(couplings.values.size());
  for (std::size_t t = 0; t < couplings.indices.size(); ++t) {
    const auto& q = couplings.indices[t];
    for (int a = 0; a < 4; ++a) {
      if (q[a] < 1 || q[a] > n || (a > 0 && q[a] <= q[a - 1])) {
        throw InvalidArgument("coupling indices must be strictly increasing within 1..n_majorana");
      }
    }
    PauliString p = gamma[q[0] - 1].string * gamma[q[1] - 1].string * gamma[q[2] - 1].string *
                    gamma[q[3] - 1].string;
    if (!p.is_hermitian()) throw NumericalError("four-Majorana product is not Hermitian");
    double scale = gamma[q[0] - 1].prefactor * gamma[q[1] - 1].prefactor * gamma[q[2] - 1].prefactor *
                   gamma[q[3] - 1].prefactor;
    terms.push_back({prefactor * scale * couplings.values[t], p});
  }
  HamiltonianTerms h = make_hamiltonian(static_cast<std::size_t>(n / 2), terms);
  h.seed = couplings.seed;
  h.provenance = "syk n_majorana=" + std::to_string(n) + " variance=" + couplings.variance_rule.label;
  return h;
}

}  // namespace trotterz
