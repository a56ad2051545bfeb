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

#include "trotterz/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"

#include "trotterz/errors.hpp"
#include "trotterz/rng.hpp"

namespace trotterz {

HamiltonianTerms make_hamiltonian(std::size_t n_qubits, const std::vector<PauliTerm>& terms) {
  if (n_qubits == 0) throw InvalidArgument("a Hamiltonian needs at least one qubit");
  std::vector<PauliTerm> merged;
  std::map<std::string, std::size_t> index;
  for (const PauliTerm& t : terms) {
    if (t.string.n_qubits() != n_qubits) {
      std::ostringstream msg;
      msg << "term " << t.string.str() << " has " << t.string.n_qubits() << " qubits, expected " << n_qubits;
      throw InvalidArgument(msg.str());
    }
    if (!t.string.is_hermitian()) throw InvalidArgument("term " + t.string.str() + " is not Hermitian");
    if (!std::isfinite(t.coeff)) throw InvalidArgument("non-finite coefficient");
    double c = t.string.phase_power() == 2 ? -t.coeff : t.coeff;
    PauliString s = t.string.with_phase_power(0);
    auto [it, fresh] = index.emplace(s.letters_string(), merged.size());
    if (fresh) {
      merged.push_back({c, std::move(s)});
    } else {
      merged[it->second].coeff += c;
    }
  }
  HamiltonianTerms out;
  out.n_qubits = n_qubits;
  for (PauliTerm& t : merged) {
    if (std::abs(t.coeff) >= kMergeDropThreshold) out.terms.push_back(std::move(t));
  }
  out.one_norm = compute_one_norm(out);
  return out;
}

double compute_one_norm(const HamiltonianTerms& h) {
  double s = 0.0;
  for (const PauliTerm& t : h.terms) s += std::abs(t.coeff);
  return s;
}

DenseOperator hamiltonian_dense(const HamiltonianTerms& h, std::size_t max_qubits) {
  if (h.n_qubits > max_qubits) {
    std::ostringstream msg;
    msg << "hamiltonian_dense: " << h.n_qubits << " qubits exceeds the dense cap of " << max_qubits;
    throw CapExceeded(msg.str());
  }
  std::uint64_t dim = std::uint64_t{1} << h.n_qubits;
  DenseOperator out = DenseOperator::Zero(dim, dim);
  for (const PauliTerm& t : h.terms) {
    std::uint64_t x = t.string.x_mask();
    for (std::uint64_t c = 0; c < dim; ++c) out(c ^ x, c) += t.coeff * pauli_column_amplitude(t.string, c);
  }
  return out;
}

NormalizedHamiltonian normalize_one_norm(const HamiltonianTerms& h) {
  double norm = compute_one_norm(h);
  if (norm <= 0.0) throw InvalidArgument("cannot normalize the zero Hamiltonian");
  NormalizedHamiltonian out{h, norm};
  for (PauliTerm& t : out.hamiltonian.terms) t.coeff /= norm;
  out.hamiltonian.one_norm = compute_one_norm(out.hamiltonian);
  return out;
}

HamiltonianTerms group_commuting(const HamiltonianTerms& h) {
  if (h.terms.empty()) throw InvalidArgument("group_commuting: no terms");
  HamiltonianTerms out = h;
  out.groups.clear();
  for (std::size_t i = 0; i < h.terms.size(); ++i) {
    bool placed = false;
    for (auto& group : out.groups) {
      bool fits = std::all_of(group.begin(), group.end(), [&](std::size_t j) {
        return pauli_commutes(h.terms[i].string, h.terms[j].string);
      });
      if (fits) {
        group.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) out.groups.push_back({i});
  }
  return out;
}

namespace {

PauliString random_string(std::size_t n, std::mt19937_64& rng, bool z_only) {
  while (true) {
    std::vector<Pauli> letters(n);
    for (auto& l : letters) {
      std::uint64_t r = rng();
      l = z_only ? ((r & 1) ? Pauli::Z : Pauli::I) : static_cast<Pauli>(r & 3);
    }
    PauliString p(std::move(letters));
    if (!p.is_identity()) return p;
  }
}

HamiltonianTerms random_model(std::size_t n_qubits, std::size_t n_terms, std::uint64_t seed, bool z_only,
                              bool require_noncommuting) {
  std::size_t available = z_only ? (std::size_t{1} << n_qubits) - 1 : (std::size_t{1} << (2 * n_qubits)) - 1;
  if (n_qubits == 0 || n_qubits > 12 || n_terms == 0 || n_terms > available) {
    throw InvalidArgument("random model: unsupported size");
  }
  std::mt19937_64 rng(derive_seed(seed, z_only ? "commuting-model" : "pauli-model"));
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::set<std::string> seen;
    std::vector<PauliTerm> terms;
    while (terms.size() < n_terms) {
      PauliString p = random_string(n_qubits, rng, z_only);
      if (!seen.insert(p.letters_string()).second) continue;
      double mag = 0.5 + 0.5 * uniform01(rng);
      double sign = (rng() & 1) ? -1.0 : 1.0;
      terms.push_back({sign * mag, std::move(p)});
    }
    bool noncommuting = false;
    for (std::size_t i = 0; i < terms.size() && !noncommuting; ++i) {
      for (std::size_t j = i + 1; j < terms.size(); ++j) {
        if (!pauli_commutes(terms[i].string, terms[j].string)) {
          noncommuting = true;
          break;
        }
      }
    }
    if (z_only || !require_noncommuting || noncommuting) {
      HamiltonianTerms h = make_hamiltonian(n_qubits, terms);
      h.seed = seed;
      h.provenance = z_only ? "random-commuting" : "random-pauli";
      return h;
    }
  }
  throw NumericalError("random model: could not draw a non-commuting instance");
}

}  // namespace

HamiltonianTerms random_pauli_model(std::size_t n_qubits, std::size_t n_terms, std::uint64_t seed,
                                    bool require_noncommuting) {
  return random_model(n_qubits, n_terms, seed, false, require_noncommuting);
}

HamiltonianTerms random_commuting_model(std::size_t n_qubits, std::size_t n_terms, std::uint64_t seed) {
  return random_model(n_qubits, n_terms, seed, true, false);
}

std::string hamiltonian_to_json(const HamiltonianTerms& h) {
  nlohmann::ordered_json doc;
  doc["n_qubits"] = h.n_qubits;
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const PauliTerm& t : h.terms) {
    nlohmann::ordered_json term;
    term["coeff"] = t.coeff;
    term["pauli"] = t.string.letters_string();
    terms.push_back(term);
  }
  doc["terms"] = terms;
  if (h.seed) {
    doc["seed"] = *h.seed;
  } else {
    doc["seed"] = nullptr;
  }
  doc["provenance"] = h.provenance;
  return doc.dump(2);
}

HamiltonianTerms hamiltonian_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("Hamiltonian JSON: ") + e.what());
  }
  try {
    if (!doc.is_object()) throw InvalidArgument("Hamiltonian JSON: expected an object");
    for (const auto& [key, _] : doc.items()) {
      if (key != "n_qubits" && key != "terms" && key != "seed" && key != "provenance") {
        throw InvalidArgument("Hamiltonian JSON: unknown key '" + key + "'");
      }
    }
    std::size_t n = doc.at("n_qubits").get<std::size_t>();
    std::vector<PauliTerm> terms;
    for (const auto& t : doc.at("terms")) {
      terms.push_back({t.at("coeff").get<double>(), PauliString::parse(t.at("pauli").get<std::string>())});
    }
    HamiltonianTerms h = make_hamiltonian(n, terms);
    if (doc.contains("seed") && !doc["seed"].is_null()) h.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("provenance")) h.provenance = doc["provenance"].get<std::string>();
    return h;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("Hamiltonian JSON: ") + e.what());
  }
}

}  // namespace trotterz
