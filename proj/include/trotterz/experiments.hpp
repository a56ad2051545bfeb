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

#ifndef TROTTERZ_EXPERIMENTS_HPP
#define TROTTERZ_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trotterz/errors.hpp"
#include "trotterz/hamiltonian.hpp"

namespace trotterz {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumeric = 3;

/// Version of every emitted CSV/JSON layout.
inline constexpr int kFormatVersion = 1;

/// Bad or unknown configuration content.
class ConfigError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> mode;
  /// Directory that relative model paths resolve against.
  std::string base_dir = ".";
};

struct Artifacts {
  /// (file name, content), in emission order.
  std::vector<std::pair<std::string, std::string>> files;
  std::uint64_t master_seed = 0;
  /// Failed stage assertions; empty on success.
  std::vector<std::string> failures;

  const std::string& file(std::string_view name) const;
};

/// Builds a model from a JSON description:
///   {"type": "syk", "n_majorana", "seed", "variance"?, "normalize"?}
///   {"type": "random", "n_qubits", "terms", "seed", "normalize"?}
///   {"type": "commuting", "n_qubits", "terms", "seed", "normalize"?}
///   {"type": "pauli", "hamiltonian": {...}} or {"type": "file", "path"}
HamiltonianTerms model_from_json(std::string_view text, const std::string& base_dir = ".");

Artifacts cmd_lwf_convergence(std::string_view config, const Overrides& overrides = {});
Artifacts cmd_qubits_saved(std::string_view config, const Overrides& overrides = {});
Artifacts cmd_trotter_order(std::string_view config, const Overrides& overrides = {});
Artifacts cmd_pipeline(std::string_view config, const Overrides& overrides = {});

/// manifest.json for a finished command.
std::string build_manifest(const std::string& command, std::string_view config, const Artifacts& artifacts,
                           const std::string& started_utc, const std::string& finished_utc);

/// Runs a subcommand end to end: reads the config, writes artifacts and the
/// manifest under out_dir, and maps failures to exit codes. On failure an
/// error.json is written instead.
int run_command(const std::string& command, const std::string& config_path, const std::string& out_dir,
                const Overrides& overrides, std::ostream& log);

}  // namespace trotterz

#endif
