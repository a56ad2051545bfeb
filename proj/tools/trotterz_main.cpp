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

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "trotterz/experiments.hpp"

int main(int argc, char** argv) {
  CLI::App app{"trotterz: Trotter-interpolated partition functions"};
  app.set_version_flag("--version", std::string(TROTTERZ_VERSION));
  app.require_subcommand(1);

  std::string config;
  std::string out = ".";
  std::optional<std::uint64_t> seed;
  std::optional<std::string> mode;

  const char* names[][2] = {
      {"lwf-convergence", "Taylor and low-weight Fourier truncation errors against order"},
      {"qubits-saved", "Ancilla savings against a qubitization block encoding"},
      {"pipeline", "Interpolated partition function for one model"},
      {"trotter-order", "Effective-Hamiltonian error against step size"},
  };
  for (auto& [name, help] : names) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", config, "JSON configuration file")->check(CLI::ExistingFile);
    sub->add_option("--seed", seed, "Master seed, overrides the config");
    sub->add_option("--out", out, "Output directory");
    if (std::string(name) == "pipeline")
      sub->add_option("--mode", mode, "Trace mode")->check(CLI::IsMember({"exact", "gqsp", "ideal-w", "sampled"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : trotterz::kExitConfig;
  }

  trotterz::Overrides ov;
  ov.seed = seed;
  ov.mode = mode;
  const std::string command = app.get_subcommands().front()->get_name();
  return trotterz::run_command(command, config, out, ov, std::cerr);
}
