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

#ifndef TROTTERZ_DIGEST_HPP
#define TROTTERZ_DIGEST_HPP

#include <string>
#include <string_view>

namespace trotterz {

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(std::string_view bytes);

/// printf("%.17g"), the round-trip text form used for all emitted numbers.
std::string format_double(double v);

}  // namespace trotterz

#endif
