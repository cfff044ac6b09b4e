// Copyright 2026 The hypermc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string_view>

#include "json.hpp"

namespace hypermc::io {

// Reads the TOML subset used by run configurations: comments, [dotted.table]
// headers, bare or quoted keys (dotted allowed), and values that are strings,
// integers, floats, booleans or arrays of those (arrays may span lines).
// Errors are ParseError with the line number.
nlohmann::json parse_toml_lite(std::string_view text);

}  // namespace hypermc::io
