// Copyright 2026 The vtemp Authors
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

// JSON state files and certificate serialization.
//
// State file: {"energies": [numbers], "populations": [numbers], "label": "optional"}
// Certificate: {"cold": {"hi", "lo"}, "hot": {"hi", "lo"}, "n", "k", "gap",
//               "beta_v", "work", "total_copies"}
// Non-finite virtual temperatures are written as the strings "+inf" / "-inf".

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "vtemp/activation.hpp"
#include "vtemp/core.hpp"

namespace vtemp::io {

using nlohmann::json;

/// Throws kParseError on schema violations and the DiagonalSystem::make
/// errors on invalid values.
DiagonalSystem state_from_json(const json& j);
json state_to_json(const DiagonalSystem& sys);

DiagonalSystem read_state(std::istream& in);

/// "-" reads standard input. Throws kIoError if the file cannot be opened.
DiagonalSystem load_state(const std::string& path);

/// "-" writes standard output. Throws kIoError on failure.
void write_text(const std::string& path, const std::string& text);

json virtual_temp_to_json(VirtualTemp beta);
VirtualTemp virtual_temp_from_json(const json& j);

json certificate_to_json(const ActivationCertificate& cert);

/// Serialized form used for every JSON document: two-space indent and a
/// trailing newline. Doubles are printed in shortest round-trip form.
std::string dump(const json& j);

}  // namespace vtemp::io
