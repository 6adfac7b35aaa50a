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

#include "vtemp/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace vtemp::io {

namespace {

std::vector<double> number_array(const json& j, const char* key) {
  if (!j.contains(key)) throw Error(Errc::kParseError, std::string("missing \"") + key + "\"");
  const json& arr = j.at(key);
  if (!arr.is_array()) throw Error(Errc::kParseError, std::string("\"") + key + "\" must be an array");
  std::vector<double> out;
  out.reserve(arr.size());
  for (const json& v : arr) {
    if (!v.is_number()) throw Error(Errc::kParseError, std::string("\"") + key + "\" must contain numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

DiagonalSystem state_from_json(const json& j) {
  if (!j.is_object()) throw Error(Errc::kParseError, "state must be a JSON object");
  std::optional<std::string> label;
  if (j.contains("label") && !j.at("label").is_null()) {
    if (!j.at("label").is_string()) throw Error(Errc::kParseError, "\"label\" must be a string");
    label = j.at("label").get<std::string>();
  }
  return DiagonalSystem::make(number_array(j, "energies"), number_array(j, "populations"), std::move(label));
}

json state_to_json(const DiagonalSystem& sys) {
  json j = json::object();
  j["energies"] = std::vector<double>(sys.energies().begin(), sys.energies().end());
  j["populations"] = std::vector<double>(sys.populations().begin(), sys.populations().end());
  if (sys.label()) j["label"] = *sys.label();
  return j;
}

DiagonalSystem read_state(std::istream& in) {
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::kParseError, e.what());
  }
  return state_from_json(j);
}

DiagonalSystem load_state(const std::string& path) {
  if (path == "-") return read_state(std::cin);
  std::ifstream in(path);
  if (!in) throw Error(Errc::kIoError, "cannot open " + path);
  return read_state(in);
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw Error(Errc::kIoError, "cannot write to standard output");
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::kIoError, "cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out) throw Error(Errc::kIoError, "cannot write " + path);
}

json virtual_temp_to_json(VirtualTemp beta) {
  if (beta.is_finite()) return beta.value();
  return beta.value() > 0 ? "+inf" : "-inf";
}

VirtualTemp virtual_temp_from_json(const json& j) {
  if (j.is_number()) return VirtualTemp(j.get<double>());
  if (j == "+inf") return VirtualTemp::plus_infinity();
  if (j == "-inf") return VirtualTemp::minus_infinity();
  throw Error(Errc::kParseError, "virtual temperature must be a number, \"+inf\" or \"-inf\"");
}

json certificate_to_json(const ActivationCertificate& cert) {
  const CompositeTransition& c = cert.composite;
  json j = json::object();
  j["cold"] = {{"hi", c.base_cold.hi}, {"lo", c.base_cold.lo}};
  j["hot"] = {{"hi", c.base_hot.hi}, {"lo", c.base_hot.lo}};
  j["n"] = c.n;
  j["k"] = c.k;
  j["gap"] = c.gap;
  j["beta_v"] = virtual_temp_to_json(c.beta);
  j["work"] = cert.work;
  j["total_copies"] = cert.total_copies;
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace vtemp::io
