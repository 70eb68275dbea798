// Copyright 2026 The detlab Authors
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

#include "detlab/report.hpp"

#include <sstream>

namespace detlab {

Json CheckResult::to_json() const {
  Json j;
  j["name"] = name;
  j["anchor"] = anchor;
  j["origin"] = origin;
  j["pass"] = pass;
  if (!witness.empty()) j["witness"] = witness;
  if (!details.is_null()) j["details"] = details;
  return j;
}

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

int Report::failure_count() const {
  int n = 0;
  for (const auto& c : checks)
    if (!c.pass) ++n;
  return n;
}

void Report::merge(const Report& other) {
  for (const auto& c : other.checks) checks.push_back(c);
}

Json Report::to_json() const {
  Json j;
  j["tool"] = "detlab";
  j["subcommand"] = subcommand;
  if (!params.is_null()) j["params"] = params;
  j["checks"] = Json::array();
  for (const auto& c : checks) j["checks"].push_back(c.to_json());
  j["failures"] = failure_count();
  j["pass"] = all_pass();
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.anchor.empty()) os << "  [" << c.anchor << "]";
    if (!c.pass && !c.witness.empty()) os << "\n      witness: " << c.witness;
    os << "\n";
  }
  os << (all_pass() ? "OK" : "FAILED") << " (" << checks.size() << " checks, "
     << failure_count() << " failures)\n";
  return os.str();
}

}  // namespace detlab
