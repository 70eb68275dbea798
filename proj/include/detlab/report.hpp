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

#ifndef DETLAB_REPORT_HPP
#define DETLAB_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace detlab {

using Json = nlohmann::ordered_json;

/// One verified identity.  `anchor` names the mathematical fact being checked
/// (e.g. "amitsur-formula", "newton-relations"); `origin` records how the
/// expected value was obtained: "definition" for direct consequences of the
/// definitions, "oracle" for values recomputed through an independent route,
/// "literature" for classical closed forms.
struct CheckResult {
  std::string name;
  std::string anchor;
  std::string origin = "oracle";
  bool pass = true;
  std::string witness;  // counterexample description when pass is false
  Json details;

  Json to_json() const;
};

/// Ordered collection of checks; serialization is byte-stable for a fixed
/// input/seed pair.
struct Report {
  std::string subcommand;
  Json params;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  int failure_count() const;
  void add(CheckResult c) { checks.push_back(std::move(c)); }
  void merge(const Report& other);

  Json to_json() const;
  std::string to_text() const;
};

}  // namespace detlab

#endif  // DETLAB_REPORT_HPP
