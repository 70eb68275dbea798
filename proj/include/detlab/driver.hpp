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

#ifndef DETLAB_DRIVER_HPP
#define DETLAB_DRIVER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "detlab/report.hpp"

namespace detlab::driver {

/// Subcommand entry points; each takes parsed JSON inputs and produces a
/// deterministic report.  The CLI and the python module both route through
/// these.

Report amitsur_report(const Json& rep_json, const std::vector<int>& elements, int i,
                      std::uint64_t cap = 1'000'000);
Report pseudochar_report(const Json& rep_json, int d, bool exhaustive, int trials,
                         std::uint64_t seed, std::uint64_t cap = 100000);
Report dim2_verify_report(const Json& group_json, const Json& law_json);
Report dim2_deformations_report(const Json& group_json, const Json& base_json,
                                std::uint64_t cap = 1'000'000);
Report odd_locus_report(const Json& c_json, const Json& g_json, bool det_plus_one);
Report ch_quotient_report(const Json& rep_json);
Report ch_kernel_report(const Json& rep_json);
Report irreducible_report(const Json& rep_json, std::uint64_t seed);
Report gamma_report(const Json& group_json, int d, const Json& base_json);
Report newton_report(const Json& rep_json, int element, int order);
Report polarize_report(const Json& rep_json);
Report suite_all(const std::string& corpus_dir, std::uint64_t seed, int trials);

}  // namespace detlab::driver

#endif  // DETLAB_DRIVER_HPP
