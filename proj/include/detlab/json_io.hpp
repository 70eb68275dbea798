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

#ifndef DETLAB_JSON_IO_HPP
#define DETLAB_JSON_IO_HPP

#include <memory>
#include <string>

#include "detlab/dim2.hpp"
#include "detlab/matrix.hpp"
#include "detlab/report.hpp"
#include "detlab/rings.hpp"

namespace detlab {

/// Ring specs: {"kind":"Integers"} | {"kind":"Rationals"} | {"kind":"Zmod","n":7}
/// | {"kind":"Fp","p":7} | {"kind":"Poly","base":...,"vars":["t1"]}
/// | {"kind":"Dual","base":...}.  Moduli accept numbers or decimal strings.
RingContextPtr ring_from_json(const Json& j);
Json ring_to_json(const RingContextPtr& ctx);

/// Scalars parse from decimal/fraction strings ("-3", "3/2") or JSON numbers.
RingElem scalar_from_json(const Json& j, const RingContextPtr& ctx);
Json scalar_to_json(const RingElem& v);

/// Groups: {"size":m,"identity":0,"table":[[...]],"labels":[...]} or
/// {"permutations":[[1,0],...]}.
MonoidPtr group_from_json(const Json& j);
Json group_to_json(const FiniteMonoidTable& table);

/// Representations: {"d":2,"ring":...,"images":{"0":[["1","0"],["0","1"]],...},
/// "group":...}.  The group may also be supplied separately.
std::shared_ptr<MatrixRep> rep_from_json(const Json& j, MonoidPtr group = nullptr);

/// Matrices: {"ring":..., "entries":[["1","0"],["0","1"]]}.
Matrix matrix_from_json(const Json& j, RingContextPtr ctx = nullptr);

/// Dimension-2 value tables: {"ring":..., "T":{"0":"2",...}, "D":{...}}.
Dim2Law dim2_law_from_json(const Json& j, MonoidPtr group);

Json parse_json_file(const std::string& path);
Json parse_json_text(const std::string& text);

}  // namespace detlab

#endif  // DETLAB_JSON_IO_HPP
