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

#include "detlab/json_io.hpp"

#include <fstream>

namespace detlab {

namespace {

Int int_from_json(const Json& j, const std::string& what) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) return Int(j.get<std::string>());
  fail("ParseError", what + " must be an integer or a decimal string");
}

}  // namespace

RingContextPtr ring_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) fail("ParseError", "ring spec needs a \"kind\" field");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "Integers" || kind == "Z") return RingContext::integers();
  if (kind == "Rationals" || kind == "Q") return RingContext::rationals();
  if (kind == "Zmod") {
    if (!j.contains("n")) fail("ParseError", "Zmod needs \"n\"");
    return RingContext::integers_mod(int_from_json(j.at("n"), "n"));
  }
  if (kind == "Fp") {
    if (!j.contains("p")) fail("ParseError", "Fp needs \"p\"");
    return RingContext::prime_field(int_from_json(j.at("p"), "p"));
  }
  if (kind == "Poly") {
    if (!j.contains("base") || !j.contains("vars")) fail("ParseError", "Poly needs \"base\" and \"vars\"");
    std::vector<std::string> vars;
    for (const auto& v : j.at("vars")) vars.push_back(v.get<std::string>());
    return RingContext::polynomial(ring_from_json(j.at("base")), std::move(vars));
  }
  if (kind == "Dual") {
    if (!j.contains("base")) fail("ParseError", "Dual needs \"base\"");
    return RingContext::dual(ring_from_json(j.at("base")));
  }
  fail("ParseError", "unknown ring kind \"" + kind + "\"");
}

Json ring_to_json(const RingContextPtr& ctx) {
  Json j;
  switch (ctx->kind) {
    case RingKind::Integers:
      j["kind"] = "Integers";
      break;
    case RingKind::Rationals:
      j["kind"] = "Rationals";
      break;
    case RingKind::IntegersMod:
      j["kind"] = "Zmod";
      j["n"] = ctx->modulus.str();
      break;
    case RingKind::PrimeField:
      j["kind"] = "Fp";
      j["p"] = ctx->modulus.str();
      break;
    case RingKind::Polynomial:
      j["kind"] = "Poly";
      j["base"] = ring_to_json(ctx->base);
      j["vars"] = ctx->vars;
      break;
    case RingKind::DualNumbers:
      j["kind"] = "Dual";
      j["base"] = ring_to_json(ctx->base);
      break;
  }
  return j;
}

RingElem scalar_from_json(const Json& j, const RingContextPtr& ctx) {
  if (j.is_number_integer()) return RingElem::from_int(ctx, Int(j.get<long long>()));
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    auto slash = s.find('/');
    if (slash == std::string::npos) return RingElem::from_int(ctx, Int(s));
    Int num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den == 0) fail("ParseError", "zero denominator in \"" + s + "\"");
    return RingElem::from_rat(ctx, Rat(num, den));
  }
  fail("ParseError", "scalar must be an integer or a decimal/fraction string");
}

Json scalar_to_json(const RingElem& v) { return Json(v.str()); }

MonoidPtr group_from_json(const Json& j) {
  if (!j.is_object()) fail("ParseError", "group spec must be an object");
  if (j.contains("permutations")) {
    std::vector<std::vector<int>> gens;
    for (const auto& g : j.at("permutations")) gens.push_back(g.get<std::vector<int>>());
    return monoid_from_permutations(gens).table;
  }
  if (!j.contains("table") || !j.contains("identity"))
    fail("ParseError", "group spec needs \"table\" and \"identity\" (or \"permutations\")");
  std::vector<std::vector<int>> table;
  for (const auto& row : j.at("table")) table.push_back(row.get<std::vector<int>>());
  if (j.contains("size") && j.at("size").get<int>() != static_cast<int>(table.size()))
    fail("ParseError", "declared size differs from the table");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  auto monoid = std::make_shared<FiniteMonoidTable>(std::move(table), j.at("identity").get<int>(),
                                                    std::move(labels));
  if (j.contains("inverse")) {
    std::vector<int> declared = j.at("inverse").get<std::vector<int>>();
    if (!monoid->inverses() || *monoid->inverses() != declared)
      fail("ParseError", "declared inverse list disagrees with the table");
  }
  return monoid;
}

Json group_to_json(const FiniteMonoidTable& table) {
  Json j;
  j["size"] = table.size();
  j["identity"] = table.identity();
  j["table"] = table.table();
  j["labels"] = table.labels();
  if (table.inverses()) j["inverse"] = *table.inverses();
  return j;
}

std::shared_ptr<MatrixRep> rep_from_json(const Json& j, MonoidPtr group) {
  if (!j.is_object()) fail("ParseError", "representation spec must be an object");
  if (!group) {
    if (!j.contains("group")) fail("ParseError", "representation needs an inline \"group\" or one from --group");
    group = group_from_json(j.at("group"));
  }
  if (!j.contains("d") || !j.contains("ring") || !j.contains("images"))
    fail("ParseError", "representation needs \"d\", \"ring\" and \"images\"");
  int d = j.at("d").get<int>();
  RingContextPtr ctx = ring_from_json(j.at("ring"));
  std::vector<Matrix> images;
  for (int g = 0; g < group->size(); ++g) {
    std::string key = std::to_string(g);
    if (!j.at("images").contains(key))
      fail("ParseError", "missing image for element " + key);
    const Json& rows = j.at("images").at(key);
    Matrix m(d, d, ctx);
    if (static_cast<int>(rows.size()) != d) fail("ParseError", "image " + key + " is not d x d");
    for (int r = 0; r < d; ++r) {
      if (static_cast<int>(rows[r].size()) != d) fail("ParseError", "image " + key + " is not d x d");
      for (int c = 0; c < d; ++c) m.set(r, c, scalar_from_json(rows[r][c], ctx));
    }
    images.push_back(std::move(m));
  }
  return std::make_shared<MatrixRep>(d, std::move(group), std::move(images));
}

Matrix matrix_from_json(const Json& j, RingContextPtr ctx) {
  if (!j.is_object() || !j.contains("entries")) fail("ParseError", "matrix spec needs \"entries\"");
  if (!ctx) {
    if (!j.contains("ring")) fail("ParseError", "matrix spec needs \"ring\"");
    ctx = ring_from_json(j.at("ring"));
  }
  const Json& rows = j.at("entries");
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix m(r, c, ctx);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) fail("ParseError", "ragged matrix entries");
    for (int k = 0; k < c; ++k) m.set(i, k, scalar_from_json(rows[i][k], ctx));
  }
  return m;
}

Dim2Law dim2_law_from_json(const Json& j, MonoidPtr group) {
  if (!j.is_object() || !j.contains("ring") || !j.contains("T") || !j.contains("D"))
    fail("ParseError", "law spec needs \"ring\", \"T\" and \"D\"");
  RingContextPtr ctx = ring_from_json(j.at("ring"));
  Dim2Law law;
  law.table = group;
  law.ctx = ctx;
  for (int g = 0; g < group->size(); ++g) {
    std::string key = std::to_string(g);
    if (!j.at("T").contains(key) || !j.at("D").contains(key))
      fail("ParseError", "missing T or D value for element " + key);
    law.T.push_back(scalar_from_json(j.at("T").at(key), ctx));
    law.D.push_back(scalar_from_json(j.at("D").at(key), ctx));
  }
  return law;
}

Json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("ParseError", "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail("ParseError", path + ": " + e.what());
  }
  return j;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    fail("ParseError", e.what());
  }
}

}  // namespace detlab
