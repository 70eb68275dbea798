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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "detlab/driver.hpp"
#include "detlab/json_io.hpp"
#include "detlab/lyndon.hpp"

namespace py = pybind11;

namespace {

using detlab::Json;

Json parse(const std::string& text) { return detlab::parse_json_text(text); }

std::string dump(const detlab::Report& report) { return report.to_json().dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact verification of multiplicative polynomial-law identities";

  py::register_exception<detlab::Error>(m, "DetlabError");

  m.def("is_lyndon", [](const std::vector<int>& w) { return detlab::is_lyndon(w); },
        py::arg("word"));
  m.def(
      "cfl_factorize",
      [](const std::vector<int>& w) {
        std::vector<std::pair<std::vector<int>, int>> out;
        for (const auto& f : detlab::cfl_factorize(w)) out.push_back({f.word, f.exponent});
        return out;
      },
      py::arg("word"));
  m.def("epsilon_sign", [](const std::vector<int>& w) { return detlab::epsilon_sign(w); },
        py::arg("word"));

  m.def(
      "charpoly",
      [](const std::string& matrix_json) {
        detlab::Matrix mat = detlab::matrix_from_json(parse(matrix_json));
        std::vector<std::string> out;
        for (const auto& c : detlab::berkowitz_charpoly(mat)) out.push_back(c.str());
        return out;
      },
      py::arg("matrix_json"),
      "coefficients of det(tI - M) from the leading 1, entries as strings");

  m.def(
      "amitsur_report",
      [](const std::string& rep_json, const std::vector<int>& elements, int i) {
        return dump(detlab::driver::amitsur_report(parse(rep_json), elements, i));
      },
      py::arg("rep_json"), py::arg("elements"), py::arg("i"));

  m.def(
      "pseudochar_report",
      [](const std::string& rep_json, int d, bool exhaustive, int trials, std::uint64_t seed) {
        return dump(detlab::driver::pseudochar_report(parse(rep_json), d, exhaustive, trials, seed));
      },
      py::arg("rep_json"), py::arg("d"), py::arg("exhaustive") = true, py::arg("trials") = 50,
      py::arg("seed") = 42);

  m.def(
      "dim2_verify_report",
      [](const std::string& group_json, const std::string& law_json) {
        return dump(detlab::driver::dim2_verify_report(parse(group_json), parse(law_json)));
      },
      py::arg("group_json"), py::arg("law_json"));

  m.def(
      "dim2_deformations_report",
      [](const std::string& group_json, const std::string& base_json) {
        Json base = base_json.empty() ? Json() : parse(base_json);
        return dump(detlab::driver::dim2_deformations_report(parse(group_json), base));
      },
      py::arg("group_json"), py::arg("base_json") = "");

  m.def(
      "odd_locus_report",
      [](const std::string& c_json, const std::string& g_json, bool det_plus_one) {
        return dump(detlab::driver::odd_locus_report(parse(c_json), parse(g_json), det_plus_one));
      },
      py::arg("c_json"), py::arg("g_json"), py::arg("det_plus_one") = false);

  m.def(
      "ch_quotient_report",
      [](const std::string& rep_json) {
        return dump(detlab::driver::ch_quotient_report(parse(rep_json)));
      },
      py::arg("rep_json"));

  m.def(
      "ch_kernel_report",
      [](const std::string& rep_json) {
        return dump(detlab::driver::ch_kernel_report(parse(rep_json)));
      },
      py::arg("rep_json"));

  m.def(
      "irreducible_report",
      [](const std::string& rep_json, std::uint64_t seed) {
        return dump(detlab::driver::irreducible_report(parse(rep_json), seed));
      },
      py::arg("rep_json"), py::arg("seed") = 1);

  m.def(
      "gamma_report",
      [](const std::string& group_json, int d, const std::string& base_json) {
        Json base = base_json.empty() ? Json() : parse(base_json);
        return dump(detlab::driver::gamma_report(parse(group_json), d, base));
      },
      py::arg("group_json"), py::arg("d"), py::arg("base_json") = "");

  m.def(
      "newton_report",
      [](const std::string& rep_json, int element, int order) {
        return dump(detlab::driver::newton_report(parse(rep_json), element, order));
      },
      py::arg("rep_json"), py::arg("element") = -1, py::arg("order") = 8);

  m.def(
      "polarize_report",
      [](const std::string& rep_json) {
        return dump(detlab::driver::polarize_report(parse(rep_json)));
      },
      py::arg("rep_json"));

  m.def(
      "suite_all",
      [](const std::string& corpus_dir, std::uint64_t seed, int trials) {
        return dump(detlab::driver::suite_all(corpus_dir, seed, trials));
      },
      py::arg("corpus_dir"), py::arg("seed") = 42, py::arg("trials") = 50);

  m.attr("__version__") = "0.1.0";
}
