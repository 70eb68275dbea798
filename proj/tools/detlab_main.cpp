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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "detlab/driver.hpp"
#include "detlab/json_io.hpp"

namespace {

using detlab::Json;
using detlab::Report;

struct Output {
  std::string format = "json";
  std::string out_file;

  int emit(const Report& report) const {
    std::string text =
        format == "text" ? report.to_text() : report.to_json().dump(1) + "\n";
    if (out_file.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_file);
      out << text;
    }
    return report.all_pass() ? 0 : 1;
  }
};

Json load(const std::string& path) { return detlab::parse_json_file(path); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"detlab: exact verification of multiplicative polynomial-law identities on finite monoid algebras"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  Output output;
  std::uint64_t seed = 42;
  int trials = 50;
  app.add_option("--seed", seed, "root seed for sampled checks")->capture_default_str();
  app.add_option("--trials", trials, "trial count for sampled checks")->capture_default_str();
  std::uint64_t cap = 1'000'000;
  std::string ring_file;
  app.add_option("--cap", cap, "size cap for word sums and exhaustive enumerations")
      ->capture_default_str();
  app.add_option("--ring", ring_file,
                 "ring JSON file overriding the default base for gamma and deformations");
  app.add_option("--report", output.format, "report format: json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--out", output.out_file, "write the report to a file instead of stdout");

  // amitsur
  std::string am_rep;
  std::vector<int> am_elements;
  int am_i = 2;
  auto* am = app.add_subcommand("amitsur", "word expansion of Lambda_i of a sum");
  am->add_option("--rep", am_rep, "representation JSON file")->required();
  am->add_option("--elements", am_elements, "monoid element indices")->required()->delimiter(',');
  am->add_option("--i", am_i, "homogeneity degree")->capture_default_str();

  // pseudochar
  std::string pc_rep;
  int pc_d = 2;
  bool pc_exhaustive = false;
  auto* pc = app.add_subcommand("pseudochar", "signed trace identity on tuples");
  pc->add_option("--rep", pc_rep, "representation JSON file")->required();
  pc->add_option("--d", pc_d, "dimension to test")->capture_default_str();
  pc->add_flag("--exhaustive", pc_exhaustive, "sweep all |G|^(d+1) tuples");

  // dim2 verify / deformations / odd-locus
  auto* d2 = app.add_subcommand("dim2", "dimension-2 laws");
  d2->require_subcommand(1);
  std::string d2v_group, d2v_law;
  auto* d2v = d2->add_subcommand("verify", "axioms of a (T,D) value table");
  d2v->add_option("--group", d2v_group, "group JSON file")->required();
  d2v->add_option("--law", d2v_law, "law JSON file with T and D tables")->required();
  std::string d2d_group, d2d_base;
  auto* d2d = d2->add_subcommand("deformations", "dual-number deformations of the trivial law");
  d2d->add_option("--group", d2d_group, "group JSON file")->required();
  d2d->add_option("--base", d2d_base, "base ring JSON file (default F2)");
  std::string d2o_c, d2o_g;
  bool d2o_plus = false;
  auto* d2o = d2->add_subcommand("odd-locus", "reducibility coordinates for an involution pair");
  d2o->add_option("--c", d2o_c, "matrix JSON file for the involution")->required();
  d2o->add_option("--g", d2o_g, "matrix JSON file for the group element")->required();
  d2o->add_flag("--det-plus-one", d2o_plus, "probe the det(c) = +1 convention instead");

  // ch quotient / kernel
  auto* ch = app.add_subcommand("ch", "Cayley-Hamilton ideal and kernels");
  ch->require_subcommand(1);
  std::string chq_rep, chq_group;
  auto* chq = ch->add_subcommand("quotient", "CH ideal and quotient dimension");
  chq->add_option("--rep", chq_rep, "representation JSON file")->required();
  chq->add_option("--group", chq_group, "group JSON file when not inlined in the rep");
  std::string chk_rep, chk_group;
  auto* chk = ch->add_subcommand("kernel", "kernel of the determinant on the monoid algebra");
  chk->add_option("--rep", chk_rep, "representation JSON file")->required();
  chk->add_option("--group", chk_group, "group JSON file when not inlined in the rep");

  // irreducible
  std::string irr_rep;
  auto* irr = app.add_subcommand("irreducible", "trace Gram irreducibility certificate");
  irr->add_option("--rep", irr_rep, "representation JSON file")->required();

  // gamma
  std::string ga_group, ga_base = "Z";
  int ga_d = 2;
  auto* ga = app.add_subcommand("gamma", "universal ring of degree-d laws");
  ga->add_option("--group", ga_group, "group JSON file")->required();
  ga->add_option("--d", ga_d, "law dimension")->capture_default_str();
  ga->add_option("--base", ga_base, "base ring: Z, Q, F<p> or a ring JSON file")
      ->capture_default_str();

  // newton
  std::string nw_rep;
  int nw_order = 8, nw_element = -1;
  auto* nw = app.add_subcommand("newton", "trace generating series identity");
  nw->add_option("--rep", nw_rep, "representation JSON file")->required();
  nw->add_option("--order", nw_order, "series truncation order")->capture_default_str();
  nw->add_option("--element", nw_element, "monoid element index (default: first non-identity)");

  // polarize
  std::string pl_rep;
  auto* pl = app.add_subcommand("polarize", "full and (d,d)-partial polarization identities");
  pl->add_option("--rep", pl_rep, "representation JSON file")->required();

  // suite-all
  std::string sa_corpus = "corpus";
  auto* sa = app.add_subcommand("suite-all", "run every suite on the bundled corpus");
  sa->add_option("--corpus", sa_corpus, "corpus directory")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    Report report;
    if (am->parsed()) {
      report = detlab::driver::amitsur_report(load(am_rep), am_elements, am_i, cap);
    } else if (pc->parsed()) {
      report = detlab::driver::pseudochar_report(load(pc_rep), pc_d, pc_exhaustive, trials,
                                                  seed, std::max<std::uint64_t>(cap, 100000));
    } else if (d2v->parsed()) {
      report = detlab::driver::dim2_verify_report(load(d2v_group), load(d2v_law));
    } else if (d2d->parsed()) {
      Json base = d2d_base.empty() ? (ring_file.empty() ? Json() : load(ring_file))
                                   : load(d2d_base);
      report = detlab::driver::dim2_deformations_report(load(d2d_group), base, cap);
    } else if (d2o->parsed()) {
      report = detlab::driver::odd_locus_report(load(d2o_c), load(d2o_g), d2o_plus);
    } else if (chq->parsed()) {
      Json rep_json = load(chq_rep);
      if (!chq_group.empty()) rep_json["group"] = load(chq_group);
      report = detlab::driver::ch_quotient_report(rep_json);
    } else if (chk->parsed()) {
      Json rep_json = load(chk_rep);
      if (!chk_group.empty()) rep_json["group"] = load(chk_group);
      report = detlab::driver::ch_kernel_report(rep_json);
    } else if (irr->parsed()) {
      report = detlab::driver::irreducible_report(load(irr_rep), seed);
    } else if (ga->parsed()) {
      Json base;
      if (ga_base == "Z") {
        base = Json{{"kind", "Integers"}};
      } else if (ga_base == "Q") {
        base = Json{{"kind", "Rationals"}};
      } else if (!ga_base.empty() && ga_base[0] == 'F') {
        base = Json{{"kind", "Fp"}, {"p", ga_base.substr(1)}};
      } else {
        base = load(ga_base);
      }
      if (!ring_file.empty()) base = load(ring_file);
      report = detlab::driver::gamma_report(load(ga_group), ga_d, base);
    } else if (nw->parsed()) {
      report = detlab::driver::newton_report(load(nw_rep), nw_element, nw_order);
    } else if (pl->parsed()) {
      report = detlab::driver::polarize_report(load(pl_rep));
    } else if (sa->parsed()) {
      report = detlab::driver::suite_all(sa_corpus, seed, trials);
    }
    report.params["seed"] = seed;
    return output.emit(report);
  } catch (const detlab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
