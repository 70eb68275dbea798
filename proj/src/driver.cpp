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

#include "detlab/driver.hpp"

#include <sstream>

#include "detlab/ch_kernel.hpp"
#include "detlab/dim2.hpp"
#include "detlab/divided_powers.hpp"
#include "detlab/json_io.hpp"
#include "detlab/lyndon.hpp"
#include "detlab/pseudochar.hpp"

namespace detlab::driver {

namespace {

std::string word_str(const Word& w, const FiniteMonoidTable& table, const std::vector<int>& elems) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "." : "") + table.label(elems[w[k]]);
  return s;
}

}  // namespace

Report amitsur_report(const Json& rep_json, const std::vector<int>& elements, int i,
                      std::uint64_t cap) {
  auto rep = rep_from_json(rep_json);
  DeterminantLaw law = DeterminantLaw::matrix_det(rep);
  const FiniteMonoidTable& table = *rep->table();
  const RingContextPtr& ctx = rep->context();

  Report report;
  report.subcommand = "amitsur";
  report.params = Json{{"elements", elements}, {"i", i}};

  std::vector<AlgebraElem> deltas;
  AlgebraElem sum(ctx);
  for (int g : elements) {
    deltas.push_back(delta(table, g, ctx));
    sum = sum + delta(table, g, ctx);
  }
  RingElem direct = law.lambda(sum, i);
  RingElem via_words = amitsur_lambda_law(law, deltas, i, cap);

  // word-by-word table
  Json words = Json::array();
  int n = static_cast<int>(elements.size());
  if (i >= 1 && n >= 1) {
    Word w(i, 0);
    while (true) {
      Json entry;
      entry["word"] = word_str(w, table, elements);
      Json factors = Json::array();
      for (const auto& f : cfl_factorize(w)) {
        Json jf;
        jf["factor"] = word_str(f.word, table, elements);
        jf["exponent"] = f.exponent;
        factors.push_back(jf);
      }
      entry["factorization"] = factors;
      entry["sign"] = epsilon_sign(w);
      LawWordProvider prov{&law, deltas};
      RingElem term = prov.one();
      auto fs = cfl_factorize(w);
      bool first = true;
      for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
        RingElem v = prov.lambda_word(it->word, it->exponent);
        term = first ? v : term * v;
        first = false;
      }
      entry["lambda"] = term.str();
      words.push_back(entry);
      int pos = i - 1;
      while (pos >= 0 && w[pos] == n - 1) w[pos--] = 0;
      if (pos < 0) break;
      ++w[pos];
    }
  }

  CheckResult c;
  c.name = "Lambda_" + std::to_string(i) + " of the sum equals the signed word expansion";
  c.anchor = "amitsur-formula";
  c.pass = (direct == via_words);
  c.details = Json{{"word_expansion", via_words.str()}, {"direct", direct.str()}, {"words", words}};
  if (!c.pass) c.witness = via_words.str() + " vs " + direct.str();
  report.add(std::move(c));
  return report;
}

Report pseudochar_report(const Json& rep_json, int d, bool exhaustive, int trials,
                         std::uint64_t seed, std::uint64_t cap) {
  auto rep = rep_from_json(rep_json);
  CentralFunction T = CentralFunction::from_rep_trace(*rep, std::nullopt);
  Report report;
  if (exhaustive) {
    report = pseudochar_identity_check(T, d, std::nullopt, cap);
  } else {
    int m = rep->table()->size();
    std::vector<std::vector<int>> tuples;
    for (int t = 0; t < trials; ++t) {
      Rng rng = Rng::derive(seed, t);
      std::vector<int> tuple;
      for (int k = 0; k <= d; ++k) tuple.push_back(static_cast<int>(rng.range(0, m - 1)));
      tuples.push_back(std::move(tuple));
    }
    report = pseudochar_identity_check(T, d, tuples);
  }
  report.params["seed"] = seed;
  report.params["exhaustive"] = exhaustive;
  return report;
}

Report dim2_verify_report(const Json& group_json, const Json& law_json) {
  MonoidPtr group = group_from_json(group_json);
  Dim2Law law = dim2_law_from_json(law_json, group);
  return verify_dim2_axioms(law);
}

Report dim2_deformations_report(const Json& group_json, const Json& base_json,
                                std::uint64_t cap) {
  MonoidPtr group = group_from_json(group_json);
  RingContextPtr base =
      base_json.is_null() ? RingContext::prime_field(2) : ring_from_json(base_json);
  DeformationEnumeration e = deformation_space_enumerate(group, base, cap);
  Report report;
  report.subcommand = "dim2-deformations";
  report.params = Json{{"group_size", group->size()}, {"base", base->describe()}};
  CheckResult c;
  c.name = "deformations over the dual numbers, exhaustive axiom filter";
  c.anchor = "tangent-space-parametrization";
  c.pass = e.parametrization_matches;
  Json list = Json::array();
  for (const auto& d : e.deformations) {
    Json jd;
    Json tau = Json::array(), del = Json::array();
    for (const auto& v : d.tau) tau.push_back(v.str());
    for (const auto& v : d.delta) del.push_back(v.str());
    jd["tau"] = tau;
    jd["delta"] = del;
    list.push_back(jd);
  }
  c.details = Json{{"count", e.deformations.size()},
                   {"expected_from_parametrization", e.expected_from_parametrization},
                   {"deformations", list}};
  if (!c.pass) c.witness = "enumerated set differs from the parametrization";
  report.add(std::move(c));
  return report;
}

Report odd_locus_report(const Json& c_json, const Json& g_json, bool det_plus_one) {
  Matrix c = matrix_from_json(c_json);
  Matrix g = matrix_from_json(g_json, c.context());
  OddLocusResult r = odd_reducibility_relation(c, g, det_plus_one);
  Report report;
  report.subcommand = "dim2-odd-locus";
  CheckResult chk;
  chk.name = "reducibility coordinates and Gram determinant";
  chk.anchor = "odd-reducible-locus";
  chk.pass = r.residual.is_zero() == r.gram_det.is_zero();
  chk.details = Json{{"residual", r.residual.str()},
                     {"gram_det", r.gram_det.str()},
                     {"reducible", r.residual.is_zero()}};
  if (!chk.pass) chk.witness = "residual and Gram determinant disagree on vanishing";
  report.add(std::move(chk));
  return report;
}

Report ch_quotient_report(const Json& rep_json) {
  auto rep = rep_from_json(rep_json);
  const RingContextPtr& ctx = rep->context();
  FinDimAlgebra ga = group_algebra_findim(rep->table(), ctx);
  AlgebraLaw law = algebra_law_from_det_law(ga, DeterminantLaw::matrix_det(rep));
  Subspace ideal = ch_ideal(law);
  Report report;
  report.subcommand = "ch-quotient";
  CheckResult c;
  c.name = "Cayley-Hamilton ideal of the monoid algebra";
  c.anchor = "cayley-hamilton-ideal";
  c.details = Json{{"ideal_dim", ideal.dim()}, {"quotient_dim", ga.dim() - ideal.dim()}};
  report.add(std::move(c));
  return report;
}

Report ch_kernel_report(const Json& rep_json) {
  auto rep = rep_from_json(rep_json);
  Subspace kernel = kernel_of_det(*rep);
  Report report;
  report.subcommand = "ch-kernel";
  CheckResult c;
  c.name = "kernel of the determinant on the monoid algebra";
  c.anchor = "law-kernel";
  Json basis = Json::array();
  for (const auto& row : kernel.basis())
    basis.push_back(vec_to_algebra_elem(row, rep->context()).str(*rep->table()));
  c.details = Json{{"dim", kernel.dim()}, {"basis", basis}};
  report.add(std::move(c));
  return report;
}

Report irreducible_report(const Json& rep_json, std::uint64_t seed) {
  auto rep = rep_from_json(rep_json);
  DeterminantLaw law = DeterminantLaw::matrix_det(rep);
  GramCertificate cert = gram_irreducibility(law, 50, seed);
  int span = subalgebra_span(rep->images());
  int d2 = rep->dim() * rep->dim();
  Report report;
  report.subcommand = "irreducible";
  CheckResult c;
  c.name = "trace Gram certificate vs generated-algebra dimension";
  c.anchor = "gram-irreducibility";
  c.pass = cert.found == (span == d2);
  Json elems = Json::array();
  for (int g : cert.elements) elems.push_back(rep->table()->label(g));
  c.details = Json{{"certificate_found", cert.found},
                   {"certificate", elems},
                   {"gram_rank", cert.best_rank},
                   {"subalgebra_span", span},
                   {"d_squared", d2}};
  if (!c.pass) c.witness = "certificate and span disagree";
  report.add(std::move(c));
  return report;
}

Report gamma_report(const Json& group_json, int d, const Json& base_json) {
  MonoidPtr group = group_from_json(group_json);
  RingContextPtr base = base_json.is_null() ? RingContext::integers() : ring_from_json(base_json);
  UniversalRingResult r = universal_det_ring(group, d, base);
  Report report = r.report;
  CheckResult c;
  c.name = "universal ring presentation data";
  c.anchor = "universal-ring-presentation";
  Json divisors = Json::array();
  for (const auto& dv : r.elementary_divisors) divisors.push_back(dv.str());
  c.details = Json{{"dimension", r.ts_dim},
                   {"free_rank", r.free_rank},
                   {"elementary_divisors", divisors},
                   {"generators", r.generator_names},
                   {"relations_up_to_degree", r.relations}};
  report.add(std::move(c));
  return report;
}

Report newton_report(const Json& rep_json, int element, int order) {
  auto rep = rep_from_json(rep_json);
  DeterminantLaw law = DeterminantLaw::matrix_det(rep);
  if (element < 0) element = rep->table()->size() > 1 ? 1 : 0;
  AlgebraElem r = delta(*rep->table(), element, rep->context());
  Report report = newton_check(law, r, order);
  report.params["element"] = rep->table()->label(element);
  return report;
}

Report polarize_report(const Json& rep_json) {
  auto rep = rep_from_json(rep_json);
  int d = rep->dim();
  const FiniteMonoidTable& table = *rep->table();
  CentralFunction T = CentralFunction::from_rep_trace(*rep, d);
  RingElem dfact = RingElem::one(rep->context());
  for (int k = 2; k <= d; ++k) dfact = dfact * RingElem::from_int(rep->context(), k);

  Report report;
  report.subcommand = "polarize";
  report.params = Json{{"d", d}};
  {
    CheckResult c;
    c.name = "full polarization diagonal equals d! times the determinant";
    c.anchor = "full-polarization";
    c.pass = true;
    for (int g = 0; g < table.size() && c.pass; ++g) {
      std::vector<int> tuple(d, g);
      RingElem lhs = full_polarization_det(T, tuple);
      RingElem rhs = dfact * det(rep->image(g));
      if (!(lhs == rhs)) {
        c.pass = false;
        c.witness = table.label(g);
      }
    }
    report.add(std::move(c));
  }
  {
    CheckResult c;
    c.name = "(d,d)-partial polarization diagonal equals (d!)^2 (det g det h - det gh)";
    c.anchor = "partial-polarization";
    c.pass = true;
    RingElem dfact2 = dfact * dfact;
    for (int g = 0; g < table.size() && c.pass; ++g)
      for (int h = 0; h < table.size() && c.pass; ++h) {
        RingElem lhs = partial_polarization_phi(T, std::vector<int>(d, g), std::vector<int>(d, h));
        RingElem rhs = dfact2 * (det(rep->image(g)) * det(rep->image(h)) -
                                 det(rep->image(table.mul(g, h))));
        if (!(lhs == rhs)) {
          c.pass = false;
          c.witness = "(" + table.label(g) + "," + table.label(h) + ")";
        }
      }
    report.add(std::move(c));
  }
  return report;
}

namespace {

void add_named(Report& into, const std::string& prefix, Report part) {
  for (auto& c : part.checks) {
    c.name = prefix + ": " + c.name;
    into.add(std::move(c));
  }
}

void suite_for_rep(Report& report, const std::string& name, const Json& rep_json,
                   std::uint64_t seed, int trials) {
  auto rep = rep_from_json(rep_json);
  DeterminantLaw law = DeterminantLaw::matrix_det(rep);
  const FiniteMonoidTable& table = *rep->table();
  const RingContextPtr& ctx = rep->context();
  int d = rep->dim();
  int m = table.size();

  add_named(report, name, validate_law(law));
  add_named(report, name,
            law_identity_fuzz(law, {"multiplicativity", "swap"}, std::min(trials, 5), seed));
  if (m > 1)
    add_named(report, name, newton_check(law, delta(table, 1, ctx), 6));

  {
    // word expansion against the law on a pair of sampled algebra elements
    Rng rng = Rng::derive(seed, 7001);
    AlgebraElem x(ctx), y(ctx);
    for (int g = 0; g < m; ++g) {
      x = x + delta(table, g, ctx).scaled(RingElem::from_int(ctx, rng.range(-3, 3)));
      y = y + delta(table, g, ctx).scaled(RingElem::from_int(ctx, rng.range(-3, 3)));
    }
    bool ok = true;
    for (int i = 0; i <= d && ok; ++i)
      ok = (amitsur_lambda_law(law, {x, y}, i) == law.lambda(x + y, i));
    CheckResult c;
    c.name = name + ": word expansion matches Lambda_i on sampled algebra elements";
    c.anchor = "amitsur-formula";
    c.pass = ok;
    report.add(std::move(c));
  }

  // the trace is a pseudocharacter at the right dimension
  std::uint64_t tuple_count = 1;
  bool exhaustive = true;
  for (int k = 0; k <= d; ++k) {
    tuple_count *= static_cast<std::uint64_t>(m);
    if (tuple_count > 20000) {
      exhaustive = false;
      break;
    }
  }
  CentralFunction T = CentralFunction::from_rep_trace(*rep, d);
  if (exhaustive) {
    add_named(report, name, pseudochar_identity_check(T, d, std::nullopt));
  } else {
    std::vector<std::vector<int>> tuples;
    for (int t = 0; t < trials; ++t) {
      Rng rng = Rng::derive(seed, 9000 + t);
      std::vector<int> tuple;
      for (int k = 0; k <= d; ++k) tuple.push_back(static_cast<int>(rng.range(0, m - 1)));
      tuples.push_back(std::move(tuple));
    }
    add_named(report, name, pseudochar_identity_check(T, d, tuples));
  }

  if (d == 2) {
    Dim2Law d2 = dim2_from_rep(*rep);
    add_named(report, name, verify_dim2_axioms(d2));
    if (RingElem::from_int(ctx, 2).is_unit()) {
      Dim2Law rebuilt = dim2_from_pseudochar(T);
      bool same = true;
      for (int g = 0; g < m && same; ++g) same = (rebuilt.D[g] == d2.D[g]);
      CheckResult c;
      c.name = name + ": law rebuilt from its trace matches the determinant values";
      c.anchor = "dim2-from-trace";
      c.pass = same;
      report.add(std::move(c));
    }
  }

  if (ctx->is_field()) {
    ImageAlgebra img = image_algebra(*rep);
    Int p = ctx->characteristic();
    if (p == 0 || p > img.algebra.dim()) {
      Subspace kernel = kernel_of_det(*rep);
      FinDimAlgebra ga = group_algebra_findim(rep->table(), ctx);
      AlgebraLaw alaw = algebra_law_from_det_law(ga, law);
      Subspace chi_ideal = ch_ideal(alaw);
      CheckResult c;
      c.name = name + ": CH ideal sits inside the kernel";
      c.anchor = "ch-inside-kernel";
      c.pass = kernel.contains_subspace(chi_ideal);
      c.details = Json{{"ch_dim", chi_ideal.dim()}, {"kernel_dim", kernel.dim()}};
      report.add(std::move(c));

      // nilpotency of the restricted-law kernel on the image algebra
      Subspace rad = radical(img.algebra);
      bool nilp = true;
      std::vector<AlgVec> current;
      for (const auto& r : rad.basis()) current.push_back(r);
      for (int step = 1; step < d && !current.empty(); ++step) {
        std::vector<AlgVec> next;
        for (const auto& a : current)
          for (const auto& b : rad.basis()) next.push_back(img.algebra.mul(a, b));
        current = std::move(next);
      }
      for (const auto& v : current)
        if (!img.algebra.is_zero_vec(v)) nilp = false;
      CheckResult c2;
      c2.name = name + ": restricted-law kernel is nilpotent of index <= d";
      c2.anchor = "kernel-nilpotency";
      c2.pass = nilp;
      c2.details = Json{{"radical_dim", rad.dim()}};
      report.add(std::move(c2));

      GramCertificate cert = gram_irreducibility(law, 50, seed);
      int span = subalgebra_span(rep->images());
      CheckResult c3;
      c3.name = name + ": Gram certificate agrees with the generated-algebra dimension";
      c3.anchor = "gram-irreducibility";
      c3.pass = cert.found == (span == d * d);
      c3.details = Json{{"span", span}, {"found", cert.found}};
      report.add(std::move(c3));
    }
  }
}

}  // namespace

Report suite_all(const std::string& corpus_dir, std::uint64_t seed, int trials) {
  Report report;
  report.subcommand = "suite-all";
  report.params = Json{{"corpus", corpus_dir}, {"seed", seed}, {"trials", trials}};

  Json manifest = parse_json_file(corpus_dir + "/manifest.json");
  for (const auto& rep_file : manifest.at("reps")) {
    std::string fname = rep_file.get<std::string>();
    Json rep_json = parse_json_file(corpus_dir + "/" + fname);
    suite_for_rep(report, fname, rep_json, seed, trials);
  }

  {
    // Lyndon factorization uniqueness on a small exhaustive corpus
    bool ok = true;
    for (int len = 1; len <= 5 && ok; ++len) {
      Word w(len, 0);
      while (true) {
        auto f = cfl_factorize(w);
        Word rebuilt;
        for (const auto& factor : f)
          for (int e = 0; e < factor.exponent; ++e)
            rebuilt.insert(rebuilt.end(), factor.word.begin(), factor.word.end());
        if (rebuilt != w) ok = false;
        for (std::size_t k = 0; k + 1 < f.size(); ++k)
          if (!std::lexicographical_compare(f[k + 1].word.begin(), f[k + 1].word.end(),
                                            f[k].word.begin(), f[k].word.end()))
            ok = false;
        for (const auto& factor : f)
          if (!is_lyndon(factor.word)) ok = false;
        int pos = len - 1;
        while (pos >= 0 && w[pos] == 1) w[pos--] = 0;
        if (pos < 0) break;
        ++w[pos];
      }
    }
    CheckResult c;
    c.name = "factorization invariants on all binary words of length <= 5";
    c.anchor = "lyndon-factorization";
    c.pass = ok;
    report.add(std::move(c));
  }

  {
    RingContextPtr f2 = RingContext::prime_field(2);
    struct Expected {
      const char* file;
      int count;
    };
    // trivial group built inline, the others from the corpus
    auto trivial = std::make_shared<FiniteMonoidTable>(std::vector<std::vector<int>>{{0}}, 0);
    DeformationEnumeration e0 = deformation_space_enumerate(trivial, f2);
    CheckResult c0;
    c0.name = "deformations of the trivial law: trivial group";
    c0.anchor = "tangent-space-parametrization";
    c0.pass = e0.deformations.size() == 1 && e0.parametrization_matches;
    report.add(std::move(c0));
    for (Expected ex : {Expected{"z4.json", 4}, Expected{"z2xz2.json", 32}}) {
      MonoidPtr g = group_from_json(parse_json_file(corpus_dir + "/" + ex.file));
      DeformationEnumeration e = deformation_space_enumerate(g, f2);
      bool probes = true;
      for (const auto& dfm : e.deformations)
        if (!factor_ideal_probe(g, f2, dfm).all_pass()) probes = false;
      CheckResult c;
      c.name = std::string("deformations of the trivial law: ") + ex.file;
      c.anchor = "tangent-space-parametrization";
      c.pass = static_cast<int>(e.deformations.size()) == ex.count && e.parametrization_matches &&
               probes;
      c.details = Json{{"count", e.deformations.size()}, {"expected", ex.count}};
      report.add(std::move(c));
    }
  }

  {
    MonoidPtr z2 = group_from_json(parse_json_file(corpus_dir + "/z2.json"));
    UniversalRingResult r = universal_det_ring(z2, 2, RingContext::integers());
    CheckResult c;
    c.name = "universal degree-2 ring on the order-2 group: free of rank 3";
    c.anchor = "universal-ring-presentation";
    c.pass = r.free_rank == 3 && r.elementary_divisors.empty();
    report.add(std::move(c));
    add_named(report, "gamma(z2)", r.report);
  }

  add_named(report, "symmetric-model", symmetric_poly_model(2));
  add_named(report, "symmetric-model", symmetric_poly_model(3));
  add_named(report, "product-decomposition", product_decomposition_check(2, 1, 1, RingContext::integers()));
  add_named(report, "product-decomposition", product_decomposition_check(2, 2, 1, RingContext::integers()));

  {
    // odd locus: kappa from the symbolic oracle, then random conjugates
    Rat kappa = odd_locus_kappa();
    RingContextPtr q = RingContext::rationals();
    bool ok = true;
    for (int t = 0; t < trials && ok; ++t) {
      Rng rng = Rng::derive(seed, 40000 + t);
      // c = P diag(1,-1) P^-1 for a random invertible P
      long long a, b, cc, dd;
      do {
        a = rng.range(-5, 5);
        b = rng.range(-5, 5);
        cc = rng.range(-5, 5);
        dd = rng.range(-5, 5);
      } while (a * dd - b * cc == 0);
      Rat det_p = Rat(a * dd - b * cc);
      Matrix cmat(2, 2, q);
      // P diag(1,-1) adj(P) / det(P)
      cmat.set(0, 0, RingElem::from_rat(q, Rat(a * dd + b * cc) / det_p));
      cmat.set(0, 1, RingElem::from_rat(q, Rat(-2 * a * b) / det_p));
      cmat.set(1, 0, RingElem::from_rat(q, Rat(2 * cc * dd) / det_p));
      cmat.set(1, 1, RingElem::from_rat(q, Rat(-(a * dd + b * cc)) / det_p));
      Matrix g(2, 2, q);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) g.set(i, j, RingElem::from_int(q, rng.range(-9, 9)));
      OddLocusResult r = odd_reducibility_relation(cmat, g);
      RingElem expect = RingElem::from_rat(q, kappa) * r.residual * r.residual;
      if (!(r.gram_det == expect)) ok = false;
      if (r.residual.is_zero() != r.gram_det.is_zero()) ok = false;
    }
    CheckResult c;
    c.name = "odd locus: gram_det = kappa * residual^2 with kappa from the symbolic oracle";
    c.anchor = "odd-reducible-locus";
    c.pass = ok;
    c.details = Json{{"kappa", Rat(kappa).str()}, {"samples", trials}};
    report.add(std::move(c));
  }

  {
    // cycle-product trace against the tensor-power contraction
    RingContextPtr z = RingContext::integers();
    bool ok = true;
    for (int t = 0; t < std::min(trials, 10) && ok; ++t) {
      Rng rng = Rng::derive(seed, 50000 + t);
      std::vector<Matrix> mats;
      for (int k = 0; k < 3; ++k) {
        Matrix mt(2, 2, z);
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) mt.set(i, j, RingElem::from_int(z, rng.range(-9, 9)));
        mats.push_back(std::move(mt));
      }
      for (const auto& sigma : all_permutations(3))
        if (!(t_sigma_matrices(mats, sigma) == tensor_sigma_trace(mats, sigma))) ok = false;
    }
    CheckResult c;
    c.name = "cycle-product trace equals the tensor-power trace on S3";
    c.anchor = "tensor-trace-interpretation";
    c.pass = ok;
    report.add(std::move(c));
  }

  return report;
}

}  // namespace detlab::driver
