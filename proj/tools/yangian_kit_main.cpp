// yangian-kit: exact-arithmetic construction and verification of rational
// R-matrices, RTT modules, and their finite-dimensional classification for
// the orthogonal and symplectic families.  Every check is a bit-exact
// identity over the rationals; reports are deterministic (timings are
// opt-in because they are not).
//
// Exit codes: 0 all checks passed, 1 a mathematical check failed,
// 2 usage or input error.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "ykit/algebra_kind.hpp"
#include "ykit/drinfeld.hpp"
#include "ykit/gl2.hpp"
#include "ykit/hw.hpp"
#include "ykit/json_io.hpp"
#include "ykit/lowrank.hpp"
#include "ykit/spinor.hpp"
#include "ykit/structure_ops.hpp"
#include "ykit/suites.hpp"
#include "ykit/trep.hpp"
#include "ykit/weyl_oracle.hpp"

namespace {

using namespace ykit;

struct Common {
  bool json = false;
  bool timings = false;
  std::string emit;
  int max_rank = 3;
};

void add_output_flags(CLI::App* sub, Common& c) {
  sub->add_flag("--json", c.json, "print the report as JSON");
  sub->add_flag("--timings", c.timings,
                "include per-check runtimes (makes output non-deterministic)");
  sub->add_option("--emit", c.emit,
                  "write the subcommand's primary JSON object to this file");
}

void add_max_rank(CLI::App* sub, Common& c) {
  sub->add_option("--max-rank", c.max_rank,
                  "largest family rank iterated over (1..4)")
      ->check(CLI::Range(1, kMaxRankCeiling));
}

// Small local report builder mirroring the suite runner, for the focused
// subcommands.
class Recorder {
 public:
  explicit Recorder(std::string name) { report_.suite = std::move(name); }

  void run(const std::string& name, const std::string& statement,
           const std::function<std::pair<bool, std::string>()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string witness;
    try {
      std::tie(ok, witness) = body();
    } catch (const std::exception& e) {
      ok = false;
      witness = std::string("exception: ") + e.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    CheckRecord rec;
    rec.name = name;
    rec.statement = statement;
    rec.passed = ok;
    rec.witness = witness;
    rec.runtime_ms = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
            .count());
    report_.checks.push_back(std::move(rec));
  }

  void run_proof(const std::string& name, const std::string& statement,
                 const std::function<ProofReport()>& body) {
    run(name, statement, [&]() -> std::pair<bool, std::string> {
      ProofReport pr = body();
      if (pr.passed) return {true, ""};
      std::string w = pr.identity_name + " failed";
      if (!pr.counterexamples.empty())
        w += ": " + pr.counterexamples.front().detail;
      return {false, w};
    });
  }

  void run_check(const std::string& name, const std::string& statement,
                 const std::function<CheckResult()>& body) {
    run(name, statement, [&]() -> std::pair<bool, std::string> {
      CheckResult cr = body();
      return {cr.ok, cr.ok ? "" : cr.message};
    });
  }

  SuiteReport take() { return std::move(report_); }

 private:
  SuiteReport report_;
};

int finish(const SuiteReport& report, const Common& c,
           const std::string& emit_payload = "") {
  std::cout << (c.json ? report_to_json(report, c.timings)
                       : report_to_text(report, c.timings));
  if (!c.emit.empty()) {
    write_text_file(c.emit, emit_payload.empty()
                                ? report_to_json(report, c.timings)
                                : emit_payload);
  }
  return report.passed() ? 0 : 1;
}

std::vector<Rational> parse_rational_list(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
  if (out.empty()) throw std::invalid_argument("empty rational list");
  return out;
}

AlgebraKind kind_from(const std::string& family, int rank) {
  return AlgebraKind(parse_family(family), rank);
}

// ---------------------------------------------------------------------------
// ybe

int do_ybe(const std::string& family, int rank, const Common& c) {
  if (family.empty()) {
    SuiteOptions opts;
    opts.max_rank = c.max_rank;
    return finish(run_suite("ybe", opts), c);
  }
  Recorder rec("ybe");
  if (family == "gl") {
    if (rank < 2)
      throw std::invalid_argument("--rank must be at least 2 for gl");
    rec.run_proof("ybe/gl" + std::to_string(rank),
                  "the two-term rational R-matrix satisfies the Yang-Baxter "
                  "identity on the triple tensor",
                  [rank] { return check_ybe_gl(rank); });
    return finish(rec.take(), c);
  }
  const AlgebraKind kind = kind_from(family, rank);
  const std::string sn = family_name(kind.family()) + std::to_string(rank);
  rec.run_proof("ybe/" + sn,
                "R12(u-v) R13(u) R23(v) == R23(v) R13(u) R12(u-v) on the "
                "triple tensor of the natural module of " + kind.name(),
                [kind] { return check_ybe(kind); });
  rec.run("structure/" + sn,
          "P^2 = 1, P Q = Q P = -+Q, Q^2 = N Q for the flip and rank-one "
          "projector",
          [kind]() -> std::pair<bool, std::string> {
            for (const ProofReport& pr : check_pq_identities(kind))
              if (!pr.passed) return {false, pr.identity_name + " failed"};
            return {true, ""};
          });
  rec.run_proof("unitarity/" + sn, "R(u) R(-u) == (1 - 1/u^2) 1",
                [kind] { return check_r_unitarity(kind); });
  return finish(rec.take(), c);
}

// ---------------------------------------------------------------------------
// verify-rtt

int do_verify_rtt(const std::string& path, const Common& c) {
  TRep rep = trep_from_json(read_text_file(path));
  Recorder rec("verify-rtt");
  rec.run_proof("rtt/defining-relations",
                "R(u-v) T1(u) T2(v) == T2(v) T1(u) R(u-v) on " + rep.desc(),
                [&rep] { return check_defining_relations(rep); });
  if (!rep.is_gl()) {
    rec.run("rtt/central-series",
            "the central series z(u) acts as a scalar",
            [&rep]() -> std::pair<bool, std::string> {
              RationalFunction z = compute_z(rep);
              return {true, "z(u) = " + z.str()};
            });
  }
  SuiteReport report = rec.take();
  // A scalar central series is informative, not a failure witness; show it.
  std::cout << (c.json ? report_to_json(report, c.timings)
                       : report_to_text(report, c.timings));
  if (!report.checks.empty() && report.checks.back().passed &&
      !report.checks.back().witness.empty() && !c.json)
    std::cout << "   " << report.checks.back().witness << "\n";
  if (!c.emit.empty())
    write_text_file(c.emit, report_to_json(report, c.timings));
  return report.passed() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// gl2-drinfeld

int do_gl2_drinfeld(const std::string& alphas_s, const std::string& betas_s,
                    const Common& c) {
  const std::vector<Rational> alphas = parse_rational_list(alphas_s);
  const std::vector<Rational> betas = parse_rational_list(betas_s);
  if (alphas.size() != betas.size())
    throw std::invalid_argument("--alphas and --betas need equal lengths");
  const Polynomial p = drinfeld_from_pairs(alphas, betas);
  DrinfeldTuple tuple;
  tuple.polys = {p};

  Recorder rec("gl2-drinfeld");
  rec.run("gl2/tensor-highest-weight",
          "the dominance-ordered tensor product of the two-row evaluation "
          "modules has a one-dimensional space of highest vectors whose "
          "weight ratio telescopes to the product polynomial",
          [&]() -> std::pair<bool, std::string> {
            const std::vector<std::size_t> order =
                decomptp_order(alphas, betas);
            TRep tp = gl2_eval_module(
                Gl2EvalParams(alphas[order[0]], betas[order[0]]));
            for (std::size_t i = 1; i < order.size(); ++i)
              tp = tensor_rep(tp, gl2_eval_module(Gl2EvalParams(
                                      alphas[order[i]], betas[order[i]])));
            auto found = highest_weight_vectors(tp);
            if (found.vectors.size() != 1)
              return {false, "expected a unique highest vector, found " +
                                 std::to_string(found.vectors.size())};
            const auto& lam = found.vectors[0].lambda;
            if (!drinfeld_ratio_check(lam[0], lam[1], p, Rational(1)))
              return {false,
                      "weight ratio does not telescope to the product "
                      "polynomial"};
            return {true, ""};
          });
  SuiteReport report = rec.take();
  const std::string payload = drinfeld_to_json(tuple);
  if (report.passed()) {
    std::cout << payload;
    if (!c.emit.empty()) write_text_file(c.emit, payload);
    return 0;
  }
  std::cout << (c.json ? report_to_json(report, c.timings)
                       : report_to_text(report, c.timings));
  return 1;
}

// ---------------------------------------------------------------------------
// fusion

int do_fusion(const std::string& target, const Common& c) {
  Recorder rec("fusion");
  if (target.empty() || target == "o3")
    rec.run_check("fusion/o3",
                  "the symmetrized two-leg product of rank-one R-matrices "
                  "restricts to the 9-dimensional module and equals the "
                  "rank-one orthogonal R-matrix up to the stated scalar",
                  [] { return fusion_check_o3(); });
  if (target.empty() || target == "o4")
    rec.run_check("fusion/o4",
                  "R13(u) R24(u) on the split module equals the rank-two "
                  "orthogonal R-matrix up to the stated scalar",
                  [] { return fusion_check_o4(); });
  SuiteReport report = rec.take();
  if (report.checks.empty())
    throw std::invalid_argument("--target must be o3 or o4");
  return finish(report, c);
}

// ---------------------------------------------------------------------------
// eval-rep

int do_eval_rep(const std::string& family, int rank, const std::string& mu_s,
                const std::string& shift_s, const Common& c) {
  const std::vector<Rational> mu = parse_rational_list(mu_s);
  const Rational a = Rational::parse(shift_s);
  const Family fam = parse_family(family);
  ClassicalIrrep ir = [&]() -> ClassicalIrrep {
    if (fam == Family::C && rank == 1 && mu.size() == 1)
      return classical_irrep_sp2(mu[0]);
    if (fam == Family::B && rank == 1 && mu.size() == 1)
      return classical_irrep_o3(mu[0]);
    if (fam == Family::D && rank == 2 && mu.size() == 2)
      return classical_irrep_o4(mu[0], mu[1]);
    throw std::invalid_argument(
        "supported: --family C --rank 1 (one mu), --family B --rank 1 "
        "(one mu), --family D --rank 2 (two mu)");
  }();

  TRep rep = ev_rep(ir, a);
  HighestWeightData hw = ev_weights(ir, a);
  Recorder rec("eval-rep");
  rec.run_proof("ev/defining-relations",
                "the evaluation module satisfies the defining relations",
                [&rep] { return check_defining_relations(rep); });
  rec.run("ev/highest-weight",
          "the top vector carries the stated highest weight, shifted by a",
          [&]() -> std::pair<bool, std::string> {
            auto found = highest_weight_vectors(rep);
            if (found.vectors.size() != 1)
              return {false, "expected one highest vector, found " +
                                 std::to_string(found.vectors.size())};
            if (found.vectors[0].lambda != hw.lambda)
              return {false, "weight tuple differs from the evaluation "
                             "formula"};
            return {true, ""};
          });
  rec.run_check("ev/verma-consistency",
                "the weight tuple satisfies the Verma-type consistency "
                "relations",
                [&hw] { return verma_consistency(hw); });
  if (fam != Family::C)
    rec.run_check("ev/existence-condition",
                  "the weight tuple satisfies the rank-one/rank-two "
                  "existence condition",
                  [&hw] { return weight_existence_condition(hw); });
  rec.run("ev/central-series",
          "z(u) == lambda_{-n}(u + kappa) lambda_n(u)",
          [&]() -> std::pair<bool, std::string> {
            const int n = rep.kind().n();
            RationalFunction z = compute_z(rep);
            RationalFunction expect =
                hw.at(-n).shift(rep.kind().kappa()) * hw.at(n);
            if (z != expect) return {false, "z = " + z.str()};
            return {true, ""};
          });
  return finish(rec.take(), c, trep_to_json(rep));
}

// ---------------------------------------------------------------------------
// classify

int do_classify(const std::string& path, const Common& c) {
  HighestWeightData hw = weights_from_json(read_text_file(path));
  CheckResult verma = verma_consistency(hw);
  FdimResult f = fdim_conditions(hw);
  if (verma.ok && f.ok) {
    const std::string payload = drinfeld_to_json(f.tuple);
    std::cout << payload;
    if (!c.emit.empty()) write_text_file(c.emit, payload);
    return 0;
  }
  std::string message =
      !verma.ok ? "Verma-type consistency fails: " + verma.message
                : f.message;
  // Emit the failure as a small JSON object so downstream tooling can
  // distinguish "not of finite-dimensional type" from tool errors.
  std::string out = "{\n  \"finite_dimensional\": false,\n  \"message\": ";
  std::string quoted = "\"";
  for (char ch : message) {
    if (ch == '"' || ch == '\\') quoted += '\\';
    quoted += ch;
  }
  quoted += "\"";
  out += quoted + "\n}\n";
  std::cout << out;
  if (!c.emit.empty()) write_text_file(c.emit, out);
  return 1;
}

// ---------------------------------------------------------------------------
// antisym

int do_antisym(const std::string& family, int rank, int m, const Common& c) {
  const AlgebraKind kind = kind_from(family, rank);
  if (m < 1 || m > kind.n())
    throw std::invalid_argument("--m must be between 1 and the rank");
  AntisymModule mod = antisym_module(kind, m);
  Recorder rec("antisym");
  rec.run_check("antisym/highest-vector",
                "the antisymmetrized vector is highest with the stated "
                "three-band weight tuple",
                [&mod] { return check_antisym_highest(mod); });
  rec.run_check("antisym/transpose-symmetry",
                "the antisymmetrizer intertwines the transposed action",
                [&mod] { return check_antisym_transpose(mod); });
  FdimResult f = fdim_conditions(antisym_expected_weights(kind, m));
  rec.run("antisym/classified-tuple",
          "the weight tuple is of finite-dimensional type",
          [&f]() -> std::pair<bool, std::string> {
            return {f.ok, f.ok ? "" : f.message};
          });
  return finish(rec.take(), c,
                f.ok ? drinfeld_to_json(f.tuple) : std::string());
}

// ---------------------------------------------------------------------------
// fundamental

int do_fundamental(const std::string& family, int rank, int p,
                   const std::string& shift_s, bool verify_decomposition,
                   const Common& c) {
  const AlgebraKind kind = kind_from(family, rank);
  Recorder rec("fundamental");
  if (kind.family() == Family::C) {
    if (kind.n() != 2 || (p != 0 && p != 1))
      throw std::invalid_argument(
          "symplectic fundamental modules: --family C --rank 2 --p 0|1");
    const Rational a = Rational::parse(shift_s);
    const Rational b = p == 0 ? a - Rational(5, 2) : a - Rational(1);
    rec.run("sp-fundamental/p=" + std::to_string(p),
            "the degree-2 generators satisfy J_kl + theta_kl J_{-l,-k} = 0 "
            "and J = b F, and the module carries the predicted weights",
            [&]() -> std::pair<bool, std::string> {
              TRep w = [&] {
                if (p == 0) {
                  AntisymModule mod = antisym_module(kind, 2);
                  TRep shifted = shift_rep(mod.rep, a + Rational(1));
                  return irreducible_quotient(shifted, mod.xi).rep;
                }
                return vector_rep(kind, a + Rational(2));
              }();
              JOperators ops = j_operators(w);
              CheckResult anti = check_j_antisymmetry(ops);
              if (!anti.ok) return {false, "antisymmetry: " + anti.message};
              CheckResult law = check_j_bracket_law(ops);
              if (!law.ok) return {false, "bracket law: " + law.message};
              CheckResult scal = check_j_scalar(ops, b);
              if (!scal.ok) return {false, "scalar action: " + scal.message};
              auto found = highest_weight_vectors(w);
              if (found.vectors.size() != 1)
                return {false, "expected one highest vector"};
              if (found.vectors[0].lambda !=
                  fundamental_sp_weights(kind, p, a).lambda)
                return {false, "weight tuple differs from the prediction"};
              return {true, ""};
            });
    return finish(rec.take(), c);
  }

  if (p < 0 || p > kind.n())
    throw std::invalid_argument("--p must be between 0 and the rank");
  rec.run_check("spinor/vp-singular",
                "v_p is singular in the spinor tensor square at the "
                "distinguished shift",
                [&] { return check_vp_singular(kind, p).ok; });
  rec.run("fundamental/span-dimension",
          "the cyclic span of v_p has the dimension predicted by the "
          "direct sum of antisymmetric powers",
          [&]() -> std::pair<bool, std::string> {
            TRep wp = wp_module(kind, p);
            long expect = 0;
            for (int q = p; q <= kind.n(); q += 2) {
              std::vector<Rational> muq;
              for (int k = 0; k < kind.n(); ++k)
                muq.emplace_back(k < q ? 0 : -1);
              expect += weyl_dim(kind, muq);
            }
            if (static_cast<long>(wp.dim()) != expect)
              return {false, "dimension " + std::to_string(wp.dim()) +
                                 ", predicted " + std::to_string(expect)};
            return {true, ""};
          });
  if (verify_decomposition) {
    rec.run("fundamental/character",
            "the span's character equals the direct sum of "
            "antisymmetric-power characters (independent oracle)",
            [&]() -> std::pair<bool, std::string> {
              TRep wp = wp_module(kind, p);
              std::vector<std::vector<Rational>> parts;
              for (int q = p; q <= kind.n(); q += 2) {
                std::vector<Rational> muq;
                for (int k = 0; k < kind.n(); ++k)
                  muq.emplace_back(k < q ? 0 : -1);
                parts.push_back(muq);
              }
              auto oracle = weight_multiplicities_sum(kind, parts);
              std::map<std::vector<Rational>, long> got;
              for (const auto& [wt, idx] : weight_decomposition(wp))
                got[wt] += static_cast<long>(idx.size());
              if (got != oracle)
                return {false, "character differs from the oracle"};
              return {true, ""};
            });
  }
  return finish(rec.take(), c);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "yangian-kit: exact verification of rational R-matrices, RTT "
      "modules, and finite-dimensional classification for the orthogonal "
      "and symplectic families"};
  app.require_subcommand(1);

  Common common;

  std::string family, target, rep_path, weights_path;
  std::string alphas, betas, mu, shift = "0";
  int rank = 1, m = 1, p = 0;
  bool verify_decomposition = false;
  std::string suite_name;

  CLI::App* ybe = app.add_subcommand(
      "ybe", "Yang-Baxter, structure and unitarity identities");
  ybe->add_option("--family", family, "B, C, D or gl");
  ybe->add_option("--rank", rank, "family rank n (or N for gl)");
  add_output_flags(ybe, common);
  add_max_rank(ybe, common);

  CLI::App* rtt = app.add_subcommand(
      "verify-rtt", "check the defining relations of a serialized module");
  rtt->add_option("--rep", rep_path, "path to a module JSON file")
      ->required();
  add_output_flags(rtt, common);

  CLI::App* gl2d = app.add_subcommand(
      "gl2-drinfeld",
      "product polynomial of a dominance-ordered two-row tensor product");
  gl2d->add_option("--alphas", alphas, "comma-separated rationals, e.g. "
                                       "--alphas=2,1/2")
      ->required();
  gl2d->add_option("--betas", betas, "comma-separated rationals")
      ->required();
  add_output_flags(gl2d, common);

  CLI::App* fusion = app.add_subcommand(
      "fusion", "fused R-matrix constructions in ranks one and two");
  fusion->add_option("--target", target, "o3 or o4 (default: both)");
  add_output_flags(fusion, common);

  CLI::App* evr = app.add_subcommand(
      "eval-rep", "build and verify an evaluation module");
  evr->add_option("--family", family, "B, C or D")->required();
  evr->add_option("--rank", rank, "1 (B, C) or 2 (D)")->required();
  evr->add_option("--mu", mu,
                  "highest weight, comma-separated, e.g. --mu=-3/2")
      ->required();
  evr->add_option("--shift", shift, "evaluation shift a (default 0)");
  add_output_flags(evr, common);

  CLI::App* cls = app.add_subcommand(
      "classify", "classify a serialized weight tuple; prints the tuple "
                  "of polynomials or a failure object");
  cls->add_option("--weights", weights_path, "path to a weights JSON file")
      ->required();
  add_output_flags(cls, common);

  CLI::App* anti = app.add_subcommand(
      "antisym", "antisymmetrized tensor powers of the natural module");
  anti->add_option("--family", family, "B, C or D")->required();
  anti->add_option("--rank", rank, "family rank n")->required();
  anti->add_option("--m", m, "tensor power, 1..n")->required();
  add_output_flags(anti, common);

  CLI::App* fund = app.add_subcommand(
      "fundamental", "fundamental modules: orthogonal spinor-square spans "
                     "or symplectic degree-2 generator checks");
  fund->add_option("--family", family, "B, C or D")->required();
  fund->add_option("--rank", rank, "family rank n")->required();
  fund->add_option("--p", p, "which fundamental module");
  fund->add_option("--shift", shift, "evaluation shift a (family C)");
  fund->add_flag("--verify-decomposition", verify_decomposition,
                 "also verify the character against the independent oracle");
  add_output_flags(fund, common);

  CLI::App* suite = app.add_subcommand("suite", "run a named check suite");
  std::string names;
  for (const std::string& n : suite_names()) {
    if (!names.empty()) names += ", ";
    names += n;
  }
  suite->add_option("name", suite_name, "one of: " + names)->required();
  add_output_flags(suite, common);
  add_max_rank(suite, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (ybe->parsed()) return do_ybe(family, rank, common);
    if (rtt->parsed()) return do_verify_rtt(rep_path, common);
    if (gl2d->parsed()) return do_gl2_drinfeld(alphas, betas, common);
    if (fusion->parsed()) return do_fusion(target, common);
    if (evr->parsed()) return do_eval_rep(family, rank, mu, shift, common);
    if (cls->parsed()) return do_classify(weights_path, common);
    if (anti->parsed()) return do_antisym(family, rank, m, common);
    if (fund->parsed())
      return do_fundamental(family, rank, p, shift, verify_decomposition,
                            common);
    if (suite->parsed()) {
      SuiteOptions opts;
      opts.max_rank = common.max_rank;
      return finish(run_suite(suite_name, opts), common);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
