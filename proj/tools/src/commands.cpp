#include "bj/cli/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "bj/classify.hpp"
#include "bj/cli/io.hpp"
#include "bj/cli/verify.hpp"
#include "bj/digraph.hpp"
#include "bj/error.hpp"
#include "bj/orthogonality.hpp"
#include "bj/random.hpp"
#include "bj/tolerances.hpp"

namespace bj::cli {

namespace {

struct Options {
  std::optional<std::uint64_t> seed;
  std::string a_path, b_path, method = "exact";
  std::string algebra, from, validate, out_path, expect, suite, fixture, format = "dot", kind;
  int samples = 500;
  int count = 10;
  int pairs = 1000;
  bool include_zero = false;
  bool projective = false;
};

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("BJ_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "BJ_SEED is not an unsigned integer");
    }
  }
  return 0;
}

json vector_json(const KVector& v) {
  json out = json::array();
  const int d = real_dim(v.algebra());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double c[4] = {v[i].w, v[i].x, v[i].y, v[i].z};
    out.push_back(std::vector<double>(c, c + d));
  }
  return out;
}

json verdict_json(const OrthogonalityVerdict& v) {
  json j = {{"orthogonal", v.orthogonal}, {"margin", v.margin}};
  if (v.witness) j["witness"] = vector_json(*v.witness);
  return j;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

KMatrix load_matrix(const std::string& p) { return matrix_from_json(read_json(p)); }

int cmd_bj_check(const Options& o, std::ostream& out) {
  const KMatrix a = load_matrix(o.a_path), b = load_matrix(o.b_path);
  if (a.algebra() != b.algebra()) throw Error(ErrorCode::AlgebraMismatch, "A and B belong to different algebras");
  json report = {{"method", o.method}};
  std::optional<bool> exact, brute;
  if (o.method != "brute") {
    const OrthogonalityVerdict v = is_bj_orthogonal(a, b);
    exact = v.orthogonal;
    report["margin"] = v.margin;
    if (v.witness) report["witness"] = vector_json(*v.witness);
  }
  if (o.method != "exact") {
    brute = is_bj_orthogonal_bruteforce(a, b);
    if (!b.is_zero()) {
      const MinNormResult m = bj_min_norm(a, b);
      report["norm"] = operator_norm(a);
      report["min_norm"] = m.min_value;
      report["lambda"] = {m.lambda_star.real(), m.lambda_star.imag()};
    }
  }
  report["orthogonal"] = exact ? *exact : *brute;
  if (exact && brute) {
    report["exact"] = *exact;
    report["brute"] = *brute;
    report["agree"] = *exact == *brute;
  }
  emit(out, report);
  return exact && brute && *exact != *brute ? kFailed : kOk;
}

int cmd_chain(const Options& o, std::ostream& out) {
  const int modes = !o.algebra.empty() + !o.from.empty() + !o.validate.empty();
  if (modes != 1) throw Error(ErrorCode::InvalidArgument, "give exactly one of --algebra, --from, --validate");
  Chain c;
  if (!o.validate.empty()) {
    c = chain_from_json(read_json(o.validate));
  } else if (!o.from.empty()) {
    c = build_maximal_chain(load_matrix(o.from));
  } else {
    const SimpleAlgebra alg = load_algebra(o.algebra).as_simple();
    Rng rng(derive_seed(resolve_seed(o), 0xc4a1));
    c = build_maximal_chain(random_matrix(alg, rng));
  }
  const SuiteReport r = validate_chain(c);
  if (!o.out_path.empty()) write_json(o.out_path, to_json(c));
  json report = r.to_json();
  report.erase("suite");
  report.erase("passed");
  report["length"] = c.length();
  report["n"] = c.elements.back().n();
  report["valid"] = r.passed();
  emit(out, report);
  return r.passed() ? kOk : kFailed;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const AlgebraSpec spec = load_algebra(o.algebra);
  const ClassificationResult c = classify(spec, o.samples, resolve_seed(o));
  json evidence = {{"dimension", c.evidence.dimension}, {"chain_length", c.evidence.chain_length}};
  if (c.evidence.bucket_count) evidence["bucket_count"] = *c.evidence.bucket_count;
  if (c.evidence.bucket_probe) evidence["bucket_probe"] = *c.evidence.bucket_probe;
  json report = {{"base_field", std::string(to_string(c.base_field))},
                 {"division_algebra", std::string(to_string(c.division_algebra))},
                 {"n", c.n},
                 {"case", std::string(to_string(c.theorem_case))},
                 {"algebra", format_algebra(AlgebraSpec::simple(c.algebra()))},
                 {"evidence", evidence}};
  int code = kOk;
  if (!o.expect.empty()) {
    const bool ok = c.matches(load_algebra(o.expect).as_simple());
    report["expected"] = format_algebra(load_algebra(o.expect));
    report["match"] = ok;
    if (!ok) code = kFailed;
  }
  emit(out, report);
  return code;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const std::uint64_t seed = resolve_seed(o);
  std::optional<Chain> fixture;
  if (!o.fixture.empty()) fixture = chain_from_json(read_json(o.fixture));
  SimpleAlgebra alg;
  if (!o.algebra.empty()) {
    alg = load_algebra(o.algebra).as_simple();
  } else if (fixture) {
    alg = fixture->elements.back().algebra();
  } else {
    throw Error(ErrorCode::InvalidArgument, "--algebra is required");
  }
  if (fixture && fixture->elements.back().algebra() != alg)
    throw Error(ErrorCode::AlgebraMismatch, "fixture does not live in the given algebra");

  SuiteReport r;
  if (o.suite == "lemmas") {
    r = run_lemma_suite(alg, seed, fixture);
  } else if (o.suite == "classification") {
    if (alg.dimension() == 1) throw Error(ErrorCode::DimensionOne, "dim 1 cannot be classified");
    r = run_classification_suite(alg, seed);
  } else {
    r = run_oracle_suite(alg, seed, o.pairs);
  }
  json report = r.to_json();
  report["algebra"] = format_algebra(AlgebraSpec::simple(alg));
  report["seed"] = seed;
  emit(out, report);
  if (!r.passed()) err << json{{"failures", r.failures()}}.dump() << "\n";
  return r.passed() ? kOk : kFailed;
}

std::string to_dot(const DigraphSample& s) {
  std::ostringstream d;
  d << "digraph ortho {\n";
  for (const auto& l : s.labels) d << "  " << l << ";\n";
  for (const auto& [i, j] : s.edges) d << "  " << s.labels[i] << " -> " << s.labels[j] << ";\n";
  d << "}\n";
  return d.str();
}

int cmd_digraph(const Options& o, std::ostream& out) {
  const AlgebraSpec spec = load_algebra(o.algebra);
  const std::uint64_t seed = resolve_seed(o);
  const DigraphSample s = sample_digraph(spec, o.count, seed, o.include_zero, o.projective);
  std::string text;
  if (o.format == "dot") {
    text = to_dot(s);
  } else {
    json vertices = json::array(), edges = json::array();
    for (const auto& v : s.vertices) vertices.push_back(to_json(v));
    for (const auto& [i, j] : s.edges) edges.push_back({i, j});
    json j = {{"algebra", format_algebra(spec)}, {"seed", seed},       {"labels", s.labels},
              {"vertices", vertices},           {"edges", edges},    {"reduced_classes", reduced_classes(s)}};
    text = j.dump(2) + "\n";
  }
  if (o.out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + o.out_path);
    f << text;
  }
  return kOk;
}

int cmd_witness(const Options& o, std::ostream& out) {
  const KMatrix a = load_matrix(o.a_path);
  const bool right = o.kind == "right";
  const AsymmetryWitness w = right ? right_asymmetry_witness(a) : left_asymmetry_witness(a);
  const bool ok = right ? (w.b_perp_a.orthogonal && !w.a_perp_b.orthogonal)
                        : (w.a_perp_b.orthogonal && !w.b_perp_a.orthogonal);
  if (!o.out_path.empty()) write_json(o.out_path, to_json(w.witness));
  emit(out, {{"kind", o.kind},
             {"stage", w.stage},
             {"a_perp_b", verdict_json(w.a_perp_b)},
             {"b_perp_a", verdict_json(w.b_perp_a)},
             {"verified", ok},
             {"witness", to_json(w.witness)}});
  return ok ? kOk : kFailed;
}

int cmd_simplicity(const Options& o, std::ostream& out) {
  const SimplicityReport r = simplicity_test(load_algebra(o.algebra));
  emit(out, {{"dim", r.dimension}, {"chain_length", r.chain_length}, {"simple", r.simple}});
  return kOk;
}

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotSimpleFiniteDimensional:
    case ErrorCode::CertificationFailed:
      return kFailed;
    default:
      return kBadInput;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Birkhoff-James orthogonality and ortho-digraph tools", "bjtool"};
  app.require_subcommand(1);
  Options o;
  auto seed_opt = [&](CLI::App* s) { s->add_option("--seed", o.seed, "Seed (falls back to BJ_SEED, then 0)"); };

  auto* check = app.add_subcommand("bj-check", "Decide whether A is BJ orthogonal to B");
  check->add_option("--a", o.a_path, "Matrix file for A")->required();
  check->add_option("--b", o.b_path, "Matrix file for B")->required();
  check->add_option("--method", o.method)->check(CLI::IsMember({"exact", "brute", "both"}));

  auto* chain = app.add_subcommand("chain", "Build or validate a maximal chain");
  chain->add_option("--algebra", o.algebra, "Shorthand or algebra file; chain through a random element");
  chain->add_option("--from", o.from, "Matrix file; chain through this element");
  chain->add_option("--validate", o.validate, "Chain file to validate");
  chain->add_option("--out", o.out_path, "Write the chain here");
  seed_opt(chain);

  auto* cls = app.add_subcommand("classify", "Recover (F, K, n) from orthogonality data");
  cls->add_option("--algebra", o.algebra)->required();
  cls->add_option("--samples", o.samples)->check(CLI::PositiveNumber);
  cls->add_option("--expect", o.expect, "Exit 1 unless the result is this algebra");
  seed_opt(cls);

  auto* ver = app.add_subcommand("verify", "Run a property suite");
  ver->add_option("--suite", o.suite)->required()->check(CLI::IsMember({"lemmas", "classification", "oracle"}));
  ver->add_option("--algebra", o.algebra);
  ver->add_option("--fixture", o.fixture, "Chain file checked by the lemma suite");
  ver->add_option("--pairs", o.pairs, "Pairs for the oracle suite")->check(CLI::PositiveNumber);
  seed_opt(ver);

  auto* dig = app.add_subcommand("digraph", "Sample an ortho-digraph");
  dig->add_option("--algebra", o.algebra)->required();
  dig->add_option("--count", o.count)->check(CLI::PositiveNumber);
  dig->add_option("--format", o.format)->check(CLI::IsMember({"dot", "json"}));
  dig->add_flag("--include-zero", o.include_zero);
  dig->add_flag("--projective", o.projective);
  dig->add_option("--out", o.out_path);
  seed_opt(dig);

  auto* wit = app.add_subcommand("witness", "Asymmetry witness for A");
  wit->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"right", "left"}));
  wit->add_option("--a", o.a_path)->required();
  wit->add_option("--out", o.out_path);

  auto* simp = app.add_subcommand("simplicity", "Simplicity test for a complex algebra");
  simp->add_option("--algebra", o.algebra)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }

  try {
    if (check->parsed()) return cmd_bj_check(o, out);
    if (chain->parsed()) return cmd_chain(o, out);
    if (cls->parsed()) return cmd_classify(o, out);
    if (ver->parsed()) return cmd_verify(o, out, err);
    if (dig->parsed()) return cmd_digraph(o, out);
    if (wit->parsed()) return cmd_witness(o, out);
    if (simp->parsed()) return cmd_simplicity(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace bj::cli
