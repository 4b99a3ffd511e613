#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "propalg/anf.hpp"
#include "propalg/dimacs.hpp"
#include "propalg/error.hpp"
#include "propalg/expansion.hpp"
#include "propalg/flip_group.hpp"
#include "propalg/formula.hpp"
#include "propalg/primes.hpp"
#include "propalg/theorems.hpp"
#include "propalg/truth_maps.hpp"

namespace propalg::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::optional<std::string> formula;
  std::optional<std::string> dimacs;
  std::optional<unsigned> n;
  unsigned max_vars = kDefaultMaxVars;
  bool json = false;

  // count
  bool list = false;
  // expand
  bool text = false;
  // flip
  std::string flip;
  // verify
  bool all = false;
  bool ti = false, tii = false, orth = false, full = false, tiv = false, tv = false,
       resolution = false, flip_group = false;
  bool timing = false;
};

struct Loaded {
  BoolFunc f;
  std::optional<FormulaAst> ast;
  std::optional<CnfDoc> cnf;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Loaded load_input(const Options& opt) {
  if (opt.formula.has_value() == opt.dimacs.has_value()) {
    throw ArgumentError("exactly one of --formula or --dimacs is required");
  }
  if (opt.formula) {
    FormulaAst ast = parse_formula(*opt.formula, opt.n);
    BoolFunc f = eval_ast(ast);
    return {std::move(f), std::move(ast), std::nullopt};
  }
  CnfDoc doc = parse_dimacs(read_file(*opt.dimacs));
  if (opt.n) {
    if (*opt.n < doc.n) {
      throw ArgumentError("--n " + std::to_string(*opt.n) + " is smaller than the DIMACS header's " +
                          std::to_string(doc.n));
    }
    check_var_count(*opt.n);
    doc.n = *opt.n;
  }
  BoolFunc f = compose(cnf_to_primes(doc));
  return {std::move(f), std::nullopt, std::move(doc)};
}

Json index_array(const PrimeSet& set) {
  Json arr = Json::array();
  for (auto j : set.indices()) arr.push_back(j);
  return arr;
}

Json canonical_forms(const BoolFunc& f) {
  const PrimeSet primes = decompose(f);
  Json j;
  j["tt"] = f.to_binary();
  j["hex"] = f.to_hex();
  j["anf"] = to_anf(f).to_string();
  j["primes"] = index_array(primes);
  j["minterms"] = index_array(primes.complement());
  return j;
}

Json header(const Loaded& in) {
  Json j;
  j["n"] = in.f.num_vars();
  if (in.ast && !in.ast->names().empty()) j["vars"] = in.ast->name_map();
  return j;
}

void render_text(const Json& j, std::ostream& out, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << pad << key << ":\n";
      render_text(value, out, indent + 2);
    } else if (value.is_array() && !value.empty() && value.front().is_string()) {
      out << pad << key << ":\n";
      for (const auto& item : value) out << pad << "  " << item.get<std::string>() << '\n';
    } else if (value.is_array()) {
      out << pad << key << ": {";
      bool first = true;
      for (const auto& item : value) {
        out << (first ? "" : ", ") << item.dump();
        first = false;
      }
      out << "}\n";
    } else if (value.is_string()) {
      out << pad << key << ": " << value.get<std::string>() << '\n';
    } else {
      out << pad << key << ": " << value.dump() << '\n';
    }
  }
}

void emit(const Json& j, const Options& opt, std::ostream& out) {
  if (opt.json) {
    out << j.dump(2) << '\n';
  } else {
    render_text(j, out);
  }
}

int cmd_canon(const Options& opt, std::ostream& out) {
  const Loaded in = load_input(opt);
  Json j = header(in);
  j.update(canonical_forms(in.f));
  emit(j, opt, out);
  return kOk;
}

int cmd_count(const Options& opt, std::ostream& out) {
  const Loaded in = load_input(opt);
  Json j = header(in);
  // CNF input counts through the prime expansion; formulas through the
  // truth vector.
  const std::uint64_t models =
      in.cnf ? in.f.size() - cnf_to_primes(*in.cnf).size() : count_models(in.f);
  j["models"] = models;
  if (opt.list) {
    Json list = Json::array();
    for (const auto& a : satisfying_assignments(in.f)) list.push_back(a.to_string());
    j["assignments"] = std::move(list);
  }
  emit(j, opt, out);
  return kOk;
}

int cmd_expand(const Options& opt, std::ostream& out) {
  const Loaded in = load_input(opt);
  const PrimeSet primes = in.cnf ? cnf_to_primes(*in.cnf) : decompose(in.f);
  const std::uint64_t models = in.f.size() - primes.size();
  if (opt.json) {
    Json j = header(in);
    j["primes_count"] = primes.size();
    j["models"] = models;
    j["primes"] = index_array(primes);
    Json clauses = Json::array();
    for (const auto& clause : primes_to_cnf(primes).clauses) {
      Json c = Json::array();
      for (const auto& lit : clause) c.push_back(lit.dimacs());
      clauses.push_back(std::move(c));
    }
    j["clauses"] = std::move(clauses);
    out << j.dump(2) << '\n';
    return kOk;
  }
  if (opt.text) {
    out << "primes_count: " << primes.size() << '\n'
        << "models: " << models << '\n'
        << prime_product_text(primes) << '\n';
    return kOk;
  }
  std::vector<std::string> comments{"full prime form",
                                    "primes_count: " + std::to_string(primes.size()),
                                    "models: " + std::to_string(models)};
  if (in.ast && !in.ast->names().empty()) comments.push_back("vars: " + in.ast->name_map());
  out << to_dimacs(primes_to_cnf(primes), comments);
  return kOk;
}

int cmd_flip(const Options& opt, std::ostream& out) {
  const Loaded in = load_input(opt);
  const FlipMask mask = FlipMask::parse(in.f.num_vars(), opt.flip);
  const BoolFunc flipped = apply_flip(in.f, mask);

  std::optional<FormulaAst> source = in.ast;
  if (!source && in.cnf) source = cnf_to_ast(*in.cnf);

  Json j = header(in);
  j["mask"] = std::to_string(mask.value()) + " (" + mask.to_string() + ")";
  Json original;
  if (source) original["formula"] = source->to_string();
  original.update(canonical_forms(in.f));
  j["original"] = std::move(original);

  Json image;
  bool ast_agrees = true;
  if (source) {
    const FormulaAst flipped_ast = ast_flip(*source, mask);
    image["formula"] = flipped_ast.to_string();
    ast_agrees = eval_ast(flipped_ast) == flipped;
  }
  image.update(canonical_forms(flipped));
  j["flipped"] = std::move(image);

  const std::uint64_t before = count_models(in.f);
  const std::uint64_t after = count_models(flipped);
  j["models"] = std::to_string(before) + " -> " + std::to_string(after);
  j["conservation"] = before == after ? "ok" : "VIOLATED";
  if (source) j["substitution_check"] = ast_agrees ? "ok" : "VIOLATED";
  emit(j, opt, out);
  return before == after && ast_agrees ? kOk : kVerificationFailure;
}

int cmd_taut(const Options& opt, std::ostream& out) {
  const Loaded in = load_input(opt);
  Json j = header(in);
  const std::uint64_t models = count_models(in.f);
  j["tautology"] = in.f.is_one() ? "yes" : "no";
  j["satisfiable"] = models > 0 ? "yes" : "no";
  j["models"] = models;
  if (!in.f.is_one()) {
    const auto counter = satisfying_assignments(neg(in.f)).front();
    j["falsified_by"] = counter.to_string();
  }
  emit(j, opt, out);
  return in.f.is_one() ? kOk : kVerificationFailure;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  std::vector<Theorem> selected;
  auto want = [&](bool flag, Theorem t) {
    if (opt.all || flag) selected.push_back(t);
  };
  want(opt.ti, Theorem::kPowerOfTwo);
  want(opt.tii, Theorem::kPrimeDecomposition);
  want(opt.orth, Theorem::kOrthogonality);
  want(opt.full, Theorem::kFullPrimeIdentity);
  want(opt.tiv, Theorem::kAllowedMaps);
  want(opt.tv, Theorem::kBasis);
  want(opt.resolution, Theorem::kResolution);
  want(opt.flip_group, Theorem::kFlipGroup);
  if (selected.empty()) throw ArgumentError("verify: select --all or at least one theorem flag");

  const unsigned n = opt.n.value_or(2);
  check_var_count(n);
  for (Theorem t : selected) {
    const auto cap = theorem_cap(t);
    if (cap && n > *cap) {
      throw ResourceError("refusing " + std::string(theorem_id(t)) + " at n=" + std::to_string(n) +
                          ": exhaustive check is capped at n=" + std::to_string(*cap));
    }
  }

  std::vector<CheckReport> reports;
  for (Theorem t : selected) reports.push_back(verify(t, n));
  std::size_t passed = 0;
  for (const auto& r : reports) passed += r.passed();

  if (opt.json) {
    Json j;
    j["n"] = n;
    Json arr = Json::array();
    for (const auto& r : reports) {
      Json item;
      item["id"] = r.id;
      item["n"] = r.n;
      item["status"] = r.passed() ? "pass" : "fail";
      item["checks"] = r.checks;
      item["failures"] = r.failure_count;
      item["counterexample"] = r.counterexample() ? Json(*r.counterexample()) : Json(nullptr);
      if (opt.timing) item["elapsed_us"] = r.elapsed.count();
      arr.push_back(std::move(item));
    }
    j["reports"] = std::move(arr);
    j["passed"] = passed;
    j["total"] = reports.size();
    out << j.dump(2) << '\n';
  } else {
    for (const auto& r : reports) out << r.to_text(opt.timing);
    out << "summary: " << passed << "/" << reports.size() << " passed\n";
  }
  return passed == reports.size() ? kOk : kVerificationFailure;
}

void add_input_options(CLI::App* sub, Options& opt) {
  auto* f = sub->add_option("--formula", opt.formula, "Formula text, e.g. \"(a1 | a2) & !a3\"");
  auto* d = sub->add_option("--dimacs", opt.dimacs, "DIMACS cnf file ('-' for stdin)");
  f->excludes(d);
  sub->add_option("--n", opt.n, "Variable count (default: inferred)")->check(CLI::PositiveNumber);
  sub->add_option("--max-vars", opt.max_vars, "Largest accepted variable count")
      ->check(CLI::Range(1u, kMaxVarsCeiling));
  sub->add_flag("--json", opt.json, "Structured JSON output");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Boolean-ring algebra of propositional formulas"};
  app.name("propalg");
  app.require_subcommand(1);

  auto* canon = app.add_subcommand("canon", "Truth vector, ANF, prime and minterm index sets");
  add_input_options(canon, opt);

  auto* count = app.add_subcommand("count", "Exact model count");
  add_input_options(count, opt);
  count->add_flag("--list", opt.list, "Also list satisfying assignments");

  auto* expand = app.add_subcommand("expand", "Blow clauses up to the full prime-form CNF");
  add_input_options(expand, opt);
  expand->add_flag("--text", opt.text, "Emit the prime product as text instead of DIMACS");

  auto* flip = app.add_subcommand("flip", "Negate selected variables and check model-count conservation");
  add_input_options(flip, opt);
  flip->add_option("--flip", opt.flip, "Mask as decimal or variable list (a1,a3)")->required();

  auto* taut = app.add_subcommand("taut", "Tautology and satisfiability test");
  add_input_options(taut, opt);

  auto* verify = app.add_subcommand("verify", "Run the algebraic verification suite");
  verify->add_option("--n", opt.n, "Variable count (default 2)")->check(CLI::PositiveNumber);
  verify->add_option("--max-vars", opt.max_vars, "Largest accepted variable count")
      ->check(CLI::Range(1u, kMaxVarsCeiling));
  verify->add_flag("--json", opt.json, "Structured JSON output");
  verify->add_flag("--timing", opt.timing, "Include elapsed time per check");
  verify->add_flag("--all", opt.all, "Every theorem check");
  verify->add_flag("--ti", opt.ti, "Annihilator splitting and |V| = 2^N (n <= 3)");
  verify->add_flag("--tii,--tiii", opt.tii, "Prime count and unique decomposition (n <= 3)");
  verify->add_flag("--orthogonality", opt.orth, "Negated-prime orthogonality (n <= 6)");
  verify->add_flag("--full-primes", opt.full, "Product of all primes is 0 (n <= 6)");
  verify->add_flag("--tiv", opt.tiv, "Allowed truth maps by brute force (n <= 2)");
  verify->add_flag("--tv", opt.tv, "Basis construction (n <= 6)");
  verify->add_flag("--resolution", opt.resolution, "Resolution tautology as a ring calculation");
  verify->add_flag("--flip-group", opt.flip_group, "Flip group and conservation of model count (n <= 6)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    set_max_vars(opt.max_vars);
    if (*canon) return cmd_canon(opt, out);
    if (*count) return cmd_count(opt, out);
    if (*expand) return cmd_expand(opt, out);
    if (*flip) return cmd_flip(opt, out);
    if (*taut) return cmd_taut(opt, out);
    if (*verify) return cmd_verify(opt, out);
  } catch (const ResourceError& e) {
    err << "propalg: " << e.what() << '\n';
    return kResourceGuard;
  } catch (const ParseError& e) {
    err << "propalg: parse error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ArgumentError& e) {
    err << "propalg: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "propalg: internal check failed: " << e.what() << '\n';
    return kVerificationFailure;
  }
  return kUsageError;
}

}  // namespace propalg::cli
