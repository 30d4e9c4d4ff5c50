#include "cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bpdl/closure.hpp"
#include "bpdl/decide.hpp"
#include "bpdl/eval.hpp"
#include "bpdl/filtration.hpp"
#include "bpdl/proof.hpp"

namespace bpdl::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text << '\n';
}

struct FormulaArgs {
  std::string inline_text, file;

  void attach(CLI::App* sub) {
    auto* a = sub->add_option("--formula", inline_text, "formula in concrete syntax");
    auto* b = sub->add_option("--formula-file", file, "file holding one formula");
    a->excludes(b);
  }

  Formula get() const {
    if (!file.empty()) return parse_formula(slurp(file));
    if (inline_text.empty()) throw UsageError("one of --formula or --formula-file is required");
    return parse_formula(inline_text);
  }
};

void print_witness(std::ostream& out, const Model& m, std::size_t state) {
  out << dump_model(m) << "\nstate: " << m.state_name(state) << '\n';
}

std::vector<Formula> read_premises(const std::string& path) {
  std::vector<Formula> xs;
  std::istringstream in(slurp(path));
  for (std::string line; std::getline(in, line);) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    xs.push_back(parse_formula(line));
  }
  return xs;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Four-valued propositional dynamic logic toolkit", "bpdl"};
  app.require_subcommand(1);

  FormulaArgs formula;
  std::string model_path, premises_path, proof_path, output_path, classes_path;
  std::size_t type_limit = DecideOptions{}.type_limit;
  std::size_t max_states = 2;

  auto* check = app.add_subcommand("check", "Belnap value of a formula at every state");
  formula.attach(check);
  check->add_option("--model", model_path, "model JSON")->required();

  auto* sat_cmd = app.add_subcommand("sat", "decide satisfiability");
  auto* valid_cmd = app.add_subcommand("valid", "decide validity");
  auto* global_cmd = app.add_subcommand("global", "decide global consequence");
  for (auto* s : {sat_cmd, valid_cmd, global_cmd}) {
    formula.attach(s);
    s->add_option("--type-limit", type_limit, "ceiling on the number of Hintikka types");
  }
  global_cmd->add_option("--premises", premises_path, "premises, one formula per line")
      ->required();

  auto* fl_cmd = app.add_subcommand("fl", "Fischer-Ladner closure");
  formula.attach(fl_cmd);

  auto* filtrate_cmd = app.add_subcommand("filtrate", "filtrate a model through FL(formula)");
  formula.attach(filtrate_cmd);
  filtrate_cmd->add_option("--model", model_path, "model JSON")->required();
  filtrate_cmd->add_option("--output", output_path, "also write the quotient model here");
  filtrate_cmd->add_option("--classes", classes_path, "also write the class map here");

  auto* translate_cmd = app.add_subcommand("translate", "truth and falsity translations");
  formula.attach(translate_cmd);

  auto* prove_cmd = app.add_subcommand("prove", "check a Hilbert proof");
  prove_cmd->add_option("--proof", proof_path, "proof JSON")->required();

  auto* search_cmd = app.add_subcommand("search", "bounded search for a supporting model");
  formula.attach(search_cmd);
  search_cmd->add_option("--max-states", max_states, "largest model size tried")
      ->check(CLI::Range(1, 8));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const DecideOptions opts{type_limit, ExecutionPolicy::Parallel};

    if (check->parsed()) {
      const Model m = load_model(slurp(model_path));
      const Formula f = formula.get();
      EvalSession s(m);
      for (std::size_t x = 0; x < m.size(); ++x)
        out << "state " << m.state_name(x) << ": " << to_string(s.belnap_value(x, f)) << '\n';
      out << "valid: " << (s.valid(f) ? "true" : "false") << '\n';
      return 0;
    }

    if (sat_cmd->parsed()) {
      const Verdict v = sat(formula.get(), opts);
      if (!v.satisfiable) {
        out << "UNSAT\n";
        return 1;
      }
      out << "SAT\n";
      print_witness(out, *v.witness, v.state);
      return 0;
    }

    if (valid_cmd->parsed() || global_cmd->parsed()) {
      Formula f = formula.get();
      if (global_cmd->parsed()) f = global_reduction(read_premises(premises_path), f);
      const Verdict v = find_countermodel(f, opts);
      if (!v.satisfiable) {
        out << "VALID\n";
        return 0;
      }
      out << "NOT_VALID\n";
      print_witness(out, *v.witness, v.state);
      return 1;
    }

    if (fl_cmd->parsed()) {
      for (const auto& g : fl_closure(formula.get())) out << to_string(g) << '\n';
      return 0;
    }

    if (filtrate_cmd->parsed()) {
      const Model m = load_model(slurp(model_path));
      const Filtration filt = filtrate(m, fl_closure(formula.get()));
      nlohmann::ordered_json classes = nlohmann::ordered_json::object();
      for (std::size_t x = 0; x < m.size(); ++x)
        classes[m.state_name(x)] = filt.quotient.state_name(filt.class_of[x]);
      const std::string quotient = dump_model(filt.quotient);
      nlohmann::ordered_json doc;
      doc["quotient"] = nlohmann::ordered_json::parse(quotient);
      doc["classOf"] = classes;
      out << doc.dump(2) << '\n';
      if (!output_path.empty()) spill(output_path, quotient);
      if (!classes_path.empty()) spill(classes_path, classes.dump(2));
      return 0;
    }

    if (translate_cmd->parsed()) {
      const Translation tr = translate(formula.get());
      out << "t: " << to_string(tr.t) << "\nf: " << to_string(tr.f) << '\n';
      return 0;
    }

    if (prove_cmd->parsed()) {
      const ProofDoc d = load_proof(slurp(proof_path));
      const CheckResult r = check_proof(d);
      if (r.accepted()) {
        out << "ACCEPTED " << d.lines.size() << " lines\n";
        return 0;
      }
      out << "REJECTED line " << r.line << ": "
          << (r.status == CheckResult::Status::MalformedJustification ? "malformed justification"
                                                                      : "invalid step")
          << ": " << r.reason << '\n';
      return 1;
    }

    if (search_cmd->parsed()) {
      auto hit = bounded_countermodel_search(formula.get(), max_states);
      if (!hit) {
        out << "NONE\n";
        return 1;
      }
      out << "FOUND\n";
      print_witness(out, hit->first, hit->second);
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace bpdl::cli
