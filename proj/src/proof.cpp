#include "bpdl/proof.hpp"

#include <charconv>

#include <json.hpp>

#include "bpdl/model.hpp"

namespace bpdl {

namespace {

struct RawSchema {
  const char* id;
  const char* text;
};

// Metavariables: phi, psi, chi over formulas; alpha, beta over programs.
constexpr RawSchema kSchemata[] = {
    {"CL1", "phi -> (psi -> phi)"},
    {"CL2", "(phi -> (psi -> chi)) -> ((phi -> psi) -> (phi -> chi))"},
    {"CL3", "(phi & psi) -> phi"},
    {"CL4", "(phi & psi) -> psi"},
    {"CL5", "phi -> (psi -> (phi & psi))"},
    {"CL6", "phi -> (phi | psi)"},
    {"CL7", "psi -> (phi | psi)"},
    {"CL8", "(phi -> chi) -> ((psi -> chi) -> ((phi | psi) -> chi))"},
    {"CL9", "F -> phi"},
    {"CL10", "((phi -> psi) -> phi) -> phi"},
    {"SN1", "~~phi <-> phi"},
    {"SN2", "~(phi & psi) <-> (~phi | ~psi)"},
    {"SN3", "~(phi | psi) <-> (~phi & ~psi)"},
    {"SN4", "~(phi -> psi) <-> (phi & ~psi)"},
    {"SN5", "T <-> ~F"},
    {"K", "[alpha](phi -> psi) -> ([alpha]phi -> [alpha]psi)"},
    {"PDL-UNION", "[alpha + beta]phi <-> ([alpha]phi & [beta]phi)"},
    {"PDL-UNION-D", "<alpha + beta>phi <-> (<alpha>phi | <beta>phi)"},
    {"PDL-SEQ", "[alpha;beta]phi <-> [alpha][beta]phi"},
    {"PDL-SEQ-D", "<alpha;beta>phi <-> <alpha><beta>phi"},
    {"PDL-TEST", "[(psi)?]phi <-> (psi -> phi)"},
    {"PDL-TEST-D", "<(psi)?>phi <-> (psi & phi)"},
    {"PDL-MIX", "[alpha*]phi <-> (phi & [alpha][alpha*]phi)"},
    {"PDL-MIX-D", "<alpha*>phi <-> (phi | <alpha><alpha*>phi)"},
    {"IND", "(phi & [alpha*](phi -> [alpha]phi)) -> [alpha*]phi"},
    {"IND-D", "<alpha*>phi -> (phi | <alpha*>(!phi & <alpha>phi))"},
    {"INT1", "![alpha]phi <-> <alpha>!phi"},
    {"INT2", "!<alpha>phi <-> [alpha]!phi"},
    {"INT3", "~[alpha]phi <-> <alpha>~phi"},
    {"INT4", "[alpha]phi <-> ~<alpha>~phi"},
    {"INT5", "~<alpha>phi <-> [alpha]~phi"},
    {"INT6", "<alpha>phi <-> ~[alpha]~phi"},
};

class Matcher {
 public:
  bool formula(const Formula& pat, const Formula& f) {
    if (pat.kind() == FormulaKind::Atom) {
      auto [it, fresh] = sub.formulas.emplace(pat.name(), f);
      return fresh || it->second == f;
    }
    if (pat.kind() != f.kind()) return false;
    switch (pat.kind()) {
      case FormulaKind::Bottom:
        return true;
      case FormulaKind::StrongNeg:
        return formula(pat.operand(), f.operand());
      case FormulaKind::And:
      case FormulaKind::Or:
      case FormulaKind::Implies:
        return formula(pat.lhs(), f.lhs()) && formula(pat.rhs(), f.rhs());
      case FormulaKind::Box:
      case FormulaKind::Diamond:
        return program(pat.program(), f.program()) && formula(pat.operand(), f.operand());
      case FormulaKind::Atom:
        break;
    }
    return false;
  }

  bool program(const Program& pat, const Program& p) {
    if (pat.kind() == ProgramKind::Atomic) {
      auto [it, fresh] = sub.programs.emplace(pat.name(), p);
      return fresh || it->second == p;
    }
    if (pat.kind() != p.kind()) return false;
    switch (pat.kind()) {
      case ProgramKind::Seq:
      case ProgramKind::Choice:
        return program(pat.lhs(), p.lhs()) && program(pat.rhs(), p.rhs());
      case ProgramKind::Star:
        return program(pat.operand(), p.operand());
      case ProgramKind::Test:
        return formula(pat.formula(), p.formula());
      case ProgramKind::Atomic:
        break;
    }
    return false;
  }

  Substitution sub;
};

Program instantiate(const Program& pat, const Substitution& sub);

Formula instantiate_formula(const Formula& pat, const Substitution& sub) {
  switch (pat.kind()) {
    case FormulaKind::Atom: {
      auto it = sub.formulas.find(pat.name());
      return it == sub.formulas.end() ? pat : it->second;
    }
    case FormulaKind::Bottom:
      return pat;
    case FormulaKind::StrongNeg:
      return Formula::strong_neg(instantiate_formula(pat.operand(), sub));
    case FormulaKind::And:
      return Formula::conj(instantiate_formula(pat.lhs(), sub), instantiate_formula(pat.rhs(), sub));
    case FormulaKind::Or:
      return Formula::disj(instantiate_formula(pat.lhs(), sub), instantiate_formula(pat.rhs(), sub));
    case FormulaKind::Implies:
      return Formula::implies(instantiate_formula(pat.lhs(), sub),
                              instantiate_formula(pat.rhs(), sub));
    case FormulaKind::Box:
      return Formula::box(instantiate(pat.program(), sub), instantiate_formula(pat.operand(), sub));
    case FormulaKind::Diamond:
      return Formula::diamond(instantiate(pat.program(), sub),
                              instantiate_formula(pat.operand(), sub));
  }
  return pat;
}

Program instantiate(const Program& pat, const Substitution& sub) {
  switch (pat.kind()) {
    case ProgramKind::Atomic: {
      auto it = sub.programs.find(pat.name());
      return it == sub.programs.end() ? pat : it->second;
    }
    case ProgramKind::Seq:
      return Program::seq(instantiate(pat.lhs(), sub), instantiate(pat.rhs(), sub));
    case ProgramKind::Choice:
      return Program::choice(instantiate(pat.lhs(), sub), instantiate(pat.rhs(), sub));
    case ProgramKind::Star:
      return Program::star(instantiate(pat.operand(), sub));
    case ProgramKind::Test:
      return Program::test(instantiate_formula(pat.formula(), sub));
  }
  return pat;
}

std::optional<std::size_t> parse_index(std::string_view s) {
  std::size_t v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

}  // namespace

const std::vector<Schema>& schemata() {
  static const std::vector<Schema> all = [] {
    std::vector<Schema> v;
    for (const auto& r : kSchemata) v.push_back({r.id, r.text, parse_formula(r.text)});
    return v;
  }();
  return all;
}

const Schema* find_schema(std::string_view id) {
  for (const auto& s : schemata())
    if (s.id == id) return &s;
  return nullptr;
}

std::optional<Substitution> match_schema(const Formula& f, const Schema& s) {
  Matcher m;
  if (!m.formula(s.pattern, f)) return std::nullopt;
  return std::move(m.sub);
}

Formula instantiate(const Formula& pattern, const Substitution& sub) {
  return instantiate_formula(pattern, sub);
}

std::set<std::string> formula_metavariables(const Schema& s) { return atoms_of(s.pattern); }
std::set<std::string> program_metavariables(const Schema& s) {
  return atomic_programs_of(s.pattern);
}

ProofDoc load_proof(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("proof file is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("lines") || !j["lines"].is_array())
    throw FormatError("proof file needs a \"lines\" array");
  for (const auto& [k, v] : j.items())
    if (k != "lines") throw FormatError("unknown key \"" + k + "\" in proof file");
  ProofDoc d;
  std::size_t n = 0;
  for (const auto& line : j["lines"]) {
    ++n;
    if (!line.is_object() || !line.contains("formula") || !line.contains("rule") ||
        !line["formula"].is_string() || !line["rule"].is_string())
      throw FormatError("line " + std::to_string(n) + " needs string \"formula\" and \"rule\"");
    d.lines.push_back({parse_formula(line["formula"].get<std::string>()),
                       line["rule"].get<std::string>()});
  }
  return d;
}

CheckResult check_proof(const ProofDoc& d) {
  using Status = CheckResult::Status;
  for (std::size_t k = 0; k < d.lines.size(); ++k) {
    const std::size_t no = k + 1;
    const Formula& f = d.lines[k].formula;
    const std::string_view rule = d.lines[k].rule;
    auto malformed = [&](std::string why) { return CheckResult{Status::MalformedJustification, no, std::move(why)}; };
    auto invalid = [&](std::string why) { return CheckResult{Status::InvalidStep, no, std::move(why)}; };
    // Cited lines must come strictly earlier.
    auto earlier = [&](std::string_view s) -> std::optional<std::size_t> {
      auto i = parse_index(s);
      if (!i || *i == 0 || *i >= no) return std::nullopt;
      return *i - 1;
    };

    const auto colon = rule.find(':');
    if (colon == std::string_view::npos) return malformed("unknown rule \"" + std::string(rule) + "\"");
    const std::string_view head = rule.substr(0, colon), rest = rule.substr(colon + 1);

    if (head == "axiom") {
      const Schema* s = find_schema(rest);
      if (!s) return malformed("unknown schema \"" + std::string(rest) + "\"");
      if (!match_schema(f, *s)) return invalid("not an instance of " + s->id);
    } else if (head == "mp") {
      const auto comma = rest.find(',');
      if (comma == std::string_view::npos) return malformed("mp needs two line numbers");
      auto i = earlier(rest.substr(0, comma)), j = earlier(rest.substr(comma + 1));
      if (!i || !j) return malformed("mp cites a line that is not earlier");
      const Formula& imp = d.lines[*j].formula;
      if (imp.kind() != FormulaKind::Implies || !(imp.lhs() == d.lines[*i].formula) ||
          !(imp.rhs() == f))
        return invalid("line " + std::to_string(*j + 1) + " is not line " +
                       std::to_string(*i + 1) + " -> this formula");
    } else if (head == "nec") {
      const auto sep = rest.find(':');
      if (sep == std::string_view::npos) return malformed("nec needs a line number and a program");
      auto i = earlier(rest.substr(0, sep));
      if (!i) return malformed("nec cites a line that is not earlier");
      Program p;
      try {
        p = parse_program(rest.substr(sep + 1));
      } catch (const ParseError& e) {
        return malformed(std::string("bad program: ") + e.what());
      }
      if (!(f == Formula::box(p, d.lines[*i].formula)))
        return invalid("expected [" + to_string(p) + "] applied to line " + std::to_string(*i + 1));
    } else {
      return malformed("unknown rule \"" + std::string(head) + "\"");
    }
  }
  return {};
}

}  // namespace bpdl
