#ifndef BPDL_PROOF_HPP_
#define BPDL_PROOF_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bpdl/syntax.hpp"

namespace bpdl {

// An axiom schema. Every atom of the pattern is a formula metavariable and
// every atomic program a program metavariable.
struct Schema {
  std::string id;
  std::string text;
  Formula pattern;
};

// The frozen axiom list: CL1..CL10 (classical base), SN1..SN5, K, the ten
// PDL schemata and INT1..INT6.
const std::vector<Schema>& schemata();
const Schema* find_schema(std::string_view id);

struct Substitution {
  std::map<std::string, Formula> formulas;
  std::map<std::string, Program> programs;
};

std::optional<Substitution> match_schema(const Formula& f, const Schema& s);

// Pattern with metavariables replaced. Unbound metavariables stay as they are.
Formula instantiate(const Formula& pattern, const Substitution& sub);

std::set<std::string> formula_metavariables(const Schema& s);
std::set<std::string> program_metavariables(const Schema& s);

struct ProofLine {
  Formula formula;
  std::string rule;  // "axiom:<id>", "mp:<i>,<j>" or "nec:<i>:<program>"
};

struct ProofDoc {
  std::vector<ProofLine> lines;
};

// Throws FormatError on a structurally bad document and ParseError when a
// line's formula does not parse.
ProofDoc load_proof(std::string_view json_text);

struct CheckResult {
  enum class Status { Accepted, MalformedJustification, InvalidStep };
  Status status = Status::Accepted;
  std::size_t line = 0;  // 1-based first failing line, 0 when accepted
  std::string reason;

  bool accepted() const noexcept { return status == Status::Accepted; }
};

CheckResult check_proof(const ProofDoc& d);

}  // namespace bpdl

#endif  // BPDL_PROOF_HPP_
