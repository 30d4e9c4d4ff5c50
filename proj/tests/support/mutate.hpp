#ifndef BPDL_TESTS_MUTATE_HPP_
#define BPDL_TESTS_MUTATE_HPP_

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bpdl/proof.hpp"
#include "bpdl/syntax.hpp"

namespace bpdl::testing {

inline std::vector<Program> mutations(const Program& p);

// Every formula obtained by changing exactly one connective: a binary
// connective into another binary one, a box into a diamond or back, or
// ; into + and back.
inline std::vector<Formula> mutations(const Formula& f) {
  std::vector<Formula> out;
  switch (f.kind()) {
    case FormulaKind::Atom:
    case FormulaKind::Bottom:
      break;
    case FormulaKind::StrongNeg:
      for (auto& g : mutations(f.operand())) out.push_back(Formula::strong_neg(g));
      break;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies: {
      const auto& l = f.lhs();
      const auto& r = f.rhs();
      if (f.kind() != FormulaKind::And) out.push_back(Formula::conj(l, r));
      if (f.kind() != FormulaKind::Or) out.push_back(Formula::disj(l, r));
      if (f.kind() != FormulaKind::Implies) out.push_back(Formula::implies(l, r));
      auto rebuild = [&](Formula a, Formula b) {
        switch (f.kind()) {
          case FormulaKind::And: return Formula::conj(a, b);
          case FormulaKind::Or: return Formula::disj(a, b);
          default: return Formula::implies(a, b);
        }
      };
      for (auto& g : mutations(l)) out.push_back(rebuild(g, r));
      for (auto& g : mutations(r)) out.push_back(rebuild(l, g));
      break;
    }
    case FormulaKind::Box:
    case FormulaKind::Diamond: {
      const bool box = f.kind() == FormulaKind::Box;
      auto rebuild = [&](Program p, Formula g) {
        return box ? Formula::box(p, g) : Formula::diamond(p, g);
      };
      out.push_back(box ? Formula::diamond(f.program(), f.operand())
                        : Formula::box(f.program(), f.operand()));
      for (auto& p : mutations(f.program())) out.push_back(rebuild(p, f.operand()));
      for (auto& g : mutations(f.operand())) out.push_back(rebuild(f.program(), g));
      break;
    }
  }
  return out;
}

inline std::vector<Program> mutations(const Program& p) {
  std::vector<Program> out;
  switch (p.kind()) {
    case ProgramKind::Atomic:
      break;
    case ProgramKind::Seq:
    case ProgramKind::Choice: {
      const bool seq = p.kind() == ProgramKind::Seq;
      out.push_back(seq ? Program::choice(p.lhs(), p.rhs()) : Program::seq(p.lhs(), p.rhs()));
      auto rebuild = [&](Program a, Program b) {
        return seq ? Program::seq(a, b) : Program::choice(a, b);
      };
      for (auto& q : mutations(p.lhs())) out.push_back(rebuild(q, p.rhs()));
      for (auto& q : mutations(p.rhs())) out.push_back(rebuild(p.lhs(), q));
      break;
    }
    case ProgramKind::Star:
      for (auto& q : mutations(p.operand())) out.push_back(Program::star(q));
      break;
    case ProgramKind::Test:
      for (auto& g : mutations(p.formula())) out.push_back(Program::test(g));
      break;
  }
  return out;
}

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CorpusProof {
  std::string name;
  ProofDoc doc;
};

inline std::vector<CorpusProof> load_proof_corpus(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<CorpusProof> out;
  for (const auto& f : files) out.push_back({f.stem().string(), load_proof(read_file(f))});
  return out;
}

}  // namespace bpdl::testing

#endif  // BPDL_TESTS_MUTATE_HPP_
