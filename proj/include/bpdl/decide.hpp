#ifndef BPDL_DECIDE_HPP_
#define BPDL_DECIDE_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bpdl/classical.hpp"
#include "bpdl/kernels.hpp"
#include "bpdl/model.hpp"
#include "bpdl/syntax.hpp"

namespace bpdl {

// Truth and falsity conditions of a formula as two classical formulas.
struct Translation {
  ClassicalFormula t;  // holds exactly where the source formula is supported
  ClassicalFormula f;  // holds exactly where it is falsified
};

Translation translate(const Formula& phi);
ClassicalProgram translate(const Program& alpha);

class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DecideOptions {
  std::size_t type_limit = std::size_t{1} << 20;
  ExecutionPolicy policy = ExecutionPolicy::Parallel;
};

// SAT carries a witness model and state. For classical queries the witness
// is read through the doubling: p+ is the truth set of p, p- its falsity set.
struct Verdict {
  bool satisfiable = false;
  std::optional<Model> witness;
  std::size_t state = 0;
};

struct EliminationStats {
  std::size_t closure_size = 0;
  std::size_t initial_types = 0;
  std::size_t surviving_types = 0;
  std::size_t rounds = 0;
};

// Type elimination for classical PDL. Throws ResourceLimit when more than
// opts.type_limit locally coherent types exist.
Verdict pdl_sat(const ClassicalFormula& psi, const DecideOptions& opts = {},
                EliminationStats* stats = nullptr);

// Satisfiability in a standard model; the witness is re-checked by the
// evaluator before returning.
Verdict sat(const Formula& phi, const DecideOptions& opts = {});
bool valid(const Formula& phi, const DecideOptions& opts = {});
// SAT witness of !phi, i.e. a countermodel to phi when one exists.
Verdict find_countermodel(const Formula& phi, const DecideOptions& opts = {});

// [(a1 + ... + an)*](X1 & ... & Xk) -> phi over the atomic programs of X and
// phi; with no atomic programs, (X1 & ... & Xk) -> phi.
Formula global_reduction(const std::vector<Formula>& premises, const Formula& phi);
bool global_consequence(const std::vector<Formula>& premises, const Formula& phi,
                        const DecideOptions& opts = {});

// First model (in enumeration order, fewest states first) over the atoms
// and atomic programs of phi in which some state supports phi.
std::optional<std::pair<Model, std::size_t>> bounded_countermodel_search(
    const Formula& phi, std::size_t max_states,
    ExecutionPolicy policy = ExecutionPolicy::Parallel);

}  // namespace bpdl

#endif  // BPDL_DECIDE_HPP_
