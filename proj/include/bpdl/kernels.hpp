#ifndef BPDL_KERNELS_HPP_
#define BPDL_KERNELS_HPP_

// Data-parallel inner loops of the decision procedures. Each kernel has a
// plain serial reference and an OpenMP version; both must agree exactly.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bpdl/bitset.hpp"
#include "bpdl/syntax.hpp"

namespace bpdl {

enum class ExecutionPolicy { Serial, Parallel };

// Preimage step of type elimination for one atomic program. A type s may
// step to t iff required[s] ⊆ types[t] and forbidden[s] ∩ types[t] = ∅.
// Returns {s ∈ sources | some t ∈ targets is a successor of s}.
Bitset atomic_preimage(std::span<const Bitset> types, std::span<const Bitset> required,
                       std::span<const Bitset> forbidden, const Bitset& sources,
                       const Bitset& targets, ExecutionPolicy policy);

// Straight double loop; the reference for atomic_preimage.
Bitset atomic_preimage_reference(std::span<const Bitset> types, std::span<const Bitset> required,
                                 std::span<const Bitset> forbidden, const Bitset& sources,
                                 const Bitset& targets);

// Evaluator for models of at most 64 states, with state sets as machine
// words. A formula is compiled once into a flat instruction list.
class MaskEvaluator {
 public:
  explicit MaskEvaluator(const Formula& f);

  const std::vector<std::string>& atoms() const noexcept { return atoms_; }
  const std::vector<std::string>& programs() const noexcept { return programs_; }

  // Per-atom truth/falsity masks in atoms() order; relations as
  // programs().size() blocks of n successor rows.
  struct Input {
    std::size_t states = 0;
    std::span<const std::uint64_t> plus;
    std::span<const std::uint64_t> minus;
    std::span<const std::uint64_t> rows;
  };

  struct Scratch {
    std::vector<std::uint64_t> plus, minus, rows;
  };

  // Mask of states supporting the compiled formula.
  std::uint64_t supported(const Input& in, Scratch& scratch) const;

 private:
  enum class Op : std::uint8_t {
    Atom, Bottom, SNeg, And, Or, Imp, Box, Dia,
    PAtomic, PSeq, PChoice, PStar, PTest
  };
  struct Instr {
    Op op;
    std::uint32_t a = 0, b = 0;  // operand slots (formula or program)
    std::uint32_t slot = 0;      // output slot
  };

  std::uint32_t compile(const Formula& f);
  std::uint32_t compile(const Program& p);

  std::vector<std::string> atoms_, programs_;
  std::vector<Instr> code_;
  std::uint32_t formula_slots_ = 0, program_slots_ = 0;
  std::uint32_t root_ = 0;
};

// Layout of one enumerated model: 2·n·|atoms| valuation bits followed by
// n²·|programs| relation bits.
struct ModelSpace {
  std::size_t states;
  std::size_t atoms;
  std::size_t programs;
  std::size_t bits() const noexcept { return 2 * states * atoms + states * states * programs; }
};

struct EnumerationHit {
  std::uint64_t index;
  std::size_t state;  // least supporting state
};

void decode_model(const ModelSpace& space, std::uint64_t index, std::vector<std::uint64_t>& plus,
                  std::vector<std::uint64_t>& minus, std::vector<std::uint64_t>& rows);

// Least model index in the space whose model supports the formula somewhere.
// Throws std::length_error when the space has more than 2^62 models.
std::optional<EnumerationHit> enumerate_models(const MaskEvaluator& ev, std::size_t states,
                                               ExecutionPolicy policy);

}  // namespace bpdl

#endif  // BPDL_KERNELS_HPP_
