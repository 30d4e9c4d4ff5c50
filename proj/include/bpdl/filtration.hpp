#ifndef BPDL_FILTRATION_HPP_
#define BPDL_FILTRATION_HPP_

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "bpdl/closure.hpp"
#include "bpdl/model.hpp"

namespace bpdl {

// How states are identified. PlusOnly ignores anti-support and exists only
// to demonstrate that the lemma breaks without it.
enum class Equivalence { BothSigns, PlusOnly };

struct Filtration {
  Model quotient;
  std::vector<std::size_t> class_of;  // original state -> quotient state
  std::vector<std::size_t> witness;   // quotient state -> least original member
};

Filtration filtrate(const Model& m, const ClosureSet& t,
                    Equivalence eq = Equivalence::BothSigns);

class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LemmaViolation {
  int item;  // 1..7
  std::string detail;
};

struct FiltrationReport {
  std::size_t closure_size = 0;
  std::size_t quotient_size = 0;
  bool size_bound_holds = true;  // quotient_size <= 4^closure_size
  std::array<std::size_t, 7> checked{};  // instantiations per item
  std::vector<LemmaViolation> violations;

  bool ok() const noexcept { return size_bound_holds && violations.empty(); }
};

struct FiltrationCheckOptions {
  std::size_t max_states = 6;
  Equivalence equivalence = Equivalence::BothSigns;
};

// Exhaustively checks all seven items of the filtration lemma for m through
// FL(f). Throws GuardExceeded when m has more than max_states states.
FiltrationReport check_filtration_lemma(const Model& m, const Formula& f,
                                        const FiltrationCheckOptions& opts = {});

}  // namespace bpdl

#endif  // BPDL_FILTRATION_HPP_
