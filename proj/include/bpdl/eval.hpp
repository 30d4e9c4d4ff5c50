#ifndef BPDL_EVAL_HPP_
#define BPDL_EVAL_HPP_

#include <cstddef>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bpdl/model.hpp"
#include "bpdl/syntax.hpp"

namespace bpdl {

enum class BelnapValue { TrueOnly, FalseOnly, Both, Neither };

BelnapValue belnap_of(bool supported, bool falsified) noexcept;
std::string_view to_string(BelnapValue v) noexcept;

// |φ|⁺ and |φ|⁻. No containment between the two is implied.
struct TruthSets {
  StateSet plus;
  StateSet minus;
  bool operator==(const TruthSets&) const = default;
};

enum class Sign { Plus, Minus };

// Memoised evaluator over one model. Truth sets and program relations are
// cached by structural identity, so a subexpression occurring many times
// (typically inside tests under a star) is computed once per session.
// A session is not thread-safe; give each thread its own.
class EvalSession {
 public:
  explicit EvalSession(const Model& m) : model_(m) {}

  const Model& model() const noexcept { return model_; }

  const TruthSets& truth_sets(const Formula& f);
  const Relation& relation_of(const Program& p);

  bool supports(std::size_t x, const Formula& f, Sign sign);
  BelnapValue belnap_value(std::size_t x, const Formula& f);
  bool valid(const Formula& f);
  bool entails(const std::vector<Formula>& premises, const Formula& f);

  // Instrumentation: number of distinct formulas / programs evaluated.
  std::size_t formulas_computed() const noexcept { return formulas_.size(); }
  std::size_t programs_computed() const noexcept { return programs_.size(); }

 private:
  TruthSets compute(const Formula& f);
  Relation compute(const Program& p);

  const Model& model_;
  std::unordered_map<Formula, TruthSets> formulas_;
  std::unordered_map<Program, Relation> programs_;
};

TruthSets truth_sets(const Model& m, const Formula& f);
Relation relation_of(const Model& m, const Program& p);
bool supports(const Model& m, std::size_t x, const Formula& f, Sign sign);
BelnapValue belnap_value(const Model& m, std::size_t x, const Formula& f);
bool valid_in_model(const Model& m, const Formula& f);
bool entails_in_model(const Model& m, const std::vector<Formula>& premises, const Formula& f);

}  // namespace bpdl

#endif  // BPDL_EVAL_HPP_
