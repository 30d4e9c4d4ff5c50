#ifndef BPDL_MODEL_HPP_
#define BPDL_MODEL_HPP_

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bpdl/bitset.hpp"
#include "bpdl/syntax.hpp"

namespace bpdl {

using StateSet = Bitset;

// Dense boolean matrix over a fixed state count; row x holds the successors
// of x.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n) : rows_(n, Bitset(n)) {}

  static Relation identity(std::size_t n);
  // Identity restricted to the states in s.
  static Relation diagonal(const StateSet& s);

  std::size_t size() const noexcept { return rows_.size(); }
  bool contains(std::size_t x, std::size_t y) const noexcept { return rows_[x].test(y); }
  void insert(std::size_t x, std::size_t y) noexcept { rows_[x].set(y); }
  const Bitset& successors(std::size_t x) const noexcept { return rows_[x]; }
  std::size_t pair_count() const noexcept;
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  bool is_reflexive() const noexcept;
  bool is_transitive() const;

  Relation& operator|=(const Relation& o);
  friend Relation operator|(Relation a, const Relation& b) { return a |= b; }
  bool operator==(const Relation& o) const = default;

 private:
  std::vector<Bitset> rows_;
};

Relation compose(const Relation& first, const Relation& second);
// Reflexive-transitive closure (Warshall).
Relation rtc(const Relation& r);

// {x | every r-successor of x is in s}
StateSet universal_preimage(const Relation& r, const StateSet& s);
// {x | some r-successor of x is in s}
StateSet existential_preimage(const Relation& r, const StateSet& s);

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A finite standard dynamic model: states, atomic relations and the two
// valuations. Absent programs denote the empty relation; absent atoms have
// empty truth and falsity sets. Immutable once built.
class Model {
 public:
  // Throws FormatError when an invariant is violated.
  Model(std::vector<std::string> states, std::map<std::string, Relation> programs,
        std::map<std::string, StateSet> plus, std::map<std::string, StateSet> minus);

  std::size_t size() const noexcept { return states_.size(); }
  const std::vector<std::string>& states() const noexcept { return states_; }
  const std::string& state_name(std::size_t i) const { return states_.at(i); }
  // Throws std::out_of_range for an unknown name.
  std::size_t state_index(std::string_view name) const;

  const Relation& relation(const std::string& program) const;
  const StateSet& plus(const std::string& atom) const;
  const StateSet& minus(const std::string& atom) const;

  const std::map<std::string, Relation>& programs() const noexcept { return programs_; }
  const std::map<std::string, StateSet>& plus_valuation() const noexcept { return plus_; }
  const std::map<std::string, StateSet>& minus_valuation() const noexcept { return minus_; }
  std::set<std::string> atom_names() const;

  StateSet all_states() const { return Bitset::full(size()); }
  StateSet no_states() const { return Bitset(size()); }

 private:
  std::vector<std::string> states_;
  std::unordered_map<std::string, std::size_t> index_;
  std::map<std::string, Relation> programs_;
  std::map<std::string, StateSet> plus_, minus_;
  Relation empty_relation_;
  StateSet empty_set_;
};

// Parses the JSON model format:
//   {"states": [...], "atoms": {"p": {"plus": [...], "minus": [...]}},
//    "programs": {"a": [["s0", "s1"], ...]}}
Model load_model(std::string_view json_text);
std::string dump_model(const Model& m, int indent = 2);

// Submodel generated by x under the named atomic programs.
Model restrict_reachable(const Model& m, std::size_t x, const std::set<std::string>& programs);

// Submodel on the given states, in their original order.
Model restrict_to(const Model& m, const StateSet& keep);

}  // namespace bpdl

#endif  // BPDL_MODEL_HPP_
