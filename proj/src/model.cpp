#include "bpdl/model.hpp"

#include <deque>

#include <json.hpp>

namespace bpdl {

using json = nlohmann::ordered_json;

Relation Relation::identity(std::size_t n) {
  Relation r(n);
  for (std::size_t i = 0; i < n; ++i) r.insert(i, i);
  return r;
}

Relation Relation::diagonal(const StateSet& s) {
  Relation r(s.size());
  s.for_each([&](std::size_t i) { r.insert(i, i); });
  return r;
}

std::size_t Relation::pair_count() const noexcept {
  std::size_t c = 0;
  for (const auto& row : rows_) c += row.count();
  return c;
}

std::vector<std::pair<std::size_t, std::size_t>> Relation::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < rows_.size(); ++x)
    rows_[x].for_each([&](std::size_t y) { out.emplace_back(x, y); });
  return out;
}

bool Relation::is_reflexive() const noexcept {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (!rows_[i].test(i)) return false;
  return true;
}

bool Relation::is_transitive() const {
  for (const auto& row : rows_) {
    bool ok = true;
    row.for_each([&](std::size_t y) { ok = ok && rows_[y].is_subset_of(row); });
    if (!ok) return false;
  }
  return true;
}

Relation& Relation::operator|=(const Relation& o) {
  for (std::size_t i = 0; i < rows_.size(); ++i) rows_[i] |= o.rows_[i];
  return *this;
}

Relation compose(const Relation& first, const Relation& second) {
  const std::size_t n = first.size();
  Relation out(n);
  for (std::size_t x = 0; x < n; ++x) {
    Bitset row(n);
    first.successors(x).for_each([&](std::size_t y) { row |= second.successors(y); });
    row.for_each([&](std::size_t z) { out.insert(x, z); });
  }
  return out;
}

Relation rtc(const Relation& r) {
  const std::size_t n = r.size();
  std::vector<Bitset> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    rows[i] = r.successors(i);
    rows[i].set(i);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (rows[i].test(k)) rows[i] |= rows[k];
  Relation out(n);
  for (std::size_t i = 0; i < n; ++i) rows[i].for_each([&](std::size_t j) { out.insert(i, j); });
  return out;
}

StateSet universal_preimage(const Relation& r, const StateSet& s) {
  StateSet out(r.size());
  for (std::size_t x = 0; x < r.size(); ++x)
    if (r.successors(x).is_subset_of(s)) out.set(x);
  return out;
}

StateSet existential_preimage(const Relation& r, const StateSet& s) {
  StateSet out(r.size());
  for (std::size_t x = 0; x < r.size(); ++x)
    if (r.successors(x).intersects(s)) out.set(x);
  return out;
}

Model::Model(std::vector<std::string> states, std::map<std::string, Relation> programs,
             std::map<std::string, StateSet> plus, std::map<std::string, StateSet> minus)
    : states_(std::move(states)),
      programs_(std::move(programs)),
      plus_(std::move(plus)),
      minus_(std::move(minus)) {
  if (states_.empty()) throw FormatError("model must have at least one state");
  const std::size_t n = states_.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!index_.emplace(states_[i], i).second)
      throw FormatError("duplicate state name '" + states_[i] + "'");
  for (const auto& [name, rel] : programs_)
    if (rel.size() != n) throw FormatError("relation for program '" + name + "' has wrong size");
  for (auto* val : {&plus_, &minus_}) {
    for (const auto& [name, set] : *val)
      if (set.size() != n) throw FormatError("valuation of atom '" + name + "' has wrong size");
  }
  // Make both valuations total over the mentioned atoms.
  for (const auto& [name, set] : plus_) minus_.try_emplace(name, n);
  for (const auto& [name, set] : minus_) plus_.try_emplace(name, n);
  empty_relation_ = Relation(n);
  empty_set_ = StateSet(n);
}

std::size_t Model::state_index(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw std::out_of_range("unknown state '" + std::string(name) + "'");
  return it->second;
}

const Relation& Model::relation(const std::string& program) const {
  auto it = programs_.find(program);
  return it == programs_.end() ? empty_relation_ : it->second;
}

const StateSet& Model::plus(const std::string& atom) const {
  auto it = plus_.find(atom);
  return it == plus_.end() ? empty_set_ : it->second;
}

const StateSet& Model::minus(const std::string& atom) const {
  auto it = minus_.find(atom);
  return it == minus_.end() ? empty_set_ : it->second;
}

std::set<std::string> Model::atom_names() const {
  std::set<std::string> out;
  for (const auto& [name, s] : plus_) out.insert(name);
  return out;
}

// JSON ---------------------------------------------------------------------------

namespace {

std::size_t lookup_state(const std::unordered_map<std::string, std::size_t>& index,
                         const json& v, const std::string& where) {
  if (!v.is_string()) throw FormatError(where + ": state reference must be a string");
  auto it = index.find(v.get<std::string>());
  if (it == index.end())
    throw FormatError(where + ": unknown state '" + v.get<std::string>() + "'");
  return it->second;
}

void check_name(const std::string& name, const std::string& what) {
  if (!is_identifier(name)) throw FormatError(what + " name '" + name + "' is not an identifier");
}

}  // namespace

Model load_model(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("model must be a JSON object");
  if (!doc.contains("states") || !doc["states"].is_array())
    throw FormatError("key 'states' must be an array of state names");

  std::vector<std::string> states;
  std::unordered_map<std::string, std::size_t> index;
  for (const auto& s : doc["states"]) {
    if (!s.is_string()) throw FormatError("states: names must be strings");
    auto name = s.get<std::string>();
    if (!index.emplace(name, states.size()).second)
      throw FormatError("states: duplicate state name '" + name + "'");
    states.push_back(std::move(name));
  }
  if (states.empty()) throw FormatError("states: list must not be empty");
  const std::size_t n = states.size();

  std::map<std::string, StateSet> plus, minus;
  if (doc.contains("atoms")) {
    const auto& atoms = doc["atoms"];
    if (!atoms.is_object()) throw FormatError("key 'atoms' must be an object");
    for (const auto& [name, entry] : atoms.items()) {
      check_name(name, "atom");
      if (!entry.is_object()) throw FormatError("atoms." + name + " must be an object");
      for (const auto& [key, list] : entry.items())
        if (key != "plus" && key != "minus")
          throw FormatError("atoms." + name + ": unknown key '" + key + "'");
      auto read = [&](const char* key) {
        StateSet set(n);
        if (entry.contains(key)) {
          const std::string where = "atoms." + name + "." + key;
          if (!entry[key].is_array()) throw FormatError(where + " must be an array");
          for (const auto& v : entry[key]) set.set(lookup_state(index, v, where));
        }
        return set;
      };
      plus.emplace(name, read("plus"));
      minus.emplace(name, read("minus"));
    }
  }

  std::map<std::string, Relation> programs;
  if (doc.contains("programs")) {
    const auto& progs = doc["programs"];
    if (!progs.is_object()) throw FormatError("key 'programs' must be an object");
    for (const auto& [name, edges] : progs.items()) {
      check_name(name, "program");
      const std::string where = "programs." + name;
      if (!edges.is_array()) throw FormatError(where + " must be an array of pairs");
      Relation rel(n);
      for (const auto& e : edges) {
        if (!e.is_array() || e.size() != 2) throw FormatError(where + ": each edge must be a pair");
        rel.insert(lookup_state(index, e[0], where), lookup_state(index, e[1], where));
      }
      programs.emplace(name, std::move(rel));
    }
  }

  for (const auto& [key, v] : doc.items())
    if (key != "states" && key != "atoms" && key != "programs")
      throw FormatError("unknown top-level key '" + key + "'");

  return Model(std::move(states), std::move(programs), std::move(plus), std::move(minus));
}

std::string dump_model(const Model& m, int indent) {
  json doc = json::object();
  doc["states"] = m.states();
  json atoms = json::object();
  for (const auto& name : m.atom_names()) {
    json plus = json::array(), minus = json::array();
    m.plus(name).for_each([&](std::size_t i) { plus.push_back(m.state_name(i)); });
    m.minus(name).for_each([&](std::size_t i) { minus.push_back(m.state_name(i)); });
    atoms[name] = {{"plus", plus}, {"minus", minus}};
  }
  doc["atoms"] = std::move(atoms);
  json programs = json::object();
  for (const auto& [name, rel] : m.programs()) {
    json edges = json::array();
    for (auto [x, y] : rel.pairs()) edges.push_back({m.state_name(x), m.state_name(y)});
    programs[name] = std::move(edges);
  }
  doc["programs"] = std::move(programs);
  return doc.dump(indent);
}

Model restrict_to(const Model& m, const StateSet& keep) {
  std::vector<std::size_t> old_of_new;
  std::vector<std::size_t> new_of_old(m.size(), m.size());
  keep.for_each([&](std::size_t i) {
    new_of_old[i] = old_of_new.size();
    old_of_new.push_back(i);
  });
  const std::size_t n = old_of_new.size();
  std::vector<std::string> states;
  for (auto i : old_of_new) states.push_back(m.state_name(i));

  auto project = [&](const StateSet& s) {
    StateSet out(n);
    for (std::size_t j = 0; j < n; ++j)
      if (s.test(old_of_new[j])) out.set(j);
    return out;
  };
  std::map<std::string, StateSet> plus, minus;
  for (const auto& [name, s] : m.plus_valuation()) plus.emplace(name, project(s));
  for (const auto& [name, s] : m.minus_valuation()) minus.emplace(name, project(s));
  std::map<std::string, Relation> programs;
  for (const auto& [name, rel] : m.programs()) {
    Relation r(n);
    for (std::size_t j = 0; j < n; ++j)
      rel.successors(old_of_new[j]).for_each([&](std::size_t y) {
        if (new_of_old[y] < n) r.insert(j, new_of_old[y]);
      });
    programs.emplace(name, std::move(r));
  }
  return Model(std::move(states), std::move(programs), std::move(plus), std::move(minus));
}

Model restrict_reachable(const Model& m, std::size_t x, const std::set<std::string>& programs) {
  StateSet seen(m.size());
  std::deque<std::size_t> queue{x};
  seen.set(x);
  while (!queue.empty()) {
    std::size_t s = queue.front();
    queue.pop_front();
    for (const auto& name : programs)
      m.relation(name).successors(s).for_each([&](std::size_t t) {
        if (!seen.test(t)) {
          seen.set(t);
          queue.push_back(t);
        }
      });
  }
  return restrict_to(m, seen);
}

}  // namespace bpdl
