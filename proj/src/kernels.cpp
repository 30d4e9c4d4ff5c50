#include "bpdl/kernels.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#ifdef BPDL_HAVE_OPENMP
#include <omp.h>
#endif

namespace bpdl {

// Type-graph preimage --------------------------------------------------------

namespace {

bool steps_to(const Bitset& req, const Bitset& forb, const Bitset& target) noexcept {
  return req.is_subset_of(target) && !forb.intersects(target);
}

}  // namespace

Bitset atomic_preimage_reference(std::span<const Bitset> types, std::span<const Bitset> required,
                                 std::span<const Bitset> forbidden, const Bitset& sources,
                                 const Bitset& targets) {
  Bitset out(types.size());
  sources.for_each([&](std::size_t s) {
    bool found = false;
    targets.for_each([&](std::size_t t) {
      found = found || steps_to(required[s], forbidden[s], types[t]);
    });
    if (found) out.set(s);
  });
  return out;
}

Bitset atomic_preimage(std::span<const Bitset> types, std::span<const Bitset> required,
                       std::span<const Bitset> forbidden, const Bitset& sources,
                       const Bitset& targets, ExecutionPolicy policy) {
  Bitset out(types.size());
  if (sources.none() || targets.none()) return out;

  // Only the members mentioned by some edge condition matter; collapse the
  // targets to their distinct projections onto those members.
  std::vector<std::size_t> src;
  src.reserve(sources.count());
  sources.for_each([&](std::size_t s) { src.push_back(s); });
  Bitset relevant(types.front().size());
  for (auto s : src) relevant |= required[s] | forbidden[s];
  std::unordered_set<Bitset, BitsetHash> seen;
  std::vector<Bitset> proj;
  targets.for_each([&](std::size_t t) {
    Bitset p = types[t] & relevant;
    if (seen.insert(p).second) proj.push_back(std::move(p));
  });

  std::vector<char> hit(src.size(), 0);
  const auto count = static_cast<std::ptrdiff_t>(src.size());
  auto body = [&](std::ptrdiff_t i) {
    const std::size_t s = src[static_cast<std::size_t>(i)];
    for (const auto& p : proj)
      if (steps_to(required[s], forbidden[s], p)) {
        hit[static_cast<std::size_t>(i)] = 1;
        return;
      }
  };
  if (policy == ExecutionPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (std::ptrdiff_t i = 0; i < count; ++i) body(i);
  } else {
    for (std::ptrdiff_t i = 0; i < count; ++i) body(i);
  }
  for (std::size_t i = 0; i < src.size(); ++i)
    if (hit[i]) out.set(src[i]);
  return out;
}

// Mask evaluator ---------------------------------------------------------------

MaskEvaluator::MaskEvaluator(const Formula& f) {
  std::set<std::string> a = atoms_of(f), p = atomic_programs_of(f);
  atoms_.assign(a.begin(), a.end());
  programs_.assign(p.begin(), p.end());
  std::unordered_map<Formula, std::uint32_t> fslots;
  std::unordered_map<Program, std::uint32_t> pslots;

  // Shared subexpressions compile once.
  struct Compiler {
    MaskEvaluator& self;
    std::unordered_map<Formula, std::uint32_t>& fs;
    std::unordered_map<Program, std::uint32_t>& ps;

    std::uint32_t formula(const Formula& g) {
      if (auto it = fs.find(g); it != fs.end()) return it->second;
      Instr in{};
      switch (g.kind()) {
        case FormulaKind::Atom:
          in.op = Op::Atom;
          in.a = static_cast<std::uint32_t>(
              std::lower_bound(self.atoms_.begin(), self.atoms_.end(), g.name()) -
              self.atoms_.begin());
          break;
        case FormulaKind::Bottom:
          in.op = Op::Bottom;
          break;
        case FormulaKind::StrongNeg:
          in.op = Op::SNeg;
          in.a = formula(g.operand());
          break;
        case FormulaKind::And:
        case FormulaKind::Or:
        case FormulaKind::Implies:
          in.op = g.kind() == FormulaKind::And  ? Op::And
                  : g.kind() == FormulaKind::Or ? Op::Or
                                                : Op::Imp;
          in.a = formula(g.lhs());
          in.b = formula(g.rhs());
          break;
        case FormulaKind::Box:
        case FormulaKind::Diamond:
          in.op = g.kind() == FormulaKind::Box ? Op::Box : Op::Dia;
          in.a = formula(g.operand());
          in.b = program(g.program());
          break;
      }
      in.slot = self.formula_slots_++;
      self.code_.push_back(in);
      fs.emplace(g, in.slot);
      return in.slot;
    }

    std::uint32_t program(const Program& q) {
      if (auto it = ps.find(q); it != ps.end()) return it->second;
      Instr in{};
      switch (q.kind()) {
        case ProgramKind::Atomic:
          in.op = Op::PAtomic;
          in.a = static_cast<std::uint32_t>(
              std::lower_bound(self.programs_.begin(), self.programs_.end(), q.name()) -
              self.programs_.begin());
          break;
        case ProgramKind::Seq:
        case ProgramKind::Choice:
          in.op = q.kind() == ProgramKind::Seq ? Op::PSeq : Op::PChoice;
          in.a = program(q.lhs());
          in.b = program(q.rhs());
          break;
        case ProgramKind::Star:
          in.op = Op::PStar;
          in.a = program(q.operand());
          break;
        case ProgramKind::Test:
          in.op = Op::PTest;
          in.a = formula(q.formula());
          break;
      }
      in.slot = self.program_slots_++;
      self.code_.push_back(in);
      ps.emplace(q, in.slot);
      return in.slot;
    }
  };
  Compiler c{*this, fslots, pslots};
  root_ = c.formula(f);
}

std::uint64_t MaskEvaluator::supported(const Input& in, Scratch& sc) const {
  const std::size_t n = in.states;
  if (n == 0 || n > 64) throw std::invalid_argument("MaskEvaluator supports 1..64 states");
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  sc.plus.resize(formula_slots_);
  sc.minus.resize(formula_slots_);
  sc.rows.resize(static_cast<std::size_t>(program_slots_) * n);

  auto rows = [&](std::uint32_t slot) { return sc.rows.data() + slot * n; };
  auto all_in = [&](const std::uint64_t* r, std::uint64_t s) {
    std::uint64_t m = 0;
    for (std::size_t x = 0; x < n; ++x)
      if ((r[x] & ~s) == 0) m |= std::uint64_t{1} << x;
    return m;
  };
  auto some_in = [&](const std::uint64_t* r, std::uint64_t s) {
    std::uint64_t m = 0;
    for (std::size_t x = 0; x < n; ++x)
      if (r[x] & s) m |= std::uint64_t{1} << x;
    return m;
  };

  for (const Instr& i : code_) {
    switch (i.op) {
      case Op::Atom:
        sc.plus[i.slot] = in.plus[i.a];
        sc.minus[i.slot] = in.minus[i.a];
        break;
      case Op::Bottom:
        sc.plus[i.slot] = 0;
        sc.minus[i.slot] = full;
        break;
      case Op::SNeg:
        sc.plus[i.slot] = sc.minus[i.a];
        sc.minus[i.slot] = sc.plus[i.a];
        break;
      case Op::And:
        sc.plus[i.slot] = sc.plus[i.a] & sc.plus[i.b];
        sc.minus[i.slot] = sc.minus[i.a] | sc.minus[i.b];
        break;
      case Op::Or:
        sc.plus[i.slot] = sc.plus[i.a] | sc.plus[i.b];
        sc.minus[i.slot] = sc.minus[i.a] & sc.minus[i.b];
        break;
      case Op::Imp:
        sc.plus[i.slot] = (~sc.plus[i.a] & full) | sc.plus[i.b];
        sc.minus[i.slot] = sc.plus[i.a] & sc.minus[i.b];
        break;
      case Op::Box:
        sc.plus[i.slot] = all_in(rows(i.b), sc.plus[i.a]);
        sc.minus[i.slot] = some_in(rows(i.b), sc.minus[i.a]);
        break;
      case Op::Dia:
        sc.plus[i.slot] = some_in(rows(i.b), sc.plus[i.a]);
        sc.minus[i.slot] = all_in(rows(i.b), sc.minus[i.a]);
        break;
      case Op::PAtomic:
        std::copy_n(in.rows.data() + i.a * n, n, rows(i.slot));
        break;
      case Op::PSeq: {
        const std::uint64_t* l = rows(i.a);
        const std::uint64_t* r = rows(i.b);
        std::uint64_t* o = rows(i.slot);
        for (std::size_t x = 0; x < n; ++x) {
          std::uint64_t acc = 0, m = l[x];
          while (m) {
            acc |= r[std::countr_zero(m)];
            m &= m - 1;
          }
          o[x] = acc;
        }
        break;
      }
      case Op::PChoice: {
        const std::uint64_t* l = rows(i.a);
        const std::uint64_t* r = rows(i.b);
        std::uint64_t* o = rows(i.slot);
        for (std::size_t x = 0; x < n; ++x) o[x] = l[x] | r[x];
        break;
      }
      case Op::PStar: {
        const std::uint64_t* s = rows(i.a);
        std::uint64_t* o = rows(i.slot);
        for (std::size_t x = 0; x < n; ++x) o[x] = s[x] | (std::uint64_t{1} << x);
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t x = 0; x < n; ++x)
            if ((o[x] >> k) & 1u) o[x] |= o[k];
        break;
      }
      case Op::PTest: {
        std::uint64_t* o = rows(i.slot);
        const std::uint64_t t = sc.plus[i.a];
        for (std::size_t x = 0; x < n; ++x) o[x] = t & (std::uint64_t{1} << x);
        break;
      }
    }
  }
  return sc.plus[root_];
}

// Model enumeration --------------------------------------------------------------

void decode_model(const ModelSpace& sp, std::uint64_t index, std::vector<std::uint64_t>& plus,
                  std::vector<std::uint64_t>& minus, std::vector<std::uint64_t>& rows) {
  const std::size_t n = sp.states;
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  plus.resize(sp.atoms);
  minus.resize(sp.atoms);
  rows.resize(sp.programs * n);
  std::size_t bit = 0;
  for (std::size_t a = 0; a < sp.atoms; ++a) {
    plus[a] = (index >> bit) & full;
    bit += n;
    minus[a] = (index >> bit) & full;
    bit += n;
  }
  for (std::size_t r = 0; r < sp.programs * n; ++r) {
    rows[r] = (index >> bit) & full;
    bit += n;
  }
}

std::optional<EnumerationHit> enumerate_models(const MaskEvaluator& ev, std::size_t states,
                                               ExecutionPolicy policy) {
  const ModelSpace sp{states, ev.atoms().size(), ev.programs().size()};
  if (sp.bits() > 62) throw std::length_error("model space too large to enumerate");
  const std::uint64_t total = std::uint64_t{1} << sp.bits();

  auto probe = [&](std::uint64_t idx, MaskEvaluator::Scratch& sc, std::vector<std::uint64_t>& p,
                   std::vector<std::uint64_t>& m, std::vector<std::uint64_t>& r) {
    decode_model(sp, idx, p, m, r);
    return ev.supported({states, p, m, r}, sc);
  };

  if (policy == ExecutionPolicy::Serial) {
    MaskEvaluator::Scratch sc;
    std::vector<std::uint64_t> p, m, r;
    for (std::uint64_t idx = 0; idx < total; ++idx)
      if (auto mask = probe(idx, sc, p, m, r))
        return EnumerationHit{idx, static_cast<std::size_t>(std::countr_zero(mask))};
    return std::nullopt;
  }

  // Blocked search: the least hit index in a block is found in parallel, and
  // blocks are visited in order, so the answer matches the serial scan.
  constexpr std::uint64_t kBlock = std::uint64_t{1} << 14;
  for (std::uint64_t base = 0; base < total; base += kBlock) {
    const std::uint64_t end = std::min(total, base + kBlock);
    std::uint64_t best = total;
#pragma omp parallel reduction(min : best)
    {
      MaskEvaluator::Scratch sc;
      std::vector<std::uint64_t> p, m, r;
#pragma omp for schedule(static)
      for (std::int64_t i = static_cast<std::int64_t>(base); i < static_cast<std::int64_t>(end);
           ++i) {
        const auto idx = static_cast<std::uint64_t>(i);
        if (idx < best && probe(idx, sc, p, m, r)) best = idx;
      }
    }
    if (best < total) {
      MaskEvaluator::Scratch sc;
      std::vector<std::uint64_t> p, m, r;
      const auto mask = probe(best, sc, p, m, r);
      return EnumerationHit{best, static_cast<std::size_t>(std::countr_zero(mask))};
    }
  }
  return std::nullopt;
}

}  // namespace bpdl
