#include <algorithm>
#include <map>
#include <unordered_map>

#include "isokit/theory.hpp"

namespace isokit {

namespace {

struct GenTermLess {
  bool operator()(const GenTerm& a, const GenTerm& b) const {
    return compare(a, b) < 0;
  }
};

// Shared machinery for the normal-form solvers. Symbols without a bound
// role are uninterpreted: they become atoms whose arguments are normalized
// recursively.
class NormalFormSolver : public WordSolver {
public:
  Verdict equal(const GenTerm& a, const GenTerm& b) const final {
    return *normal_form(a) == *normal_form(b) ? Verdict::Equal : Verdict::NotEqual;
  }

protected:
  GenTerm normalize_atom(const GenTerm& t) const {
    if (!t.is_app() || t.args().empty()) return t;
    std::vector<GenTerm> args;
    args.reserve(t.args().size());
    for (const GenTerm& a : t.args()) args.push_back(*normal_form(a));
    return GenTerm::app(t.head(), std::move(args));
  }
};

// Associative binary operation with unit; equality of flattened factor
// sequences.
class FreeMonoidSolver : public NormalFormSolver {
public:
  FreeMonoidSolver(SymbolId op, SymbolId unit) : op_(op), unit_(unit) {}

  std::optional<GenTerm> normal_form(const GenTerm& t) const override {
    std::vector<GenTerm> factors;
    flatten(t, factors);
    return rebuild(factors, op_, unit_);
  }

  static GenTerm rebuild(const std::vector<GenTerm>& factors, SymbolId op, SymbolId unit) {
    if (factors.empty()) return GenTerm::app(unit);
    GenTerm acc = factors.back();
    for (std::size_t i = factors.size() - 1; i-- > 0;) {
      acc = GenTerm::app(op, {factors[i], acc});
    }
    return acc;
  }

protected:
  void flatten(const GenTerm& t, std::vector<GenTerm>& out) const {
    if (t.is_app() && t.head() == op_) {
      flatten(t.args()[0], out);
      flatten(t.args()[1], out);
      return;
    }
    if (t.is_app() && t.head() == unit_) return;
    out.push_back(normalize_atom(t));
  }

  SymbolId op_;
  SymbolId unit_;
};

// As above, with the factor multiset sorted.
class CommutativeMonoidSolver : public FreeMonoidSolver {
public:
  using FreeMonoidSolver::FreeMonoidSolver;

  std::optional<GenTerm> normal_form(const GenTerm& t) const override {
    std::vector<GenTerm> factors;
    flatten(t, factors);
    std::sort(factors.begin(), factors.end(), GenTermLess{});
    return rebuild(factors, op_, unit_);
  }
};

// Sorted set of factors; an idempotent commutative operation, optionally
// with a unit.
class SemilatticeSolver : public NormalFormSolver {
public:
  SemilatticeSolver(SymbolId op, std::optional<SymbolId> unit) : op_(op), unit_(unit) {}

  std::optional<GenTerm> normal_form(const GenTerm& t) const override {
    std::vector<GenTerm> factors;
    flatten(t, factors);
    std::sort(factors.begin(), factors.end(), GenTermLess{});
    factors.erase(std::unique(factors.begin(), factors.end()), factors.end());
    if (factors.empty()) return GenTerm::app(*unit_);
    GenTerm acc = factors.back();
    for (std::size_t i = factors.size() - 1; i-- > 0;) {
      acc = GenTerm::app(op_, {factors[i], acc});
    }
    return acc;
  }

private:
  void flatten(const GenTerm& t, std::vector<GenTerm>& out) const {
    if (t.is_app() && t.head() == op_) {
      flatten(t.args()[0], out);
      flatten(t.args()[1], out);
      return;
    }
    if (unit_ && t.is_app() && t.head() == *unit_) return;
    out.push_back(normalize_atom(t));
  }

  SymbolId op_;
  std::optional<SymbolId> unit_;
};

// Freely reduced signed words over atoms.
class FreeGroupSolver : public NormalFormSolver {
public:
  FreeGroupSolver(SymbolId op, SymbolId unit, SymbolId inv)
      : op_(op), unit_(unit), inv_(inv) {}

  std::optional<GenTerm> normal_form(const GenTerm& t) const override {
    std::vector<std::pair<GenTerm, int>> word;
    build_word(t, +1, word);
    return rebuild(reduce(word));
  }

protected:
  using Word = std::vector<std::pair<GenTerm, int>>;

  void build_word(const GenTerm& t, int sign, Word& out) const {
    if (t.is_app() && t.head() == op_) {
      if (sign > 0) {
        build_word(t.args()[0], sign, out);
        build_word(t.args()[1], sign, out);
      } else {
        build_word(t.args()[1], sign, out);
        build_word(t.args()[0], sign, out);
      }
      return;
    }
    if (t.is_app() && t.head() == inv_) {
      build_word(t.args()[0], -sign, out);
      return;
    }
    if (t.is_app() && t.head() == unit_) return;
    out.emplace_back(normalize_atom(t), sign);
  }

  static Word reduce(const Word& word) {
    Word out;
    for (const auto& letter : word) {
      if (!out.empty() && out.back().first == letter.first &&
          out.back().second == -letter.second) {
        out.pop_back();
      } else {
        out.push_back(letter);
      }
    }
    return out;
  }

  GenTerm rebuild(const Word& word) const {
    if (word.empty()) return GenTerm::app(unit_);
    auto letter = [&](const std::pair<GenTerm, int>& l) {
      return l.second > 0 ? l.first : GenTerm::app(inv_, {l.first});
    };
    GenTerm acc = letter(word.back());
    for (std::size_t i = word.size() - 1; i-- > 0;) {
      acc = GenTerm::app(op_, {letter(word[i]), acc});
    }
    return acc;
  }

  SymbolId op_;
  SymbolId unit_;
  SymbolId inv_;
};

// Integer exponent vectors over sorted atoms.
class AbelianGroupSolver : public FreeGroupSolver {
public:
  using FreeGroupSolver::FreeGroupSolver;

  std::optional<GenTerm> normal_form(const GenTerm& t) const override {
    Word word;
    build_word(t, +1, word);
    std::map<GenTerm, long long, GenTermLess> exponents;
    for (const auto& [atom, sign] : word) exponents[atom] += sign;
    Word flat;
    for (const auto& [atom, exp] : exponents) {
      for (long long i = 0; i < (exp < 0 ? -exp : exp); ++i) {
        flat.emplace_back(atom, exp < 0 ? -1 : +1);
      }
    }
    return rebuild(flat);
  }
};

// Rewrites every symbol with a projection axiom to the projected argument,
// bottom-up; one pass reaches the fixed point.
class ProjectionSolver : public NormalFormSolver {
public:
  explicit ProjectionSolver(std::unordered_map<SymbolId, std::uint32_t> table)
      : table_(std::move(table)) {}

  std::optional<GenTerm> normal_form(const GenTerm& t) const override {
    if (!t.is_app() || t.args().empty()) return t;
    std::vector<GenTerm> args;
    args.reserve(t.args().size());
    for (const GenTerm& a : t.args()) args.push_back(*normal_form(a));
    auto it = table_.find(t.head());
    if (it != table_.end()) return args[it->second];
    return GenTerm::app(t.head(), std::move(args));
  }

private:
  std::unordered_map<SymbolId, std::uint32_t> table_;  // 0-based argument
};

// Incomplete fallback for ad-hoc axiom sets: syntactic identity, then a
// bounded rewrite search. Never claims NotEqual unless the axiom list is
// empty (the free theory is decided syntactically).
class BoundedGenericSolver : public WordSolver {
public:
  BoundedGenericSolver(std::vector<Axiom> axioms, BruteforceOptions budget)
      : axioms_(std::move(axioms)), budget_(budget) {}

  std::optional<GenTerm> normal_form(const GenTerm&) const override { return std::nullopt; }

  Verdict equal(const GenTerm& a, const GenTerm& b) const override {
    if (a == b) return Verdict::Equal;
    if (axioms_.empty()) return Verdict::NotEqual;
    return rewrite_search(axioms_, a, b, budget_).verdict;
  }

private:
  std::vector<Axiom> axioms_;
  BruteforceOptions budget_;
};

}  // namespace

std::shared_ptr<const WordSolver> make_solver(SolverKind kind, const RoleBindings& roles,
                                              const std::vector<Axiom>& axioms,
                                              const BruteforceOptions& search_budget) {
  switch (kind) {
    case SolverKind::FreeMonoid:
      return std::make_shared<FreeMonoidSolver>(*roles.op, *roles.unit);
    case SolverKind::CommutativeMonoid:
      return std::make_shared<CommutativeMonoidSolver>(*roles.op, *roles.unit);
    case SolverKind::Semilattice:
      return std::make_shared<SemilatticeSolver>(*roles.op, roles.unit);
    case SolverKind::FreeGroup:
      return std::make_shared<FreeGroupSolver>(*roles.op, *roles.unit, *roles.inv);
    case SolverKind::AbelianGroup:
      return std::make_shared<AbelianGroupSolver>(*roles.op, *roles.unit, *roles.inv);
    case SolverKind::Projection: {
      // Axiom shape f(distinct vars) = v_i is validated by Theory; record
      // the projected argument position.
      std::unordered_map<SymbolId, std::uint32_t> table;
      for (const Axiom& ax : axioms) {
        const auto& args = ax.lhs.args();
        for (std::uint32_t j = 0; j < args.size(); ++j) {
          if (args[j].var_index() == ax.rhs.var_index()) {
            table[ax.lhs.head()] = j;
            break;
          }
        }
      }
      return std::make_shared<ProjectionSolver>(std::move(table));
    }
    case SolverKind::BoundedGeneric:
      return std::make_shared<BoundedGenericSolver>(axioms, search_budget);
  }
  return nullptr;
}

}  // namespace isokit
