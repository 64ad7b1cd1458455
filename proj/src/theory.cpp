#include "isokit/theory.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_set>

#include "isokit/errors.hpp"

namespace isokit {

const char* solver_kind_name(SolverKind kind) {
  switch (kind) {
    case SolverKind::FreeMonoid: return "free-monoid";
    case SolverKind::CommutativeMonoid: return "commutative-monoid";
    case SolverKind::FreeGroup: return "free-group";
    case SolverKind::AbelianGroup: return "abelian-group";
    case SolverKind::Semilattice: return "semilattice";
    case SolverKind::Projection: return "projection";
    case SolverKind::BoundedGeneric: return "bounded-generic";
  }
  return "?";
}

std::optional<SolverKind> solver_kind_from_name(std::string_view name) {
  static const std::map<std::string_view, SolverKind> table = {
      {"free-monoid", SolverKind::FreeMonoid},
      {"commutative-monoid", SolverKind::CommutativeMonoid},
      {"free-group", SolverKind::FreeGroup},
      {"abelian-group", SolverKind::AbelianGroup},
      {"semilattice", SolverKind::Semilattice},
      {"projection", SolverKind::Projection},
      {"bounded-generic", SolverKind::BoundedGeneric},
  };
  auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

namespace {

// Alpha-equivalence of two open terms under a shared variable bijection.
bool alpha_match(const GenTerm& a, const GenTerm& b,
                 std::map<std::uint32_t, std::uint32_t>& fwd,
                 std::map<std::uint32_t, std::uint32_t>& rev) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case GenTerm::Kind::Var: {
      auto [fit, fnew] = fwd.emplace(a.var_index(), b.var_index());
      auto [rit, rnew] = rev.emplace(b.var_index(), a.var_index());
      return fit->second == b.var_index() && rit->second == a.var_index() &&
             fnew == rnew;
    }
    case GenTerm::Kind::Opaque:
      return a.opaque_id() == b.opaque_id();
    case GenTerm::Kind::App: {
      if (a.head() != b.head() || a.args().size() != b.args().size()) return false;
      for (std::size_t i = 0; i < a.args().size(); ++i) {
        if (!alpha_match(a.args()[i], b.args()[i], fwd, rev)) return false;
      }
      return true;
    }
  }
  return false;
}

bool axiom_matches(const Axiom& axiom, const Axiom& pattern) {
  for (int orientation = 0; orientation < 2; ++orientation) {
    const GenTerm& l = orientation == 0 ? pattern.lhs : pattern.rhs;
    const GenTerm& r = orientation == 0 ? pattern.rhs : pattern.lhs;
    std::map<std::uint32_t, std::uint32_t> fwd, rev;
    if (alpha_match(axiom.lhs, l, fwd, rev) && alpha_match(axiom.rhs, r, fwd, rev)) {
      return true;
    }
  }
  return false;
}

GenTerm v(std::uint32_t i) { return GenTerm::var(i); }

void collect_heads(const GenTerm& t, std::unordered_set<SymbolId>& out) {
  if (t.is_app()) {
    out.insert(t.head());
    for (const GenTerm& a : t.args()) collect_heads(a, out);
  }
}

bool distinct_vars(const GenTerm& app) {
  std::unordered_set<std::uint32_t> seen;
  for (const GenTerm& a : app.args()) {
    if (!a.is_var() || !seen.insert(a.var_index()).second) return false;
  }
  return true;
}

bool contains_opaque_leq(const GenTerm& t, std::uint64_t max_id) {
  if (t.is_opaque()) return t.opaque_id() <= max_id;
  if (t.is_app()) {
    for (const GenTerm& a : t.args()) {
      if (contains_opaque_leq(a, max_id)) return true;
    }
  }
  return false;
}

}  // namespace

Theory::Theory(std::string name, Layer layer, std::vector<SymbolId> symbols,
               std::vector<Axiom> axioms, SolverKind kind, RoleBindings roles,
               const Signature& sig, BruteforceOptions search_budget)
    : name_(std::move(name)),
      layer_(layer),
      symbols_(std::move(symbols)),
      axioms_(std::move(axioms)),
      kind_(kind),
      roles_(roles),
      sig_(sig) {
  validate();
  solver_ = make_solver(kind_, roles_, axioms_, search_budget);
}

void Theory::validate() const {
  if (!is_theory_layer(layer_)) {
    throw UnsupportedShapeError("theory '" + name_ + "' must live in layer 1 or 2");
  }
  std::unordered_set<SymbolId> own(symbols_.begin(), symbols_.end());
  for (SymbolId s : symbols_) {
    if (sig_[s].layer != layer_) {
      throw UnsupportedShapeError("symbol '" + sig_[s].name + "' is not in layer " +
                                  layer_name(layer_));
    }
  }
  for (const Axiom& ax : axioms_) {
    std::unordered_set<SymbolId> heads;
    collect_heads(ax.lhs, heads);
    collect_heads(ax.rhs, heads);
    for (SymbolId h : heads) {
      if (!own.count(h)) {
        throw UnsupportedShapeError("axiom of theory '" + name_ +
                                    "' uses the foreign symbol '" + sig_[h].name + "'");
      }
    }
  }

  auto require_role = [&](const std::optional<SymbolId>& role, const char* what,
                          std::uint32_t arity) {
    if (!role) {
      throw UnsupportedShapeError("solver '" + std::string(solver_kind_name(kind_)) +
                                  "' needs a " + what + " binding");
    }
    if (sig_[*role].arity != arity) {
      throw UnsupportedShapeError("role " + std::string(what) + " of theory '" + name_ +
                                  "' must have arity " + std::to_string(arity));
    }
  };

  if (kind_ == SolverKind::Projection) {
    std::unordered_set<SymbolId> seen;
    for (const Axiom& ax : axioms_) {
      bool ok = ax.lhs.is_app() && !ax.lhs.args().empty() && distinct_vars(ax.lhs) &&
                ax.rhs.is_var();
      if (ok) {
        ok = std::any_of(ax.lhs.args().begin(), ax.lhs.args().end(),
                         [&](const GenTerm& a) {
                           return a.var_index() == ax.rhs.var_index();
                         });
      }
      if (!ok) {
        throw UnsupportedShapeError(
            "projection theories admit only axioms of the form f(v1..vm) = vi");
      }
      if (!seen.insert(ax.lhs.head()).second) {
        throw UnsupportedShapeError("symbol '" + sig_[ax.lhs.head()].name +
                                    "' has two projection axioms; the theory collapses");
      }
    }
    return;
  }
  if (kind_ == SolverKind::BoundedGeneric) return;

  require_role(roles_.op, "binary operation (op)", 2);
  bool needs_unit = kind_ != SolverKind::Semilattice || roles_.unit.has_value();
  if (needs_unit) require_role(roles_.unit, "unit", 0);
  bool group = kind_ == SolverKind::FreeGroup || kind_ == SolverKind::AbelianGroup;
  if (group) require_role(roles_.inv, "inverse (inv)", 1);

  SymbolId op = *roles_.op;
  GenTerm a = v(0), b = v(1), c = v(2);
  Axiom assoc{GenTerm::app(op, {GenTerm::app(op, {a, b}), c}),
              GenTerm::app(op, {a, GenTerm::app(op, {b, c})})};
  Axiom comm{GenTerm::app(op, {a, b}), GenTerm::app(op, {b, a})};
  Axiom idem{GenTerm::app(op, {a, a}), a};
  std::vector<std::pair<Axiom, const char*>> allowed{{assoc, "assoc"}};
  std::vector<Axiom> unit_laws, inv_laws;
  if (roles_.unit) {
    GenTerm e = GenTerm::app(*roles_.unit);
    unit_laws.push_back({GenTerm::app(op, {a, e}), a});
    unit_laws.push_back({GenTerm::app(op, {e, a}), a});
    for (const Axiom& u : unit_laws) allowed.push_back({u, "unit"});
  }
  if (group) {
    GenTerm e = GenTerm::app(*roles_.unit);
    SymbolId inv = *roles_.inv;
    inv_laws.push_back({GenTerm::app(op, {a, GenTerm::app(inv, {a})}), e});
    inv_laws.push_back({GenTerm::app(op, {GenTerm::app(inv, {a}), a}), e});
    for (const Axiom& i : inv_laws) allowed.push_back({i, "inverse"});
    allowed.push_back({{GenTerm::app(inv, {e}), e}, "inv-unit"});
    allowed.push_back({{GenTerm::app(inv, {GenTerm::app(inv, {a})}), a}, "inv-inv"});
    allowed.push_back({{GenTerm::app(inv, {GenTerm::app(op, {a, b})}),
                        GenTerm::app(op, {GenTerm::app(inv, {b}), GenTerm::app(inv, {a})})},
                       "inv-op"});
    allowed.push_back({{GenTerm::app(inv, {GenTerm::app(op, {a, b})}),
                        GenTerm::app(op, {GenTerm::app(inv, {a}), GenTerm::app(inv, {b})})},
                       "inv-op-abelian"});
  }
  bool commutative = kind_ == SolverKind::CommutativeMonoid ||
                     kind_ == SolverKind::AbelianGroup ||
                     kind_ == SolverKind::Semilattice;
  if (commutative) allowed.push_back({comm, "comm"});
  if (kind_ == SolverKind::Semilattice) allowed.push_back({idem, "idem"});

  for (const Axiom& ax : axioms_) {
    bool ok = std::any_of(allowed.begin(), allowed.end(), [&](const auto& entry) {
      return axiom_matches(ax, entry.first);
    });
    if (!ok) {
      throw UnsupportedShapeError("theory '" + name_ + "' has an axiom outside the '" +
                                  solver_kind_name(kind_) +
                                  "' catalogue; use the bounded-generic solver");
    }
  }

  auto has = [&](const Axiom& pattern) {
    return std::any_of(axioms_.begin(), axioms_.end(),
                       [&](const Axiom& ax) { return axiom_matches(ax, pattern); });
  };
  auto has_any = [&](const std::vector<Axiom>& patterns) {
    return std::any_of(patterns.begin(), patterns.end(), has);
  };
  if (!has(assoc)) {
    throw UnsupportedShapeError("theory '" + name_ + "' is missing the associativity axiom");
  }
  if (commutative && !has(comm)) {
    throw UnsupportedShapeError("theory '" + name_ + "' is missing the commutativity axiom");
  }
  if (kind_ == SolverKind::Semilattice && !has(idem)) {
    throw UnsupportedShapeError("theory '" + name_ + "' is missing the idempotency axiom");
  }
  if (needs_unit && !unit_laws.empty() && !has_any(unit_laws)) {
    throw UnsupportedShapeError("theory '" + name_ + "' is missing a unit axiom");
  }
  if (group && !has_any(inv_laws)) {
    throw UnsupportedShapeError("theory '" + name_ + "' is missing an inverse axiom");
  }
}

bool Theory::has_normal_forms() const {
  return kind_ != SolverKind::BoundedGeneric;
}

std::optional<GenTerm> Theory::normal_form(const GenTerm& t) const {
  return solver_->normal_form(t);
}

Verdict Theory::equal(const GenTerm& a, const GenTerm& b) const {
  return solver_->equal(a, b);
}

ProjectionVerdict Theory::projection_index(SymbolId f) const {
  const std::uint32_t arity = sig_[f].arity;
  std::vector<GenTerm> args;
  for (std::uint32_t i = 1; i <= arity; ++i) args.push_back(GenTerm::opaque(i));
  GenTerm applied = GenTerm::app(f, args);
  bool saw_unknown = false;
  for (std::uint32_t i = 1; i <= arity; ++i) {
    Verdict verdict = equal(applied, GenTerm::opaque(i));
    if (verdict == Verdict::Equal) {
      // An earlier Unknown means a smaller index might also hold; the
      // projection itself is still certain.
      return {Verdict::Equal, i};
    }
    if (verdict == Verdict::Unknown) saw_unknown = true;
  }
  return {saw_unknown ? Verdict::Unknown : Verdict::NotEqual, 0};
}

namespace {

// Enumerates generalized terms of exactly `size` nodes over the given
// symbols plus a pool of opaque leaves.
void enumerate_gen_terms(const Signature& sig, const std::vector<SymbolId>& symbols,
                         const std::vector<GenTerm>& opaque_leaves, std::uint32_t size,
                         std::vector<std::vector<GenTerm>>& by_size) {
  while (by_size.size() <= size) {
    std::uint32_t n = static_cast<std::uint32_t>(by_size.size());
    std::vector<GenTerm> out;
    if (n >= 1) {
      if (n == 1) {
        for (const GenTerm& o : opaque_leaves) out.push_back(o);
        for (SymbolId s : symbols) {
          if (sig[s].arity == 0) out.push_back(GenTerm::app(s));
        }
      } else {
        for (SymbolId s : symbols) {
          std::uint32_t arity = sig[s].arity;
          if (arity == 0 || arity > n - 1) continue;
          std::vector<std::vector<GenTerm>> parts(arity);
          std::vector<std::uint32_t> sizes(arity, 1);
          // ordered compositions of n-1 into `arity` positive parts
          std::function<void(std::uint32_t, std::uint32_t, std::vector<GenTerm>&)> rec =
              [&](std::uint32_t index, std::uint32_t remaining, std::vector<GenTerm>& acc) {
                if (index == arity) {
                  if (remaining == 0) out.push_back(GenTerm::app(s, acc));
                  return;
                }
                std::uint32_t reserve = arity - index - 1;
                for (std::uint32_t take = 1; take + reserve <= remaining; ++take) {
                  for (const GenTerm& child : by_size[take]) {
                    acc.push_back(child);
                    rec(index + 1, remaining - take, acc);
                    acc.pop_back();
                  }
                }
              };
          std::vector<GenTerm> acc;
          rec(0, n - 1, acc);
        }
      }
    }
    by_size.push_back(std::move(out));
  }
}

}  // namespace

Verdict Theory::constant_symbol(SymbolId f, std::uint32_t witness_budget) const {
  const std::uint32_t arity = sig_[f].arity;
  std::vector<GenTerm> args;
  for (std::uint32_t i = 1; i <= arity; ++i) args.push_back(GenTerm::opaque(i));
  GenTerm applied = GenTerm::app(f, args);
  if (has_normal_forms()) {
    GenTerm nf = *normal_form(applied);
    return contains_opaque_leq(nf, arity) ? Verdict::NotEqual : Verdict::Equal;
  }
  // Bounded witness search. Witnesses may mention fresh constants standing
  // for other variables; two suffice for small budgets.
  std::vector<GenTerm> extras{GenTerm::opaque(arity + 1), GenTerm::opaque(arity + 2)};
  std::vector<std::vector<GenTerm>> by_size;
  enumerate_gen_terms(sig_, symbols_, extras, witness_budget, by_size);
  for (std::uint32_t size = 1; size <= witness_budget; ++size) {
    for (const GenTerm& witness : by_size[size]) {
      if (contains_opaque_leq(witness, arity)) continue;
      if (equal(applied, witness) == Verdict::Equal) return Verdict::Equal;
    }
  }
  return Verdict::Unknown;
}

Verdict Theory::triviality() const {
  return equal(GenTerm::opaque(1), GenTerm::opaque(2));
}

}  // namespace isokit
