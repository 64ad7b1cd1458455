#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "isokit/bruteforce.hpp"
#include "isokit/gen_term.hpp"
#include "isokit/signature.hpp"

namespace isokit {

enum class SolverKind {
  FreeMonoid,
  CommutativeMonoid,
  FreeGroup,
  AbelianGroup,
  Semilattice,
  Projection,
  BoundedGeneric,
};

const char* solver_kind_name(SolverKind kind);
std::optional<SolverKind> solver_kind_from_name(std::string_view name);

// Which symbols play the algebraic roles for the built-in solvers.
struct RoleBindings {
  std::optional<SymbolId> op;
  std::optional<SymbolId> unit;
  std::optional<SymbolId> inv;
};

struct ProjectionVerdict {
  Verdict status = Verdict::NotEqual;  // Equal: is a projection
  std::uint32_t index = 0;             // 1-based, valid when status == Equal
};

// Word-problem decider for one component theory over generalized terms
// whose leaves may be opaque free constants.
class WordSolver {
public:
  virtual ~WordSolver() = default;

  // Canonical form under the theory's axioms, when the solver decides by
  // normal forms; nullopt for bounded search.
  virtual std::optional<GenTerm> normal_form(const GenTerm& t) const = 0;

  virtual Verdict equal(const GenTerm& a, const GenTerm& b) const = 0;
};

// A component theory: one layer's symbols, its axioms, and the solver that
// decides its word problem. Construction validates that the axioms and role
// bindings fit the declared solver kind (UnsupportedShapeError otherwise).
// Stateless after construction.
class Theory {
public:
  Theory(std::string name, Layer layer, std::vector<SymbolId> symbols,
         std::vector<Axiom> axioms, SolverKind kind, RoleBindings roles,
         const Signature& sig, BruteforceOptions search_budget = {20000, 48});

  const std::string& name() const { return name_; }
  Layer layer() const { return layer_; }
  SolverKind kind() const { return kind_; }
  const std::vector<SymbolId>& symbols() const { return symbols_; }
  const std::vector<Axiom>& axioms() const { return axioms_; }
  const RoleBindings& roles() const { return roles_; }
  const Signature& signature() const { return sig_; }

  bool has_normal_forms() const;
  std::optional<GenTerm> normal_form(const GenTerm& t) const;

  // Provable equality treating opaque constants as distinct free generators.
  Verdict equal(const GenTerm& a, const GenTerm& b) const;

  // Whether the theory proves f(v1..vm) = v_i for distinct variables.
  ProjectionVerdict projection_index(SymbolId f) const;

  // Whether the theory proves f(v1..vm) = s for some s containing none of
  // the v_i. Exact for normal-form solvers; bounded witness search (term
  // size <= witness_budget) otherwise.
  Verdict constant_symbol(SymbolId f, std::uint32_t witness_budget) const;

  // Whether the theory proves the equation between two distinct variables.
  Verdict triviality() const;

private:
  void validate() const;

  std::string name_;
  Layer layer_;
  std::vector<SymbolId> symbols_;
  std::vector<Axiom> axioms_;
  SolverKind kind_;
  RoleBindings roles_;
  const Signature& sig_;
  std::shared_ptr<const WordSolver> solver_;
};

// Factory used by Theory; exposed for tests that exercise solvers directly.
std::shared_ptr<const WordSolver> make_solver(SolverKind kind, const RoleBindings& roles,
                                              const std::vector<Axiom>& axioms,
                                              const BruteforceOptions& search_budget);

}  // namespace isokit
