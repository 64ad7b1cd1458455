#pragma once

#include <memory>
#include <string>
#include <vector>

#include "isokit/combine.hpp"
#include "isokit/term.hpp"
#include "isokit/theory.hpp"

namespace isokit {

struct SessionConfig {
  int generators = 0;
  std::size_t max_term_nodes = 10000;
  std::uint64_t oracle_budget = 100000;
  std::uint32_t constant_witness_budget = 4;
  std::uint64_t solver_search_states = 20000;  // bounded-generic solver budget
  std::size_t max_classification_depth = 100000;
};

enum class TrivialStatus { No, Yes, Unknown };

// One loaded universe: the union signature, the interning store, one or two
// component theories, and the class registry. Confined to a single thread;
// run one session per worker and merge results by class identity.
class Session {
public:
  static Session from_files(const std::vector<std::string>& paths,
                            const SessionConfig& config = {});
  static Session from_texts(const std::vector<std::string>& texts,
                            const SessionConfig& config = {});

  Session(Session&&) = default;

  const SessionConfig& config() const { return config_; }
  Signature& signature() { return *sig_; }
  const Signature& signature() const { return *sig_; }
  TermStore& store() { return *store_; }
  ClassRegistry& registry() { return *registry_; }

  const Theory* theory(Layer layer) const;
  std::vector<const Theory*> theories() const;
  std::span<const Axiom> all_axioms() const { return all_axioms_; }

  TermId parse(std::string_view text) { return parse_term(*store_, text); }
  std::string print(TermId t) const { return print_term(*store_, t); }

  // Word problem for the combined theory, restricted to the indeterminates
  // in J. Throws IndexSetViolation when a term mentions an indeterminate
  // outside J.
  Verdict decide(TermId s, TermId t, const IndexSet& J);

  // J inferred as the set of occurring indeterminates.
  Verdict decide(TermId s, TermId t) { return decide(s, t, IndexSet::all()); }

  TermId canonical_representative(TermId t) { return registry_->canonical_representative(t); }

  TrivialStatus trivial_status();

  // Whether the combined theory proves the equation between two distinct
  // variables. Throws AmbiguityError when a bounded solver cannot tell.
  bool is_trivial();

  BruteforceResult oracle(TermId s, TermId t, std::uint64_t budget = 0,
                          std::uint32_t term_cap = 0);

private:
  Session(std::vector<std::string> inputs, bool from_files, const SessionConfig& config);

  SessionConfig config_;
  std::unique_ptr<Signature> sig_;
  std::vector<std::unique_ptr<Theory>> theories_;
  std::unique_ptr<TermStore> store_;
  std::unique_ptr<ClassRegistry> registry_;
  std::vector<Axiom> all_axioms_;
  bool trivial_computed_ = false;
  TrivialStatus trivial_ = TrivialStatus::No;
};

}  // namespace isokit
