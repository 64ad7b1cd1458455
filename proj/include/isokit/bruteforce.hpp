#pragma once

#include <cstdint>
#include <span>

#include "isokit/gen_term.hpp"
#include "isokit/term.hpp"

namespace isokit {

enum class Verdict { Equal, NotEqual, Unknown };

const char* verdict_name(Verdict v);

// An equation between open terms of one layer; variables are GenTerm::var
// leaves.
struct Axiom {
  GenTerm lhs;
  GenTerm rhs;
};

struct BruteforceOptions {
  std::uint64_t max_states = 100000;
  // Cap on intermediate term size; 0 means max(|from|, |to|) + 8.
  std::uint32_t max_term_nodes = 0;
};

struct BruteforceResult {
  Verdict verdict = Verdict::Unknown;  // Equal or Unknown, never NotEqual
  std::uint64_t states = 0;
};

// Bounded breadth-first closure of `from` under axiom rewriting at all
// positions, both directions. Semi-decision: Equal when `to` is reached,
// Unknown on budget exhaustion. A rewrite direction with more than one
// unbound right-hand variable is skipped; a single unbound variable is
// instantiated from the subterms of the two goal terms.
BruteforceResult rewrite_search(std::span<const Axiom> axioms, const GenTerm& from,
                                const GenTerm& to, const BruteforceOptions& options);

// Oracle entry point over interned closed terms.
BruteforceResult decide_bruteforce(const TermStore& store, std::span<const Axiom> axioms,
                                   TermId s, TermId t, const BruteforceOptions& options);

}  // namespace isokit
