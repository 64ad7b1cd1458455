#pragma once

#include <optional>
#include <span>
#include <vector>

#include "isokit/session.hpp"

namespace isokit {

// Outcome of the membership test for a candidate term: a member with a
// verified inverse witness, a refutation (failed generic commutation or
// provable non-invertibility), or an exhausted inverse search.
struct MembershipVerdict {
  enum class Kind {
    Member,
    RefutedCommutation,
    RefutedInvertibility,
    InvertibilityUnknown,
  };

  Kind kind = Kind::InvertibilityUnknown;
  TermId inverse_witness = 0;     // valid for Member
  SymbolId refuting_symbol = 0;   // valid for RefutedCommutation
  std::uint32_t search_bound = 0; // valid for InvertibilityUnknown
};

const char* membership_kind_name(MembershipVerdict::Kind kind);

// Whether the candidate commutes generically with the function symbol f:
// substituting f over fresh distinct indeterminates into x commutes with
// applying f to the per-indeterminate instances.
Verdict commutes_generically(Session& session, TermId candidate, SymbolId f);

// Iterative-deepening search for an inverse witness w with both
// compositions equal to x. Hints are verified first.
std::optional<TermId> find_inverse(Session& session, TermId candidate, std::uint32_t bound,
                                   std::span<const TermId> hints = {});

// Commutation against every function symbol of both layers (deterministic
// order), then invertibility. Candidates congruent to each other receive
// the same verdict kind.
MembershipVerdict is_member(Session& session, TermId candidate, std::uint32_t inverse_bound,
                            std::span<const TermId> inverse_hints = {});

// Group multiplication: substitution of b into a's x.
TermId compose(Session& session, TermId a, TermId b);

struct MemberRecord {
  ClassId cls;
  TermId representative;
  TermId inverse_witness;
};

struct FlaggedRecord {
  ClassId cls;
  TermId representative;
  std::uint32_t search_bound;
};

struct GroupReport {
  int generators = 0;
  std::uint32_t size_bound = 0;
  std::uint32_t inverse_bound = 0;
  std::vector<MemberRecord> members;   // the class of x always first
  std::vector<FlaggedRecord> flagged;  // inverse search exhausted
  std::uint64_t candidates = 0;        // enumerated candidate terms
  std::uint64_t classes = 0;           // distinct candidate classes tested
  std::uint64_t refuted = 0;
};

// Enumerates candidate terms up to size_bound (skipping terms without x
// when the theory is known non-trivial), deduplicates by interpretation
// class, and tests one representative per class.
GroupReport enumerate_group(Session& session, std::uint32_t size_bound,
                            std::uint32_t inverse_bound);

// The same computation for the initial model: candidates over zero
// generators.
GroupReport global_isotropy(Session& session, std::uint32_t size_bound,
                            std::uint32_t inverse_bound);

enum class HypothesisStatus { Holds, Violated, Unknown };

const char* hypothesis_status_name(HypothesisStatus status);

struct SymbolHypothesis {
  SymbolId symbol = 0;
  ProjectionVerdict projection;
  Verdict constant = Verdict::Unknown;
};

struct TheoryHypothesisReport {
  std::string name;
  Layer layer = Layer::S1;
  bool empty_component = false;
  HypothesisStatus status = HypothesisStatus::Unknown;
  std::vector<SymbolHypothesis> symbols;
};

struct HypothesisReport {
  std::vector<TheoryHypothesisReport> components;
  bool all_hold = false;
};

// Per component: every function symbol with its projection and constancy
// verdicts, and whether the theory contributes a symbol that is neither.
// An absent second theory is reported as the empty component (violated).
HypothesisReport check_hypotheses(Session& session);

// Deterministic size-ordered enumeration of closed candidate terms over
// the theory symbols, the first `generators` generator constants, and x.
class CandidateEnumerator {
public:
  CandidateEnumerator(Session& session, int generators);

  // All candidate terms with exactly `size` nodes, built lazily.
  const std::vector<TermId>& of_size(std::uint32_t size);

private:
  Session& session_;
  std::vector<SymbolId> leaves_;
  std::vector<SymbolId> functions_;
  std::vector<std::vector<TermId>> by_size_;
};

}  // namespace isokit
