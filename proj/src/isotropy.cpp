#include "isokit/isotropy.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "isokit/errors.hpp"

namespace isokit {

const char* membership_kind_name(MembershipVerdict::Kind kind) {
  switch (kind) {
    case MembershipVerdict::Kind::Member: return "member";
    case MembershipVerdict::Kind::RefutedCommutation: return "refuted-commutation";
    case MembershipVerdict::Kind::RefutedInvertibility: return "refuted-invertibility";
    case MembershipVerdict::Kind::InvertibilityUnknown: return "invertibility-unknown";
  }
  return "?";
}

const char* hypothesis_status_name(HypothesisStatus status) {
  switch (status) {
    case HypothesisStatus::Holds: return "holds";
    case HypothesisStatus::Violated: return "violated";
    case HypothesisStatus::Unknown: return "unknown";
  }
  return "?";
}

Verdict commutes_generically(Session& session, TermId candidate, SymbolId f) {
  TermStore& store = session.store();
  Signature& sig = session.signature();
  const std::uint32_t m = sig[f].arity;
  if (m == 0) return Verdict::Equal;  // nullary symbols impose no condition

  std::vector<TermId> fresh;
  std::vector<std::uint32_t> indices;
  for (std::uint32_t i = 1; i <= m; ++i) {
    fresh.push_back(store.leaf(sig.indeterminate(i)));
    indices.push_back(i);
  }
  TermId lhs = substitute_x(store, candidate, store.make(f, fresh));
  std::vector<TermId> instances;
  instances.reserve(m);
  for (TermId xi : fresh) instances.push_back(substitute_x(store, candidate, xi));
  TermId rhs = store.make(f, instances);
  return session.decide(lhs, rhs, IndexSet::of(indices));
}

CandidateEnumerator::CandidateEnumerator(Session& session, int generators)
    : session_(session) {
  Signature& sig = session.signature();
  // Leaf order: x first, then the generators, then the theory constants.
  leaves_.push_back(sig.x());
  int n = std::min(generators, sig.generator_count());
  for (int j = 1; j <= n; ++j) leaves_.push_back(sig.generator(j));
  for (Layer layer : {Layer::S1, Layer::S2}) {
    for (SymbolId s : sig.constants(layer)) leaves_.push_back(s);
    for (SymbolId s : sig.function_symbols(layer)) functions_.push_back(s);
  }
  by_size_.push_back({});  // size 0 is empty
}

const std::vector<TermId>& CandidateEnumerator::of_size(std::uint32_t size) {
  TermStore& store = session_.store();
  const Signature& sig = session_.signature();
  while (by_size_.size() <= size) {
    std::uint32_t n = static_cast<std::uint32_t>(by_size_.size());
    std::vector<TermId> out;
    if (n == 1) {
      for (SymbolId s : leaves_) out.push_back(store.leaf(s));
    } else {
      for (SymbolId f : functions_) {
        std::uint32_t arity = sig[f].arity;
        if (arity == 0 || arity > n - 1) continue;
        std::vector<TermId> acc(arity);
        std::function<void(std::uint32_t, std::uint32_t)> rec =
            [&](std::uint32_t index, std::uint32_t remaining) {
              if (index == arity) {
                if (remaining == 0) out.push_back(store.make(f, acc));
                return;
              }
              std::uint32_t reserve = arity - index - 1;
              for (std::uint32_t take = 1; take + reserve <= remaining; ++take) {
                for (TermId child : by_size_[take]) {
                  acc[index] = child;
                  rec(index + 1, remaining - take);
                }
              }
            };
        rec(0, n - 1);
      }
    }
    by_size_.push_back(std::move(out));
  }
  return by_size_[size];
}

std::optional<TermId> find_inverse(Session& session, TermId candidate, std::uint32_t bound,
                                   std::span<const TermId> hints) {
  TermStore& store = session.store();
  TermId x = store.leaf(session.signature().x());
  auto verifies = [&](TermId witness) {
    return session.decide(substitute_x(store, candidate, witness), x, IndexSet::of({0u})) ==
               Verdict::Equal &&
           session.decide(substitute_x(store, witness, candidate), x, IndexSet::of({0u})) ==
               Verdict::Equal;
  };
  for (TermId hint : hints) {
    if (verifies(hint)) return hint;
  }
  CandidateEnumerator enumerator(session, session.signature().generator_count());
  for (std::uint32_t size = 1; size <= bound; ++size) {
    for (TermId witness : enumerator.of_size(size)) {
      if (verifies(witness)) return witness;
    }
  }
  return std::nullopt;
}

MembershipVerdict is_member(Session& session, TermId candidate, std::uint32_t inverse_bound,
                            std::span<const TermId> inverse_hints) {
  TermStore& store = session.store();
  for (std::uint32_t index : indeterminates(store, candidate)) {
    if (index != 0) {
      throw Error("candidates must not contain auxiliary indeterminates (found x" +
                  std::to_string(index) + ")");
    }
  }
  for (Layer layer : {Layer::S1, Layer::S2}) {
    for (SymbolId f : session.signature().function_symbols(layer)) {
      Verdict v = commutes_generically(session, candidate, f);
      if (v == Verdict::NotEqual) {
        return {MembershipVerdict::Kind::RefutedCommutation, 0, f, 0};
      }
    }
  }
  if (!store.contains_x(candidate) && session.trivial_status() == TrivialStatus::No) {
    // Substitution leaves the candidate unchanged, so invertibility would
    // force candidate = x, which a candidate without x cannot prove.
    TermId x = store.leaf(session.signature().x());
    if (session.decide(candidate, x, IndexSet::of({0u})) == Verdict::NotEqual) {
      return {MembershipVerdict::Kind::RefutedInvertibility, 0, 0, 0};
    }
  }
  if (auto witness = find_inverse(session, candidate, inverse_bound, inverse_hints)) {
    return {MembershipVerdict::Kind::Member, *witness, 0, 0};
  }
  return {MembershipVerdict::Kind::InvertibilityUnknown, 0, 0, inverse_bound};
}

TermId compose(Session& session, TermId a, TermId b) {
  return substitute_x(session.store(), a, b);
}

namespace {

GroupReport enumerate_with_generators(Session& session, int generators,
                                      std::uint32_t size_bound, std::uint32_t inverse_bound) {
  GroupReport report;
  report.generators = generators;
  report.size_bound = size_bound;
  report.inverse_bound = inverse_bound;

  TermStore& store = session.store();
  bool skip_without_x = session.trivial_status() == TrivialStatus::No;

  CandidateEnumerator enumerator(session, generators);
  std::unordered_map<std::uint32_t, TermId> seen;  // class value -> first candidate
  std::vector<ClassId> order;
  for (std::uint32_t size = 1; size <= size_bound; ++size) {
    for (TermId candidate : enumerator.of_size(size)) {
      if (skip_without_x && !store.contains_x(candidate)) continue;
      ++report.candidates;
      ClassId cls = session.registry().interpret(candidate);
      if (seen.emplace(cls.value, candidate).second) order.push_back(cls);
    }
  }
  report.classes = order.size();

  for (ClassId cls : order) {
    TermId representative = session.registry().representative(cls);
    MembershipVerdict verdict = is_member(session, representative, inverse_bound);
    switch (verdict.kind) {
      case MembershipVerdict::Kind::Member:
        report.members.push_back({cls, representative, verdict.inverse_witness});
        break;
      case MembershipVerdict::Kind::InvertibilityUnknown:
        report.flagged.push_back({cls, representative, verdict.search_bound});
        break;
      default:
        ++report.refuted;
        break;
    }
  }
  return report;
}

}  // namespace

GroupReport enumerate_group(Session& session, std::uint32_t size_bound,
                            std::uint32_t inverse_bound) {
  return enumerate_with_generators(session, session.signature().generator_count(),
                                   size_bound, inverse_bound);
}

GroupReport global_isotropy(Session& session, std::uint32_t size_bound,
                            std::uint32_t inverse_bound) {
  return enumerate_with_generators(session, 0, size_bound, inverse_bound);
}

HypothesisReport check_hypotheses(Session& session) {
  HypothesisReport report;
  for (Layer layer : {Layer::S1, Layer::S2}) {
    TheoryHypothesisReport entry;
    entry.layer = layer;
    const Theory* th = session.theory(layer);
    if (!th) {
      entry.name = "(empty)";
      entry.empty_component = true;
      entry.status = HypothesisStatus::Violated;
      report.components.push_back(std::move(entry));
      continue;
    }
    entry.name = th->name();
    bool any_qualifies = false;
    bool all_disqualified = true;
    for (SymbolId f : session.signature().function_symbols(layer)) {
      SymbolHypothesis sh;
      sh.symbol = f;
      sh.projection = th->projection_index(f);
      sh.constant = th->constant_symbol(f, session.config().constant_witness_budget);
      bool qualifies =
          sh.projection.status == Verdict::NotEqual && sh.constant == Verdict::NotEqual;
      bool disqualified =
          sh.projection.status == Verdict::Equal || sh.constant == Verdict::Equal;
      any_qualifies = any_qualifies || qualifies;
      all_disqualified = all_disqualified && disqualified;
      entry.symbols.push_back(sh);
    }
    if (any_qualifies) {
      entry.status = HypothesisStatus::Holds;
    } else if (all_disqualified) {
      entry.status = HypothesisStatus::Violated;  // includes the no-symbol case
    } else {
      entry.status = HypothesisStatus::Unknown;
    }
    report.components.push_back(std::move(entry));
  }
  report.all_hold = std::all_of(
      report.components.begin(), report.components.end(),
      [](const TheoryHypothesisReport& c) { return c.status == HypothesisStatus::Holds; });
  return report;
}

}  // namespace isokit
