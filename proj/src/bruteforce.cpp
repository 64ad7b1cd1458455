#include "isokit/bruteforce.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_set>

namespace isokit {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Equal: return "equal";
    case Verdict::NotEqual: return "not-equal";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

namespace {

using Bindings = std::map<std::uint32_t, GenTerm>;

bool match(const GenTerm& pattern, const GenTerm& subject, Bindings& bind) {
  switch (pattern.kind()) {
    case GenTerm::Kind::Var: {
      auto [it, inserted] = bind.emplace(pattern.var_index(), subject);
      return inserted || it->second == subject;
    }
    case GenTerm::Kind::Opaque:
      return subject.is_opaque() && subject.opaque_id() == pattern.opaque_id();
    case GenTerm::Kind::App: {
      if (!subject.is_app() || subject.head() != pattern.head()) return false;
      if (subject.args().size() != pattern.args().size()) return false;
      for (std::size_t i = 0; i < pattern.args().size(); ++i) {
        if (!match(pattern.args()[i], subject.args()[i], bind)) return false;
      }
      return true;
    }
  }
  return false;
}

GenTerm instantiate(const GenTerm& pattern, const Bindings& bind) {
  switch (pattern.kind()) {
    case GenTerm::Kind::Var: return bind.at(pattern.var_index());
    case GenTerm::Kind::Opaque: return pattern;
    case GenTerm::Kind::App: {
      std::vector<GenTerm> args;
      args.reserve(pattern.args().size());
      for (const GenTerm& a : pattern.args()) args.push_back(instantiate(a, bind));
      return GenTerm::app(pattern.head(), std::move(args));
    }
  }
  return pattern;
}

void collect_vars(const GenTerm& t, std::unordered_set<std::uint32_t>& out) {
  if (t.is_var()) {
    out.insert(t.var_index());
  } else if (t.is_app()) {
    for (const GenTerm& a : t.args()) collect_vars(a, out);
  }
}

void collect_subterms(const GenTerm& t, std::vector<GenTerm>& out,
                      std::unordered_set<std::size_t>& seen) {
  if (seen.insert(t.hash()).second) out.push_back(t);
  if (t.is_app()) {
    for (const GenTerm& a : t.args()) collect_subterms(a, out, seen);
  }
}

struct Rule {
  GenTerm lhs;
  GenTerm rhs;
  // Right-hand variables not bound by the left side; at most one supported.
  std::vector<std::uint32_t> free_vars;
};

// Rebuilds the spine of `t` with the subterm at preorder position `pos`
// replaced; positions count App nodes and leaves alike. A node at position
// p owns the position range [p, p + node_count).
GenTerm replace_at(const GenTerm& t, std::uint32_t pos, std::uint32_t counter,
                   const GenTerm& replacement) {
  if (counter == pos) return replacement;
  std::vector<GenTerm> args = t.args();
  std::uint32_t child_pos = counter + 1;
  for (GenTerm& a : args) {
    std::uint32_t end = child_pos + a.node_count();
    if (pos >= child_pos && pos < end) {
      a = replace_at(a, pos, child_pos, replacement);
      return GenTerm::app(t.head(), std::move(args));
    }
    child_pos = end;
  }
  return t;  // position out of range; caller guarantees it is not
}

void subterms_preorder(const GenTerm& t, std::vector<GenTerm>& out) {
  out.push_back(t);
  if (t.is_app()) {
    for (const GenTerm& a : t.args()) subterms_preorder(a, out);
  }
}

}  // namespace

BruteforceResult rewrite_search(std::span<const Axiom> axioms, const GenTerm& from,
                                const GenTerm& to, const BruteforceOptions& options) {
  BruteforceResult result;
  if (from == to) {
    result.verdict = Verdict::Equal;
    return result;
  }

  std::uint32_t cap = options.max_term_nodes;
  if (cap == 0) cap = std::max(from.node_count(), to.node_count()) + 8;

  std::vector<Rule> rules;
  for (const Axiom& ax : axioms) {
    for (int dir = 0; dir < 2; ++dir) {
      Rule rule{dir == 0 ? ax.lhs : ax.rhs, dir == 0 ? ax.rhs : ax.lhs, {}};
      std::unordered_set<std::uint32_t> lhs_vars, rhs_vars;
      collect_vars(rule.lhs, lhs_vars);
      collect_vars(rule.rhs, rhs_vars);
      for (std::uint32_t v : rhs_vars) {
        if (!lhs_vars.count(v)) rule.free_vars.push_back(v);
      }
      if (rule.free_vars.size() > 1) continue;
      if (rule.lhs.is_var() && rule.rhs.is_var() &&
          rule.lhs.var_index() == rule.rhs.var_index()) {
        continue;
      }
      rules.push_back(std::move(rule));
    }
  }

  // Instantiation pool for a single unbound right-hand variable.
  std::vector<GenTerm> pool;
  {
    std::unordered_set<std::size_t> seen;
    collect_subterms(from, pool, seen);
    collect_subterms(to, pool, seen);
  }

  std::deque<GenTerm> queue{from};
  std::unordered_set<GenTerm, GenTermHash> visited{from};
  result.states = 1;

  auto push = [&](const GenTerm& next) -> bool {
    if (next.node_count() > cap) return false;
    if (!visited.insert(next).second) return false;
    ++result.states;
    if (next == to) return true;
    queue.push_back(next);
    return false;
  };

  while (!queue.empty() && result.states < options.max_states) {
    GenTerm current = queue.front();
    queue.pop_front();

    std::vector<GenTerm> positions;
    subterms_preorder(current, positions);

    for (std::uint32_t pos = 0; pos < positions.size(); ++pos) {
      const GenTerm& sub = positions[pos];
      for (const Rule& rule : rules) {
        Bindings bind;
        if (!match(rule.lhs, sub, bind)) continue;
        auto apply = [&](const Bindings& full) -> bool {
          GenTerm replacement = instantiate(rule.rhs, full);
          return push(replace_at(current, pos, 0, replacement));
        };
        if (rule.free_vars.empty()) {
          if (apply(bind)) {
            result.verdict = Verdict::Equal;
            return result;
          }
        } else {
          for (const GenTerm& candidate : pool) {
            Bindings full = bind;
            full.emplace(rule.free_vars.front(), candidate);
            if (apply(full)) {
              result.verdict = Verdict::Equal;
              return result;
            }
            if (result.states >= options.max_states) break;
          }
        }
        if (result.states >= options.max_states) break;
      }
      if (result.states >= options.max_states) break;
    }
  }

  result.verdict = Verdict::Unknown;
  return result;
}

BruteforceResult decide_bruteforce(const TermStore& store, std::span<const Axiom> axioms,
                                   TermId s, TermId t, const BruteforceOptions& options) {
  return rewrite_search(axioms, to_gen_term(store, s), to_gen_term(store, t), options);
}

}  // namespace isokit
