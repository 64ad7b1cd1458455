#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "isokit/gen_term.hpp"
#include "isokit/signature.hpp"

namespace isokit {

using TermId = std::uint32_t;

// Interning arena for closed terms over the union signature. Nodes are
// hash-consed on (head, argument ids), so syntactically equal terms share
// one id and equality is an integer comparison. Rank, node count and
// x-containment are computed once at creation.
//
// A store (like the registry built on top of it) is confined to one thread.
class TermStore {
public:
  explicit TermStore(Signature& sig, std::size_t max_nodes = 10000);

  TermStore(const TermStore&) = delete;
  TermStore& operator=(const TermStore&) = delete;

  Signature& signature() { return sig_; }
  const Signature& signature() const { return sig_; }

  TermId make(SymbolId head, std::span<const TermId> args);
  TermId leaf(SymbolId head) { return make(head, {}); }

  SymbolId head(TermId t) const { return nodes_[t].head; }
  std::span<const TermId> args(TermId t) const;
  Layer root_layer(TermId t) const { return sig_[nodes_[t].head].layer; }
  std::uint32_t rank(TermId t) const { return nodes_[t].rank; }
  std::uint32_t node_count(TermId t) const { return nodes_[t].size; }
  bool pure(TermId t) const { return nodes_[t].rank == 0; }
  bool contains_x(TermId t) const { return nodes_[t].contains_x; }

  std::size_t max_nodes() const { return max_nodes_; }
  void set_max_nodes(std::size_t n) { max_nodes_ = n; }
  std::size_t stored_terms() const { return nodes_.size(); }

private:
  struct Node {
    SymbolId head;
    std::uint32_t rank;
    std::uint32_t size;
    std::uint32_t args_begin;
    std::uint32_t args_count;
    bool contains_x;
  };

  struct KeyHash {
    std::size_t operator()(const std::pair<SymbolId, std::vector<TermId>>& k) const;
  };

  Signature& sig_;
  std::size_t max_nodes_;
  std::vector<Node> nodes_;
  std::vector<TermId> arg_pool_;
  std::unordered_map<std::pair<SymbolId, std::vector<TermId>>, TermId, KeyHash> intern_;
};

// The unique decomposition of an impure term: a proper one-layer context
// with variables ?1..?l and the distinct alien subterms in first-occurrence
// order. Substituting aliens[i] for variable i reproduces the term.
struct Decomposition {
  Layer layer;
  GenTerm context;             // Var leaves indexed 0..aliens.size()-1
  std::vector<TermId> aliens;  // distinct, first occurrence order
};

// Maximal subterms whose root lies outside the root layer, deduplicated in
// first-occurrence order; empty iff the term is pure.
std::vector<TermId> aliens(const TermStore& store, TermId t);

// Throws PureTermError when rank(t) == 0.
Decomposition decompose(const TermStore& store, TermId t);

// Aliens of arbitrary depth (the one-level aliens plus, recursively, the
// aliens of each alien), deduplicated in discovery order.
std::vector<TermId> all_aliens(const TermStore& store, TermId t);

// Replaces every occurrence of the constant x (index 0 only; other
// indeterminates are untouched) by `replacement`.
TermId substitute_x(TermStore& store, TermId t, TermId replacement);

// Indices of the S4 constants occurring in t (0 stands for x), sorted.
std::vector<std::uint32_t> indeterminates(const TermStore& store, TermId t);

// Replaces every S4 leaf by the constant x. Rank is preserved.
TermId collapse_indeterminates(TermStore& store, TermId t);

std::string print_term(const TermStore& store, TermId t);

// Parses a parenthesized prefix expression; `x<i>` indeterminates are
// declared on demand. Throws ParseError with a byte offset.
TermId parse_term(TermStore& store, std::string_view text);

// Lossless view of a closed term as a GenTerm (every node an App).
GenTerm to_gen_term(const TermStore& store, TermId t);

}  // namespace isokit
