#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "isokit/term.hpp"
#include "isokit/theory.hpp"

namespace isokit {

// Canonical identity of a congruence class of closed terms. Two ids are
// equal exactly when their member terms are congruent.
struct ClassId {
  std::uint32_t value = 0;
  friend bool operator==(const ClassId&, const ClassId&) = default;
  friend bool operator<(const ClassId& a, const ClassId& b) { return a.value < b.value; }
};

struct ClassIdHash {
  std::size_t operator()(ClassId c) const { return c.value; }
};

// A subset of indeterminate indices (0 stands for x), or everything.
class IndexSet {
public:
  static IndexSet all() {
    IndexSet s;
    s.all_ = true;
    return s;
  }
  static IndexSet of(std::initializer_list<std::uint32_t> indices) {
    IndexSet s;
    s.indices_.insert(indices.begin(), indices.end());
    return s;
  }
  static IndexSet of(const std::vector<std::uint32_t>& indices) {
    IndexSet s;
    s.indices_.insert(indices.begin(), indices.end());
    return s;
  }

  bool is_all() const { return all_; }
  bool contains(std::uint32_t index) const { return all_ || indices_.count(index) > 0; }
  const std::set<std::uint32_t>& indices() const { return indices_; }

private:
  bool all_ = false;
  std::set<std::uint32_t> indices_;
};

// The congruence-class registry: the carrier of the quotient algebra, with
// the layered congruence test, alien abstraction, and the collapse-aware
// interpretation. Registration is memoized per interned term; each class
// keeps its best representative seen (minimal rank, then node count, then
// print order). Confined to one thread, like the store it wraps.
class ClassRegistry {
public:
  ClassRegistry(TermStore& store, const Theory* layer1, const Theory* layer2,
                std::size_t max_recursion_depth = 100000);

  ClassRegistry(const ClassRegistry&) = delete;
  ClassRegistry& operator=(const ClassRegistry&) = delete;

  // The congruence class of the literal term: same root layer and
  // layer-congruent abstractions. Throws AmbiguityError when a bounded
  // solver cannot decide a comparison.
  ClassId class_of(TermId t);

  // The interpretation of the term in the quotient algebra: bottom-up over
  // class representatives, dropping to an alien's class whenever a node
  // collapses. Equality of interpretations decides the combined word
  // problem.
  ClassId interpret(TermId t);

  // Representative with minimal rank registered so far; for classes in the
  // image of interpret, rank(representative) <= rank of any term that
  // interprets into the class.
  TermId representative(ClassId c) const { return classes_[c.value].representative; }
  Layer class_layer(ClassId c) const { return classes_[c.value].layer; }
  std::size_t class_count() const { return classes_.size(); }

  // Replaces each alien subterm by its class; a term rooted outside the
  // layer becomes a bare class leaf, a pure layer term stays itself.
  GenTerm abstract_aliens(TermId t, Layer layer);

  // Layer congruence over abstracted terms: the component theory's word
  // problem for S1/S2 (class leaves as distinct free constants), syntactic
  // identity for the constant layers.
  Verdict approx_equal(Layer layer, const GenTerm& a, const GenTerm& b) const;

  // interpret(t)'s stored representative; congruent to t with rank at most
  // rank(t), and interpretation-stable.
  TermId canonical_representative(TermId t) { return representative(interpret(t)); }

  const Theory* theory(Layer layer) const;
  TermStore& store() { return store_; }

private:
  struct ClassInfo {
    Layer layer;
    TermId representative;
    GenTerm abstraction;  // of the representative, in `layer`
  };

  struct DepthGuard;

  ClassId classify(TermId t, Layer layer, const GenTerm& abstraction);
  ClassId interpret_node(TermId node);
  void improve_representative(ClassId c, TermId t, const GenTerm& abstraction);
  ClassId new_class(Layer layer, TermId t, GenTerm abstraction);

  TermStore& store_;
  std::array<const Theory*, 2> theories_;
  std::size_t max_depth_;
  std::size_t depth_ = 0;

  std::vector<ClassInfo> classes_;
  std::unordered_map<TermId, ClassId> class_memo_;
  std::unordered_map<TermId, ClassId> interp_memo_;
  std::unordered_map<SymbolId, ClassId> constant_classes_;  // S3/S4 singletons
  // Per theory layer: canonical-key index when the solver has normal forms,
  // otherwise a syntactic fast path plus a linear scan list.
  std::array<std::unordered_map<std::string, ClassId>, 2> key_index_;
  std::array<std::unordered_map<GenTerm, ClassId, GenTermHash>, 2> exact_index_;
  std::array<std::vector<ClassId>, 2> scan_lists_;
};

}  // namespace isokit
