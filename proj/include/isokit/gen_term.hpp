#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "isokit/signature.hpp"

namespace isokit {

// A generalized term: function symbols applied over leaves that are either
// signature constants (nullary Apps), pattern variables, or opaque free
// constants (used for congruence classes and fresh test constants).
// Immutable, structurally shared, with a memoized hash.
class GenTerm {
public:
  enum class Kind : std::uint8_t { Var, Opaque, App };

  GenTerm() : GenTerm(var(0)) {}

  static GenTerm var(std::uint32_t index);
  static GenTerm opaque(std::uint64_t id);
  static GenTerm app(SymbolId head, std::vector<GenTerm> args = {});

  Kind kind() const { return node_->kind; }
  bool is_var() const { return node_->kind == Kind::Var; }
  bool is_opaque() const { return node_->kind == Kind::Opaque; }
  bool is_app() const { return node_->kind == Kind::App; }

  std::uint32_t var_index() const { return node_->var; }
  std::uint64_t opaque_id() const { return node_->opaque; }
  SymbolId head() const { return node_->head; }
  const std::vector<GenTerm>& args() const { return node_->args; }

  std::size_t hash() const { return node_->hash; }
  std::uint32_t node_count() const { return node_->size; }

  bool operator==(const GenTerm& other) const;
  bool operator!=(const GenTerm& other) const { return !(*this == other); }

private:
  struct Node {
    Kind kind;
    std::uint32_t var = 0;
    std::uint64_t opaque = 0;
    SymbolId head = 0;
    std::vector<GenTerm> args;
    std::size_t hash = 0;
    std::uint32_t size = 1;
  };

  explicit GenTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct GenTermHash {
  std::size_t operator()(const GenTerm& t) const { return t.hash(); }
};

// Total order used for canonical sorting (multiset and exponent-vector
// normal forms). Var < Opaque < App; Apps compare by head then children.
int compare(const GenTerm& a, const GenTerm& b);

// Internal debug/key rendering: variables as ?<i>, opaques as #<i>,
// applications as (<head-id> ...).
std::string to_key(const GenTerm& t);

}  // namespace isokit
