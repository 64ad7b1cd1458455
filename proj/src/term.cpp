#include "isokit/term.hpp"

#include <algorithm>
#include <unordered_set>

#include "isokit/errors.hpp"

namespace isokit {

std::size_t TermStore::KeyHash::operator()(
    const std::pair<SymbolId, std::vector<TermId>>& k) const {
  std::size_t h = 0x811c9dc5u ^ k.first;
  for (TermId a : k.second) {
    h ^= a + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

TermStore::TermStore(Signature& sig, std::size_t max_nodes)
    : sig_(sig), max_nodes_(max_nodes) {}

std::span<const TermId> TermStore::args(TermId t) const {
  const Node& n = nodes_[t];
  return {arg_pool_.data() + n.args_begin, n.args_count};
}

TermId TermStore::make(SymbolId head, std::span<const TermId> children) {
  const Symbol& sym = sig_[head];
  if (sym.arity != children.size()) {
    throw Error("arity mismatch: '" + sym.name + "' expects " +
                std::to_string(sym.arity) + " arguments, got " +
                std::to_string(children.size()));
  }
  std::pair<SymbolId, std::vector<TermId>> key{
      head, std::vector<TermId>(children.begin(), children.end())};
  auto it = intern_.find(key);
  if (it != intern_.end()) return it->second;

  Node node;
  node.head = head;
  node.size = 1;
  node.contains_x = (head == sig_.x());
  Layer k = sym.layer;
  // rank per the alien decomposition: a same-layer child contributes the
  // maximum rank among its own aliens (rank - 1); an alien child contributes
  // its rank. No contributions at all means the term is pure.
  int max_alien_rank = -1;
  for (TermId c : children) {
    const Node& cn = nodes_[c];
    node.size += cn.size;
    node.contains_x = node.contains_x || cn.contains_x;
    if (sig_[cn.head].layer == k) {
      if (cn.rank > 0) {
        max_alien_rank = std::max(max_alien_rank, static_cast<int>(cn.rank) - 1);
      }
    } else {
      max_alien_rank = std::max(max_alien_rank, static_cast<int>(cn.rank));
    }
  }
  node.rank = max_alien_rank < 0 ? 0 : static_cast<std::uint32_t>(max_alien_rank + 1);
  if (node.size > max_nodes_) {
    throw TermSizeLimitError("term exceeds the node cap of " +
                             std::to_string(max_nodes_) + " nodes");
  }
  node.args_begin = static_cast<std::uint32_t>(arg_pool_.size());
  node.args_count = static_cast<std::uint32_t>(children.size());
  arg_pool_.insert(arg_pool_.end(), children.begin(), children.end());
  TermId id = static_cast<TermId>(nodes_.size());
  nodes_.push_back(node);
  intern_.emplace(std::move(key), id);
  return id;
}

namespace {

void collect_aliens(const TermStore& store, TermId t, Layer k,
                    std::vector<TermId>& out,
                    std::unordered_set<TermId>& seen) {
  for (TermId c : store.args(t)) {
    if (store.root_layer(c) == k) {
      collect_aliens(store, c, k, out, seen);
    } else if (seen.insert(c).second) {
      out.push_back(c);
    }
  }
}

}  // namespace

std::vector<TermId> aliens(const TermStore& store, TermId t) {
  std::vector<TermId> out;
  if (store.pure(t)) return out;
  std::unordered_set<TermId> seen;
  collect_aliens(store, t, store.root_layer(t), out, seen);
  return out;
}

namespace {

GenTerm build_context(const TermStore& store, TermId t, Layer k,
                      const std::unordered_map<TermId, std::uint32_t>& slot) {
  if (store.root_layer(t) != k) {
    return GenTerm::var(slot.at(t));
  }
  std::vector<GenTerm> args;
  args.reserve(store.args(t).size());
  for (TermId c : store.args(t)) {
    args.push_back(build_context(store, c, k, slot));
  }
  return GenTerm::app(store.head(t), std::move(args));
}

}  // namespace

Decomposition decompose(const TermStore& store, TermId t) {
  if (store.pure(t)) {
    throw PureTermError("cannot decompose the pure term " + print_term(store, t));
  }
  Decomposition d;
  d.layer = store.root_layer(t);
  d.aliens = aliens(store, t);
  std::unordered_map<TermId, std::uint32_t> slot;
  for (std::uint32_t i = 0; i < d.aliens.size(); ++i) slot[d.aliens[i]] = i;
  d.context = build_context(store, t, d.layer, slot);
  return d;
}

std::vector<TermId> all_aliens(const TermStore& store, TermId t) {
  // Breadth-first over alien levels; deterministic discovery order.
  std::vector<TermId> out;
  std::unordered_set<TermId> seen;
  std::vector<TermId> frontier{t};
  while (!frontier.empty()) {
    std::vector<TermId> next;
    for (TermId u : frontier) {
      for (TermId a : aliens(store, u)) {
        if (seen.insert(a).second) {
          out.push_back(a);
          next.push_back(a);
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

namespace {

TermId substitute_symbol(TermStore& store, TermId t, SymbolId from, TermId to,
                         std::unordered_map<TermId, TermId>& memo) {
  if (store.head(t) == from && store.args(t).empty()) return to;
  auto it = memo.find(t);
  if (it != memo.end()) return it->second;
  std::vector<TermId> children(store.args(t).begin(), store.args(t).end());
  bool changed = false;
  for (TermId& c : children) {
    TermId r = substitute_symbol(store, c, from, to, memo);
    if (r != c) {
      c = r;
      changed = true;
    }
  }
  TermId result = changed ? store.make(store.head(t), children) : t;
  memo.emplace(t, result);
  return result;
}

}  // namespace

TermId substitute_x(TermStore& store, TermId t, TermId replacement) {
  std::unordered_map<TermId, TermId> memo;
  return substitute_symbol(store, t, store.signature().x(), replacement, memo);
}

std::vector<std::uint32_t> indeterminates(const TermStore& store, TermId t) {
  std::vector<std::uint32_t> out;
  std::unordered_set<TermId> visited;
  std::vector<TermId> stack{t};
  while (!stack.empty()) {
    TermId u = stack.back();
    stack.pop_back();
    if (!visited.insert(u).second) continue;
    if (store.root_layer(u) == Layer::S4) {
      if (auto idx = store.signature().indeterminate_index(store.head(u))) {
        out.push_back(*idx);
      }
    }
    for (TermId c : store.args(u)) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TermId collapse_indeterminates(TermStore& store, TermId t) {
  if (store.root_layer(t) == Layer::S4) return store.leaf(store.signature().x());
  std::vector<TermId> children(store.args(t).begin(), store.args(t).end());
  bool changed = false;
  for (TermId& c : children) {
    TermId r = collapse_indeterminates(store, c);
    if (r != c) {
      c = r;
      changed = true;
    }
  }
  return changed ? store.make(store.head(t), children) : t;
}

void print_into(const TermStore& store, TermId t, std::string& out) {
  const Symbol& sym = store.signature()[store.head(t)];
  if (sym.arity == 0) {
    out += sym.name;
    return;
  }
  out += '(';
  out += sym.name;
  for (TermId c : store.args(t)) {
    out += ' ';
    print_into(store, c, out);
  }
  out += ')';
}

std::string print_term(const TermStore& store, TermId t) {
  std::string out;
  print_into(store, t, out);
  return out;
}

GenTerm to_gen_term(const TermStore& store, TermId t) {
  std::vector<GenTerm> args;
  args.reserve(store.args(t).size());
  for (TermId c : store.args(t)) args.push_back(to_gen_term(store, c));
  return GenTerm::app(store.head(t), std::move(args));
}

}  // namespace isokit
