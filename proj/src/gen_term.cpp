#include "isokit/gen_term.hpp"

#include <string>

namespace isokit {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

GenTerm GenTerm::var(std::uint32_t index) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Var;
  node->var = index;
  node->hash = mix(0x5651, index);
  return GenTerm(std::move(node));
}

GenTerm GenTerm::opaque(std::uint64_t id) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Opaque;
  node->opaque = id;
  node->hash = mix(0xC1A5, static_cast<std::size_t>(id));
  return GenTerm(std::move(node));
}

GenTerm GenTerm::app(SymbolId head, std::vector<GenTerm> args) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::App;
  node->head = head;
  std::size_t h = mix(0xA44, head);
  std::uint32_t size = 1;
  for (const GenTerm& a : args) {
    h = mix(h, a.hash());
    size += a.node_count();
  }
  node->hash = h;
  node->size = size;
  node->args = std::move(args);
  return GenTerm(std::move(node));
}

bool GenTerm::operator==(const GenTerm& other) const {
  if (node_ == other.node_) return true;
  if (node_->hash != other.node_->hash) return false;
  if (node_->kind != other.node_->kind) return false;
  switch (node_->kind) {
    case Kind::Var: return node_->var == other.node_->var;
    case Kind::Opaque: return node_->opaque == other.node_->opaque;
    case Kind::App:
      if (node_->head != other.node_->head) return false;
      if (node_->args.size() != other.node_->args.size()) return false;
      for (std::size_t i = 0; i < node_->args.size(); ++i) {
        if (!(node_->args[i] == other.node_->args[i])) return false;
      }
      return true;
  }
  return false;
}

int compare(const GenTerm& a, const GenTerm& b) {
  auto rank = [](GenTerm::Kind k) {
    switch (k) {
      case GenTerm::Kind::Var: return 0;
      case GenTerm::Kind::Opaque: return 1;
      case GenTerm::Kind::App: return 2;
    }
    return 3;
  };
  if (rank(a.kind()) != rank(b.kind())) return rank(a.kind()) < rank(b.kind()) ? -1 : 1;
  switch (a.kind()) {
    case GenTerm::Kind::Var:
      if (a.var_index() != b.var_index()) return a.var_index() < b.var_index() ? -1 : 1;
      return 0;
    case GenTerm::Kind::Opaque:
      if (a.opaque_id() != b.opaque_id()) return a.opaque_id() < b.opaque_id() ? -1 : 1;
      return 0;
    case GenTerm::Kind::App: {
      if (a.head() != b.head()) return a.head() < b.head() ? -1 : 1;
      if (a.args().size() != b.args().size()) {
        return a.args().size() < b.args().size() ? -1 : 1;
      }
      for (std::size_t i = 0; i < a.args().size(); ++i) {
        int c = compare(a.args()[i], b.args()[i]);
        if (c != 0) return c;
      }
      return 0;
    }
  }
  return 0;
}

std::string to_key(const GenTerm& t) {
  switch (t.kind()) {
    case GenTerm::Kind::Var: return "?" + std::to_string(t.var_index());
    case GenTerm::Kind::Opaque: return "#" + std::to_string(t.opaque_id());
    case GenTerm::Kind::App: {
      std::string out = "(" + std::to_string(t.head());
      for (const GenTerm& a : t.args()) {
        out += ' ';
        out += to_key(a);
      }
      out += ')';
      return out;
    }
  }
  return {};
}

}  // namespace isokit
