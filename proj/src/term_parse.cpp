#include "isokit/errors.hpp"
#include "isokit/term.hpp"
#include "sexpr.hpp"

namespace isokit {

namespace {

SymbolId resolve_symbol(TermStore& store, const detail::SExpr& atom) {
  Signature& sig = store.signature();
  if (auto id = sig.find(atom.atom)) return *id;
  if (auto reserved = Signature::parse_reserved(atom.atom)) {
    auto [layer, index] = *reserved;
    if (layer == Layer::S4) return sig.indeterminate(index);
    throw ParseError("generator '" + atom.atom + "' is out of range; the session has " +
                         std::to_string(sig.generator_count()) + " generator(s)",
                     atom.offset);
  }
  throw ParseError("unknown symbol '" + atom.atom + "'", atom.offset);
}

TermId build(TermStore& store, const detail::SExpr& e) {
  if (e.is_atom) {
    SymbolId id = resolve_symbol(store, e);
    const Symbol& sym = store.signature()[id];
    if (sym.arity != 0) {
      throw ParseError("'" + sym.name + "' has arity " + std::to_string(sym.arity) +
                           " and needs arguments",
                       e.offset);
    }
    return store.leaf(id);
  }
  if (e.items.empty()) {
    throw ParseError("empty expression", e.offset);
  }
  const detail::SExpr& head = e.items.front();
  if (!head.is_atom) {
    throw ParseError("expected a symbol", head.offset);
  }
  SymbolId id = resolve_symbol(store, head);
  const Symbol& sym = store.signature()[id];
  std::size_t given = e.items.size() - 1;
  if (sym.arity != given) {
    throw ParseError("'" + sym.name + "' expects " + std::to_string(sym.arity) +
                         " argument(s), got " + std::to_string(given),
                     e.offset);
  }
  std::vector<TermId> children;
  children.reserve(given);
  for (std::size_t i = 1; i < e.items.size(); ++i) {
    children.push_back(build(store, e.items[i]));
  }
  return store.make(id, children);
}

}  // namespace

TermId parse_term(TermStore& store, std::string_view text) {
  return build(store, detail::read_sexpr(text));
}

}  // namespace isokit
