#include "isokit/theory_io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "isokit/errors.hpp"
#include "sexpr.hpp"

namespace isokit {

namespace {

using detail::SExpr;

const SExpr* find_section(const SExpr& root, std::string_view keyword) {
  for (std::size_t i = 2; i < root.items.size(); ++i) {
    const SExpr& item = root.items[i];
    if (!item.is_atom && !item.items.empty() && item.items[0].is_atom &&
        item.items[0].atom == keyword) {
      return &item;
    }
  }
  return nullptr;
}

[[noreturn]] void fail(const std::string& message, const SExpr& at) {
  throw ParseError(message, at.offset);
}

std::uint32_t parse_uint(const SExpr& e, const char* what) {
  if (!e.is_atom) fail(std::string("expected ") + what, e);
  std::uint64_t value = 0;
  for (char c : e.atom) {
    if (c < '0' || c > '9') fail(std::string("expected ") + what, e);
    value = value * 10 + static_cast<std::uint64_t>(c - '0');
    if (value > 1000000) fail(std::string(what) + " is out of range", e);
  }
  if (e.atom.empty()) fail(std::string("expected ") + what, e);
  return static_cast<std::uint32_t>(value);
}

GenTerm resolve_open_term(const SExpr& e, const Signature& sig,
                          const std::unordered_set<SymbolId>& own,
                          std::unordered_map<std::string, std::uint32_t>& vars) {
  auto resolve_symbol = [&](const SExpr& atom) -> SymbolId {
    auto id = sig.find(atom.atom);
    if (!id || !own.count(*id)) {
      fail("unknown symbol '" + atom.atom + "' (declare it under (ops ...))", atom);
    }
    return *id;
  };
  if (e.is_atom) {
    if (!e.atom.empty() && e.atom[0] == '?') {
      auto [it, inserted] =
          vars.emplace(e.atom, static_cast<std::uint32_t>(vars.size()));
      return GenTerm::var(it->second);
    }
    SymbolId id = resolve_symbol(e);
    if (sig[id].arity != 0) {
      fail("'" + e.atom + "' needs " + std::to_string(sig[id].arity) + " argument(s)", e);
    }
    return GenTerm::app(id);
  }
  if (e.items.empty() || !e.items[0].is_atom) fail("expected a symbol application", e);
  SymbolId id = resolve_symbol(e.items[0]);
  if (sig[id].arity != e.items.size() - 1) {
    fail("'" + e.items[0].atom + "' expects " + std::to_string(sig[id].arity) +
             " argument(s), got " + std::to_string(e.items.size() - 1),
         e);
  }
  std::vector<GenTerm> args;
  for (std::size_t i = 1; i < e.items.size(); ++i) {
    args.push_back(resolve_open_term(e.items[i], sig, own, vars));
  }
  return GenTerm::app(id, std::move(args));
}

}  // namespace

Theory load_theory(std::string_view text, Signature& sig,
                   BruteforceOptions search_budget) {
  SExpr root = detail::read_sexpr(text);
  if (root.is_atom || root.items.size() < 2 || !root.items[0].is_atom ||
      root.items[0].atom != "theory" || !root.items[1].is_atom) {
    throw ParseError("expected (theory <name> ...)", root.offset);
  }
  std::string name = root.items[1].atom;

  const SExpr* layer_sec = find_section(root, "layer");
  if (!layer_sec || layer_sec->items.size() != 2) {
    fail("missing (layer 1|2)", root);
  }
  std::uint32_t layer_no = parse_uint(layer_sec->items[1], "layer number");
  if (layer_no != 1 && layer_no != 2) fail("layer must be 1 or 2", layer_sec->items[1]);
  Layer layer = layer_no == 1 ? Layer::S1 : Layer::S2;

  const SExpr* ops_sec = find_section(root, "ops");
  if (!ops_sec) fail("missing (ops ...)", root);
  std::vector<SymbolId> symbols;
  for (std::size_t i = 1; i < ops_sec->items.size(); ++i) {
    const SExpr& op = ops_sec->items[i];
    if (op.is_atom || op.items.size() != 2 || !op.items[0].is_atom) {
      fail("expected (<symbol> <arity>)", op);
    }
    std::uint32_t arity = parse_uint(op.items[1], "arity");
    try {
      symbols.push_back(sig.declare(op.items[0].atom, arity, layer));
    } catch (const UnsupportedShapeError& e) {
      fail(e.what(), op.items[0]);
    }
  }
  std::unordered_set<SymbolId> own(symbols.begin(), symbols.end());

  std::vector<Axiom> axioms;
  if (const SExpr* ax_sec = find_section(root, "axioms")) {
    for (std::size_t i = 1; i < ax_sec->items.size(); ++i) {
      const SExpr& eq = ax_sec->items[i];
      if (eq.is_atom || eq.items.size() != 3 || !eq.items[0].is_atom ||
          eq.items[0].atom != "=") {
        fail("expected (= <lhs> <rhs>)", eq);
      }
      std::unordered_map<std::string, std::uint32_t> vars;
      GenTerm lhs = resolve_open_term(eq.items[1], sig, own, vars);
      GenTerm rhs = resolve_open_term(eq.items[2], sig, own, vars);
      axioms.push_back({std::move(lhs), std::move(rhs)});
    }
  }

  const SExpr* solver_sec = find_section(root, "solver");
  if (!solver_sec || solver_sec->items.size() < 2 || !solver_sec->items[1].is_atom) {
    fail("missing (solver <kind> ...)", root);
  }
  auto kind = solver_kind_from_name(solver_sec->items[1].atom);
  if (!kind) fail("unknown solver kind '" + solver_sec->items[1].atom + "'", solver_sec->items[1]);

  RoleBindings roles;
  for (std::size_t i = 2; i < solver_sec->items.size(); ++i) {
    const SExpr& binding = solver_sec->items[i];
    if (binding.is_atom || binding.items.size() != 2 || !binding.items[0].is_atom ||
        !binding.items[1].is_atom) {
      fail("expected (<role> <symbol>)", binding);
    }
    const std::string& role = binding.items[0].atom;
    auto symbol = sig.find(binding.items[1].atom);
    if (!symbol || !own.count(*symbol)) {
      fail("role '" + role + "' names the undeclared symbol '" + binding.items[1].atom + "'",
           binding.items[1]);
    }
    if (role == "op" || role == "mul") {
      roles.op = symbol;
    } else if (role == "unit") {
      roles.unit = symbol;
    } else if (role == "inv") {
      roles.inv = symbol;
    } else {
      fail("unknown role '" + role + "' (expected op/mul, unit, inv)", binding.items[0]);
    }
  }

  return Theory(std::move(name), layer, std::move(symbols), std::move(axioms), *kind,
                roles, sig, search_budget);
}

Theory load_theory_file(const std::string& path, Signature& sig,
                        BruteforceOptions search_budget) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open theory file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_theory(buffer.str(), sig, search_budget);
}

}  // namespace isokit
