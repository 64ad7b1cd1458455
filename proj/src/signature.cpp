#include "isokit/signature.hpp"

#include "isokit/errors.hpp"

namespace isokit {

const char* layer_name(Layer layer) {
  switch (layer) {
    case Layer::S1: return "S1";
    case Layer::S2: return "S2";
    case Layer::S3: return "S3";
    case Layer::S4: return "S4";
  }
  return "?";
}

bool is_theory_layer(Layer layer) {
  return layer == Layer::S1 || layer == Layer::S2;
}

namespace {

// Strictly positive decimal with no leading zero.
std::optional<std::uint32_t> parse_index(std::string_view digits) {
  if (digits.empty() || digits[0] == '0') return std::nullopt;
  std::uint64_t value = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + static_cast<std::uint64_t>(c - '0');
    if (value > 1000000) return std::nullopt;
  }
  return static_cast<std::uint32_t>(value);
}

}  // namespace

Signature::Signature() {
  x_ = add("x", 0, Layer::S4);
  indeterminates_[0] = x_;
  indeterminate_index_[x_] = 0;
}

SymbolId Signature::add(std::string name, std::uint32_t arity, Layer layer) {
  auto [it, inserted] = by_name_.emplace(name, static_cast<SymbolId>(symbols_.size()));
  if (!inserted) {
    throw UnsupportedShapeError("duplicate symbol name '" + name + "'");
  }
  symbols_.push_back(Symbol{std::move(name), arity, layer});
  return it->second;
}

SymbolId Signature::declare(std::string name, std::uint32_t arity, Layer layer) {
  if (!is_theory_layer(layer)) {
    throw UnsupportedShapeError("theory symbols must live in layer S1 or S2");
  }
  if (is_reserved_name(name)) {
    throw UnsupportedShapeError("'" + name + "' is a reserved name");
  }
  return add(std::move(name), arity, layer);
}

void Signature::declare_generators(int n) {
  if (n < 0) throw UnsupportedShapeError("generator count must be >= 0");
  if (!generators_.empty()) {
    throw UnsupportedShapeError("generators already declared");
  }
  generator_count_ = n;
  generators_.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    generators_.push_back(add("y" + std::to_string(j), 0, Layer::S3));
  }
}

SymbolId Signature::generator(int j) const {
  if (j < 1 || j > generator_count_) {
    throw Error("generator index out of range: y" + std::to_string(j));
  }
  return generators_[static_cast<std::size_t>(j - 1)];
}

SymbolId Signature::indeterminate(std::uint32_t index) {
  auto it = indeterminates_.find(index);
  if (it != indeterminates_.end()) return it->second;
  SymbolId id = add("x" + std::to_string(index), 0, Layer::S4);
  indeterminates_[index] = id;
  indeterminate_index_[id] = index;
  return id;
}

std::optional<std::uint32_t> Signature::indeterminate_index(SymbolId id) const {
  auto it = indeterminate_index_.find(id);
  if (it == indeterminate_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<SymbolId> Signature::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::vector<SymbolId> Signature::symbols_of(Layer layer) const {
  std::vector<SymbolId> out;
  for (SymbolId id = 0; id < symbols_.size(); ++id) {
    if (symbols_[id].layer == layer) out.push_back(id);
  }
  return out;
}

std::vector<SymbolId> Signature::function_symbols(Layer layer) const {
  std::vector<SymbolId> out;
  for (SymbolId id = 0; id < symbols_.size(); ++id) {
    if (symbols_[id].layer == layer && symbols_[id].arity >= 1) out.push_back(id);
  }
  return out;
}

std::vector<SymbolId> Signature::constants(Layer layer) const {
  std::vector<SymbolId> out;
  for (SymbolId id = 0; id < symbols_.size(); ++id) {
    if (symbols_[id].layer == layer && symbols_[id].arity == 0) out.push_back(id);
  }
  return out;
}

bool Signature::is_reserved_name(std::string_view name) {
  if (name == "x") return true;
  return parse_reserved(name).has_value();
}

std::optional<std::pair<Layer, std::uint32_t>> Signature::parse_reserved(
    std::string_view name) {
  if (name == "x") return std::make_pair(Layer::S4, 0u);
  if (name.size() >= 2 && (name[0] == 'x' || name[0] == 'y')) {
    if (auto index = parse_index(name.substr(1))) {
      return std::make_pair(name[0] == 'x' ? Layer::S4 : Layer::S3, *index);
    }
  }
  return std::nullopt;
}

}  // namespace isokit
