#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace isokit {

// The four symbol layers: two theory signatures, the generator constants
// y1..yn, and the indeterminate constants x, x1, x2, ...
enum class Layer : std::uint8_t { S1 = 0, S2 = 1, S3 = 2, S4 = 3 };

inline constexpr std::size_t kLayerCount = 4;

const char* layer_name(Layer layer);
bool is_theory_layer(Layer layer);  // S1 or S2

using SymbolId = std::uint32_t;

struct Symbol {
  std::string name;
  std::uint32_t arity = 0;
  Layer layer = Layer::S1;
};

// The symbol table for the union signature. Names are unique across all
// layers. Generators y1..yn live in S3; the indeterminates x and x<i> live
// in S4 and are created on demand.
class Signature {
public:
  Signature();

  // Declares a theory symbol. Throws UnsupportedShapeError on duplicate or
  // reserved names (`x`, `x<k>`, `y<j>`).
  SymbolId declare(std::string name, std::uint32_t arity, Layer layer);

  // Declares the generator constants y1..yn. May be called once.
  void declare_generators(int n);
  int generator_count() const { return generator_count_; }
  SymbolId generator(int j) const;  // 1-based

  SymbolId x() const { return x_; }

  // The indeterminate with the given index: 0 is `x`, i >= 1 is `x<i>`
  // (declared on first use).
  SymbolId indeterminate(std::uint32_t index);

  // Index of an S4 symbol (x -> 0, x<i> -> i); nullopt for other symbols.
  std::optional<std::uint32_t> indeterminate_index(SymbolId id) const;

  std::optional<SymbolId> find(std::string_view name) const;
  const Symbol& operator[](SymbolId id) const { return symbols_[id]; }
  std::size_t size() const { return symbols_.size(); }

  // Symbols of one layer in declaration order.
  std::vector<SymbolId> symbols_of(Layer layer) const;
  std::vector<SymbolId> function_symbols(Layer layer) const;  // arity >= 1
  std::vector<SymbolId> constants(Layer layer) const;

  // True for names matching `x`, `x<k>` (k >= 1) or `y<j>` (j >= 1).
  static bool is_reserved_name(std::string_view name);

  // Parses `x<k>`/`y<j>` shapes; returns (layer, index) when the name is a
  // reserved indeterminate or generator name.
  static std::optional<std::pair<Layer, std::uint32_t>> parse_reserved(
      std::string_view name);

private:
  SymbolId add(std::string name, std::uint32_t arity, Layer layer);

  std::vector<Symbol> symbols_;
  std::unordered_map<std::string, SymbolId> by_name_;
  std::unordered_map<std::uint32_t, SymbolId> indeterminates_;  // index -> id
  std::unordered_map<SymbolId, std::uint32_t> indeterminate_index_;
  std::vector<SymbolId> generators_;
  SymbolId x_ = 0;
  int generator_count_ = 0;
};

}  // namespace isokit
