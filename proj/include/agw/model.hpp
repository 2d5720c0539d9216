#ifndef AGW_MODEL_HPP
#define AGW_MODEL_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "agw/source_location.hpp"

namespace agw {

struct ActionBlock;  // action.hpp

inline constexpr std::uint32_t kInvalidIndex = 0xFFFFFFFFu;

enum class BaseType { Text, Integer };

const char* base_type_name(BaseType t);

// Attribute domains. Enumeration lists the admissible lexemes, Pattern is a
// regular expression over lexemes, Open leaves the domain unconstrained
// (the tokenizer falls back to a default pattern per base type).
struct EnumerationDomain {
  std::vector<std::string> values;
  bool operator==(const EnumerationDomain&) const = default;
};
struct PatternDomain {
  std::string source;
  bool operator==(const PatternDomain&) const = default;
};
struct OpenDomain {
  bool operator==(const OpenDomain&) const = default;
};
using AttributeDomain = std::variant<EnumerationDomain, PatternDomain, OpenDomain>;

struct AttributeDecl {
  std::string name;
  BaseType base_type = BaseType::Text;
  AttributeDomain domain = OpenDomain{};
  std::string opaque_code;  // trailing { ... } block, retained but never run
  SourceLocation loc;
};

enum class SymbolKind { Terminal, Nonterminal };

// One attribute slot of a symbol: a local name bound to a declared attribute.
struct SlotDecl {
  std::string local_name;
  std::string attr_name;
  std::uint32_t attr = kInvalidIndex;  // index into Grammar::attributes
  SourceLocation loc;
};

// Packed symbol identity: the most significant bit of the 32-bit value flags
// a terminal, the remaining 31 bits carry the numeric id.
struct PackedId {
  std::uint32_t raw = 0;

  static constexpr std::uint32_t kTerminalBit = 0x80000000u;
  static constexpr std::uint32_t kMaxNumericId = 0x7FFFFFFFu;

  static PackedId encode(SymbolKind kind, std::uint32_t numeric_id);
  SymbolKind kind() const {
    return (raw & kTerminalBit) ? SymbolKind::Terminal : SymbolKind::Nonterminal;
  }
  std::uint32_t numeric_id() const { return raw & kMaxNumericId; }

  bool operator==(const PackedId&) const = default;
};

struct SymbolDecl {
  std::string name;
  SymbolKind kind = SymbolKind::Nonterminal;
  std::vector<SlotDecl> slots;  // terminals inherit theirs from the owner
  std::uint32_t numeric_id = kInvalidIndex;
  PackedId packed_id;
  SourceLocation loc;

  // Filled in by validate() for terminals:
  std::uint32_t owner = kInvalidIndex;           // owning nonterminal (restriction 2)
  std::uint32_t representation = kInvalidIndex;  // index into Grammar::representations

  const SlotDecl* find_slot(const std::string& local_name) const;
  std::uint32_t slot_index(const std::string& local_name) const;
};

// One element of a representation template. `glued` records that no
// whitespace separated this item from its predecessor in the grammar source;
// rendering then concatenates directly instead of inserting a space.
struct TemplateItem {
  enum class Kind { Constant, Slot };
  Kind kind = Kind::Constant;
  std::string text;  // constant text, or the slot local name
  bool glued = false;
  std::uint32_t slot = kInvalidIndex;  // resolved slot index for Kind::Slot
  SourceLocation loc;
};

struct RepresentationRule {
  std::string terminal_name;
  std::uint32_t terminal = kInvalidIndex;
  std::vector<TemplateItem> items;
  SourceLocation loc;
};

// A symbol occurrence on a rule right-hand side, by name until validate()
// resolves it.
struct SymbolRef {
  std::string name;
  std::uint32_t symbol = kInvalidIndex;
  SourceLocation loc;
};

// Attribute-operation text captured verbatim between balanced braces.
struct RawAction {
  std::string text;
  SourceLocation loc;  // points at the opening brace
};

struct Alternative {
  std::vector<SymbolRef> rhs;
  std::optional<RawAction> action;
  std::shared_ptr<const ActionBlock> block;  // parsed during validate()
  std::uint32_t rule_id = kInvalidIndex;     // globally unique alternative id
  bool is_terminal_alt = false;              // RHS is exactly one terminal
};

struct ExpansionRule {
  SymbolRef lhs;
  std::vector<Alternative> alternatives;
  SourceLocation loc;
};

struct TranslationRule {
  SymbolRef lhs;
  std::vector<SymbolRef> rhs;  // exactly one after validation
  std::optional<RawAction> action;
  std::shared_ptr<const ActionBlock> block;
  SourceLocation loc;
};

struct ReductionRule {
  SymbolRef lhs;
  std::vector<SymbolRef> rhs;
  std::optional<RawAction> action;
  std::shared_ptr<const ActionBlock> block;
  SourceLocation loc;
};

// Lookup table from a symbol to the expansion alternatives that rewrite it.
struct AlternativeInfo {
  std::uint32_t rule_id = kInvalidIndex;
  std::uint32_t lhs = kInvalidIndex;
  std::uint32_t expansion = kInvalidIndex;  // index into Grammar::expansions
  std::uint32_t alternative = kInvalidIndex;
  bool is_terminal_alt = false;
};

struct Grammar {
  std::vector<std::string> header_blocks;
  std::vector<AttributeDecl> attributes;
  std::vector<SymbolDecl> symbols;
  std::vector<RepresentationRule> representations;
  std::vector<ExpansionRule> expansions;
  std::vector<TranslationRule> translations;
  std::vector<ReductionRule> reductions;
  std::string origin;  // file name or buffer label the grammar came from

  bool validated = false;
  bool ids_assigned = false;

  // Derived tables, filled by assign_ids():
  std::vector<AlternativeInfo> alternatives_by_rule_id;
  std::vector<std::vector<std::uint32_t>> rules_by_symbol;  // symbol -> rule ids
  std::vector<std::uint32_t> translation_by_symbol;  // symbol -> translation idx
  std::size_t max_reduction_window = 0;

  std::uint32_t find_attribute(const std::string& name) const;
  std::uint32_t find_symbol(const std::string& name) const;
  const SymbolDecl& symbol(std::uint32_t index) const { return symbols.at(index); }
  const AttributeDecl& attribute(std::uint32_t index) const {
    return attributes.at(index);
  }
  std::size_t total_alternatives() const;
};

using ValidationReport = std::vector<Diagnostic>;

class FunctionRegistry;  // action.hpp

// Checks every structural restriction and resolves all references, collecting
// every finding instead of stopping at the first. Terminals receive their
// slot lists (copied from the owning nonterminal), actions are parsed and
// type-checked against `registry` signatures (defaults to the built-ins).
// On an empty report the grammar is marked validated.
ValidationReport validate(Grammar& grammar, const FunctionRegistry* registry = nullptr);

// Assigns numeric ids (terminals first, then nonterminals, each in
// declaration order), packs them, and builds the rule lookup tables.
// Requires a validated grammar; throws Error on the id-width capacity bound.
void assign_ids(Grammar& grammar);

// Structural comparison ignoring source locations; actions compare by their
// verbatim text. Used by the round-trip and id-determinism properties.
bool structurally_equal(const Grammar& a, const Grammar& b);

}  // namespace agw

#endif  // AGW_MODEL_HPP
