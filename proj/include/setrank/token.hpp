#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace setrank {

enum class TokenKind : std::uint8_t { Word = 0, Entity = 1 };
enum class Field : std::uint8_t { Title = 0, Abstract = 1 };

inline constexpr std::size_t kFieldCount = 2;
inline constexpr std::size_t kKindCount = 2;
inline constexpr std::array<Field, kFieldCount> kFields{Field::Title, Field::Abstract};
inline constexpr std::array<TokenKind, kKindCount> kTokenKinds{TokenKind::Word,
                                                               TokenKind::Entity};

constexpr std::size_t index_of(Field f) { return static_cast<std::size_t>(f); }
constexpr std::size_t index_of(TokenKind k) { return static_cast<std::size_t>(k); }

std::string_view to_string(Field f);
std::string_view to_string(TokenKind k);
std::optional<Field> parse_field(std::string_view name);

/// A query or document token: a lowercased unigram or a knowledge-base entity.
/// Identity is (kind, id); the entity type tags along for edge weighting only.
struct Token {
  TokenKind kind = TokenKind::Word;
  std::string id;       // word surface form, or entity id
  std::string type_id;  // entity type; empty for words and untyped entities

  static Token word(std::string surface);
  static Token entity(std::string id, std::string type_id = {});

  friend bool operator==(const Token& a, const Token& b) {
    return a.kind == b.kind && a.id == b.id;
  }
  friend std::strong_ordering operator<=>(const Token& a, const Token& b) {
    if (a.kind != b.kind) return a.kind <=> b.kind;
    return a.id <=> b.id;
  }
};

/// The fixed stopword list applied to word tokens at ingest and query time.
/// Entity tokens are never filtered.
bool is_stopword(std::string_view word);

/// Lowercases, splits on non-alphanumeric runs, drops empties and stopwords.
std::vector<std::string> normalize_text(std::string_view text);

/// Same normalization applied to pre-split words (each entry may split further).
std::vector<std::string> normalize_words(const std::vector<std::string>& raw);

}  // namespace setrank
