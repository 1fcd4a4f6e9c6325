#include "setrank/token.hpp"

#include <algorithm>
#include <cctype>

namespace setrank {

std::string_view to_string(Field f) {
  return f == Field::Title ? "title" : "abstract";
}

std::string_view to_string(TokenKind k) {
  return k == TokenKind::Word ? "word" : "entity";
}

std::optional<Field> parse_field(std::string_view name) {
  if (name == "title") return Field::Title;
  if (name == "abstract") return Field::Abstract;
  return std::nullopt;
}

Token Token::word(std::string surface) {
  return Token{TokenKind::Word, std::move(surface), {}};
}

Token Token::entity(std::string id, std::string type_id) {
  return Token{TokenKind::Entity, std::move(id), std::move(type_id)};
}

namespace {

constexpr std::array<std::string_view, 33> kStopwords = {
    "a",    "an",   "and",   "are",  "as",    "at",   "be",   "but",  "by",
    "for",  "if",   "in",    "into", "is",    "it",   "no",   "not",  "of",
    "on",   "or",   "such",  "that", "the",   "their", "then", "there",
    "these", "they", "this", "to",   "was",   "will", "with"};

}  // namespace

bool is_stopword(std::string_view word) {
  return std::find(kStopwords.begin(), kStopwords.end(), word) != kStopwords.end();
}

std::vector<std::string> normalize_text(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  auto flush = [&] {
    if (!current.empty() && !is_stopword(current)) out.push_back(current);
    current.clear();
  };
  for (unsigned char c : text) {
    if (std::isalnum(c)) {
      current.push_back(static_cast<char>(std::tolower(c)));
    } else {
      flush();
    }
  }
  flush();
  return out;
}

std::vector<std::string> normalize_words(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& w : raw) {
    auto parts = normalize_text(w);
    out.insert(out.end(), parts.begin(), parts.end());
  }
  return out;
}

}  // namespace setrank
