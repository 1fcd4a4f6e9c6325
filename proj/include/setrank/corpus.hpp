#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "setrank/error.hpp"
#include "setrank/token.hpp"

namespace setrank {

/// Raw token counts for one document field, split by token kind.
struct FieldBag {
  std::map<std::string, std::uint64_t> word_counts;
  std::map<std::string, std::uint64_t> entity_counts;
  std::uint64_t word_length = 0;    // sum of word_counts
  std::uint64_t entity_length = 0;  // sum of entity_counts

  const std::map<std::string, std::uint64_t>& counts(TokenKind k) const {
    return k == TokenKind::Word ? word_counts : entity_counts;
  }
  std::uint64_t length(TokenKind k) const {
    return k == TokenKind::Word ? word_length : entity_length;
  }
  std::uint64_t count(TokenKind k, const std::string& id) const;
  void add(TokenKind k, const std::string& id, std::uint64_t n = 1);
};

struct Document {
  std::string doc_id;
  std::array<FieldBag, kFieldCount> fields;

  FieldBag& field(Field f) { return fields[index_of(f)]; }
  const FieldBag& field(Field f) const { return fields[index_of(f)]; }
};

/// Collection-level statistics for one (field, token kind) slice.
struct CollectionStats {
  std::uint64_t length = 0;                       // L_{D_j}
  std::map<std::string, std::uint64_t> counts;    // n_{t,D_j}
  std::map<std::string, std::uint64_t> doc_freq;  // documents containing t in this field

  std::uint64_t count(const std::string& id) const;
  std::uint64_t df(const std::string& id) const;
};

/// Immutable per-field, per-kind index over a pre-annotated document set.
class CorpusIndex {
 public:
  /// Reads a JSON-lines corpus file, one document object per line.
  static CorpusIndex ingest_file(const std::string& path);
  static CorpusIndex from_documents(std::vector<Document> docs);

  std::size_t doc_count() const { return documents_.size(); }
  bool has_document(const std::string& doc_id) const;
  const Document& document(const std::string& doc_id) const;
  const std::map<std::string, Document>& documents() const { return documents_; }

  std::uint64_t raw_count(const std::string& doc_id, Field f, const Token& t) const;
  const CollectionStats& collection(Field f, TokenKind k) const {
    return stats_[index_of(f)][index_of(k)];
  }

  /// Ascending doc ids containing any of the tokens in any field.
  std::vector<std::string> candidates(const std::vector<Token>& tokens) const;

  void write(std::ostream& os) const;
  static CorpusIndex read(std::istream& is);
  void save(const std::string& path) const;
  static CorpusIndex load(const std::string& path);

 private:
  CorpusIndex() = default;
  void build_derived();

  std::map<std::string, Document> documents_;
  std::array<std::array<CollectionStats, kKindCount>, kFieldCount> stats_;
  std::map<Token, std::vector<std::string>> postings_;
};

/// Parses one corpus JSON object (without the surrounding file context).
Document parse_document_json(const std::string& line);

}  // namespace setrank
