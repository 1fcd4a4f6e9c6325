#include "setrank/corpus.hpp"

#include <fstream>
#include <set>
#include <utility>

#include "json.hpp"
#include "setrank/detail/binary_io.hpp"

namespace setrank {

using nlohmann::json;

std::uint64_t FieldBag::count(TokenKind k, const std::string& id) const {
  const auto& m = counts(k);
  auto it = m.find(id);
  return it == m.end() ? 0 : it->second;
}

void FieldBag::add(TokenKind k, const std::string& id, std::uint64_t n) {
  if (k == TokenKind::Word) {
    word_counts[id] += n;
    word_length += n;
  } else {
    entity_counts[id] += n;
    entity_length += n;
  }
}

std::uint64_t CollectionStats::count(const std::string& id) const {
  auto it = counts.find(id);
  return it == counts.end() ? 0 : it->second;
}

std::uint64_t CollectionStats::df(const std::string& id) const {
  auto it = doc_freq.find(id);
  return it == doc_freq.end() ? 0 : it->second;
}

namespace {

FieldBag parse_field_bag(const json& j) {
  FieldBag bag;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() == "words") {
      if (!it.value().is_array()) throw Error("\"words\" must be an array");
      std::vector<std::string> raw;
      for (const auto& w : it.value()) {
        if (!w.is_string()) throw Error("\"words\" entries must be strings");
        raw.push_back(w.get<std::string>());
      }
      for (const auto& w : normalize_words(raw)) bag.add(TokenKind::Word, w);
    } else if (it.key() == "entities") {
      if (!it.value().is_array()) throw Error("\"entities\" must be an array");
      for (const auto& e : it.value()) {
        if (!e.is_object() || !e.contains("id") || !e["id"].is_string()) {
          throw Error("entity entries must be objects with a string \"id\"");
        }
        std::string id = e["id"].get<std::string>();
        if (id.empty()) throw Error("entity id must be non-empty");
        bag.add(TokenKind::Entity, id);
      }
    } else {
      throw Error("unknown field key \"" + it.key() + "\"");
    }
  }
  return bag;
}

}  // namespace

Document parse_document_json(const std::string& line) {
  json j = json::parse(line);
  if (!j.is_object()) throw Error("document record must be a JSON object");
  if (!j.contains("doc_id") || !j["doc_id"].is_string()) {
    throw Error("missing string \"doc_id\"");
  }
  Document doc;
  doc.doc_id = j["doc_id"].get<std::string>();
  if (doc.doc_id.empty()) throw Error("doc_id must be non-empty");
  if (j.contains("fields")) {
    const auto& fields = j["fields"];
    if (!fields.is_object()) throw Error("\"fields\" must be an object");
    for (auto it = fields.begin(); it != fields.end(); ++it) {
      auto f = parse_field(it.key());
      if (!f) throw Error("unknown field \"" + it.key() + "\"");
      doc.field(*f) = parse_field_bag(it.value());
    }
  }
  return doc;
}

CorpusIndex CorpusIndex::ingest_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open corpus file: " + path);
  std::vector<Document> docs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      docs.push_back(parse_document_json(line));
    } catch (const json::exception& e) {
      throw Error("corpus line " + std::to_string(line_no) + ": " + e.what());
    } catch (const Error& e) {
      throw Error("corpus line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return from_documents(std::move(docs));
}

CorpusIndex CorpusIndex::from_documents(std::vector<Document> docs) {
  if (docs.empty()) throw Error("empty corpus");
  CorpusIndex index;
  for (auto& doc : docs) {
    // normalize lengths so the bag invariants hold regardless of caller
    for (auto& bag : doc.fields) {
      bag.word_length = 0;
      for (const auto& [w, c] : bag.word_counts) bag.word_length += c;
      bag.entity_length = 0;
      for (const auto& [e, c] : bag.entity_counts) bag.entity_length += c;
    }
    std::string id = doc.doc_id;
    auto [it, inserted] = index.documents_.emplace(std::move(id), std::move(doc));
    if (!inserted) throw Error("duplicate doc_id \"" + it->first + "\"");
  }
  index.build_derived();
  return index;
}

void CorpusIndex::build_derived() {
  for (auto& per_field : stats_) {
    for (auto& s : per_field) s = CollectionStats{};
  }
  postings_.clear();
  for (const auto& [doc_id, doc] : documents_) {
    std::set<Token> seen;
    for (Field f : kFields) {
      const FieldBag& bag = doc.field(f);
      for (TokenKind k : kTokenKinds) {
        CollectionStats& s = stats_[index_of(f)][index_of(k)];
        s.length += bag.length(k);
        for (const auto& [id, c] : bag.counts(k)) {
          s.counts[id] += c;
          s.doc_freq[id] += 1;
          seen.insert(k == TokenKind::Word ? Token::word(id) : Token::entity(id));
        }
      }
    }
    for (const auto& t : seen) postings_[t].push_back(doc_id);
  }
}

bool CorpusIndex::has_document(const std::string& doc_id) const {
  return documents_.count(doc_id) > 0;
}

const Document& CorpusIndex::document(const std::string& doc_id) const {
  auto it = documents_.find(doc_id);
  if (it == documents_.end()) throw Error("unknown doc_id \"" + doc_id + "\"");
  return it->second;
}

std::uint64_t CorpusIndex::raw_count(const std::string& doc_id, Field f,
                                     const Token& t) const {
  return document(doc_id).field(f).count(t.kind, t.id);
}

std::vector<std::string> CorpusIndex::candidates(const std::vector<Token>& tokens) const {
  std::set<std::string> ids;
  for (const auto& t : tokens) {
    auto it = postings_.find(t);
    if (it == postings_.end()) continue;
    ids.insert(it->second.begin(), it->second.end());
  }
  return {ids.begin(), ids.end()};
}

namespace {
constexpr char kCorpusMagic[5] = "SRCX";
constexpr std::uint32_t kCorpusVersion = 1;
}  // namespace

void CorpusIndex::write(std::ostream& os) const {
  os.write(kCorpusMagic, 4);
  detail::write_u32(os, kCorpusVersion);
  detail::write_u64(os, documents_.size());
  for (const auto& [doc_id, doc] : documents_) {
    detail::write_string(os, doc_id);
    for (const auto& bag : doc.fields) {
      detail::write_u64(os, bag.word_counts.size());
      for (const auto& [w, c] : bag.word_counts) {
        detail::write_string(os, w);
        detail::write_u64(os, c);
      }
      detail::write_u64(os, bag.entity_counts.size());
      for (const auto& [e, c] : bag.entity_counts) {
        detail::write_string(os, e);
        detail::write_u64(os, c);
      }
    }
  }
}

CorpusIndex CorpusIndex::read(std::istream& is) {
  detail::expect_magic(is, kCorpusMagic, "corpus index");
  std::uint32_t version = detail::read_u32(is);
  if (version != kCorpusVersion) {
    throw Error("unsupported corpus index version " + std::to_string(version));
  }
  std::uint64_t n_docs = detail::read_u64(is);
  std::vector<Document> docs;
  docs.reserve(n_docs);
  for (std::uint64_t i = 0; i < n_docs; ++i) {
    Document doc;
    doc.doc_id = detail::read_string(is);
    for (auto& bag : doc.fields) {
      std::uint64_t n_words = detail::read_u64(is);
      for (std::uint64_t w = 0; w < n_words; ++w) {
        std::string id = detail::read_string(is);
        std::uint64_t c = detail::read_u64(is);
        bag.add(TokenKind::Word, id, c);
      }
      std::uint64_t n_ents = detail::read_u64(is);
      for (std::uint64_t e = 0; e < n_ents; ++e) {
        std::string id = detail::read_string(is);
        std::uint64_t c = detail::read_u64(is);
        bag.add(TokenKind::Entity, id, c);
      }
    }
    docs.push_back(std::move(doc));
  }
  return from_documents(std::move(docs));
}

void CorpusIndex::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write index file: " + path);
  write(out);
  if (!out) throw Error("failed writing index file: " + path);
}

CorpusIndex CorpusIndex::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open index file: " + path);
  return read(in);
}

}  // namespace setrank
