#include "setrank/query_graph.hpp"

#include <fstream>
#include <map>
#include <set>

#include "json.hpp"
#include "setrank/error.hpp"

namespace setrank {

using nlohmann::json;

namespace {

QueryRecord parse_query_json(const std::string& line) {
  json j = json::parse(line);
  if (!j.is_object()) throw Error("query record must be a JSON object");
  if (!j.contains("query_id") || !j["query_id"].is_string()) {
    throw Error("missing string \"query_id\"");
  }
  QueryRecord rec;
  rec.query_id = j["query_id"].get<std::string>();
  if (rec.query_id.empty()) throw Error("query_id must be non-empty");
  if (j.contains("text")) {
    if (!j["text"].is_string()) throw Error("\"text\" must be a string");
    rec.text = j["text"].get<std::string>();
  }
  if (j.contains("words")) {
    if (!j["words"].is_array()) throw Error("\"words\" must be an array");
    for (const auto& w : j["words"]) {
      if (!w.is_string()) throw Error("\"words\" entries must be strings");
      rec.words.push_back(w.get<std::string>());
    }
  }
  if (j.contains("entities")) {
    if (!j["entities"].is_array()) throw Error("\"entities\" must be an array");
    for (const auto& e : j["entities"]) {
      if (!e.is_object() || !e.contains("id") || !e["id"].is_string()) {
        throw Error("entity entries must be objects with a string \"id\"");
      }
      EntityRef ref;
      ref.id = e["id"].get<std::string>();
      if (ref.id.empty()) throw Error("entity id must be non-empty");
      if (e.contains("type")) {
        if (!e["type"].is_string()) throw Error("entity \"type\" must be a string");
        ref.type_id = e["type"].get<std::string>();
      }
      rec.entities.push_back(std::move(ref));
    }
  }
  return rec;
}

}  // namespace

std::vector<QueryRecord> load_queries(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open queries file: " + path);
  std::vector<QueryRecord> out;
  std::set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_query_json(line));
    } catch (const json::exception& e) {
      throw Error("queries line " + std::to_string(line_no) + ": " + e.what());
    } catch (const Error& e) {
      throw Error("queries line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!seen.insert(out.back().query_id).second) {
      throw Error("queries line " + std::to_string(line_no) + ": duplicate query_id \"" +
                  out.back().query_id + "\"");
    }
  }
  return out;
}

std::vector<Token> QueryTerms::tokens() const {
  std::vector<Token> out;
  out.reserve(terms.size());
  for (const auto& [t, qtf] : terms) {
    (void)qtf;
    out.push_back(t);
  }
  return out;
}

QueryTerms analyze_query(const QueryRecord& record) {
  QueryTerms q;
  q.word_seq = record.words.empty() ? normalize_text(record.text)
                                    : normalize_words(record.words);
  std::map<Token, std::size_t> slot;
  for (const auto& w : q.word_seq) {
    Token t = Token::word(w);
    auto it = slot.find(t);
    if (it == slot.end()) {
      slot.emplace(std::move(t), q.terms.size());
      q.terms.emplace_back(Token::word(w), 1);
    } else {
      ++q.terms[it->second].second;
    }
  }
  for (const auto& e : record.entities) {
    Token t = Token::entity(e.id, e.type_id);
    auto it = slot.find(t);
    if (it == slot.end()) {
      slot.emplace(t, q.terms.size());
      q.terms.emplace_back(std::move(t), 1);
    } else {
      ++q.terms[it->second].second;  // first occurrence's type wins
    }
  }
  return q;
}

QueryGraph build_query_graph(const QueryRecord& record, const TypeHierarchy& hierarchy) {
  QueryTerms q = analyze_query(record);
  if (q.empty()) throw Error("empty query");

  QueryGraph g;
  g.query_id = record.query_id;

  // distinct word nodes in order of first occurrence
  std::map<std::string, std::size_t> word_node;
  std::vector<std::size_t> positions;  // word position -> node index
  for (const auto& w : q.word_seq) {
    auto it = word_node.find(w);
    if (it == word_node.end()) {
      it = word_node.emplace(w, g.nodes.size()).first;
      g.nodes.push_back(Token::word(w));
    }
    positions.push_back(it->second);
  }
  g.word_node_count = g.nodes.size();

  std::set<std::pair<std::size_t, std::size_t>> ww;
  for (std::size_t i = 0; i + 1 < positions.size(); ++i) {
    std::size_t a = positions[i];
    std::size_t b = positions[i + 1];
    if (a == b) continue;  // duplicate word collapsed onto one node
    ww.insert({std::min(a, b), std::max(a, b)});
  }
  for (const auto& [a, b] : ww) {
    g.edges.push_back(QueryEdge{a, b, EdgeKind::WW, 1.0});
  }

  // distinct entity nodes, complete E-E edges
  std::size_t first_entity = g.nodes.size();
  for (const auto& [t, qtf] : q.terms) {
    (void)qtf;
    if (t.kind == TokenKind::Entity) g.nodes.push_back(t);
  }
  g.entity_node_count = g.nodes.size() - first_entity;
  for (std::size_t i = first_entity; i < g.nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < g.nodes.size(); ++j) {
      double weight = hierarchy.edge_weight(g.nodes[i].type_id, g.nodes[j].type_id);
      g.edges.push_back(QueryEdge{i, j, EdgeKind::EE, weight});
    }
  }

  g.incident.assign(g.nodes.size(), {});
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    g.incident[g.edges[e].a].push_back(e);
    g.incident[g.edges[e].b].push_back(e);
  }
  return g;
}

}  // namespace setrank
