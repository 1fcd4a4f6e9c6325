#include "setrank/type_hierarchy.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "setrank/detail/binary_io.hpp"

namespace setrank {

TypeHierarchy TypeHierarchy::load_tsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open hierarchy file: " + path);
  std::string root;
  std::map<std::string, std::string> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size()) {
      throw Error("hierarchy line " + std::to_string(line_no) +
                  ": expected child<TAB>parent");
    }
    std::string child = line.substr(0, tab);
    std::string parent = line.substr(tab + 1);
    if (parent == "-") {
      if (!root.empty() && root != child) {
        throw Error("hierarchy declares multiple roots: \"" + root + "\" and \"" +
                    child + "\"");
      }
      root = child;
    } else {
      if (edges.count(child)) {
        throw Error("hierarchy line " + std::to_string(line_no) +
                    ": duplicate type \"" + child + "\"");
      }
      edges.emplace(std::move(child), std::move(parent));
    }
  }
  if (root.empty()) throw Error("hierarchy file declares no root");
  TypeHierarchy h(root);
  for (const auto& [child, parent] : edges) h.add_type(child, parent);
  h.validate();
  return h;
}

void TypeHierarchy::add_type(const std::string& type_id, const std::string& parent) {
  if (type_id.empty()) throw Error("type id must be non-empty");
  if (type_id == root_) throw Error("root type cannot have a parent");
  if (type_id == parent) throw Error("type \"" + type_id + "\" cannot be its own parent");
  if (parent_.count(type_id)) throw Error("duplicate type \"" + type_id + "\"");
  parent_.emplace(type_id, parent);
}

void TypeHierarchy::validate() const {
  for (const auto& [child, parent] : parent_) {
    (void)parent;
    path_to_root(child);  // throws on cycles and dangling parents
  }
}

bool TypeHierarchy::contains(const std::string& type_id) const {
  return type_id == root_ || parent_.count(type_id) > 0;
}

std::vector<std::string> TypeHierarchy::path_to_root(const std::string& type_id) const {
  std::vector<std::string> path;
  std::string current = type_id;
  const std::size_t limit = parent_.size() + 1;
  while (true) {
    path.push_back(current);
    if (current == root_) return path;
    auto it = parent_.find(current);
    if (it == parent_.end()) {
      throw Error("type \"" + type_id + "\" does not reach the root (missing parent \"" +
                  current + "\")");
    }
    current = it->second;
    if (path.size() > limit) {
      throw Error("cycle in type hierarchy at \"" + type_id + "\"");
    }
  }
}

std::size_t TypeHierarchy::depth(const std::string& type_id) const {
  if (!contains(type_id)) throw Error("unknown type \"" + type_id + "\"");
  return path_to_root(type_id).size() - 1;
}

std::string TypeHierarchy::lca(const std::string& a, const std::string& b) const {
  if (!contains(a)) throw Error("unknown type \"" + a + "\"");
  if (!contains(b)) throw Error("unknown type \"" + b + "\"");
  auto path_a = path_to_root(a);
  std::set<std::string> ancestors(path_a.begin(), path_a.end());
  std::string current = b;
  while (!ancestors.count(current)) current = parent_.at(current);
  return current;
}

double TypeHierarchy::edge_weight(const std::string& type_a,
                                  const std::string& type_b) const {
  if (type_a == type_b) return 1.0;
  const bool known_a = !type_a.empty() && contains(type_a);
  const bool known_b = !type_b.empty() && contains(type_b);
  std::size_t len_a = 0;
  std::size_t len_b = 0;
  if (known_a && known_b) {
    const std::string anc = lca(type_a, type_b);
    const std::size_t anc_depth = depth(anc);
    len_a = depth(type_a) - anc_depth;
    len_b = depth(type_b) - anc_depth;
  } else {
    // unknown types act as direct children of the root; the LCA is the root
    len_a = known_a ? depth(type_a) : 1;
    len_b = known_b ? depth(type_b) : 1;
  }
  return 1.0 + static_cast<double>(std::max(len_a, len_b));
}

namespace {
constexpr char kHierarchyMagic[5] = "SRTH";
constexpr std::uint32_t kHierarchyVersion = 1;
}  // namespace

void TypeHierarchy::write(std::ostream& os) const {
  os.write(kHierarchyMagic, 4);
  detail::write_u32(os, kHierarchyVersion);
  detail::write_string(os, root_);
  detail::write_u64(os, parent_.size());
  for (const auto& [child, parent] : parent_) {
    detail::write_string(os, child);
    detail::write_string(os, parent);
  }
}

TypeHierarchy TypeHierarchy::read(std::istream& is) {
  detail::expect_magic(is, kHierarchyMagic, "type hierarchy");
  std::uint32_t version = detail::read_u32(is);
  if (version != kHierarchyVersion) {
    throw Error("unsupported hierarchy version " + std::to_string(version));
  }
  TypeHierarchy h(detail::read_string(is));
  std::uint64_t n = detail::read_u64(is);
  for (std::uint64_t i = 0; i < n; ++i) {
    std::string child = detail::read_string(is);
    std::string parent = detail::read_string(is);
    h.add_type(child, parent);
  }
  h.validate();
  return h;
}

}  // namespace setrank
