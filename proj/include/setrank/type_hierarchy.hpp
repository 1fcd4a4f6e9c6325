#pragma once

#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "setrank/error.hpp"

namespace setrank {

/// Rooted tree over entity type ids. Edge weights for entity pairs are derived
/// from path lengths to the lowest common ancestor.
class TypeHierarchy {
 public:
  TypeHierarchy() : root_("Thing") {}
  explicit TypeHierarchy(std::string root) : root_(std::move(root)) {}

  /// Tab-separated "child<TAB>parent" lines; the root is declared by a line
  /// "Name<TAB>-". Lines starting with '#' and blank lines are skipped.
  static TypeHierarchy load_tsv(const std::string& path);

  void add_type(const std::string& type_id, const std::string& parent);
  /// Checks the parent links form a tree in which every node reaches the root.
  void validate() const;

  const std::string& root() const { return root_; }
  bool contains(const std::string& type_id) const;
  std::size_t size() const { return parent_.size() + 1; }

  std::size_t depth(const std::string& type_id) const;
  std::string lca(const std::string& a, const std::string& b) const;

  /// Relation strength 1 + max path length from either type to their LCA.
  /// Types absent from the hierarchy are treated as direct children of the
  /// root; two equal type ids (known or not) always give 1.
  double edge_weight(const std::string& type_a, const std::string& type_b) const;

  void write(std::ostream& os) const;
  static TypeHierarchy read(std::istream& is);

  friend bool operator==(const TypeHierarchy&, const TypeHierarchy&) = default;

 private:
  std::vector<std::string> path_to_root(const std::string& type_id) const;

  std::string root_;
  std::map<std::string, std::string> parent_;  // child -> parent, root excluded
};

}  // namespace setrank
