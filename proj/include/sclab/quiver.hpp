/// @file quiver.hpp
/// @brief Quivers with vertex multiplicities: frozen vertices, edge
///        multiplicity counts, and the modified mutation rule.
///
/// A quiver here is a finite set of vertices, each mutable or frozen, with a
/// positive multiplicity d_i at every mutable vertex (d_i > 1 marks a special
/// vertex) and a nonnegative edge count b_ij for every ordered vertex pair.
/// Mutable-mutable pairs never carry edges in both directions. Mutation at a
/// mutable vertex k inserts, for every path i -> k -> j, d_k edges i -> j when
/// both endpoints are mutable and d_j (resp. d_i) edges when i (resp. j) is
/// frozen, skips paths between two frozen vertices, reverses every edge at k,
/// and then cancels opposite edge pairs on every pair that is not
/// frozen-frozen. Vertex data is untouched by mutation.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace sclab {

/// Directed multigraph with frozen flags and vertex multiplicities.
/// Vertices are dense 0-based ids in insertion order.
class GQuiver {
public:
  /// Adds a vertex and returns its id. Frozen vertices must have d = 1;
  /// mutable ones any d >= 1. Throws Error(ShapeViolation) otherwise.
  int add_vertex(const std::string& label, bool frozen = false, int d = 1);

  int size() const { return static_cast<int>(frozen_.size()); }
  bool is_frozen(int v) const;
  bool is_mutable(int v) const { return !is_frozen(v); }
  /// d_v; 1 at every frozen vertex.
  int multiplicity(int v) const;
  bool is_special(int v) const { return multiplicity(v) > 1; }
  const std::string& label(int v) const;
  /// Id of the unique vertex with the given label; Error(IndexInvalid) if the
  /// label is absent or duplicated.
  int vertex_by_label(const std::string& label) const;

  /// Edge count on the ordered pair (from, to); 0 when absent.
  long long b(int from, int to) const;
  /// Adds count parallel edges from -> to (count >= 0; self-loops rejected).
  void add_edges(int from, int to, long long count);
  /// Removes count edges from -> to; Error(IndexInvalid) if fewer exist.
  void remove_edges(int from, int to, long long count);
  /// All edges with positive count, keyed by (from, to).
  const std::map<std::pair<int, int>, long long>& edges() const { return edges_; }
  bool has_neighbors(int v) const;

  /// Re-checks the class invariants (edge endpoints valid and distinct,
  /// counts positive, no mutable-mutable 2-cycles); throws on violation.
  void validate() const;

  /// Equality as labeled multigraphs: same vertex records in the same order
  /// and identical edge counts.
  bool operator==(const GQuiver& o) const;
  bool operator!=(const GQuiver& o) const { return !(*this == o); }

  /// Graphviz rendering: frozen vertices boxed, special vertices doubled and
  /// annotated with d, parallel edges collapsed into a count label.
  std::string dot() const;

private:
  void check_vertex(int v) const;

  std::vector<bool> frozen_;
  std::vector<int> mult_;
  std::vector<std::string> labels_;
  std::map<std::pair<int, int>, long long> edges_;
};

/// Mutation at mutable k per the modified rule described in the file header.
/// Throws Error(NotMutable) at frozen k.
GQuiver quiver_mutate(const GQuiver& q, int k);

}  // namespace sclab
