#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace gentle {

struct Arrow {
  std::string id;
  int from = 0;
  int to = 0;
};

// Raw, unvalidated quiver description as it comes from a file or a caller.
struct QuiverDescription {
  std::vector<int> vertices;
  std::vector<Arrow> arrows;
  // Ordered pairs of arrow ids (alpha, beta) with target(alpha) = source(beta),
  // meaning the path "alpha then beta" is zero (beta . alpha = 0).
  std::vector<std::pair<std::string, std::string>> relations;
};

struct ValidationIssue {
  std::string code;    // DEGREE_VIOLATION | GENTLE_VIOLATION | BAD_RELATION | NOT_A_TREE | BAD_INPUT
  std::string detail;
};

// A validated gentle tree. Construction goes through validate_gentle().
class GentleQuiver {
public:
  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<std::pair<std::string, std::string>>& relations() const { return relations_; }

  bool has_vertex(int v) const { return vertex_pos_.count(v) > 0; }
  const Arrow* arrow_by_id(const std::string& id) const;
  // The unique arrow between adjacent vertices u, v (either direction), if any.
  const Arrow* arrow_between(int u, int v) const;
  // True iff the path "a then b" is a zero relation.
  bool is_relation(const std::string& a, const std::string& b) const;

  std::vector<const Arrow*> arrows_out(int v) const;
  std::vector<const Arrow*> arrows_in(int v) const;
  std::vector<int> neighbors(int v) const;

  // Unique simple path between two vertices in the underlying tree.
  std::vector<int> tree_path(int u, int v) const;

  std::size_t num_vertices() const { return vertices_.size(); }

private:
  std::vector<int> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::pair<std::string, std::string>> relations_;
  std::map<int, std::size_t> vertex_pos_;
  std::map<std::string, std::size_t> arrow_pos_;
  std::set<std::pair<std::string, std::string>> relation_set_;
  std::map<std::pair<int, int>, std::size_t> edge_index_;  // unordered (min,max) -> arrow

  friend std::pair<std::optional<GentleQuiver>, std::vector<ValidationIssue>>
  validate_gentle(const QuiverDescription&);
};

// Checks the gentle-tree axioms. On success returns the validated quiver;
// otherwise the list of violated conditions with the offending pieces.
std::pair<std::optional<GentleQuiver>, std::vector<ValidationIssue>>
validate_gentle(const QuiverDescription& raw);

// Convenience for fixtures and tests; throws std::invalid_argument on failure.
GentleQuiver make_gentle(const QuiverDescription& raw);

// The running example: 1 -a-> 2 -b-> 3, 2 -c-> 4, with c.a = 0.
QuiverDescription q4_description();

}  // namespace gentle
