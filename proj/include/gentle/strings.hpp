#pragma once

#include <set>
#include <vector>

#include "gentle/quiver.hpp"

namespace gentle {

// A string module over a gentle tree, identified by its vertex support
// (a simple path of the underlying tree avoiding relations in both
// reading directions). Canonical form: sorted vertex list.
using Support = std::vector<int>;

Support make_support(std::set<int> vertices);

// True iff `support` is the support of an indecomposable representation.
bool is_valid_support(const GentleQuiver& q, const Support& support);

// The support of the indecomposable projective P(v): v together with the two
// maximal direct-arrow paths out of v avoiding relations.
Support projective_support(const GentleQuiver& q, int v);

bool is_projective_support(const GentleQuiver& q, const Support& s);

// All indecomposables, as canonical supports, ordered.
std::vector<Support> enumerate_indecomposables(const GentleQuiver& q);

// The path materialization of a support: the vertex sequence of the
// underlying tree path, endpoints ordered by smaller vertex id first.
std::vector<int> support_path(const GentleQuiver& q, const Support& s);

// Vertices of the string where both incident string arrows point outward
// (the tops of the module); a single vertex is its own peak.
std::vector<int> string_peaks(const GentleQuiver& q, const Support& s);

// Indexed set of all indecomposables of a quiver, with projectivity flags.
class StringIndex {
public:
  explicit StringIndex(const GentleQuiver& q);

  std::size_t size() const { return supports_.size(); }
  const Support& support(std::size_t id) const { return supports_[id]; }
  bool is_projective(std::size_t id) const { return projective_[id]; }
  // -1 when not a valid support.
  int id_of(const Support& s) const;
  std::size_t projective_id(int vertex) const;

  const std::vector<std::size_t>& nonprojective_ids() const { return nonproj_; }

  // Stable identity used for memoization across translation units.
  std::size_t uid() const { return uid_; }

private:
  std::size_t uid_ = 0;
  std::vector<Support> supports_;
  std::vector<bool> projective_;
  std::vector<std::size_t> nonproj_;
  std::map<Support, std::size_t> index_;
  std::map<int, std::size_t> proj_of_vertex_;
};

}  // namespace gentle
