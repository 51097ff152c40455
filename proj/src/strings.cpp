#include "gentle/strings.hpp"

#include <algorithm>
#include <stdexcept>

namespace gentle {

Support make_support(std::set<int> vertices) {
  return Support(vertices.begin(), vertices.end());
}

std::vector<int> support_path(const GentleQuiver& q, const Support& s) {
  if (s.empty()) throw std::invalid_argument("empty support");
  if (s.size() == 1) return {s[0]};
  // Path endpoints are the support vertices with exactly one support neighbor.
  std::vector<int> ends;
  for (int v : s) {
    int deg = 0;
    for (int w : q.neighbors(v))
      if (std::binary_search(s.begin(), s.end(), w)) ++deg;
    if (deg == 1) ends.push_back(v);
  }
  if (ends.size() != 2) return {};
  std::vector<int> path = q.tree_path(std::min(ends[0], ends[1]), std::max(ends[0], ends[1]));
  if (path.size() != s.size()) return {};
  for (int v : path)
    if (!std::binary_search(s.begin(), s.end(), v)) return {};
  return path;
}

bool is_valid_support(const GentleQuiver& q, const Support& s) {
  if (s.empty()) return false;
  for (int v : s)
    if (!q.has_vertex(v)) return false;
  if (s.size() == 1) return true;
  std::vector<int> path = support_path(q, s);
  if (path.empty()) return false;
  // No two consecutive traversed arrows may form a relation, in either
  // reading direction.
  for (std::size_t i = 0; i + 2 < path.size(); ++i) {
    const Arrow* e1 = q.arrow_between(path[i], path[i + 1]);
    const Arrow* e2 = q.arrow_between(path[i + 1], path[i + 2]);
    if (!e1 || !e2) return false;
    bool fwd1 = e1->from == path[i];      // traversed directly
    bool fwd2 = e2->from == path[i + 1];
    if (fwd1 && fwd2 && q.is_relation(e1->id, e2->id)) return false;
    if (!fwd1 && !fwd2 && q.is_relation(e2->id, e1->id)) return false;
  }
  return true;
}

Support projective_support(const GentleQuiver& q, int v) {
  if (!q.has_vertex(v)) throw std::invalid_argument("unknown vertex");
  std::set<int> supp{v};
  for (const Arrow* start : q.arrows_out(v)) {
    const Arrow* cur = start;
    supp.insert(cur->to);
    while (true) {
      const Arrow* next = nullptr;
      for (const Arrow* cand : q.arrows_out(cur->to)) {
        if (!q.is_relation(cur->id, cand->id)) {
          next = cand;
          break;  // gentle: at most one non-relation continuation
        }
      }
      if (!next) break;
      supp.insert(next->to);
      cur = next;
    }
  }
  return make_support(supp);
}

bool is_projective_support(const GentleQuiver& q, const Support& s) {
  for (int v : s)
    if (projective_support(q, v) == s) return true;
  return false;
}

std::vector<Support> enumerate_indecomposables(const GentleQuiver& q) {
  std::vector<Support> out;
  const auto& vs = q.vertices();
  // Supports are exactly the relation-avoiding simple paths; enumerate paths
  // between all vertex pairs (including singletons) and filter.
  for (std::size_t i = 0; i < vs.size(); ++i) {
    out.push_back({vs[i]});
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      std::vector<int> path = q.tree_path(vs[i], vs[j]);
      Support s(path.begin(), path.end());
      std::sort(s.begin(), s.end());
      if (is_valid_support(q, s)) out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> string_peaks(const GentleQuiver& q, const Support& s) {
  std::vector<int> path = support_path(q, s);
  std::vector<int> peaks;
  for (std::size_t i = 0; i < path.size(); ++i) {
    bool peak = true;
    if (i > 0) {
      const Arrow* e = q.arrow_between(path[i - 1], path[i]);
      if (e->to == path[i]) peak = false;  // arrow points into path[i]
    }
    if (i + 1 < path.size()) {
      const Arrow* e = q.arrow_between(path[i], path[i + 1]);
      if (e->to == path[i]) peak = false;
    }
    if (peak) peaks.push_back(path[i]);
  }
  return peaks;
}

StringIndex::StringIndex(const GentleQuiver& q) {
  static std::size_t next_uid = 1;
  uid_ = next_uid++;
  supports_ = enumerate_indecomposables(q);
  projective_.resize(supports_.size());
  for (std::size_t i = 0; i < supports_.size(); ++i) {
    index_[supports_[i]] = i;
    projective_[i] = false;
  }
  for (int v : q.vertices()) {
    Support p = projective_support(q, v);
    auto it = index_.find(p);
    if (it == index_.end()) throw std::logic_error("projective support missing from index");
    projective_[it->second] = true;
    proj_of_vertex_[v] = it->second;
  }
  for (std::size_t i = 0; i < supports_.size(); ++i)
    if (!projective_[i]) nonproj_.push_back(i);
}

int StringIndex::id_of(const Support& s) const {
  auto it = index_.find(s);
  return it == index_.end() ? -1 : static_cast<int>(it->second);
}

std::size_t StringIndex::projective_id(int vertex) const {
  return proj_of_vertex_.at(vertex);
}

}  // namespace gentle
