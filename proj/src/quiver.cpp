#include "gentle/quiver.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace gentle {

const Arrow* GentleQuiver::arrow_by_id(const std::string& id) const {
  auto it = arrow_pos_.find(id);
  return it == arrow_pos_.end() ? nullptr : &arrows_[it->second];
}

const Arrow* GentleQuiver::arrow_between(int u, int v) const {
  auto it = edge_index_.find({std::min(u, v), std::max(u, v)});
  return it == edge_index_.end() ? nullptr : &arrows_[it->second];
}

bool GentleQuiver::is_relation(const std::string& a, const std::string& b) const {
  return relation_set_.count({a, b}) > 0;
}

std::vector<const Arrow*> GentleQuiver::arrows_out(int v) const {
  std::vector<const Arrow*> out;
  for (const auto& a : arrows_)
    if (a.from == v) out.push_back(&a);
  return out;
}

std::vector<const Arrow*> GentleQuiver::arrows_in(int v) const {
  std::vector<const Arrow*> in;
  for (const auto& a : arrows_)
    if (a.to == v) in.push_back(&a);
  return in;
}

std::vector<int> GentleQuiver::neighbors(int v) const {
  std::vector<int> ns;
  for (const auto& a : arrows_) {
    if (a.from == v) ns.push_back(a.to);
    if (a.to == v) ns.push_back(a.from);
  }
  std::sort(ns.begin(), ns.end());
  return ns;
}

std::vector<int> GentleQuiver::tree_path(int u, int v) const {
  // DFS in the undirected tree; paths are unique.
  std::vector<int> path;
  std::function<bool(int, int)> dfs = [&](int cur, int prev) {
    path.push_back(cur);
    if (cur == v) return true;
    for (int w : neighbors(cur)) {
      if (w == prev) continue;
      if (dfs(w, cur)) return true;
    }
    path.pop_back();
    return false;
  };
  if (!dfs(u, -1)) throw std::logic_error("tree_path: vertices not connected");
  return path;
}

std::pair<std::optional<GentleQuiver>, std::vector<ValidationIssue>>
validate_gentle(const QuiverDescription& raw) {
  std::vector<ValidationIssue> issues;
  auto fail = [&](const std::string& code, const std::string& detail) {
    issues.push_back({code, detail});
  };

  std::set<int> vset(raw.vertices.begin(), raw.vertices.end());
  if (vset.size() != raw.vertices.size()) fail("BAD_INPUT", "duplicate vertex ids");
  if (vset.empty()) fail("BAD_INPUT", "empty vertex set");

  std::map<std::string, const Arrow*> by_id;
  for (const auto& a : raw.arrows) {
    if (!vset.count(a.from) || !vset.count(a.to))
      fail("BAD_INPUT", "arrow " + a.id + " touches unknown vertex");
    if (a.from == a.to) fail("GENTLE_VIOLATION", "self-loop at vertex " + std::to_string(a.from));
    if (by_id.count(a.id)) fail("BAD_INPUT", "duplicate arrow id " + a.id);
    by_id[a.id] = &a;
  }
  std::set<std::pair<int, int>> edges;
  for (const auto& a : raw.arrows) {
    auto e = std::make_pair(std::min(a.from, a.to), std::max(a.from, a.to));
    if (!edges.insert(e).second)
      fail("GENTLE_VIOLATION", "parallel arrows between " + std::to_string(e.first) + " and " +
                                   std::to_string(e.second));
  }
  if (!issues.empty()) return {std::nullopt, issues};

  // Degree bounds: at most 2 in, at most 2 out.
  for (int v : vset) {
    int in = 0, out = 0;
    for (const auto& a : raw.arrows) {
      if (a.to == v) ++in;
      if (a.from == v) ++out;
    }
    if (in > 2)
      fail("DEGREE_VIOLATION", "vertex " + std::to_string(v) + " has " + std::to_string(in) +
                                   " incoming arrows");
    if (out > 2)
      fail("DEGREE_VIOLATION", "vertex " + std::to_string(v) + " has " + std::to_string(out) +
                                   " outgoing arrows");
  }

  // Relations: length-2 composable pairs of existing arrows, no duplicates.
  std::set<std::pair<std::string, std::string>> rels;
  for (const auto& [a, b] : raw.relations) {
    auto ia = by_id.find(a);
    auto ib = by_id.find(b);
    if (ia == by_id.end() || ib == by_id.end()) {
      fail("BAD_RELATION", "relation (" + a + "," + b + ") names an unknown arrow");
      continue;
    }
    if (ia->second->to != ib->second->from) {
      fail("BAD_RELATION", "relation (" + a + "," + b + ") is not a composable length-2 path");
      continue;
    }
    rels.insert({a, b});
  }

  // Gentle local conditions: for each arrow beta, among arrows alpha with
  // t(alpha) = s(beta): at most one with (alpha,beta) a relation and at most
  // one without; symmetrically on the other side.
  for (const auto& b : raw.arrows) {
    int rel_in = 0, nonrel_in = 0;
    for (const auto& a : raw.arrows) {
      if (a.to != b.from) continue;
      if (rels.count({a.id, b.id})) ++rel_in; else ++nonrel_in;
    }
    if (rel_in > 1)
      fail("GENTLE_VIOLATION", "two relations end with arrow " + b.id);
    if (nonrel_in > 1)
      fail("GENTLE_VIOLATION", "two non-relation compositions end with arrow " + b.id);
    int rel_out = 0, nonrel_out = 0;
    for (const auto& c : raw.arrows) {
      if (c.from != b.to) continue;
      if (rels.count({b.id, c.id})) ++rel_out; else ++nonrel_out;
    }
    if (rel_out > 1)
      fail("GENTLE_VIOLATION", "two relations start with arrow " + b.id);
    if (nonrel_out > 1)
      fail("GENTLE_VIOLATION", "two non-relation compositions start with arrow " + b.id);
  }

  // Tree check: connected and acyclic (|E| = |V| - 1 plus connectivity).
  if (raw.arrows.size() + 1 != vset.size()) {
    fail("NOT_A_TREE", "tree requires exactly #vertices - 1 arrows");
  } else {
    std::set<int> seen;
    std::vector<int> stack{*vset.begin()};
    std::multimap<int, int> adj;
    for (const auto& a : raw.arrows) {
      adj.insert({a.from, a.to});
      adj.insert({a.to, a.from});
    }
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (!seen.insert(v).second) continue;
      auto [lo, hi] = adj.equal_range(v);
      for (auto it = lo; it != hi; ++it) stack.push_back(it->second);
    }
    if (seen.size() != vset.size()) fail("NOT_A_TREE", "underlying graph is not connected");
  }

  if (!issues.empty()) return {std::nullopt, issues};

  GentleQuiver q;
  q.vertices_.assign(vset.begin(), vset.end());
  q.arrows_ = raw.arrows;
  q.relations_.assign(rels.begin(), rels.end());
  q.relation_set_ = rels;
  for (std::size_t i = 0; i < q.vertices_.size(); ++i) q.vertex_pos_[q.vertices_[i]] = i;
  for (std::size_t i = 0; i < q.arrows_.size(); ++i) {
    q.arrow_pos_[q.arrows_[i].id] = i;
    const auto& a = q.arrows_[i];
    q.edge_index_[{std::min(a.from, a.to), std::max(a.from, a.to)}] = i;
  }
  return {q, {}};
}

GentleQuiver make_gentle(const QuiverDescription& raw) {
  auto [q, issues] = validate_gentle(raw);
  if (!q) {
    std::ostringstream os;
    os << "invalid gentle tree:";
    for (const auto& i : issues) os << " [" << i.code << "] " << i.detail << ";";
    throw std::invalid_argument(os.str());
  }
  return *q;
}

QuiverDescription q4_description() {
  QuiverDescription d;
  d.vertices = {1, 2, 3, 4};
  d.arrows = {{"a", 1, 2}, {"b", 2, 3}, {"c", 2, 4}};
  d.relations = {{"a", "c"}};
  return d;
}

}  // namespace gentle
