#include "gentle/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace gentle {

std::set<Support> Oracle::takahashi_closure(const std::set<Support>& generators) const {
  std::set<Support> closed;  // non-projective members
  for (const auto& g : generators)
    if (!idx_.is_projective(idx_.id_of(g))) closed.insert(g);

  std::vector<Support> projectives;
  for (std::size_t i = 0; i < idx_.size(); ++i)
    if (idx_.is_projective(i)) projectives.push_back(idx_.support(i));

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Support> members(closed.begin(), closed.end());
    members.insert(members.end(), projectives.begin(), projectives.end());

    auto add = [&](const Support& s) {
      if (idx_.is_projective(idx_.id_of(s))) return;
      if (closed.insert(s).second) changed = true;
    };

    for (const auto& m : closed) {
      for (const auto& [s, mult] : syzygy(q_, idx_, m)) {
        (void)mult;
        add(s);
      }
    }
    for (const auto& sub : members) {
      for (const auto& quot : members) {
        if (ext1_dim(q_, idx_, quot, sub) == 0) continue;
        for (const auto& middle : extension_middle_terms(q_, idx_, sub, quot))
          for (const auto& [s, mult] : middle) {
            (void)mult;
            add(s);
          }
      }
    }
  }
  return closed;
}

bool Oracle::res_leq(const Support& x, const Support& y) const {
  auto cy = takahashi_closure({y});
  return cy.count(x) > 0;
}

std::vector<std::set<Support>> Oracle::enumerate_resolving_bruteforce() const {
  // Closures of all antichains of the oracle Res-order, deduplicated.
  std::vector<Support> nonproj;
  for (std::size_t id : idx_.nonprojective_ids()) nonproj.push_back(idx_.support(id));
  const std::size_t n = nonproj.size();

  std::map<Support, std::set<Support>> mono;
  for (const auto& s : nonproj) mono[s] = takahashi_closure({s});
  auto leq = [&](std::size_t i, std::size_t j) { return mono[nonproj[j]].count(nonproj[i]) > 0; };

  std::vector<std::set<Support>> out;
  std::set<std::set<Support>> seen;
  std::vector<std::size_t> antichain;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    std::set<Support> gens;
    for (std::size_t i : antichain) gens.insert(nonproj[i]);
    std::set<Support> cl = takahashi_closure(gens);
    if (seen.insert(cl).second) out.push_back(cl);
    for (std::size_t k = start; k < n; ++k) {
      bool comparable = false;
      for (std::size_t i : antichain)
        if (leq(i, k) || leq(k, i)) { comparable = true; break; }
      if (comparable) continue;
      antichain.push_back(k);
      rec(k + 1);
      antichain.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size() || (a.size() == b.size() && a < b); });
  return out;
}

std::set<Support> Oracle::neighboring_projectives(const Support& m) const {
  std::set<Support> result;
  // Summands of the minimal projective resolution: iterate syzygies,
  // collecting the cover summands at each stage.
  std::set<Support> layer{m};
  while (!layer.empty()) {
    std::set<Support> next;
    for (const auto& s : layer) {
      if (idx_.is_projective(idx_.id_of(s))) {
        result.insert(s);
        continue;
      }
      for (int t : string_peaks(q_, s)) result.insert(projective_support(q_, t));
      for (const auto& [k, mult] : syzygy(q_, idx_, s)) {
        (void)mult;
        next.insert(k);
      }
    }
    layer = std::move(next);
  }
  // Projectives with a higher extension against m.
  std::size_t bound = idx_.size();  // global dimension is finite and small
  for (int v : q_.quiver_vertices_hack()) (void)v;
  for (std::size_t i = 0; i < idx_.size(); ++i) {
    if (!idx_.is_projective(i)) continue;
    const Support& p = idx_.support(i);
    for (std::size_t d = 1; d <= bound; ++d) {
      if (ext_dim(q_, idx_, m, p, d) > 0) {
        result.insert(p);
        break;
      }
      // Stop early once syzygies vanish.
      if (d > q_.num_vertices()) break;
    }
  }
  return result;
}

}  // namespace gentle
