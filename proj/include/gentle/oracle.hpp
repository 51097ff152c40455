#pragma once

#include <set>
#include <string>
#include <vector>

#include "gentle/rep.hpp"

namespace gentle {

// Independent ground truth for resolving closures, built only on the
// representation layer (no disc geometry, no moves).
class Oracle {
public:
  Oracle(const GentleQuiver& q, const StringIndex& idx) : q_(q), idx_(idx) {}

  // Least fixed point of: add all non-projective syzygy summands of members;
  // for every ordered pair of members (projectives included on both sides),
  // add all indecomposable middle-term summands of extensions. Returns the
  // non-projective part.
  std::set<Support> takahashi_closure(const std::set<Support>& generators) const;

  // Containment order on monogeneous closures.
  bool res_leq(const Support& x, const Support& y) const;

  // All resolving sets (as non-projective parts), from closures of all
  // antichains of the oracle Res-order; deduplicated.
  std::vector<std::set<Support>> enumerate_resolving_bruteforce() const;

  std::size_t hom(const Support& m, const Support& n) const { return hom_dim(q_, m, n); }
  std::size_t ext1(const Support& m, const Support& n) const {
    return ext1_dim(q_, idx_, m, n);
  }
  std::size_t ext(const Support& m, const Support& n, std::size_t i) const {
    return ext_dim(q_, idx_, m, n, i);
  }
  bool has_epi(const Support& from, const Support& to) const {
    return epi_kernel(q_, idx_, from, to).has_value();
  }

  // Projectives in the minimal projective resolution of m, together with the
  // projectives P with Ext^i(m, P) != 0 for some i >= 1.
  std::set<Support> neighboring_projectives(const Support& m) const;

  const GentleQuiver& quiver() const { return q_; }
  const StringIndex& index() const { return idx_; }

private:
  const GentleQuiver& q_;
  const StringIndex& idx_;
};

}  // namespace gentle
