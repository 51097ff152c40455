#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gentle/strings.hpp"

namespace gentle {

// Dense matrix over the field with two elements. Rows are bit vectors.
class F2Matrix {
public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows, std::vector<uint8_t>(cols, 0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  uint8_t& at(std::size_t r, std::size_t c) { return data_[r][c]; }
  uint8_t at(std::size_t r, std::size_t c) const { return data_[r][c]; }

  std::size_t rank() const;
  // Basis of the right null space (vectors x with A x = 0), as rows.
  std::vector<std::vector<uint8_t>> null_space() const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::vector<uint8_t>> data_;
};

// A finite-dimensional representation of (Q,R) over F2: a dimension per
// vertex and a matrix per arrow.
struct Representation {
  std::map<int, std::size_t> dim;                  // vertex -> dimension
  std::map<std::string, F2Matrix> maps;            // arrow id -> dim(to) x dim(from)

  std::size_t total_dim() const;
  std::size_t dim_at(int v) const;
};

// The string representation of a support: all dimensions 0/1, arrow maps 1
// exactly when both endpoints lie in the support.
Representation string_representation(const GentleQuiver& q, const Support& s);

// Checks that relation compositions vanish (sanity for constructed reps).
bool relations_vanish(const GentleQuiver& q, const Representation& rep);

std::size_t hom_dim(const GentleQuiver& q, const Representation& m, const Representation& n);
std::size_t hom_dim(const GentleQuiver& q, const Support& m, const Support& n);

// Multiset of supports with multiplicities.
using Decomposition = std::map<Support, std::size_t>;

// Krull-Schmidt decomposition of an arbitrary representation, recovered from
// hom fingerprints against every string module.
Decomposition decompose(const GentleQuiver& q, const StringIndex& idx, const Representation& x);

// Minimal projective cover data of a string module: P = (+) P(peak) with the
// canonical surjection, plus the kernel as an explicit representation.
struct CoverData {
  std::vector<int> peaks;
  Representation cover;    // (+) P(t)
  Representation kernel;   // ker(cover ->> M)
};
CoverData projective_cover(const GentleQuiver& q, const Support& m);

// Indecomposable summands of the first syzygy of m; empty iff m projective.
Decomposition syzygy(const GentleQuiver& q, const StringIndex& idx, const Support& m);

// dim Ext^i(M, N) for i >= 1, via minimal resolutions (dimension counting).
std::size_t ext_dim(const GentleQuiver& q, const StringIndex& idx, const Support& m,
                    const Support& n, std::size_t i);
std::size_t ext1_dim(const GentleQuiver& q, const StringIndex& idx, const Support& m,
                     const Support& n);

// Middle terms of non-split extensions of quot by sub: for each basis element
// of Ext^1(quot, sub) (dimension <= 1 over gentle trees), the multiset of
// indecomposable middle-term summands. Empty when Ext^1 = 0.
std::vector<Decomposition> extension_middle_terms(const GentleQuiver& q, const StringIndex& idx,
                                                  const Support& sub, const Support& quot);

// If a surjection M(from) ->> M(to) exists, the summands of its kernel.
std::optional<Decomposition> epi_kernel(const GentleQuiver& q, const StringIndex& idx,
                                        const Support& from, const Support& to);

}  // namespace gentle
