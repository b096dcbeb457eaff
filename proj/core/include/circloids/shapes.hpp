#pragma once

#include <compare>
#include <vector>

#include "circloids/common.hpp"

namespace circloids {

// Compositions are plain integer vectors; a weak composition may contain
// zeros, a strict one may not.
using Composition = std::vector<int>;

int degree(const Composition& c);
bool is_weak_composition(const Composition& c);
bool is_strict_composition(const Composition& c);
// Drops zero parts, keeping order.
Composition strict_form(const Composition& c);

// Lattice square in row `row` (row 1 is the bottom row) and column `col`.
struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Reading order: higher rows first, west to east within a row.
bool reading_precedes(const Cell& a, const Cell& b);
std::vector<Cell> reading_order(std::vector<Cell> cells);

// Weakly decreasing positive parts.
class Partition {
public:
  Partition() = default;
  explicit Partition(Composition parts);  // validates, throws std::invalid_argument
  static bool is_partition(const Composition& parts);
  // Sorts a weak composition into a partition, dropping zeros.
  static Partition sorted_from(Composition parts);

  const Composition& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int degree() const;
  // 1-based; parts beyond the length read as 0.
  int part(int i) const;
  bool empty() const { return parts_.empty(); }

  friend auto operator<=>(const Partition&, const Partition&) = default;

private:
  Composition parts_;
};

Partition conjugate(const Partition& p);
// n(mu) = sum_i (i-1) mu_i
long long n_stat(const Partition& mu);
// lambda >= mu in dominance: every prefix sum of lambda is >= the matching
// prefix sum of mu.  Throws on degree mismatch.
bool dominates(const Partition& lambda, const Partition& mu);

// Proper prefix sums of gamma in sector order, zero parts skipped.
std::vector<int> prefix_set(const Composition& gamma);

// Skew shape outer/inner; row r occupies columns inner[r]+1 .. outer[r].
class SkewShape {
public:
  SkewShape() = default;
  SkewShape(Composition outer, Composition inner);  // validates inner <= outer
  explicit SkewShape(Composition outer);            // straight shape
  explicit SkewShape(const Partition& outer) : SkewShape(outer.parts()) {}

  const Composition& outer() const { return outer_; }
  const Composition& inner() const { return inner_; }
  int rows() const { return static_cast<int>(outer_.size()); }
  int row_begin(int r) const { return inner_[r - 1] + 1; }  // first column, 1-based row
  int row_end(int r) const { return outer_[r - 1]; }        // last column
  int row_size(int r) const { return outer_[r - 1] - inner_[r - 1]; }
  int cell_count() const;
  bool is_straight() const;
  // Straight partition shape (inv/maj domain).
  bool is_straight_partition() const;
  bool contains(const Cell& c) const;
  std::vector<Cell> cells() const;  // row-major, bottom row first

  friend auto operator<=>(const SkewShape&, const SkewShape&) = default;

private:
  Composition outer_;
  Composition inner_;
};

}  // namespace circloids
