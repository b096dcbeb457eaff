#pragma once

#include <compare>
#include <vector>

#include "circloids/shapes.hpp"
#include "circloids/words.hpp"

namespace circloids {

// Letter x with color subscript y, both positive.
struct ColoredLetter {
  int letter = 0;
  int color = 0;
  friend bool operator==(const ColoredLetter&, const ColoredLetter&) = default;
};

// Prismatic order: the larger letter wins, ties go to the smaller color.
// Equivalent to reading-order precedence of the cell (letter, color).
int prismatic_cmp(const ColoredLetter& a, const ColoredLetter& b);   // -1, 0, +1
int coprismatic_cmp(const ColoredLetter& a, const ColoredLetter& b); // larger color, then larger letter
bool prismatic_less(const ColoredLetter& a, const ColoredLetter& b);
bool coprismatic_less(const ColoredLetter& a, const ColoredLetter& b);

// Skew weight alpha/beta: letter x carries exactly the colors
// beta_x+1 .. alpha_x.  beta empty means straight weight alpha.
struct ColoredWeight {
  Composition alpha;
  Composition beta;
  bool is_straight() const;
  friend bool operator==(const ColoredWeight&, const ColoredWeight&) = default;
};

// Star-anchored circular sequence of distinct colored letters, stored
// clockwise from star and cut into sectors of sizes shape[0], shape[1], ...
// Within each sector the letters strictly decrease in prismatic order.
class Circloid {
public:
  Circloid() = default;
  // Validates sector monotonicity and distinctness.
  Circloid(Composition shape, std::vector<ColoredLetter> clockwise);

  const Composition& shape() const { return shape_; }
  const std::vector<ColoredLetter>& letters() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }
  int sectors() const { return static_cast<int>(shape_.size()); }
  // Letters of sector x (1-based), clockwise.
  std::vector<ColoredLetter> sector(int x) const;
  int sector_offset(int x) const;  // letters before sector x
  // Sector index of the letter at clockwise position p (1-based).
  int sector_of_position(int p) const;

  ColoredWeight weight() const;  // throws if colors of some letter are not contiguous
  bool has_partition_weight() const;

  friend bool operator==(const Circloid&, const Circloid&) = default;
  friend auto operator<=>(const Circloid&, const Circloid&) = default;

private:
  Composition shape_;
  std::vector<ColoredLetter> letters_;
};

// Rows bottom-up, each strictly increasing in prismatic order.  Rows may be
// empty; the row count is part of the value.
class ColoredTabloid {
public:
  ColoredTabloid() = default;
  explicit ColoredTabloid(std::vector<std::vector<ColoredLetter>> rows);

  const std::vector<std::vector<ColoredLetter>>& rows() const { return rows_; }
  int row_count() const { return static_cast<int>(rows_.size()); }
  Composition shape() const;
  int size() const;
  ColoredWeight weight() const;
  // Letters only, per row.
  std::vector<std::vector<int>> stripped() const;
  // Top row first, west to east; matches the counter-clockwise reading of the
  // underlying circloid.
  Word reading_word_letters() const;

  friend bool operator==(const ColoredTabloid&, const ColoredTabloid&) = default;
  friend auto operator<=>(const ColoredTabloid&, const ColoredTabloid&) = default;

private:
  std::vector<std::vector<ColoredLetter>> rows_;
};

// Row manifestation: sector r becomes row r sorted prismatically increasing.
ColoredTabloid iota(const Circloid& c);
Circloid iota_inv(const ColoredTabloid& t);

// Sum over colors of the per-color label sums; labels increment exactly when
// the next letter of the chain sits clockwise-later (no star crossing).
// Requires partition weight.
long long circloid_cocharge(const Circloid& c);
long long circloid_cocharge(const ColoredTabloid& t);

// Sum of s_{i,j}: letters i with color > j passed on the clockwise arc from
// (i-1)_j to i_j, star standing in for 0_j.  Requires partition weight.
long long circloid_betrayal(const Circloid& c);
long long circloid_betrayal(const ColoredTabloid& t);

long long circloid_charge(const Circloid& c);

// Word restricted to color i, in clockwise order.
Word restrict_color(const Circloid& c, int color);
// Sub-circloid of letters >= j, cyclic order and sector sizes adjusted.
Circloid restrict_letters(const Circloid& c, int min_letter);

// Circloid of shape (1,...,1) with clockwise storage w_n .. w_1 and colors
// given by standard_subwords(w).  Preserves cocharge exactly:
// circloid_cocharge(standard_coloring(w)) == cocharge_word(w).
Circloid standard_coloring(const Word& w);

// The coloring whose colors increase clockwise per letter: traverse rows
// bottom to top, east to west, handing letter x the colors 1, 2, ...
// Input rows must be weakly increasing.
ColoredTabloid reverse_coloring(const std::vector<std::vector<int>>& rows);
bool is_reverse_colored(const Circloid& c);
bool is_reverse_colored(const ColoredTabloid& t);

// The unique betrayal-free coloring: greedy clockwise chains from star.
// Requires partition weight.
Circloid faithful_coloring_circ(const std::vector<std::vector<int>>& rows);
ColoredTabloid faithful_coloring(const std::vector<std::vector<int>>& rows);
bool is_faithfully_colored(const ColoredTabloid& t);

// Strip colors, re-color faithfully: b_0.
ColoredTabloid faithful_recoloring(const ColoredTabloid& b);

// Clockwise ascent positions {p : letters[p-1] < letters[p] prismatically}.
std::vector<int> clockwise_ascents(const std::vector<ColoredLetter>& clockwise);
// A clockwise sequence admits shape gamma iff its ascent set is contained in
// prefix_set(gamma).
bool admits_shape(const std::vector<ColoredLetter>& clockwise, const Composition& gamma);

}  // namespace circloids
