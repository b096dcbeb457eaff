#include "circloids/colored.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace circloids {

int prismatic_cmp(const ColoredLetter& a, const ColoredLetter& b) {
  if (a.letter != b.letter) return a.letter > b.letter ? 1 : -1;
  if (a.color != b.color) return a.color < b.color ? 1 : -1;
  return 0;
}

int coprismatic_cmp(const ColoredLetter& a, const ColoredLetter& b) {
  if (a.color != b.color) return a.color > b.color ? 1 : -1;
  if (a.letter != b.letter) return a.letter > b.letter ? 1 : -1;
  return 0;
}

bool prismatic_less(const ColoredLetter& a, const ColoredLetter& b) {
  return prismatic_cmp(a, b) < 0;
}

bool coprismatic_less(const ColoredLetter& a, const ColoredLetter& b) {
  return coprismatic_cmp(a, b) < 0;
}

bool ColoredWeight::is_straight() const {
  return std::all_of(beta.begin(), beta.end(), [](int b) { return b == 0; });
}

namespace {

void validate_letters(const std::vector<ColoredLetter>& ls) {
  std::set<std::pair<int, int>> seen;
  for (const auto& l : ls) {
    if (l.letter < 1 || l.color < 1) throw std::invalid_argument("letters and colors are positive");
    if (!seen.insert({l.letter, l.color}).second)
      throw std::invalid_argument("duplicate colored letter");
  }
}

ColoredWeight weight_of(const std::vector<ColoredLetter>& ls) {
  std::map<int, std::set<int>> colors;
  int top = 0;
  for (const auto& l : ls) {
    colors[l.letter].insert(l.color);
    top = std::max(top, l.letter);
  }
  ColoredWeight w;
  w.alpha.assign(top, 0);
  w.beta.assign(top, 0);
  for (int x = 1; x <= top; ++x) {
    auto it = colors.find(x);
    if (it == colors.end()) continue;
    const auto& cs = it->second;
    int lo = *cs.begin(), hi = *cs.rbegin();
    if (static_cast<int>(cs.size()) != hi - lo + 1)
      throw std::invalid_argument("colors of a letter must form a contiguous range");
    w.alpha[x - 1] = hi;
    w.beta[x - 1] = lo - 1;
  }
  return w;
}

}  // namespace

Circloid::Circloid(Composition shape, std::vector<ColoredLetter> clockwise)
    : shape_(std::move(shape)), letters_(std::move(clockwise)) {
  if (!is_weak_composition(shape_)) throw std::invalid_argument("negative sector size");
  if (degree(shape_) != static_cast<int>(letters_.size()))
    throw std::invalid_argument("shape does not match letter count");
  validate_letters(letters_);
  int off = 0;
  for (int g : shape_) {
    for (int k = 1; k < g; ++k)
      if (prismatic_cmp(letters_[off + k - 1], letters_[off + k]) <= 0)
        throw std::invalid_argument("sector is not prismatically decreasing");
    off += g;
  }
}

std::vector<ColoredLetter> Circloid::sector(int x) const {
  int off = sector_offset(x);
  return {letters_.begin() + off, letters_.begin() + off + shape_[x - 1]};
}

int Circloid::sector_offset(int x) const {
  int off = 0;
  for (int i = 0; i + 1 < x; ++i) off += shape_[i];
  return off;
}

int Circloid::sector_of_position(int p) const {
  int off = 0;
  for (int x = 1; x <= sectors(); ++x) {
    off += shape_[x - 1];
    if (p <= off) return x;
  }
  throw std::out_of_range("position beyond circloid");
}

ColoredWeight Circloid::weight() const { return weight_of(letters_); }

bool Circloid::has_partition_weight() const {
  ColoredWeight w = weight();
  return w.is_straight() && Partition::is_partition(w.alpha);
}

ColoredTabloid::ColoredTabloid(std::vector<std::vector<ColoredLetter>> rows)
    : rows_(std::move(rows)) {
  std::vector<ColoredLetter> all;
  for (const auto& row : rows_) {
    for (std::size_t k = 0; k + 1 < row.size(); ++k)
      if (prismatic_cmp(row[k], row[k + 1]) >= 0)
        throw std::invalid_argument("row is not prismatically increasing");
    all.insert(all.end(), row.begin(), row.end());
  }
  validate_letters(all);
}

Composition ColoredTabloid::shape() const {
  Composition s;
  s.reserve(rows_.size());
  for (const auto& row : rows_) s.push_back(static_cast<int>(row.size()));
  return s;
}

int ColoredTabloid::size() const {
  int n = 0;
  for (const auto& row : rows_) n += static_cast<int>(row.size());
  return n;
}

ColoredWeight ColoredTabloid::weight() const {
  std::vector<ColoredLetter> all;
  for (const auto& row : rows_) all.insert(all.end(), row.begin(), row.end());
  return weight_of(all);
}

std::vector<std::vector<int>> ColoredTabloid::stripped() const {
  std::vector<std::vector<int>> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) {
    std::vector<int> r;
    r.reserve(row.size());
    for (const auto& l : row) r.push_back(l.letter);
    out.push_back(std::move(r));
  }
  return out;
}

Word ColoredTabloid::reading_word_letters() const {
  Word w;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it)
    for (const auto& l : *it) w.push_back(l.letter);
  return w;
}

ColoredTabloid iota(const Circloid& c) {
  std::vector<std::vector<ColoredLetter>> rows;
  rows.reserve(c.sectors());
  for (int x = 1; x <= c.sectors(); ++x) {
    auto row = c.sector(x);
    std::reverse(row.begin(), row.end());
    rows.push_back(std::move(row));
  }
  return ColoredTabloid(std::move(rows));
}

Circloid iota_inv(const ColoredTabloid& t) {
  Composition shape = t.shape();
  std::vector<ColoredLetter> letters;
  for (const auto& row : t.rows()) {
    auto sec = row;
    std::reverse(sec.begin(), sec.end());
    letters.insert(letters.end(), sec.begin(), sec.end());
  }
  return Circloid(std::move(shape), std::move(letters));
}

namespace {

// position (1-based clockwise) of every colored letter; star is position 0.
std::map<std::pair<int, int>, int> positions_of(const Circloid& c) {
  std::map<std::pair<int, int>, int> pos;
  const auto& ls = c.letters();
  for (int p = 0; p < static_cast<int>(ls.size()); ++p)
    pos[{ls[p].letter, ls[p].color}] = p + 1;
  return pos;
}

Partition require_partition_weight(const Circloid& c) {
  ColoredWeight w = c.weight();
  if (!w.is_straight() || !Partition::is_partition(w.alpha))
    throw std::invalid_argument("statistic requires partition weight");
  return Partition(w.alpha);
}

}  // namespace

long long circloid_cocharge(const Circloid& c) {
  Partition mu = require_partition_weight(c);
  Partition muc = conjugate(mu);
  auto pos = positions_of(c);
  long long total = 0;
  for (int color = 1; color <= mu.part(1); ++color) {
    long long label = 0;
    for (int letter = 2; letter <= muc.part(color); ++letter) {
      if (pos[{letter, color}] > pos[{letter - 1, color}]) ++label;
      total += label;
    }
  }
  return total;
}

long long circloid_cocharge(const ColoredTabloid& t) { return circloid_cocharge(iota_inv(t)); }

long long circloid_betrayal(const Circloid& c) {
  Partition mu = require_partition_weight(c);
  Partition muc = conjugate(mu);
  auto pos = positions_of(c);
  const auto& ls = c.letters();
  const int n = c.size();
  long long total = 0;
  for (int color = 1; color <= mu.part(1); ++color) {
    for (int letter = 1; letter <= muc.part(color); ++letter) {
      int from = letter == 1 ? 0 : pos[{letter - 1, color}];
      int to = pos[{letter, color}];
      // walk the clockwise arc (from, to), slot 0 being the star
      for (int p = from % (n + 1) + 1 == to ? to : (from + 1) % (n + 1); p != to;
           p = (p + 1) % (n + 1)) {
        if (p == 0) continue;
        if (ls[p - 1].letter == letter && ls[p - 1].color > color) ++total;
      }
    }
  }
  return total;
}

long long circloid_betrayal(const ColoredTabloid& t) { return circloid_betrayal(iota_inv(t)); }

long long circloid_charge(const Circloid& c) {
  Partition mu = require_partition_weight(c);
  return n_stat(mu) - circloid_cocharge(c);
}

Word restrict_color(const Circloid& c, int color) {
  Word w;
  for (const auto& l : c.letters())
    if (l.color == color) w.push_back(l.letter);
  return w;
}

Circloid restrict_letters(const Circloid& c, int min_letter) {
  Composition shape;
  std::vector<ColoredLetter> letters;
  int off = 0;
  for (int x = 1; x <= c.sectors(); ++x) {
    int kept = 0;
    for (int k = 0; k < c.shape()[x - 1]; ++k) {
      const auto& l = c.letters()[off + k];
      if (l.letter >= min_letter) {
        letters.push_back(l);
        ++kept;
      }
    }
    shape.push_back(kept);
    off += c.shape()[x - 1];
  }
  return Circloid(std::move(shape), std::move(letters));
}

Circloid standard_coloring(const Word& w) {
  std::vector<int> sub = standard_subwords(w);
  const int n = static_cast<int>(w.size());
  std::vector<ColoredLetter> clockwise(n);
  for (int p = 0; p < n; ++p) clockwise[n - 1 - p] = {w[p], sub[p]};
  return Circloid(Composition(n, 1), std::move(clockwise));
}

ColoredTabloid reverse_coloring(const std::vector<std::vector<int>>& rows) {
  std::map<int, int> next_color;
  std::vector<std::vector<ColoredLetter>> out(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    for (std::size_t k = 0; k + 1 < row.size(); ++k)
      if (row[k] > row[k + 1]) throw std::invalid_argument("rows must be weakly increasing");
    std::vector<ColoredLetter> colored;
    colored.reserve(row.size());
    for (auto it = row.rbegin(); it != row.rend(); ++it)
      colored.push_back({*it, ++next_color[*it]});
    std::reverse(colored.begin(), colored.end());
    out[r] = std::move(colored);
  }
  return ColoredTabloid(std::move(out));
}

bool is_reverse_colored(const Circloid& c) {
  std::map<int, int> last_color;
  for (const auto& l : c.letters()) {
    auto it = last_color.find(l.letter);
    if (it != last_color.end() && l.color <= it->second) return false;
    last_color[l.letter] = l.color;
  }
  // colors must start at 1 and be contiguous per letter for straight weight
  ColoredWeight w = c.weight();
  return w.is_straight();
}

bool is_reverse_colored(const ColoredTabloid& t) { return is_reverse_colored(iota_inv(t)); }

Circloid faithful_coloring_circ(const std::vector<std::vector<int>>& rows) {
  Composition shape;
  std::vector<int> bare;  // clockwise letters, uncolored
  for (const auto& row : rows) {
    for (std::size_t k = 0; k + 1 < row.size(); ++k)
      if (row[k] > row[k + 1]) throw std::invalid_argument("rows must be weakly increasing");
    shape.push_back(static_cast<int>(row.size()));
    bare.insert(bare.end(), row.rbegin(), row.rend());
  }
  const int n = static_cast<int>(bare.size());
  Composition weight;
  for (int x : bare) {
    if (x < 1) throw std::invalid_argument("letters must be positive");
    if (x > static_cast<int>(weight.size())) weight.resize(x, 0);
    ++weight[x - 1];
  }
  if (!Partition::is_partition(weight))
    throw std::invalid_argument("faithful coloring requires partition weight");
  Partition mu(weight);
  Partition muc = conjugate(mu);
  std::vector<int> color(n, 0);
  for (int j = 1; j <= mu.part(1); ++j) {
    int from = 0;  // greedy clockwise chain from star
    for (int letter = 1; letter <= muc.part(j); ++letter) {
      int found = -1;
      for (int step = 0; step < n; ++step) {
        int p = (from + step) % n;
        if (color[p] == 0 && bare[p] == letter) {
          found = p;
          break;
        }
      }
      color[found] = j;
      from = (found + 1) % n;
    }
  }
  std::vector<ColoredLetter> letters(n);
  for (int p = 0; p < n; ++p) letters[p] = {bare[p], color[p]};
  return Circloid(std::move(shape), std::move(letters));
}

ColoredTabloid faithful_coloring(const std::vector<std::vector<int>>& rows) {
  return iota(faithful_coloring_circ(rows));
}

bool is_faithfully_colored(const ColoredTabloid& t) { return faithful_recoloring(t) == t; }

ColoredTabloid faithful_recoloring(const ColoredTabloid& b) {
  return faithful_coloring(b.stripped());
}

std::vector<int> clockwise_ascents(const std::vector<ColoredLetter>& clockwise) {
  std::vector<int> asc;
  for (std::size_t p = 0; p + 1 < clockwise.size(); ++p)
    if (prismatic_less(clockwise[p], clockwise[p + 1])) asc.push_back(static_cast<int>(p + 1));
  return asc;
}

bool admits_shape(const std::vector<ColoredLetter>& clockwise, const Composition& gamma) {
  if (degree(gamma) != static_cast<int>(clockwise.size())) return false;
  std::vector<int> asc = clockwise_ascents(clockwise);
  std::vector<int> allowed = prefix_set(gamma);
  return std::includes(allowed.begin(), allowed.end(), asc.begin(), asc.end());
}

}  // namespace circloids
