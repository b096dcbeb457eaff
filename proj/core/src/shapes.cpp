#include "circloids/shapes.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

namespace circloids {

namespace {
std::atomic<int> g_cap{6};
}

int enumeration_cap() { return g_cap.load(); }
void set_enumeration_cap(int cap) { g_cap.store(cap); }

int degree(const Composition& c) { return std::accumulate(c.begin(), c.end(), 0); }

bool is_weak_composition(const Composition& c) {
  return std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
}

bool is_strict_composition(const Composition& c) {
  return std::all_of(c.begin(), c.end(), [](int x) { return x >= 1; });
}

Composition strict_form(const Composition& c) {
  Composition out;
  for (int x : c)
    if (x != 0) out.push_back(x);
  return out;
}

bool reading_precedes(const Cell& a, const Cell& b) {
  if (a.row != b.row) return a.row > b.row;
  return a.col < b.col;
}

std::vector<Cell> reading_order(std::vector<Cell> cells) {
  std::sort(cells.begin(), cells.end(), reading_precedes);
  return cells;
}

Partition::Partition(Composition parts) : parts_(std::move(parts)) {
  if (!is_partition(parts_)) throw std::invalid_argument("not a partition");
}

bool Partition::is_partition(const Composition& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) return false;
    if (i + 1 < parts.size() && parts[i] < parts[i + 1]) return false;
  }
  return true;
}

Partition Partition::sorted_from(Composition parts) {
  parts = strict_form(parts);
  if (!is_weak_composition(parts)) throw std::invalid_argument("negative part");
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(std::move(parts));
}

int Partition::degree() const { return circloids::degree(parts_); }

int Partition::part(int i) const {
  if (i < 1 || i > length()) return 0;
  return parts_[i - 1];
}

Partition conjugate(const Partition& p) {
  Composition out;
  if (p.empty()) return Partition(out);
  out.assign(p.part(1), 0);
  for (int c = 1; c <= p.part(1); ++c)
    for (int i = 1; i <= p.length(); ++i)
      if (p.part(i) >= c) ++out[c - 1];
  return Partition(std::move(out));
}

long long n_stat(const Partition& mu) {
  long long s = 0;
  for (int i = 1; i <= mu.length(); ++i) s += static_cast<long long>(i - 1) * mu.part(i);
  return s;
}

bool dominates(const Partition& lambda, const Partition& mu) {
  if (lambda.degree() != mu.degree()) throw std::invalid_argument("dominance needs equal degree");
  long long a = 0, b = 0;
  int k = std::max(lambda.length(), mu.length());
  for (int i = 1; i <= k; ++i) {
    a += lambda.part(i);
    b += mu.part(i);
    if (a < b) return false;
  }
  return true;
}

std::vector<int> prefix_set(const Composition& gamma) {
  if (!is_weak_composition(gamma)) throw std::invalid_argument("negative part in composition");
  std::vector<int> out;
  int acc = 0, total = degree(gamma);
  for (int g : gamma) {
    acc += g;
    if (g != 0 && acc < total) out.push_back(acc);
  }
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SkewShape::SkewShape(Composition outer, Composition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  inner_.resize(outer_.size(), 0);
  if (!is_weak_composition(outer_) || !is_weak_composition(inner_))
    throw std::invalid_argument("negative part in shape");
  for (std::size_t r = 0; r < outer_.size(); ++r)
    if (inner_[r] > outer_[r]) throw std::invalid_argument("inner shape exceeds outer shape");
}

SkewShape::SkewShape(Composition outer) : SkewShape(std::move(outer), Composition{}) {}

int SkewShape::cell_count() const {
  int n = 0;
  for (std::size_t r = 0; r < outer_.size(); ++r) n += outer_[r] - inner_[r];
  return n;
}

bool SkewShape::is_straight() const {
  return std::all_of(inner_.begin(), inner_.end(), [](int x) { return x == 0; });
}

bool SkewShape::is_straight_partition() const {
  return is_straight() && Partition::is_partition(outer_);
}

bool SkewShape::contains(const Cell& c) const {
  if (c.row < 1 || c.row > rows()) return false;
  return c.col >= row_begin(c.row) && c.col <= row_end(c.row);
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> out;
  out.reserve(cell_count());
  for (int r = 1; r <= rows(); ++r)
    for (int c = row_begin(r); c <= row_end(r); ++c) out.push_back({r, c});
  return out;
}

}  // namespace circloids
