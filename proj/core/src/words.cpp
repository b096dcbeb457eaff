#include "circloids/words.hpp"

#include <algorithm>

namespace circloids {

Composition word_weight(const Word& w) {
  int top = 0;
  for (int x : w) {
    if (x < 1) throw std::invalid_argument("letters must be positive");
    top = std::max(top, x);
  }
  Composition weight(top, 0);
  for (int x : w) ++weight[x - 1];
  return weight;
}

std::vector<int> standard_subwords(const Word& w) {
  Composition weight = word_weight(w);
  if (!Partition::is_partition(weight)) throw std::invalid_argument("weight is not a partition");
  Partition mu(weight);
  Partition muc = conjugate(mu);
  const int n = static_cast<int>(w.size());
  std::vector<int> sub(n, 0);
  for (int i = 1; i <= mu.part(1); ++i) {
    int from = 0;  // scan cursor, index of the position after which to search
    for (int letter = 1; letter <= muc.part(i); ++letter) {
      int found = -1;
      for (int step = 0; step < n; ++step) {
        int p = (from + step) % n;
        if (sub[p] == 0 && w[p] == letter) {
          found = p;
          break;
        }
      }
      sub[found] = i;
      from = (found + 1) % n;
    }
  }
  return sub;
}

long long cocharge_word(const Word& w) {
  std::vector<int> sub = standard_subwords(w);
  Partition mu(word_weight(w));
  Partition muc = conjugate(mu);
  const int n = static_cast<int>(w.size());
  long long total = 0;
  for (int i = 1; i <= mu.part(1); ++i) {
    std::vector<int> pos(muc.part(i) + 1, 0);
    for (int p = 0; p < n; ++p)
      if (sub[p] == i) pos[w[p]] = p + 1;
    long long label = 0;
    for (int letter = 2; letter <= muc.part(i); ++letter) {
      if (pos[letter] < pos[letter - 1]) ++label;
      total += label;
    }
  }
  return total;
}

long long charge_word(const Word& w) {
  Partition mu(word_weight(w));
  return n_stat(mu) - cocharge_word(w);
}

Word superstandard_word(const Partition& lambda) {
  Word w;
  for (int i = lambda.length(); i >= 1; --i)
    for (int k = 0; k < lambda.part(i); ++k) w.push_back(i);
  return w;
}

bool is_lambda_yamanouchi(const Word& w, const Partition& lambda) {
  Word v = w;
  Word tail = superstandard_word(lambda);
  v.insert(v.end(), tail.begin(), tail.end());
  int top = 0;
  for (int x : v) top = std::max(top, x);
  std::vector<int> count(top + 2, 0);
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    int x = *it;
    ++count[x];
    if (x > 1 && count[x] > count[x - 1]) return false;
  }
  return true;
}

}  // namespace circloids
