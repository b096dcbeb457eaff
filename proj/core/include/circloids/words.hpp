#pragma once

#include <vector>

#include "circloids/shapes.hpp"

namespace circloids {

// Positive letters, positions 1..n left to right.
using Word = std::vector<int>;

// weight[i-1] = multiplicity of letter i, up to the largest letter present.
Composition word_weight(const Word& w);

// Requires partition weight.  Returns the subword index (1-based) of each
// position: subword i is built by scanning cyclically left to right from the
// start, claiming the first free 1, then the first free 2 after it, and so on
// up to letter conjugate(mu)_i.
std::vector<int> standard_subwords(const Word& w);

// Requires partition weight.  Sum over standard subwords of the label sum,
// where label(1) = 0 and label(r) = label(r-1) + 1 exactly when r sits
// strictly left of r-1.
long long cocharge_word(const Word& w);

// charge = n(mu) - cocharge.
long long charge_word(const Word& w);

// Reading word of the unique tableau of shape and weight lambda: top row
// first, west to east.
Word superstandard_word(const Partition& lambda);

// True iff every suffix of w . word(T_lambda) has partition weight.  Pass the
// empty partition for the plain Yamanouchi condition.
bool is_lambda_yamanouchi(const Word& w, const Partition& lambda = Partition());

}  // namespace circloids
