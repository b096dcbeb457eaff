#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace circloids {

// Coefficients are exact: 64-bit with overflow detection.  Desk-scale
// enumerations keep every value far below the limit; an overflow throws
// instead of wrapping.
using Coeff = long long;

inline Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in add");
  return r;
}

inline Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in mul");
  return r;
}

// Thrown when a requested enumeration exceeds the configured cap.
class cap_exceeded : public std::runtime_error {
public:
  explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Global size guard for the exhaustive generators.  Default 6; tests and the
// CLI raise it explicitly.  Exceeding it is an error, never a truncation.
int enumeration_cap();
void set_enumeration_cap(int cap);

inline void check_cap(int n, const char* what) {
  if (n > enumeration_cap())
    throw cap_exceeded(std::string(what) + " of size " + std::to_string(n) +
                       " exceeds enumeration cap " + std::to_string(enumeration_cap()));
}

// RAII cap override for tests.
struct CapGuard {
  int saved;
  explicit CapGuard(int cap) : saved(enumeration_cap()) { set_enumeration_cap(cap); }
  ~CapGuard() { set_enumeration_cap(saved); }
};

// Deterministic parallel reduction over [0, n): each worker folds its index
// range into a private accumulator with `fold(acc, i)`, results are merged in
// ascending range order with `merge(total, acc)`.  Exact integer accumulators
// make the result independent of the split.
template <class Acc, class Fold, class Merge>
Acc parallel_reduce(std::size_t n, Acc init, Fold&& fold, Merge&& merge) {
  unsigned hw = std::thread::hardware_concurrency();
  std::size_t nthreads = hw == 0 ? 1 : hw;
  if (nthreads > n) nthreads = n == 0 ? 1 : n;
  if (nthreads <= 1) {
    Acc acc = init;
    for (std::size_t i = 0; i < n; ++i) fold(acc, i);
    return acc;
  }
  std::vector<Acc> parts(nthreads, init);
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  std::size_t chunk = (n + nthreads - 1) / nthreads;
  for (std::size_t t = 0; t < nthreads; ++t) {
    pool.emplace_back([&, t]() {
      std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
      for (std::size_t i = lo; i < hi; ++i) fold(parts[t], i);
    });
  }
  for (auto& th : pool) th.join();
  Acc total = init;
  for (auto& p : parts) merge(total, p);
  return total;
}

}  // namespace circloids
