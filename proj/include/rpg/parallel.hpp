#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rpg {

// Every data-parallel kernel in the library takes an ExecMode. The serial
// path is the reference implementation; the OpenMP path must produce
// bit-identical results, which the helpers below guarantee by using a fixed
// block decomposition that does not depend on the thread count.
enum class ExecMode { serial, parallel };

inline int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// f(i) for i in [0, n); f must only write to slots owned by index i.
template <class F>
void for_each_index(ExecMode mode, std::ptrdiff_t n, F&& f) {
  if (mode == ExecMode::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::ptrdiff_t i = 0; i < n; ++i) f(i);
  } else {
    for (std::ptrdiff_t i = 0; i < n; ++i) f(i);
  }
}

inline constexpr std::ptrdiff_t kReductionBlock = 1024;

// Deterministic sum of term(i) over [0, n): per-block partials are computed
// (possibly in parallel) and combined serially in block order, so the result
// is independent of the thread count.
template <class F>
double blocked_sum(ExecMode mode, std::ptrdiff_t n, F&& term) {
  if (n <= 0) return 0.0;
  const std::ptrdiff_t nblocks = (n + kReductionBlock - 1) / kReductionBlock;
  std::vector<double> partial(static_cast<std::size_t>(nblocks), 0.0);
  for_each_index(mode, nblocks, [&](std::ptrdiff_t b) {
    const std::ptrdiff_t begin = b * kReductionBlock;
    const std::ptrdiff_t end = std::min(n, begin + kReductionBlock);
    double acc = 0.0;
    for (std::ptrdiff_t i = begin; i < end; ++i) acc += term(i);
    partial[static_cast<std::size_t>(b)] = acc;
  });
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

// Same contract for vector-valued terms: accum(i, acc) adds term i into the
// length-dim accumulator acc. `out` receives the block-ordered total.
template <class F>
void blocked_vec_sum(ExecMode mode, std::ptrdiff_t n, int dim, F&& accum, double* out) {
  std::fill(out, out + dim, 0.0);
  if (n <= 0) return;
  const std::ptrdiff_t nblocks = (n + kReductionBlock - 1) / kReductionBlock;
  std::vector<double> partial(static_cast<std::size_t>(nblocks * dim), 0.0);
  for_each_index(mode, nblocks, [&](std::ptrdiff_t b) {
    const std::ptrdiff_t begin = b * kReductionBlock;
    const std::ptrdiff_t end = std::min(n, begin + kReductionBlock);
    double* acc = partial.data() + b * dim;
    for (std::ptrdiff_t i = begin; i < end; ++i) accum(i, acc);
  });
  for (std::ptrdiff_t b = 0; b < nblocks; ++b) {
    const double* acc = partial.data() + b * dim;
    for (int k = 0; k < dim; ++k) out[k] += acc[k];
  }
}

}  // namespace rpg
