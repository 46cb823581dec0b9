#pragma once

// Window-scan kernels. Every kernel has a serial reference and an OpenMP
// version; both return the same answer (the lowest index satisfying the
// predicate), so parallel runs stay deterministic.

#include <atomic>
#include <cstddef>
#include <limits>
#include <optional>

namespace mexcl {

enum class Exec { Serial, Parallel };

/// Execution policy used by library operations that take no explicit one.
Exec default_exec();
void set_default_exec(Exec e);

namespace kernels {

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

template <class Pred>
std::size_t find_first_serial(std::size_t n, Pred&& pred) {
  for (std::size_t i = 0; i < n; ++i)
    if (pred(i)) return i;
  return npos;
}

template <class Pred>
std::size_t find_first_parallel(std::size_t n, Pred&& pred) {
  std::atomic<std::size_t> best{npos};
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 64)
  for (long long k = 0; k < count; ++k) {
    auto i = static_cast<std::size_t>(k);
    if (i >= best.load(std::memory_order_relaxed)) continue;
    if (pred(i)) {
      std::size_t cur = best.load(std::memory_order_relaxed);
      while (i < cur && !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
      }
    }
  }
  return best.load();
}

template <class Pred>
std::size_t find_first(std::size_t n, Pred&& pred, Exec exec) {
  return exec == Exec::Parallel ? find_first_parallel(n, pred) : find_first_serial(n, pred);
}

/// Evaluates f(i) for every i, storing into out[i]. Used for membership
/// tables that later scans index into.
template <class Out, class F>
void tabulate(std::size_t n, Out& out, F&& f, Exec exec) {
  const auto count = static_cast<long long>(n);
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (long long k = 0; k < count; ++k) out[static_cast<std::size_t>(k)] = f(static_cast<std::size_t>(k));
  } else {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
  }
}

}  // namespace kernels
}  // namespace mexcl
