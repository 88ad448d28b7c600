#pragma once

// Grid evaluation kernel shared by every scanner. The serial branch is the
// reference implementation the OpenMP branch is tested against; both write
// results by index, so output order never depends on scheduling.

#include <cstddef>
#include <exception>
#include <type_traits>
#include <vector>

namespace gammaext {

enum class Execution { serial, parallel };

template <class F>
auto map_indices(Execution exec, std::size_t n, F&& f) -> std::vector<std::invoke_result_t<F&, std::size_t>> {
  using T = std::invoke_result_t<F&, std::size_t>;
  std::vector<T> out(n);
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  std::exception_ptr failure;
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(gammaext_map_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace gammaext
