#pragma once

#include <cstddef>
#include <exception>
#include <optional>
#include <vector>

namespace ckindex {

enum class Execution { serial, parallel };

/// Evaluates fn(0), ..., fn(n - 1) and returns the results in index order.
/// The parallel path uses an OpenMP loop; the serial path is the reference
/// it is tested against. The first exception (by index) is rethrown.
template <class Result, class Fn>
std::vector<Result> indexed_map(std::size_t n, Fn&& fn, Execution exec) {
  std::vector<std::optional<Result>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  auto run = [&](std::size_t i) {
    try {
      slots[i].emplace(fn(i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (exec == Execution::parallel) {
    const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 4)
    for (long i = 0; i < count; ++i) run(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < n; ++i) run(i);
  }
  std::vector<Result> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

}  // namespace ckindex
