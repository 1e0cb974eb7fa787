#pragma once

#include <cstddef>
#include <exception>

namespace eqk {

// Selects between the OpenMP kernel and its serial reference.
enum class Exec { Serial, Parallel };

// Sets the OpenMP thread count; n <= 0 keeps the runtime default.
void set_thread_count(int n);
int thread_count();

// Runs body(i) for i in [0, n). Under Exec::Parallel the iterations are
// spread over OpenMP threads; the exception of the lowest failing index is
// rethrown, so failures are reported the same way in both modes.
template <class Body>
void for_each_index(std::size_t n, Exec exec, Body&& body) {
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr error;
  std::size_t error_index = n;
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(eqk_for_each_index)
      if (i < error_index) {
        error_index = i;
        error = std::current_exception();
      }
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace eqk
