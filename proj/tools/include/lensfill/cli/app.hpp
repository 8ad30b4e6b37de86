#pragma once

#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace lensfill::cli {

/// Worker count from LENS_THREADS (default: hardware concurrency, min 1).
std::size_t thread_budget();

/// Evaluates f(0..n-1) on up to thread_budget() threads and returns the
/// results in index order. The exception of the lowest failing index, if
/// any, is rethrown after all workers finish.
std::vector<std::string> ordered_parallel_map(std::size_t n, const std::function<std::string(std::size_t)>& f);

/// Entry point of the `lensfill` executable. Exit status: 0 success,
/// 1 bad arguments, 2 a classification-level assertion failed.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lensfill::cli
