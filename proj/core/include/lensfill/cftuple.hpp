#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lensfill {

/// Finite sequence of non-negative integers: carrier for [b_1,...,b_k] and
/// (n_1,...,n_k). Ordered lexicographically by std::vector.
using CFTuple = std::vector<std::int64_t>;

/// "(1,2,1)"
std::string format_tuple(const CFTuple& t);

}  // namespace lensfill
