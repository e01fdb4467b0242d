#pragma once

#include <cstdint>

#include "relpos/word_stream.hpp"

namespace relpos {

// Deletes the first occurrence of x. Implemented as an index remap over the
// source stream: letters before the deleted position are unchanged, letters
// after it shift left by one.
StreamPtr delete_first(const StreamPtr& w, Letter x);

// D = delete the first a and the first b (the two deletions commute).
StreamPtr delete_op(const StreamPtr& w);
StreamPtr delete_pow(const StreamPtr& w, std::uint64_t k);

// Pre_u(w) = u w.
StreamPtr prefix_op(const FiniteWord& u, const StreamPtr& w);

}  // namespace relpos
