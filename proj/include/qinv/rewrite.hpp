#pragma once

#include "qinv/element.hpp"

namespace qinv {

enum class RedexStrategy { Leftmost, Rightmost };

/// Normal form by adjacent-transposition rewriting with the defining
/// relations only. Independent of the block-carry multiplication and used to
/// cross-check it.
Element rewrite_normalize(const Word& w, RedexStrategy strategy);

/// Number of out-of-order letter pairs; decreases strictly
/// under every rewrite step.
int inversion_count(const Word& w);

}  // namespace qinv
