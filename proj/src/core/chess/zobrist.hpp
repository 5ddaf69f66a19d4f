#pragma once

#include <cstdint>

#include "core/chess/types.hpp"

namespace gambitlab {

// Position hash used as the transposition key for corpus indexing and the
// evaluation cache. Clocks are excluded; the en-passant file is hashed only
// when a side-to-move pawn can actually capture onto it, so positions whose
// recorded ep square is dead merge with their no-ep twins.
using PositionKey = std::uint64_t;

PositionKey position_key(const Position& pos);

}  // namespace gambitlab
