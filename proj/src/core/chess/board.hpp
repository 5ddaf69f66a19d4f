#pragma once

#include <vector>

#include "core/chess/types.hpp"

namespace gambitlab {

// True when `sq` is attacked by any piece of color `by`.
bool attacked(const Position& pos, Square sq, Color by);

bool in_check(const Position& pos);

// Applies a move without legality checking beyond basic mechanics; castling is
// the king's two-square step, en passant is a pawn capture onto the recorded
// ep square. Returns the successor position.
Position apply_move(const Position& pos, const Move& m);

// All pseudo-legal moves for the side to move (castling included only when the
// transit squares are safe, so the king-safety filter is capture-legality only).
std::vector<Move> pseudo_moves(const Position& pos);

// Fully legal moves.
std::vector<Move> legal_moves(const Position& pos);

std::uint64_t perft(const Position& pos, int depth);

}  // namespace gambitlab
