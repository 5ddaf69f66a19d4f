#pragma once

#include <string>

#include "core/chess/types.hpp"
#include "core/common/error.hpp"

namespace gambitlab {

class ParseError : public Error {
  public:
    explicit ParseError(const std::string& msg) : Error(kInternalError, msg) {}
};

Position parse_fen(const std::string& fen);

// Serialization always records the en-passant target after a double push,
// whether or not a capture is possible (the position hash, not the FEN text,
// is the transposition identity).
std::string to_fen(const Position& pos);

// First four FEN fields only (board, side, castling, ep) — the identity used
// by the scripted engine.
std::string to_fen4(const Position& pos);

}  // namespace gambitlab
