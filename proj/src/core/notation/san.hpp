#pragma once

#include <string>
#include <vector>

#include "core/chess/types.hpp"

namespace gambitlab {

// Standard algebraic notation for a legal move, with minimal disambiguation
// (file first, then rank, then both) and '+'/'#' suffixes.
std::string to_san(const Position& pos, const Move& m);

// Parses one SAN token ('+', '#', '!', '?' suffixes tolerated). Throws
// ParseError when the token matches no legal move or more than one.
Move parse_san(const Position& pos, const std::string& token);

// Splits a movetext string into SAN tokens, dropping move numbers
// ("5." / "5..."), game results and numeric annotation glyphs.
std::vector<std::string> movetext_tokens(const std::string& movetext);

}  // namespace gambitlab
