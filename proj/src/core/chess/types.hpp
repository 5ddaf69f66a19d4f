#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace gambitlab {

// Squares are 0..63 with a1 = 0, b1 = 1, ..., h8 = 63.
using Square = int;

constexpr int file_of(Square s) { return s & 7; }
constexpr int rank_of(Square s) { return s >> 3; }
constexpr Square make_square(int file, int rank) { return rank * 8 + file; }

inline std::string square_name(Square s) {
    return {static_cast<char>('a' + file_of(s)), static_cast<char>('1' + rank_of(s))};
}

enum class Color : std::uint8_t { White, Black };

constexpr Color opposite(Color c) { return c == Color::White ? Color::Black : Color::White; }

// Castling-rights bits.
enum : std::uint8_t {
    kCastleWK = 1,
    kCastleWQ = 2,
    kCastleBK = 4,
    kCastleBQ = 8,
};

struct Move {
    std::int8_t from = 0;
    std::int8_t to = 0;
    char promo = 0;  // 0 or one of 'N','B','R','Q'

    bool operator==(const Move&) const = default;
};

// Mailbox position. Pieces are FEN letters ('P'..'k'), empty squares '.'.
struct Position {
    std::array<char, 64> board{};
    Color stm = Color::White;
    std::uint8_t castling = 0;
    int ep_square = -1;  // always recorded after a double pawn push
    int halfmove = 0;
    int fullmove = 1;

    static Position start();

    char at(Square s) const { return board[s]; }
    bool empty_at(Square s) const { return board[s] == '.'; }
    bool white_piece(Square s) const { return board[s] != '.' && board[s] >= 'A' && board[s] <= 'Z'; }
    bool black_piece(Square s) const { return board[s] >= 'a' && board[s] <= 'z'; }
    bool own_piece(Square s) const { return stm == Color::White ? white_piece(s) : black_piece(s); }

    Square king_square(Color c) const;
};

inline bool is_white_char(char p) { return p >= 'A' && p <= 'Z'; }
inline char piece_type_upper(char p) { return static_cast<char>(p >= 'a' ? p - 32 : p); }

inline std::string uci_of(const Move& m) {
    std::string s = square_name(m.from) + square_name(m.to);
    if (m.promo) s += static_cast<char>(m.promo + 32);  // lowercase suffix
    return s;
}

}  // namespace gambitlab
