#include "core/chess/board.hpp"

#include <cstring>

namespace gambitlab {

Position Position::start() {
    Position p;
    static const char* kStart =
        "RNBQKBNR"
        "PPPPPPPP"
        "........"
        "........"
        "........"
        "........"
        "pppppppp"
        "rnbqkbnr";
    std::memcpy(p.board.data(), kStart, 64);
    p.stm = Color::White;
    p.castling = kCastleWK | kCastleWQ | kCastleBK | kCastleBQ;
    return p;
}

Square Position::king_square(Color c) const {
    char k = c == Color::White ? 'K' : 'k';
    for (Square s = 0; s < 64; ++s)
        if (board[s] == k) return s;
    return -1;
}

namespace {

constexpr int kKnightD[8][2] = {{1, 2},  {2, 1},  {2, -1}, {1, -2},
                                {-1, -2}, {-2, -1}, {-2, 1}, {-1, 2}};
constexpr int kKingD[8][2] = {{1, 0},  {1, 1},  {0, 1},  {-1, 1},
                              {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
constexpr int kBishopD[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
constexpr int kRookD[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};

bool on_board(int f, int r) { return f >= 0 && f < 8 && r >= 0 && r < 8; }

}  // namespace

bool attacked(const Position& pos, Square sq, Color by) {
    const bool w = by == Color::White;
    const int f = file_of(sq), r = rank_of(sq);

    // pawns: a white pawn on (f±1, r−1) attacks sq
    const int pr = w ? r - 1 : r + 1;
    const char pawn = w ? 'P' : 'p';
    for (int df : {-1, 1}) {
        if (on_board(f + df, pr) && pos.board[make_square(f + df, pr)] == pawn) return true;
    }
    const char knight = w ? 'N' : 'n';
    for (auto& d : kKnightD) {
        if (on_board(f + d[0], r + d[1]) && pos.board[make_square(f + d[0], r + d[1])] == knight)
            return true;
    }
    const char king = w ? 'K' : 'k';
    for (auto& d : kKingD) {
        if (on_board(f + d[0], r + d[1]) && pos.board[make_square(f + d[0], r + d[1])] == king)
            return true;
    }
    const char bishop = w ? 'B' : 'b', queen = w ? 'Q' : 'q';
    for (auto& d : kBishopD) {
        int cf = f + d[0], cr = r + d[1];
        while (on_board(cf, cr)) {
            char p = pos.board[make_square(cf, cr)];
            if (p != '.') {
                if (p == bishop || p == queen) return true;
                break;
            }
            cf += d[0];
            cr += d[1];
        }
    }
    const char rook = w ? 'R' : 'r';
    for (auto& d : kRookD) {
        int cf = f + d[0], cr = r + d[1];
        while (on_board(cf, cr)) {
            char p = pos.board[make_square(cf, cr)];
            if (p != '.') {
                if (p == rook || p == queen) return true;
                break;
            }
            cf += d[0];
            cr += d[1];
        }
    }
    return false;
}

bool in_check(const Position& pos) {
    Square k = pos.king_square(pos.stm);
    return k >= 0 && attacked(pos, k, opposite(pos.stm));
}

Position apply_move(const Position& pos, const Move& m) {
    Position n = pos;
    const char piece = pos.board[m.from];
    const bool white = is_white_char(piece);
    const char type = piece_type_upper(piece);
    const bool capture = pos.board[m.to] != '.';

    n.board[m.from] = '.';
    n.board[m.to] = piece;
    n.ep_square = -1;

    bool pawn_move = type == 'P';
    bool ep_capture = false;
    if (pawn_move) {
        if (m.to == pos.ep_square && !capture && file_of(m.from) != file_of(m.to)) {
            // en passant: remove the pawn that just double-pushed
            ep_capture = true;
            n.board[make_square(file_of(m.to), rank_of(m.from))] = '.';
        }
        if (rank_of(m.to) - rank_of(m.from) == (white ? 2 : -2)) {
            n.ep_square = make_square(file_of(m.from), rank_of(m.from) + (white ? 1 : -1));
        }
        if (m.promo) {
            n.board[m.to] = white ? m.promo : static_cast<char>(m.promo + 32);
        }
    } else if (type == 'K') {
        if (m.to - m.from == 2) {  // king side
            n.board[m.to - 1] = n.board[m.to + 1];
            n.board[m.to + 1] = '.';
        } else if (m.from - m.to == 2) {  // queen side
            n.board[m.to + 1] = n.board[m.to - 2];
            n.board[m.to - 2] = '.';
        }
        n.castling &= static_cast<std::uint8_t>(~(white ? (kCastleWK | kCastleWQ)
                                                        : (kCastleBK | kCastleBQ)));
    }

    // rook moves or rook captures invalidate the matching right
    auto clear_rook_right = [&n](Square s) {
        switch (s) {
            case 7: n.castling &= static_cast<std::uint8_t>(~kCastleWK); break;
            case 0: n.castling &= static_cast<std::uint8_t>(~kCastleWQ); break;
            case 63: n.castling &= static_cast<std::uint8_t>(~kCastleBK); break;
            case 56: n.castling &= static_cast<std::uint8_t>(~kCastleBQ); break;
            default: break;
        }
    };
    if (type == 'R') clear_rook_right(m.from);
    clear_rook_right(m.to);

    n.halfmove = (pawn_move || capture || ep_capture) ? 0 : pos.halfmove + 1;
    if (pos.stm == Color::Black) n.fullmove = pos.fullmove + 1;
    n.stm = opposite(pos.stm);
    return n;
}

}  // namespace gambitlab
