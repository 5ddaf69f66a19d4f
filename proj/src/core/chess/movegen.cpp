#include "core/chess/board.hpp"

namespace gambitlab {

namespace {

constexpr int kKnightD[8][2] = {{1, 2},  {2, 1},  {2, -1}, {1, -2},
                                {-1, -2}, {-2, -1}, {-2, 1}, {-1, 2}};
constexpr int kKingD[8][2] = {{1, 0},  {1, 1},  {0, 1},  {-1, 1},
                              {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
constexpr int kBishopD[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
constexpr int kRookD[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};

bool on_board(int f, int r) { return f >= 0 && f < 8 && r >= 0 && r < 8; }

void push_pawn_move(std::vector<Move>& out, Square from, Square to, bool white) {
    const int last = white ? 7 : 0;
    if (rank_of(to) == last) {
        for (char promo : {'Q', 'R', 'B', 'N'})
            out.push_back({static_cast<std::int8_t>(from), static_cast<std::int8_t>(to), promo});
    } else {
        out.push_back({static_cast<std::int8_t>(from), static_cast<std::int8_t>(to), 0});
    }
}

void slider_moves(const Position& pos, std::vector<Move>& out, Square from,
                  const int (*dirs)[2], int ndirs) {
    const bool white = pos.white_piece(from);
    for (int i = 0; i < ndirs; ++i) {
        int f = file_of(from) + dirs[i][0], r = rank_of(from) + dirs[i][1];
        while (on_board(f, r)) {
            Square to = make_square(f, r);
            if (pos.empty_at(to)) {
                out.push_back({static_cast<std::int8_t>(from), static_cast<std::int8_t>(to), 0});
            } else {
                if (pos.white_piece(to) != white)
                    out.push_back({static_cast<std::int8_t>(from), static_cast<std::int8_t>(to), 0});
                break;
            }
            f += dirs[i][0];
            r += dirs[i][1];
        }
    }
}

void castle_moves(const Position& pos, std::vector<Move>& out) {
    const bool white = pos.stm == Color::White;
    const Square king = white ? 4 : 60;
    if (pos.board[king] != (white ? 'K' : 'k')) return;
    const Color foe = opposite(pos.stm);
    const std::uint8_t kside = white ? kCastleWK : kCastleBK;
    const std::uint8_t qside = white ? kCastleWQ : kCastleBQ;
    const char rook = white ? 'R' : 'r';

    if ((pos.castling & kside) && pos.board[king + 3] == rook && pos.empty_at(king + 1) &&
        pos.empty_at(king + 2) && !attacked(pos, king, foe) && !attacked(pos, king + 1, foe) &&
        !attacked(pos, king + 2, foe)) {
        out.push_back({static_cast<std::int8_t>(king), static_cast<std::int8_t>(king + 2), 0});
    }
    if ((pos.castling & qside) && pos.board[king - 4] == rook && pos.empty_at(king - 1) &&
        pos.empty_at(king - 2) && pos.empty_at(king - 3) && !attacked(pos, king, foe) &&
        !attacked(pos, king - 1, foe) && !attacked(pos, king - 2, foe)) {
        out.push_back({static_cast<std::int8_t>(king), static_cast<std::int8_t>(king - 2), 0});
    }
}

}  // namespace

std::vector<Move> pseudo_moves(const Position& pos) {
    std::vector<Move> out;
    out.reserve(48);
    const bool white = pos.stm == Color::White;

    for (Square from = 0; from < 64; ++from) {
        if (!pos.own_piece(from)) continue;
        const char type = piece_type_upper(pos.board[from]);
        const int f = file_of(from), r = rank_of(from);
        switch (type) {
            case 'P': {
                const int fwd = white ? 1 : -1;
                const int start = white ? 1 : 6;
                Square one = make_square(f, r + fwd);
                if (pos.empty_at(one)) {
                    push_pawn_move(out, from, one, white);
                    if (r == start && pos.empty_at(make_square(f, r + 2 * fwd)))
                        out.push_back({static_cast<std::int8_t>(from),
                                       static_cast<std::int8_t>(make_square(f, r + 2 * fwd)), 0});
                }
                for (int df : {-1, 1}) {
                    if (!on_board(f + df, r + fwd)) continue;
                    Square to = make_square(f + df, r + fwd);
                    bool enemy = !pos.empty_at(to) && pos.white_piece(to) != white;
                    if (enemy || to == pos.ep_square) push_pawn_move(out, from, to, white);
                }
                break;
            }
            case 'N':
                for (auto& d : kKnightD) {
                    if (!on_board(f + d[0], r + d[1])) continue;
                    Square to = make_square(f + d[0], r + d[1]);
                    if (pos.empty_at(to) || pos.white_piece(to) != white)
                        out.push_back({static_cast<std::int8_t>(from), static_cast<std::int8_t>(to), 0});
                }
                break;
            case 'B': slider_moves(pos, out, from, kBishopD, 4); break;
            case 'R': slider_moves(pos, out, from, kRookD, 4); break;
            case 'Q':
                slider_moves(pos, out, from, kBishopD, 4);
                slider_moves(pos, out, from, kRookD, 4);
                break;
            case 'K':
                for (auto& d : kKingD) {
                    if (!on_board(f + d[0], r + d[1])) continue;
                    Square to = make_square(f + d[0], r + d[1]);
                    if (pos.empty_at(to) || pos.white_piece(to) != white)
                        out.push_back({static_cast<std::int8_t>(from), static_cast<std::int8_t>(to), 0});
                }
                break;
            default: break;
        }
    }
    castle_moves(pos, out);
    return out;
}

std::vector<Move> legal_moves(const Position& pos) {
    std::vector<Move> out;
    const Color us = pos.stm;
    for (const Move& m : pseudo_moves(pos)) {
        Position n = apply_move(pos, m);
        Square k = n.king_square(us);
        if (k >= 0 && !attacked(n, k, opposite(us))) out.push_back(m);
    }
    return out;
}

std::uint64_t perft(const Position& pos, int depth) {
    if (depth <= 0) return 1;
    std::uint64_t nodes = 0;
    for (const Move& m : legal_moves(pos)) {
        if (depth == 1)
            ++nodes;
        else
            nodes += perft(apply_move(pos, m), depth - 1);
    }
    return nodes;
}

}  // namespace gambitlab
