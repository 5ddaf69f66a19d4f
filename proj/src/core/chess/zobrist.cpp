#include "core/chess/zobrist.hpp"

#include <array>
#include <cstring>

namespace gambitlab {

namespace {

// 12*64 piece-square keys (piece order PNBRQKpnbrqk), 4 castling keys (KQkq),
// 8 en-passant file keys, 1 side key — drawn from a splitmix64 stream with a
// fixed seed so independent implementations can reproduce the table.
constexpr std::uint64_t kSeed = 0x7A6C2E15D3B9F84CULL;
constexpr int kTableSize = 12 * 64 + 4 + 8 + 1;

struct Table {
    std::uint64_t v[kTableSize];
};

Table build_table() {
    Table t{};
    std::uint64_t state = kSeed;
    for (int i = 0; i < kTableSize; ++i) {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        t.v[i] = z ^ (z >> 31);
    }
    return t;
}

const Table& table() {
    static const Table t = build_table();
    return t;
}

int piece_index(char p) {
    static const char* order = "PNBRQKpnbrqk";
    const char* found = std::strchr(order, p);
    return found ? static_cast<int>(found - order) : -1;
}

}  // namespace

PositionKey position_key(const Position& pos) {
    const Table& t = table();
    std::uint64_t h = 0;
    for (Square s = 0; s < 64; ++s) {
        int idx = piece_index(pos.board[s]);
        if (idx >= 0) h ^= t.v[idx * 64 + s];
    }
    for (int i = 0; i < 4; ++i) {
        if (pos.castling & (1u << i)) h ^= t.v[768 + i];
    }
    if (pos.ep_square >= 0) {
        const int f0 = file_of(pos.ep_square), r0 = rank_of(pos.ep_square);
        const bool white = pos.stm == Color::White;
        const int pr = white ? r0 - 1 : r0 + 1;
        const char pawn = white ? 'P' : 'p';
        for (int df : {-1, 1}) {
            const int f = f0 + df;
            if (f >= 0 && f < 8 && pr >= 0 && pr < 8 &&
                pos.board[make_square(f, pr)] == pawn) {
                h ^= t.v[772 + f0];
                break;
            }
        }
    }
    if (pos.stm == Color::White) h ^= t.v[780];
    return h;
}

}  // namespace gambitlab
