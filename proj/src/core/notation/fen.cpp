#include "core/notation/fen.hpp"

#include <cstring>

#include "core/common/util.hpp"

namespace gambitlab {

Position parse_fen(const std::string& fen) {
    std::vector<std::string> fields = split_ws(fen);
    if (fields.size() < 4) throw ParseError("fen needs at least 4 fields: " + fen);

    Position pos;
    pos.board.fill('.');

    std::vector<std::string> ranks = split_char(fields[0], '/');
    if (ranks.size() != 8) throw ParseError("fen board needs 8 ranks: " + fen);
    int wk = 0, bk = 0;
    for (int r = 0; r < 8; ++r) {
        int f = 0;
        for (char c : ranks[7 - r]) {  // FEN lists rank 8 first
            if (c >= '1' && c <= '8') {
                f += c - '0';
            } else if (std::strchr("PNBRQKpnbrqk", c)) {
                if (f >= 8) throw ParseError("fen rank overflow: " + fen);
                pos.board[make_square(f, r)] = c;
                wk += c == 'K';
                bk += c == 'k';
                ++f;
            } else {
                throw ParseError(std::string("bad fen piece char '") + c + "': " + fen);
            }
        }
        if (f != 8) throw ParseError("fen rank does not sum to 8: " + fen);
    }
    if (wk != 1 || bk != 1) throw ParseError("fen needs exactly one king per side: " + fen);

    if (fields[1] == "w")
        pos.stm = Color::White;
    else if (fields[1] == "b")
        pos.stm = Color::Black;
    else
        throw ParseError("bad fen side field: " + fen);

    pos.castling = 0;
    if (fields[2] != "-") {
        for (char c : fields[2]) {
            switch (c) {
                case 'K': pos.castling |= kCastleWK; break;
                case 'Q': pos.castling |= kCastleWQ; break;
                case 'k': pos.castling |= kCastleBK; break;
                case 'q': pos.castling |= kCastleBQ; break;
                default: throw ParseError("bad fen castling field: " + fen);
            }
        }
    }

    pos.ep_square = -1;
    if (fields[3] != "-") {
        if (fields[3].size() != 2 || fields[3][0] < 'a' || fields[3][0] > 'h' ||
            fields[3][1] < '1' || fields[3][1] > '8')
            throw ParseError("bad fen ep field: " + fen);
        pos.ep_square = make_square(fields[3][0] - 'a', fields[3][1] - '1');
    }

    pos.halfmove = fields.size() > 4 ? std::stoi(fields[4]) : 0;
    pos.fullmove = fields.size() > 5 ? std::stoi(fields[5]) : 1;
    return pos;
}

static std::string board_field(const Position& pos) {
    std::string out;
    for (int r = 7; r >= 0; --r) {
        int run = 0;
        for (int f = 0; f < 8; ++f) {
            char p = pos.board[make_square(f, r)];
            if (p == '.') {
                ++run;
            } else {
                if (run) out += static_cast<char>('0' + run);
                run = 0;
                out += p;
            }
        }
        if (run) out += static_cast<char>('0' + run);
        if (r) out += '/';
    }
    return out;
}

static std::string state_fields(const Position& pos) {
    std::string out = pos.stm == Color::White ? " w " : " b ";
    if (!pos.castling) {
        out += '-';
    } else {
        if (pos.castling & kCastleWK) out += 'K';
        if (pos.castling & kCastleWQ) out += 'Q';
        if (pos.castling & kCastleBK) out += 'k';
        if (pos.castling & kCastleBQ) out += 'q';
    }
    out += ' ';
    out += pos.ep_square >= 0 ? square_name(pos.ep_square) : "-";
    return out;
}

std::string to_fen(const Position& pos) {
    return board_field(pos) + state_fields(pos) + " " + std::to_string(pos.halfmove) + " " +
           std::to_string(pos.fullmove);
}

std::string to_fen4(const Position& pos) { return board_field(pos) + state_fields(pos); }

}  // namespace gambitlab
