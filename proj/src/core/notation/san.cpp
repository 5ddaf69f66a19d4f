#include "core/notation/san.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>

#include "core/chess/board.hpp"
#include "core/common/util.hpp"
#include "core/notation/fen.hpp"

namespace gambitlab {

std::string to_san(const Position& pos, const Move& m) {
    const char piece = pos.board[m.from];
    const char type = piece_type_upper(piece);
    std::string out;

    if (type == 'K' && m.to - m.from == 2) {
        out = "O-O";
    } else if (type == 'K' && m.from - m.to == 2) {
        out = "O-O-O";
    } else if (type == 'P') {
        const bool capture = !pos.empty_at(m.to) || m.to == pos.ep_square;
        if (capture) {
            out += static_cast<char>('a' + file_of(m.from));
            out += 'x';
        }
        out += square_name(m.to);
        if (m.promo) {
            out += '=';
            out += m.promo;
        }
    } else {
        out += type;
        // disambiguate against other same-type pieces that can legally reach m.to
        std::vector<Move> rivals;
        for (const Move& cand : legal_moves(pos)) {
            if (cand.to == m.to && cand.from != m.from &&
                piece_type_upper(pos.board[cand.from]) == type)
                rivals.push_back(cand);
        }
        if (!rivals.empty()) {
            const bool file_unique = std::none_of(rivals.begin(), rivals.end(), [&](const Move& r) {
                return file_of(r.from) == file_of(m.from);
            });
            const bool rank_unique = std::none_of(rivals.begin(), rivals.end(), [&](const Move& r) {
                return rank_of(r.from) == rank_of(m.from);
            });
            if (file_unique)
                out += static_cast<char>('a' + file_of(m.from));
            else if (rank_unique)
                out += static_cast<char>('1' + rank_of(m.from));
            else
                out += square_name(m.from);
        }
        if (!pos.empty_at(m.to)) out += 'x';
        out += square_name(m.to);
    }

    Position next = apply_move(pos, m);
    if (in_check(next)) out += legal_moves(next).empty() ? '#' : '+';
    return out;
}

Move parse_san(const Position& pos, const std::string& token) {
    std::string t = token;
    while (!t.empty() && std::strchr("+#!?", t.back())) t.pop_back();
    if (t.size() > 4 && t.compare(t.size() - 4, 4, "e.p.") == 0) {
        t = t.substr(0, t.size() - 4);
        while (!t.empty() && t.back() == ' ') t.pop_back();
    }
    if (t.empty()) throw ParseError("empty san token: " + token);

    std::vector<Move> cands;
    const std::vector<Move> legal = legal_moves(pos);

    if (t == "O-O" || t == "0-0" || t == "O-O-O" || t == "0-0-0") {
        const int step = (t == "O-O" || t == "0-0") ? 2 : -2;
        for (const Move& m : legal) {
            if (piece_type_upper(pos.board[m.from]) == 'K' && m.to - m.from == step)
                cands.push_back(m);
        }
    } else {
        char piece = 'P';
        size_t i = 0;
        if (std::strchr("KQRBN", t[0])) piece = t[i++];

        char from_file = 0, from_rank = 0, promo = 0;
        // optional disambiguation, optional 'x', then the destination square;
        // scan from the back: [=]promo, dest, the rest is disambiguation
        std::string rest = t.substr(i);
        if (!rest.empty() && std::strchr("QRBN", rest.back()) && rest.size() >= 2) {
            promo = rest.back();
            rest.pop_back();
            if (!rest.empty() && rest.back() == '=') rest.pop_back();
        }
        if (rest.size() < 2) throw ParseError("bad san token: " + token);
        std::string dest_s = rest.substr(rest.size() - 2);
        if (dest_s[0] < 'a' || dest_s[0] > 'h' || dest_s[1] < '1' || dest_s[1] > '8')
            throw ParseError("bad san destination: " + token);
        Square dest = make_square(dest_s[0] - 'a', dest_s[1] - '1');
        std::string dis = rest.substr(0, rest.size() - 2);
        if (!dis.empty() && dis.back() == 'x') dis.pop_back();
        for (char c : dis) {
            if (c >= 'a' && c <= 'h')
                from_file = c;
            else if (c >= '1' && c <= '8')
                from_rank = c;
            else
                throw ParseError("bad san disambiguation: " + token);
        }

        for (const Move& m : legal) {
            if (m.to != dest) continue;
            if (piece_type_upper(pos.board[m.from]) != piece) continue;
            if ((m.promo ? m.promo : 0) != promo) continue;
            if (from_file && 'a' + file_of(m.from) != from_file) continue;
            if (from_rank && '1' + rank_of(m.from) != from_rank) continue;
            cands.push_back(m);
        }
    }

    if (cands.empty())
        throw ParseError("no legal move matches '" + token + "' in " + to_fen(pos));
    if (cands.size() > 1)
        throw ParseError("ambiguous san '" + token + "' in " + to_fen(pos));
    return cands[0];
}

std::vector<std::string> movetext_tokens(const std::string& movetext) {
    std::vector<std::string> out;
    std::string tok;
    auto flush = [&] {
        if (tok.empty()) return;
        std::string t = tok;
        tok.clear();
        if (t == "1-0" || t == "0-1" || t == "1/2-1/2" || t == "*" || t[0] == '$') return;
        if (starts_with(t, "0-0")) {  // zero-style castling is a move, not a number
            out.push_back(t);
            return;
        }
        // strip leading move numbers, including forms glued to the move ("5.d3", "5...Bc5")
        while (!t.empty() && std::isdigit(static_cast<unsigned char>(t[0]))) {
            size_t dot = t.find('.');
            if (dot == std::string::npos) return;  // bare number
            t = t.substr(dot + 1);
            while (!t.empty() && t[0] == '.') t = t.substr(1);
        }
        if (!t.empty()) out.push_back(t);
    };
    for (char c : movetext) {
        if (std::isspace(static_cast<unsigned char>(c)))
            flush();
        else
            tok += c;
    }
    flush();
    return out;
}

}  // namespace gambitlab
