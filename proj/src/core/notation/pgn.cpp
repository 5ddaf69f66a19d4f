#include "core/notation/pgn.hpp"

#include "core/common/util.hpp"
#include "core/notation/fen.hpp"
#include "core/notation/san.hpp"

namespace gambitlab {

namespace {

std::pair<std::string, std::string> parse_tag_line(const std::string& line) {
    // [Key "Value"] with \" and \\ escapes in the value
    size_t i = 1;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    std::string key = line.substr(1, i - 1);
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (key.empty() || i >= line.size() || line[i] != '"')
        throw ParseError("malformed tag pair: " + line);
    std::string value;
    bool closed = false;
    for (++i; i < line.size(); ++i) {
        char c = line[i];
        if (c == '\\' && i + 1 < line.size()) {
            value += line[++i];
        } else if (c == '"') {
            closed = true;
            break;
        } else {
            value += c;
        }
    }
    if (!closed) throw ParseError("unterminated tag value: " + line);
    return {key, value};
}

// Removes {comments}, (variations) and leaves everything else untouched.
std::string strip_annotations(const std::string& movetext) {
    std::string out;
    int paren_depth = 0;
    bool in_brace = false;
    for (char c : movetext) {
        if (in_brace) {
            if (c == '}') in_brace = false;
            continue;
        }
        if (c == '{') {
            in_brace = true;
            continue;
        }
        if (c == '(') {
            ++paren_depth;
            continue;
        }
        if (c == ')') {
            if (--paren_depth < 0) throw ParseError("unbalanced ')' in movetext");
            continue;
        }
        if (paren_depth == 0) out += c;
    }
    if (in_brace) throw ParseError("unterminated '{' comment in movetext");
    if (paren_depth != 0) throw ParseError("unterminated '(' variation in movetext");
    return out;
}

struct RawGame {
    std::vector<std::string> tag_lines;
    std::string movetext;
    std::size_t byte_offset = 0;
    int line_no = 0;
    bool any() const { return !tag_lines.empty() || !trim(movetext).empty(); }
};

PgnGame finalize(const RawGame& raw) {
    PgnGame g;
    g.byte_offset = raw.byte_offset;
    g.line_no = raw.line_no;
    for (const std::string& line : raw.tag_lines) g.tags.push_back(parse_tag_line(line));
    if (const std::string* fen = g.tag("FEN")) g.start_fen = *fen;

    std::string clean = strip_annotations(raw.movetext);
    for (const std::string& tok : split_ws(clean)) {
        if (tok == "1-0" || tok == "0-1" || tok == "1/2-1/2" || tok == "*") g.result = tok;
    }
    g.sans = movetext_tokens(clean);
    if (g.result.empty()) {
        if (const std::string* res = g.tag("Result")) g.result = *res;
    }
    return g;
}

}  // namespace

std::vector<PgnGame> read_pgn(const std::string& text, PgnReadStats* stats) {
    PgnReadStats local;
    PgnReadStats& st = stats ? *stats : local;
    std::vector<PgnGame> out;

    RawGame cur;
    bool in_moves = false;
    auto flush = [&] {
        if (!cur.any()) {
            cur = RawGame{};
            in_moves = false;
            return;
        }
        try {
            out.push_back(finalize(cur));
            ++st.games_read;
        } catch (const ParseError& e) {
            ++st.games_skipped;
            st.errors.push_back("game at line " + std::to_string(cur.line_no) + ": " + e.what());
        }
        cur = RawGame{};
        in_moves = false;
    };

    std::size_t offset = 0;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string line = text.substr(pos, (nl == std::string::npos ? text.size() : nl) - pos);
        ++line_no;
        std::string s = trim(line);
        if (!s.empty() && s[0] == '[') {
            if (in_moves) flush();
            if (cur.tag_lines.empty() && trim(cur.movetext).empty()) {
                cur.byte_offset = offset;
                cur.line_no = line_no;
            }
            cur.tag_lines.push_back(s);
        } else if (!s.empty()) {
            if (cur.tag_lines.empty() && trim(cur.movetext).empty()) {
                cur.byte_offset = offset;
                cur.line_no = line_no;
            }
            in_moves = true;
            cur.movetext += line;
            cur.movetext += '\n';
        }
        if (nl == std::string::npos) break;
        offset = nl + 1;
        pos = nl + 1;
    }
    flush();
    return out;
}

}  // namespace gambitlab
