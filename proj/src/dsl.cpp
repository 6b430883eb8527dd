#include "xreval/dsl.hpp"

#include <algorithm>
#include <charconv>

namespace xreval {

namespace {

constexpr std::int64_t kMaxDurationMs = 1'000'000'000'000;  // 10^12
constexpr std::int64_t kMaxCount = 1'000'000;

bool is_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_char(char c) { return is_letter(c) || is_digit(c) || c == '_'; }

struct SourceLine {
    std::string_view text;  // without trailing \r or \n
    int number = 0;         // 1-based
};

std::vector<SourceLine> split_lines(std::string_view src) {
    std::vector<SourceLine> lines;
    std::size_t pos = 0;
    int number = 1;
    while (pos <= src.size()) {
        std::size_t nl = src.find('\n', pos);
        std::string_view text;
        if (nl == std::string_view::npos) {
            if (pos == src.size()) break;  // no trailing newline needed
            text = src.substr(pos);
            pos = src.size() + 1;
        } else {
            text = src.substr(pos, nl - pos);
            pos = nl + 1;
        }
        if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
        lines.push_back({text, number++});
    }
    return lines;
}

struct Token {
    enum class Kind { ident, number, string, equals, colon, plus, star, end };
    Kind kind = Kind::end;
    std::string text;        // ident name / decoded string / raw number
    std::int64_t value = 0;  // for number
    int column = 0;          // 1-based
};

// Thrown inside one line; converted to a ParseError at the line boundary.
struct LineFault {
    int column;
    std::string message;
    std::string offending;
};

class LineScanner {
public:
    explicit LineScanner(std::string_view line) : line_(line) {}

    std::vector<Token> tokens() {
        std::vector<Token> out;
        for (;;) {
            skip_space();
            if (pos_ >= line_.size() || line_[pos_] == '#') break;
            out.push_back(scan_token());
        }
        out.push_back({Token::Kind::end, "", 0, static_cast<int>(line_.size()) + 1});
        return out;
    }

private:
    void skip_space() {
        while (pos_ < line_.size() && (line_[pos_] == ' ' || line_[pos_] == '\t')) ++pos_;
    }

    Token scan_token() {
        int col = static_cast<int>(pos_) + 1;
        char c = line_[pos_];
        if (is_letter(c)) {
            std::size_t start = pos_;
            while (pos_ < line_.size() && is_ident_char(line_[pos_])) ++pos_;
            return {Token::Kind::ident, std::string(line_.substr(start, pos_ - start)), 0, col};
        }
        if (is_digit(c)) {
            std::size_t start = pos_;
            while (pos_ < line_.size() && is_digit(line_[pos_])) ++pos_;
            std::string text(line_.substr(start, pos_ - start));
            std::int64_t value = 0;
            auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc() || value > kMaxDurationMs)
                throw LineFault{col, "number too large", text};
            return {Token::Kind::number, text, value, col};
        }
        if (c == '"') return scan_string(col);
        ++pos_;
        switch (c) {
            case '=': return {Token::Kind::equals, "=", 0, col};
            case ':': return {Token::Kind::colon, ":", 0, col};
            case '+': return {Token::Kind::plus, "+", 0, col};
            case '*': return {Token::Kind::star, "*", 0, col};
            default:
                throw LineFault{col, std::string("unexpected character '") + c + "'", std::string(1, c)};
        }
    }

    Token scan_string(int col) {
        ++pos_;  // opening quote
        std::string decoded;
        while (pos_ < line_.size()) {
            char c = line_[pos_];
            if (c == '"') {
                ++pos_;
                return {Token::Kind::string, decoded, 0, col};
            }
            if (c == '\\') {
                if (pos_ + 1 >= line_.size())
                    throw LineFault{static_cast<int>(pos_) + 1, "dangling escape at end of line", "\\"};
                char esc = line_[pos_ + 1];
                if (esc != '"' && esc != '\\')
                    throw LineFault{static_cast<int>(pos_) + 1,
                                    std::string("invalid escape '\\") + esc + "' (only \\\" and \\\\ are allowed)",
                                    std::string(line_.substr(pos_, 2))};
                decoded += esc;
                pos_ += 2;
                continue;
            }
            decoded += c;
            ++pos_;
        }
        throw LineFault{col, "unterminated string", std::string(line_.substr(col - 1))};
    }

    std::string_view line_;
    std::size_t pos_ = 0;
};

class TokenCursor {
public:
    explicit TokenCursor(std::vector<Token> tokens, std::string_view line)
        : tokens_(std::move(tokens)), line_(line) {}

    const Token& peek() const { return tokens_[index_]; }
    const Token& next() { return tokens_[std::min(index_++, tokens_.size() - 1)]; }
    bool at_end() const { return peek().kind == Token::Kind::end; }

    [[noreturn]] void fault(const Token& tok, std::string message) const {
        if (tok.kind == Token::Kind::end)
            throw LineFault{tok.column, std::move(message) + " (line ended)", std::string(line_)};
        throw LineFault{tok.column, std::move(message), token_text(tok)};
    }

    const Token& expect(Token::Kind kind, const char* what) {
        const Token& tok = next();
        if (tok.kind != kind) fault(tok, std::string("expected ") + what);
        return tok;
    }

    /// Contextual keyword: an identifier with exactly the given text.
    const Token& expect_keyword(const char* word) {
        const Token& tok = next();
        if (tok.kind != Token::Kind::ident || tok.text != word)
            fault(tok, std::string("expected '") + word + "'");
        return tok;
    }

    void expect_end() {
        const Token& tok = next();
        if (tok.kind != Token::Kind::end) fault(tok, "unexpected trailing content");
    }

    static std::string token_text(const Token& tok) {
        if (tok.kind == Token::Kind::string) return tok.text;  // decoded, still a substring unless escaped
        return tok.text;
    }

private:
    std::vector<Token> tokens_;
    std::string_view line_;
    std::size_t index_ = 0;
};

ParseError to_error(const SourceLine& line, const LineFault& fault) {
    // offending_text must be a literal substring of the source line; decoded
    // strings may not be, so fall back to the raw tail in that case.
    std::string offending = fault.offending;
    if (line.text.find(offending) == std::string_view::npos)
        offending = std::string(line.text.substr(std::min<std::size_t>(fault.column - 1, line.text.size())));
    return ParseError{line.number, fault.column, fault.message, offending};
}

bool blank_or_comment(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '#') return true;
        if (text[i] != ' ' && text[i] != '\t') return false;
    }
    return true;
}

Duration parse_duration(TokenCursor& cur, const std::string& symbol) {
    const Token& tok = cur.next();
    if (tok.kind == Token::Kind::number) {
        cur.expect_keyword("ms");
        return Duration::fixed(tok.value);
    }
    if (tok.kind == Token::Kind::ident && tok.text == "param") {
        if (cur.peek().kind == Token::Kind::colon) {
            cur.next();
            const Token& name = cur.expect(Token::Kind::ident, "parameter name");
            return Duration::parameter(name.text);
        }
        return Duration::parameter(symbol);
    }
    cur.fault(tok, "expected duration like '13ms' or 'param'");
}

void parse_operator_line(TokenCursor& cur, Catalog& catalog) {
    cur.expect_keyword("operator");
    const Token symbol = cur.expect(Token::Kind::ident, "operator symbol");
    const Token name = cur.expect(Token::Kind::string, "quoted display name");
    cur.expect_keyword("category");
    cur.expect(Token::Kind::equals, "'='");
    const Token cat = cur.expect(Token::Kind::ident, "category name");
    auto category = category_from_string(cat.text);
    if (!category)
        cur.fault(cat, "unknown category '" + cat.text + "' (perceptual|cognitive|motor|general)");
    cur.expect_keyword("duration");
    cur.expect(Token::Kind::equals, "'='");
    Duration duration = parse_duration(cur, symbol.text);
    cur.expect_keyword("source");
    cur.expect(Token::Kind::equals, "'='");
    const Token source = cur.expect(Token::Kind::string, "quoted source");
    cur.expect_end();

    if (catalog.contains(symbol.text))
        throw LineFault{symbol.column, "duplicate operator symbol '" + symbol.text + "'", symbol.text};
    catalog.add({symbol.text, name.text, *category, duration, source.text});
}

Mode parse_mode_line(TokenCursor& cur, const Catalog& catalog, std::vector<LineFault>& faults) {
    cur.expect_keyword("mode");
    const Token name = cur.expect(Token::Kind::string, "quoted mode name");
    if (name.text.empty())
        throw LineFault{name.column, "mode name must not be empty", "\"\""};
    cur.expect(Token::Kind::colon, "':'");

    Mode mode;
    mode.name = name.text;
    for (;;) {
        std::int64_t count = 1;
        const Token& tok = cur.next();
        const Token* symbol = nullptr;
        if (tok.kind == Token::Kind::number) {
            if (tok.value < 1 || tok.value > kMaxCount)
                throw LineFault{tok.column, "count must be between 1 and 1000000", tok.text};
            count = tok.value;
            cur.expect(Token::Kind::star, "'*' after count");
            symbol = &cur.expect(Token::Kind::ident, "operator symbol");
        } else if (tok.kind == Token::Kind::ident) {
            symbol = &tok;
        } else {
            cur.fault(tok, "expected a term like 'S' or '2*M'");
        }
        if (!catalog.contains(symbol->text))
            faults.push_back({symbol->column, "unknown operator '" + symbol->text + "'", symbol->text});
        mode.terms.push_back({count, symbol->text});

        if (cur.peek().kind == Token::Kind::plus) {
            cur.next();
            continue;
        }
        cur.expect_end();
        break;
    }
    return mode;
}

}  // namespace

std::int64_t Mode::operator_count() const {
    std::int64_t total = 0;
    for (const auto& term : terms) total += term.count;
    return total;
}

const Mode* ModelSet::find(std::string_view name) const {
    for (const auto& mode : modes)
        if (mode.name == name) return &mode;
    return nullptr;
}

std::string ParseError::to_string() const {
    return std::to_string(line) + ":" + std::to_string(column) + ": " + message +
           (offending_text.empty() ? "" : " near '" + offending_text + "'");
}

ParseResult<Catalog> parse_catalog(std::string_view source) {
    ParseResult<Catalog> result;
    for (const SourceLine& line : split_lines(source)) {
        if (blank_or_comment(line.text)) continue;
        try {
            LineScanner scanner(line.text);
            TokenCursor cur(scanner.tokens(), line.text);
            parse_operator_line(cur, result.value);
        } catch (const LineFault& fault) {
            result.errors.push_back(to_error(line, fault));
        }
    }
    return result;
}

ParseResult<ModelSet> parse_modes(std::string_view source, const Catalog& catalog) {
    ParseResult<ModelSet> result;
    for (const SourceLine& line : split_lines(source)) {
        if (blank_or_comment(line.text)) continue;
        try {
            LineScanner scanner(line.text);
            TokenCursor cur(scanner.tokens(), line.text);
            std::vector<LineFault> faults;
            Mode mode = parse_mode_line(cur, catalog, faults);
            if (result.value.find(mode.name))
                faults.push_back({1, "duplicate mode name '" + mode.name + "'", std::string(line.text)});
            if (faults.empty()) {
                result.value.modes.push_back(std::move(mode));
            } else {
                for (const auto& fault : faults) result.errors.push_back(to_error(line, fault));
            }
        } catch (const LineFault& fault) {
            result.errors.push_back(to_error(line, fault));
        }
    }
    return result;
}

namespace {

std::string quote(std::string_view text) {
    std::string out = "\"";
    for (char c : text) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string serialize_catalog(const Catalog& catalog) {
    std::string out;
    for (const OperatorDef& op : catalog.operators()) {
        out += "operator " + op.symbol + " " + quote(op.display_name) +
               " category=" + to_string(op.category) + " duration=";
        if (op.duration.is_fixed()) {
            out += std::to_string(op.duration.ms()) + "ms";
        } else if (op.duration.parameter_name() == op.symbol) {
            out += "param";
        } else {
            out += "param:" + op.duration.parameter_name();
        }
        out += " source=" + quote(op.source) + "\n";
    }
    return out;
}

std::string serialize_modes(const ModelSet& models) {
    std::string out;
    for (const Mode& mode : models.modes) {
        out += "mode " + quote(mode.name) + ":";
        bool first = true;
        for (const OperatorTerm& term : mode.terms) {
            out += first ? " " : " + ";
            first = false;
            if (term.count != 1) out += std::to_string(term.count) + "*";
            out += term.symbol;
        }
        out += "\n";
    }
    return out;
}

}  // namespace xreval
