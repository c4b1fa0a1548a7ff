#include "duals/parser.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace duals {

namespace {

struct Token {
    enum class Kind { ident, number, complex_lit, plus, minus, star, caret, slash, end };
    Kind kind;
    std::string text;
    int line;
    int column;
};

class Lexer {
public:
    Lexer(const std::string& text, int line) : text_(text), line_(line) {}

    std::vector<Token> run() {
        std::vector<Token> tokens;
        while (true) {
            skip_space();
            if (pos_ >= text_.size()) break;
            const int col = static_cast<int>(pos_) + 1;
            char c = text_[pos_];
            if (c == '+') {
                tokens.push_back({Token::Kind::plus, "+", line_, col});
                ++pos_;
            } else if (c == '-') {
                tokens.push_back({Token::Kind::minus, "-", line_, col});
                ++pos_;
            } else if (c == '*') {
                tokens.push_back({Token::Kind::star, "*", line_, col});
                ++pos_;
            } else if (c == '^') {
                tokens.push_back({Token::Kind::caret, "^", line_, col});
                ++pos_;
            } else if (c == '/') {
                tokens.push_back({Token::Kind::slash, "/", line_, col});
                ++pos_;
            } else if (c == '(') {
                size_t close = text_.find(')', pos_);
                if (close == std::string::npos)
                    throw ParseError("unterminated complex literal", line_, col);
                tokens.push_back({Token::Kind::complex_lit,
                                  text_.substr(pos_ + 1, close - pos_ - 1), line_, col});
                pos_ = close + 1;
            } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
                size_t start = pos_;
                while (pos_ < text_.size() &&
                       (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                        text_[pos_] == '.'))
                    ++pos_;
                // Exponent notation (complex mode input only).
                if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
                    size_t mark = pos_ + 1;
                    if (mark < text_.size() && (text_[mark] == '+' || text_[mark] == '-'))
                        ++mark;
                    if (mark < text_.size() &&
                        std::isdigit(static_cast<unsigned char>(text_[mark]))) {
                        pos_ = mark;
                        while (pos_ < text_.size() &&
                               std::isdigit(static_cast<unsigned char>(text_[pos_])))
                            ++pos_;
                    }
                }
                tokens.push_back({Token::Kind::number, text_.substr(start, pos_ - start),
                                  line_, col});
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                size_t start = pos_;
                while (pos_ < text_.size() &&
                       (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                        text_[pos_] == '_'))
                    ++pos_;
                tokens.push_back({Token::Kind::ident, text_.substr(start, pos_ - start),
                                  line_, col});
            } else {
                throw ParseError(std::string("unexpected character '") + c + "'", line_,
                                 col);
            }
        }
        tokens.push_back({Token::Kind::end, "", line_, static_cast<int>(text_.size()) + 1});
        return tokens;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    const std::string& text_;
    int line_;
    size_t pos_ = 0;
};

std::complex<double> parse_complex_body(const std::string& body, int line, int col) {
    // Forms: "a", "a+bi", "a-bi", "bi", "-bi", "i", "a+i".
    const char* s = body.c_str();
    char* end = nullptr;
    double first = std::strtod(s, &end);
    if (end == s) {
        // Could be "i" or "-i" or "+i".
        std::string t = body;
        t.erase(std::remove_if(t.begin(), t.end(), ::isspace), t.end());
        if (t == "i") return {0.0, 1.0};
        if (t == "-i") return {0.0, -1.0};
        if (t == "+i") return {0.0, 1.0};
        throw ParseError("malformed complex literal (" + body + ")", line, col);
    }
    while (*end == ' ') ++end;
    if (*end == '\0') return {first, 0.0};
    if (*end == 'i') {
        ++end;
        while (*end == ' ') ++end;
        if (*end != '\0')
            throw ParseError("malformed complex literal (" + body + ")", line, col);
        return {0.0, first};
    }
    if (*end != '+' && *end != '-')
        throw ParseError("malformed complex literal (" + body + ")", line, col);
    const char* rest = end;
    char* end2 = nullptr;
    double second = std::strtod(rest, &end2);
    if (end2 == rest) {
        // "a+i" / "a-i"
        char sign = *rest;
        ++rest;
        while (*rest == ' ') ++rest;
        if (*rest == 'i' && *(rest + 1) == '\0')
            return {first, sign == '-' ? -1.0 : 1.0};
        throw ParseError("malformed complex literal (" + body + ")", line, col);
    }
    while (*end2 == ' ') ++end2;
    if (*end2 != 'i' || *(end2 + 1) != '\0')
        throw ParseError("malformed complex literal (" + body + ")", line, col);
    return {first, second};
}

class PolyParser {
public:
    PolyParser(const std::vector<Token>& tokens,
               const std::vector<std::string>& var_names, ScalarMode mode, int line)
        : tokens_(tokens), vars_(var_names), mode_(mode), line_(line) {}

    Polynomial parse() {
        Polynomial p(static_cast<int>(vars_.size()), mode_);
        bool negative = false;
        if (peek().kind == Token::Kind::minus) {
            negative = true;
            next();
        } else if (peek().kind == Token::Kind::plus) {
            next();
        }
        p += parse_term(negative);
        while (peek().kind == Token::Kind::plus || peek().kind == Token::Kind::minus) {
            bool neg = peek().kind == Token::Kind::minus;
            next();
            p += parse_term(neg);
        }
        if (peek().kind != Token::Kind::end)
            throw ParseError("unexpected token '" + peek().text + "'", line_,
                             peek().column);
        return p;
    }

    std::vector<Scalar> parse_coordinates() {
        std::vector<Scalar> coords;
        while (peek().kind != Token::Kind::end)
            coords.push_back(parse_signed_coefficient());
        return coords;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_++]; }

    Scalar parse_number_coefficient(const Token& tok) {
        // Integer or decimal, optionally followed by /denominator.
        std::string num = tok.text;
        std::string den;
        if (peek().kind == Token::Kind::slash) {
            next();
            if (peek().kind != Token::Kind::number)
                throw ParseError("expected denominator after '/'", line_, peek().column);
            den = next().text;
        }
        if (mode_ == ScalarMode::exact) {
            mpq_class q = decimal_to_rational(num);
            if (!den.empty()) {
                mpq_class d = decimal_to_rational(den);
                if (d == 0) throw ParseError("zero denominator", line_, tok.column);
                q /= d;
            }
            return Scalar::rational(q);
        }
        double v = std::strtod(num.c_str(), nullptr);
        if (!den.empty()) {
            double d = std::strtod(den.c_str(), nullptr);
            if (d == 0.0) throw ParseError("zero denominator", line_, tok.column);
            v /= d;
        }
        return Scalar::complex({v, 0.0});
    }

    Scalar parse_signed_coefficient() {
        bool negative = false;
        while (peek().kind == Token::Kind::minus || peek().kind == Token::Kind::plus) {
            if (next().kind == Token::Kind::minus) negative = !negative;
        }
        Scalar s = Scalar::one(mode_);
        const Token& tok = peek();
        if (tok.kind == Token::Kind::number) {
            next();
            s = parse_number_coefficient(tok);
        } else if (tok.kind == Token::Kind::complex_lit) {
            next();
            if (mode_ == ScalarMode::exact)
                throw ParseError("complex literal in exact mode", line_, tok.column);
            s = Scalar::complex(parse_complex_body(tok.text, line_, tok.column));
        } else {
            throw ParseError("expected a coefficient", line_, tok.column);
        }
        return negative ? -s : s;
    }

    Polynomial parse_term(bool negative) {
        Scalar coeff = negative ? -Scalar::one(mode_) : Scalar::one(mode_);
        std::vector<int> exponent(vars_.size(), 0);
        bool saw_factor = false;
        while (true) {
            const Token& tok = peek();
            if (tok.kind == Token::Kind::number) {
                next();
                coeff *= parse_number_coefficient(tok);
                saw_factor = true;
            } else if (tok.kind == Token::Kind::complex_lit) {
                next();
                if (mode_ == ScalarMode::exact)
                    throw ParseError("complex literal in exact mode", line_, tok.column);
                coeff *= Scalar::complex(parse_complex_body(tok.text, line_, tok.column));
                saw_factor = true;
            } else if (tok.kind == Token::Kind::ident) {
                next();
                auto it = std::find(vars_.begin(), vars_.end(), tok.text);
                if (it == vars_.end())
                    throw ParseError("unknown variable '" + tok.text + "'", line_,
                                     tok.column);
                int var = static_cast<int>(it - vars_.begin());
                int power = 1;
                if (peek().kind == Token::Kind::caret) {
                    next();
                    if (peek().kind != Token::Kind::number)
                        throw ParseError("expected exponent after '^'", line_,
                                         peek().column);
                    const Token& e = next();
                    if (e.text.find('.') != std::string::npos)
                        throw ParseError("exponent must be a non-negative integer",
                                         line_, e.column);
                    power = std::atoi(e.text.c_str());
                }
                exponent[static_cast<size_t>(var)] += power;
                saw_factor = true;
            } else if (tok.kind == Token::Kind::star) {
                next(); // optional separator
                continue;
            } else {
                break;
            }
        }
        if (!saw_factor)
            throw ParseError("expected a term", line_, peek().column);
        return Polynomial::monomial(Exponent(std::move(exponent)), coeff);
    }

    const std::vector<Token>& tokens_;
    const std::vector<std::string>& vars_;
    ScalarMode mode_;
    int line_;
    size_t pos_ = 0;
};

struct RawLine {
    enum class Kind { vars, mode, point, poly };
    Kind kind;
    std::vector<Token> tokens;
    int line;
};

std::vector<RawLine> tokenize_lines(const std::string& text) {
    std::vector<RawLine> lines;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto tokens = Lexer(line, lineno).run();
        RawLine raw{RawLine::Kind::poly, std::move(tokens), lineno};
        if (raw.tokens.front().kind == Token::Kind::ident) {
            const std::string& head = raw.tokens.front().text;
            if (head == "vars")
                raw.kind = RawLine::Kind::vars;
            else if (head == "mode")
                raw.kind = RawLine::Kind::mode;
            else if (head == "point")
                raw.kind = RawLine::Kind::point;
        }
        lines.push_back(std::move(raw));
    }
    return lines;
}

} // namespace

SystemFile parse_system(const std::string& text, std::optional<ScalarMode> force) {
    auto lines = tokenize_lines(text);
    SystemFile system;

    // Mode first: a forced mode wins, then an explicit mode line;
    // otherwise any complex literal in the file selects complex mode.
    bool saw_complex = false;
    for (const auto& raw : lines) {
        if (raw.kind == RawLine::Kind::mode) {
            if (raw.tokens.size() != 3 || raw.tokens[1].kind != Token::Kind::ident)
                throw ParseError("mode line must read 'mode exact' or 'mode complex'",
                                 raw.line, 1);
            const std::string& m = raw.tokens[1].text;
            if (m == "exact")
                system.mode = ScalarMode::exact;
            else if (m == "complex")
                system.mode = ScalarMode::cplx;
            else
                throw ParseError("unknown mode '" + m + "'", raw.line,
                                 raw.tokens[1].column);
            if (system.mode_explicit)
                throw ParseError("duplicate mode line", raw.line, 1);
            system.mode_explicit = true;
        }
        for (const auto& tok : raw.tokens)
            if (tok.kind == Token::Kind::complex_lit) saw_complex = true;
    }
    if (!system.mode_explicit && saw_complex) system.mode = ScalarMode::cplx;
    if (force) {
        system.mode = *force;
        system.mode_explicit = true;
    }
    if (system.mode_explicit && system.mode == ScalarMode::exact && saw_complex)
        throw ParseError("complex literal in a file declared 'mode exact'",
                         lines.empty() ? 1 : lines.front().line, 1);

    bool saw_vars = false;
    for (const auto& raw : lines) {
        switch (raw.kind) {
        case RawLine::Kind::vars: {
            if (saw_vars) throw ParseError("duplicate vars line", raw.line, 1);
            saw_vars = true;
            for (size_t i = 1; i < raw.tokens.size(); ++i) {
                const Token& tok = raw.tokens[i];
                if (tok.kind == Token::Kind::end) break;
                if (tok.kind != Token::Kind::ident)
                    throw ParseError("variable names must be identifiers", raw.line,
                                     tok.column);
                if (std::find(system.var_names.begin(), system.var_names.end(),
                              tok.text) != system.var_names.end())
                    throw ParseError("duplicate variable '" + tok.text + "'", raw.line,
                                     tok.column);
                system.var_names.push_back(tok.text);
            }
            if (system.var_names.empty())
                throw ParseError("vars line declares no variables", raw.line, 1);
            break;
        }
        case RawLine::Kind::mode:
            break;
        case RawLine::Kind::point: {
            if (!saw_vars)
                throw ParseError("point line before vars line", raw.line, 1);
            if (system.point)
                throw ParseError("duplicate point line", raw.line, 1);
            std::vector<Token> rest(raw.tokens.begin() + 1, raw.tokens.end());
            PolyParser cp(rest, system.var_names, system.mode, raw.line);
            std::vector<Scalar> coords = cp.parse_coordinates();
            if (coords.size() != system.var_names.size())
                throw ParseError("point has " + std::to_string(coords.size()) +
                                     " coordinates for " +
                                     std::to_string(system.var_names.size()) +
                                     " variables",
                                 raw.line, 1);
            system.point = std::move(coords);
            break;
        }
        case RawLine::Kind::poly: {
            if (!saw_vars)
                throw ParseError("generator before vars line", raw.line, 1);
            PolyParser pp(raw.tokens, system.var_names, system.mode, raw.line);
            system.generators.push_back(pp.parse());
            break;
        }
        }
    }

    if (!saw_vars) throw ParseError("missing vars line", 1, 1);
    if (system.generators.empty()) throw ParseError("empty generator list", 1, 1);
    return system;
}

Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& var_names,
                            ScalarMode mode) {
    auto tokens = Lexer(text, 1).run();
    PolyParser pp(tokens, var_names, mode, 1);
    return pp.parse();
}

std::string print_system(const SystemFile& system) {
    std::ostringstream os;
    os << "vars";
    for (const auto& v : system.var_names) os << " " << v;
    os << "\n";
    os << "mode " << to_string(system.mode) << "\n";
    for (const auto& g : system.generators) os << g.str(system.var_names) << "\n";
    if (system.point) {
        os << "point";
        for (const auto& c : *system.point) os << " " << c.str();
        os << "\n";
    }
    return os.str();
}

} // namespace duals
