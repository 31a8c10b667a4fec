#include "twistrep/textio.hpp"

#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <variant>

namespace twistrep {

namespace {

struct Token {
    enum Kind { word, number, equals, open, close, end } kind;
    std::string text;
    int line, column;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : s_(text) {}

    Token next() {
        skip_blank();
        if (pos_ >= s_.size()) return {Token::end, "", line_, col_};
        const int line = line_, col = col_;
        const char c = s_[pos_];
        if (c == '=' || c == '[' || c == ']') {
            advance();
            return {c == '=' ? Token::equals : (c == '[' ? Token::open : Token::close), std::string(1, c), line, col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string w;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) w += advance();
            return {Token::word, w, line, col};
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
            std::string w(1, advance());
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) w += advance();
            if (w == "-" || w == "+") throw ParseError(line, col, "sign without digits");
            return {Token::number, w, line, col};
        }
        throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }

private:
    char advance() {
        const char c = s_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    void skip_blank() {
        while (pos_ < s_.size()) {
            if (s_[pos_] == '#') {
                while (pos_ < s_.size() && s_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
                advance();
            } else {
                break;
            }
        }
    }

    const std::string& s_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

// a value is an integer or a (possibly nested) bracketed list
struct Value {
    std::variant<Int, std::vector<Value>> v;
    int line = 0, column = 0;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) { tok_ = lex_.next(); }

    std::map<std::string, Value> entries() {
        std::map<std::string, Value> out;
        while (tok_.kind != Token::end) {
            if (tok_.kind != Token::word) fail("expected a field name");
            const Token key = tok_;
            shift();
            if (tok_.kind != Token::equals) fail("expected '=' after " + key.text);
            shift();
            Value v = value();
            if (!out.emplace(key.text, std::move(v)).second)
                throw ParseError(key.line, key.column, "field " + key.text + " given twice");
        }
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(tok_.line, tok_.column, what + (tok_.kind == Token::end ? " (end of input)" : ", found '" + tok_.text + "'"));
    }
    void shift() { tok_ = lex_.next(); }

    Value value() {
        Value v;
        v.line = tok_.line;
        v.column = tok_.column;
        if (tok_.kind == Token::number) {
            try {
                v.v = static_cast<Int>(std::stoll(tok_.text));
            } catch (const std::out_of_range&) {
                fail("integer out of range");
            }
            shift();
            return v;
        }
        if (tok_.kind != Token::open) fail("expected an integer or '['");
        shift();
        std::vector<Value> items;
        while (tok_.kind != Token::close) {
            if (tok_.kind == Token::end || tok_.kind == Token::word || tok_.kind == Token::equals)
                fail("'[' opened at line " + std::to_string(v.line) + ", column " + std::to_string(v.column) +
                     " is not closed");
            items.push_back(value());
        }
        shift();
        v.v = std::move(items);
        return v;
    }

    Lexer lex_;
    Token tok_;
};

Int as_int(const Value& v, const std::string& field) {
    if (auto p = std::get_if<Int>(&v.v)) return *p;
    throw ParseError(v.line, v.column, field + ": expected an integer");
}

LatticeVec as_row(const Value& v, const std::string& field) {
    auto p = std::get_if<std::vector<Value>>(&v.v);
    if (!p) throw ParseError(v.line, v.column, field + ": expected a bracketed row of integers");
    LatticeVec row;
    for (const auto& x : *p) row.push_back(as_int(x, field));
    return row;
}

std::vector<LatticeVec> as_rows(const Value& v, const std::string& field, int width) {
    auto p = std::get_if<std::vector<Value>>(&v.v);
    if (!p) throw ParseError(v.line, v.column, field + ": expected a bracketed list of rows");
    std::vector<LatticeVec> rows;
    for (const auto& x : *p) {
        rows.push_back(as_row(x, field));
        if (static_cast<int>(rows.back().size()) != width)
            throw ParseError(x.line, x.column,
                             field + ": row has " + std::to_string(rows.back().size()) + " entries, rank is " +
                                 std::to_string(width));
    }
    return rows;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n"), b = s.find_last_not_of(" \t\r\n");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

std::vector<std::string> entries_of_vector(const std::string& text) {
    std::string body = trim(text);
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') throw ParseError(1, static_cast<int>(body.size()), "missing ']'");
        body = body.substr(1, body.size() - 2);
    }
    std::vector<std::string> out;
    std::istringstream is(body);
    for (std::string w; is >> w;) out.push_back(w);
    return out;
}

Int parse_integer(const std::string& w, int column) {
    size_t used = 0;
    Int x = 0;
    try {
        x = std::stoll(w, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != w.size() || w.empty()) throw ParseError(1, column, "not an integer: " + w);
    return x;
}

}  // namespace

DatumDescription parse_datum_text(const std::string& text) {
    auto fields = Parser(text).entries();
    static const std::set<std::string> known{"rank", "simple_roots", "simple_coroots", "xi0", "delta0"};
    for (const auto& [k, v] : fields)
        if (!known.count(k)) throw ParseError(v.line, v.column, "unknown field " + k);
    for (const char* k : {"rank", "simple_roots", "simple_coroots"})
        if (!fields.count(k)) throw ParseError(1, 1, std::string("missing field ") + k);

    DatumDescription d;
    const Value& rank = fields.at("rank");
    d.rank = static_cast<int>(as_int(rank, "rank"));
    if (d.rank <= 0) throw ParseError(rank.line, rank.column, "rank must be positive");
    d.simple_roots = as_rows(fields.at("simple_roots"), "simple_roots", d.rank);
    d.simple_coroots = as_rows(fields.at("simple_coroots"), "simple_coroots", d.rank);
    auto matrix = [&](const char* key) {
        if (!fields.count(key)) return LatticeMap::identity(d.rank);
        const Value& v = fields.at(key);
        auto rows = as_rows(v, key, d.rank);
        if (static_cast<int>(rows.size()) != d.rank)
            throw ParseError(v.line, v.column, std::string(key) + ": expected " + std::to_string(d.rank) + " rows");
        return LatticeMap::from_rows(rows);
    };
    d.xi0 = matrix("xi0");
    d.delta0 = matrix("delta0");
    return d;
}

std::string format_datum(const DatumDescription& d) {
    std::ostringstream os;
    auto rows = [&](const std::vector<LatticeVec>& rs) {
        os << '[';
        for (size_t i = 0; i < rs.size(); ++i) os << (i ? " " : "") << to_string(rs[i]);
        os << "]\n";
    };
    auto matrix = [&](const LatticeMap& m) {
        std::vector<LatticeVec> rs;
        for (int i = 0; i < m.rows(); ++i) {
            LatticeVec r;
            for (int j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
            rs.push_back(r);
        }
        rows(rs);
    };
    os << "rank = " << d.rank << '\n';
    os << "simple_roots = ";
    rows(d.simple_roots);
    os << "simple_coroots = ";
    rows(d.simple_coroots);
    os << "xi0 = ";
    matrix(d.xi0);
    os << "delta0 = ";
    matrix(d.delta0);
    return os.str();
}

RatVec parse_ratvec(const std::string& text) {
    std::vector<Rational> xs;
    int column = 1;
    for (const auto& w : entries_of_vector(text)) {
        const size_t slash = w.find('/');
        if (slash == std::string::npos) {
            xs.emplace_back(parse_integer(w, column));
        } else {
            Int den = parse_integer(w.substr(slash + 1), column);
            if (den == 0) throw ParseError(1, column, "zero denominator in " + w);
            xs.emplace_back(parse_integer(w.substr(0, slash), column), den);
        }
        column += static_cast<int>(w.size()) + 1;
    }
    if (xs.empty()) throw ParseError(1, 1, "empty vector");
    Int den = 1;
    for (const auto& x : xs) den = std::lcm(den, x.denominator());
    LatticeVec num;
    for (const auto& x : xs) num.push_back(x.numerator() * (den / x.denominator()));
    return RatVec(num, den);
}

LatticeVec parse_latticevec(const std::string& text) {
    LatticeVec out;
    int column = 1;
    for (const auto& w : entries_of_vector(text)) {
        out.push_back(parse_integer(w, column));
        column += static_cast<int>(w.size()) + 1;
    }
    return out;
}

std::vector<int> parse_word(const std::string& text) {
    const std::string w = trim(text);
    if (w == "e" || w.empty()) return {};
    std::vector<int> out;
    std::istringstream is(w);
    int column = 1;
    for (std::string letter; std::getline(is, letter, '.');) {
        if (letter.size() < 2 || letter[0] != 's') throw ParseError(1, column, "bad Weyl letter " + letter);
        out.push_back(static_cast<int>(parse_integer(letter.substr(1), column + 1)));
        column += static_cast<int>(letter.size()) + 1;
    }
    return out;
}

std::string format_ext_record(int index, const ExtendedParam& E) {
    std::ostringstream os;
    os << index << ' ' << E.to_string() << " z=" << z_char(E).to_string() << " zeta=" << zeta_char(E).to_string()
       << " eps=" << epsilon_char(E);
    return os.str();
}

ExtendedParam parse_ext_record(const std::string& line, std::shared_ptr<const RootDatum> datum, const RatVec& gamma,
                               const RatVec& g) {
    auto field = [&](const std::string& key, const std::string& next) {
        const size_t a = line.find(" " + key + "=");
        if (a == std::string::npos) throw ParseError(1, 1, "missing " + key + "=");
        const size_t start = a + key.size() + 2;
        const size_t b = next.empty() ? std::string::npos : line.find(" " + next + "=", start);
        return line.substr(start, b == std::string::npos ? std::string::npos : b - start);
    };
    ExtendedParam E;
    E.datum = datum;
    E.gamma = gamma;
    E.g = g;
    E.inv = theta_of(*datum, datum->from_word(parse_word(field("w", "lambda"))));
    E.lambda = parse_latticevec(field("lambda", "tau"));
    E.tau = parse_latticevec(field("tau", "ell"));
    E.ell = parse_latticevec(field("ell", "t"));
    E.t = parse_latticevec(field("t", "z"));
    return E;
}

}  // namespace twistrep
