#include "monoquot/parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace mq::text {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(message + " (line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ")"),
      line_(line), column_(column) {}

namespace {

struct Token {
    enum Kind { Ident, Number, Punct, End } kind = End;
    std::string text;
    int line = 1, column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, current_.line, current_.column);
    }

    Token expect_punct(char c) {
        if (current_.kind != Token::Punct || current_.text[0] != c)
            fail(std::string("expected '") + c + "'");
        return take();
    }

    Token expect_keyword(const std::string& kw) {
        if (current_.kind != Token::Ident || current_.text != kw) fail("expected '" + kw + "'");
        return take();
    }

    int expect_number() {
        if (current_.kind != Token::Number) fail("expected a number");
        return std::stoi(take().text);
    }

private:
    void advance() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '\n') {
                ++line_;
                column_ = 1;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++column_;
                ++pos_;
            } else {
                break;
            }
        }
        current_.line = line_;
        current_.column = column_;
        if (pos_ >= text_.size()) {
            current_.kind = Token::End;
            current_.text.clear();
            return;
        }
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                           text_[pos_] == '_'))
                consume();
            current_.kind = Token::Ident;
            current_.text = std::string(text_.substr(start, pos_ - start));
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) consume();
            current_.kind = Token::Number;
            current_.text = std::string(text_.substr(start, pos_ - start));
        } else {
            current_.kind = Token::Punct;
            current_.text = std::string(1, c);
            consume();
        }
    }

    void consume() {
        ++pos_;
        ++column_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1, column_ = 1;
    Token current_;
};

bool is_punct(const Token& t, char c) { return t.kind == Token::Punct && t.text[0] == c; }

// ring declaration: `ring x1..x5` or `ring a, b, c`
Ring parse_ring_clause(Lexer& lex) {
    lex.expect_keyword("ring");
    std::vector<std::string> names;
    if (lex.peek().kind != Token::Ident) lex.fail("expected a variable name");
    names.push_back(lex.take().text);
    if (is_punct(lex.peek(), '.')) {
        lex.expect_punct('.');
        lex.expect_punct('.');
        if (lex.peek().kind != Token::Ident) lex.fail("expected the range end variable");
        std::string last = lex.take().text;
        auto split = [&lex](const std::string& name) -> std::pair<std::string, int> {
            std::size_t cut = name.size();
            while (cut > 0 && std::isdigit(static_cast<unsigned char>(name[cut - 1]))) --cut;
            if (cut == name.size()) lex.fail("range variables must end in a number");
            return {name.substr(0, cut), std::stoi(name.substr(cut))};
        };
        auto [prefix, lo] = split(names[0]);
        auto [prefix2, hi] = split(last);
        if (prefix != prefix2) lex.fail("range variables must share a prefix");
        if (hi < lo) lex.fail("empty variable range");
        names.clear();
        for (int i = lo; i <= hi; ++i) names.push_back(prefix + std::to_string(i));
    } else {
        while (is_punct(lex.peek(), ',')) {
            lex.take();
            if (lex.peek().kind != Token::Ident) lex.fail("expected a variable name");
            names.push_back(lex.take().text);
        }
    }
    lex.expect_punct(';');
    try {
        return std::make_shared<const RingContext>(static_cast<int>(names.size()), names);
    } catch (const std::invalid_argument& e) {
        lex.fail(e.what());
    }
}

Monomial parse_monomial_expr(Lexer& lex, const Ring& ring, const std::map<std::string, int>& index,
                             std::vector<std::string>* warnings) {
    std::vector<int> exp(ring->n, 0);
    bool first = true;
    while (true) {
        if (!first) lex.expect_punct('*');
        first = false;
        if (lex.peek().kind == Token::Number) {
            if (lex.take().text != "1") lex.fail("only the constant 1 is allowed in generators");
        } else if (lex.peek().kind == Token::Ident) {
            Token name = lex.take();
            auto it = index.find(name.text);
            if (it == index.end())
                throw ParseError("undeclared variable '" + name.text + "'", name.line, name.column);
            int power = 1;
            if (is_punct(lex.peek(), '^')) {
                lex.take();
                power = lex.expect_number();
                if (power == 0 && warnings)
                    warnings->push_back("zero exponent on " + name.text + " yields the unit factor");
            }
            exp[it->second] += power;
        } else {
            lex.fail("expected a variable or 1");
        }
        if (!is_punct(lex.peek(), '*')) break;
    }
    return Monomial(std::move(exp));
}

} // namespace

MonomialIdeal parse_ideal(std::string_view textsrc, std::vector<std::string>* warnings) {
    Lexer lex(textsrc);
    Ring ring = parse_ring_clause(lex);
    std::map<std::string, int> index;
    for (int i = 0; i < ring->n; ++i) index[ring->names[i]] = i;
    lex.expect_keyword("ideal");
    std::vector<Monomial> gens;
    if (!is_punct(lex.peek(), ';')) {
        gens.push_back(parse_monomial_expr(lex, ring, index, warnings));
        while (is_punct(lex.peek(), ',')) {
            lex.take();
            gens.push_back(parse_monomial_expr(lex, ring, index, warnings));
        }
    }
    lex.expect_punct(';');
    if (lex.peek().kind != Token::End) lex.fail("trailing input after ideal");
    MonomialIdeal out(ring, std::move(gens));
    if (out.is_unit() && warnings) warnings->push_back("input generates the unit ideal");
    return out;
}

namespace {

SimplicialComplex parse_complex_clause(Lexer& lex) {
    lex.expect_keyword("complex");
    lex.expect_keyword("on");
    int n = lex.expect_number();
    lex.expect_punct(':');
    if (lex.peek().kind == Token::Ident && lex.peek().text == "void") {
        lex.take();
        lex.expect_punct(';');
        return SimplicialComplex::void_complex(n);
    }
    std::vector<Face> facets;
    while (true) {
        lex.expect_punct('{');
        Face f = 0;
        while (!is_punct(lex.peek(), '}')) {
            Token num = lex.peek();
            int v = lex.expect_number();
            if (v < 1 || v > n) throw ParseError("vertex out of range", num.line, num.column);
            f |= 1u << (v - 1);
            if (is_punct(lex.peek(), ',')) lex.take();
        }
        lex.expect_punct('}');
        facets.push_back(f);
        if (is_punct(lex.peek(), ',')) {
            lex.take();
            continue;
        }
        break;
    }
    lex.expect_punct(';');
    return SimplicialComplex::from_facets(n, std::move(facets));
}

} // namespace

SimplicialComplex parse_complex(std::string_view textsrc) {
    Lexer lex(textsrc);
    SimplicialComplex out = parse_complex_clause(lex);
    if (lex.peek().kind != Token::End) lex.fail("trailing input after complex");
    return out;
}

std::pair<SimplicialComplex, SimplicialComplex> parse_pair(std::string_view textsrc) {
    Lexer lex(textsrc);
    lex.expect_keyword("big");
    lex.expect_punct(':');
    SimplicialComplex big = parse_complex_clause(lex);
    lex.expect_keyword("small");
    lex.expect_punct(':');
    SimplicialComplex small = parse_complex_clause(lex);
    if (lex.peek().kind != Token::End) lex.fail("trailing input after pair");
    return {std::move(big), std::move(small)};
}

Graph parse_graph(std::string_view textsrc) {
    Lexer lex(textsrc);
    lex.expect_keyword("graph");
    lex.expect_keyword("on");
    int n = lex.expect_number();
    lex.expect_punct(':');
    std::vector<std::pair<int, int>> edges;
    while (!is_punct(lex.peek(), ';')) {
        Token first = lex.peek();
        int u = lex.expect_number();
        lex.expect_punct('-');
        int v = lex.expect_number();
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParseError("vertex out of range", first.line, first.column);
        if (u == v) throw ParseError("loop edge", first.line, first.column);
        edges.emplace_back(u - 1, v - 1);
        if (is_punct(lex.peek(), ',')) lex.take();
    }
    lex.expect_punct(';');
    if (lex.peek().kind != Token::End) lex.fail("trailing input after graph");
    return Graph(n, edges);
}

ParseResult parse_any(std::string_view textsrc) {
    Lexer probe(textsrc);
    if (probe.peek().kind != Token::Ident) probe.fail("expected ring, complex or graph input");
    const std::string& kw = probe.peek().text;
    if (kw == "ring" || kw == "ideal") {
        std::vector<std::string> warnings;
        MonomialIdeal ideal = parse_ideal(textsrc, &warnings);
        return {std::move(ideal), std::move(warnings)};
    }
    if (kw == "complex") return {parse_complex(textsrc), {}};
    if (kw == "graph") return {parse_graph(textsrc), {}};
    probe.fail("unknown input kind '" + kw + "'");
}

std::string format_monomial(const Monomial& m, const Ring& ring) {
    if (m.is_one()) return "1";
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!first) out << "*";
        out << ring->names[i];
        if (m[i] > 1) out << "^" << m[i];
        first = false;
    }
    return out.str();
}

std::string format_ideal(const MonomialIdeal& ideal) {
    std::ostringstream out;
    out << "ring ";
    for (int i = 0; i < ideal.ring()->n; ++i) {
        if (i) out << ", ";
        out << ideal.ring()->names[i];
    }
    out << "; ideal ";
    for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
        if (i) out << ", ";
        out << format_monomial(ideal.generators()[i], ideal.ring());
    }
    out << ";";
    return out.str();
}

std::string format_face(Face f) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (int v = 0; v < 32; ++v) {
        if (!(f & (1u << v))) continue;
        if (!first) out << ",";
        out << v + 1;
        first = false;
    }
    out << "}";
    return out.str();
}

std::string format_complex(const SimplicialComplex& complex) {
    std::ostringstream out;
    out << "complex on " << complex.ground_size() << ": ";
    if (complex.is_void()) {
        out << "void;";
        return out.str();
    }
    for (std::size_t i = 0; i < complex.facets().size(); ++i) {
        if (i) out << ",";
        out << format_face(complex.facets()[i]);
    }
    out << ";";
    return out.str();
}

std::string format_graph(const Graph& graph) {
    std::ostringstream out;
    out << "graph on " << graph.vertex_count() << ": ";
    auto edges = graph.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i) out << ", ";
        out << edges[i].first + 1 << "-" << edges[i].second + 1;
    }
    out << ";";
    return out.str();
}

std::string format_multidegree(const Multidegree& a) {
    std::ostringstream out;
    for (int i = 0; i < a.size(); ++i) {
        if (i) out << ",";
        out << a[i];
    }
    return out.str();
}

Multidegree parse_multidegree(std::string_view textsrc) {
    std::vector<int> entries;
    std::string token;
    auto flush = [&]() {
        if (token.empty()) throw ParseError("empty multidegree entry", 1, 1);
        entries.push_back(std::stoi(token));
        token.clear();
    };
    for (char c : textsrc) {
        if (c == ',') {
            flush();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            token.push_back(c);
        }
    }
    flush();
    return Multidegree(std::move(entries));
}

} // namespace mq::text
