#include "braidcoh/parser.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace braidcoh {

namespace {

enum class Tk { Ident, Int, LParen, RParen, Semi, Comma, Plus, Star, Arrow, Colon, Equals, Quote, End };

struct Tok {
    Tk kind;
    std::string text;
    long value = 0;  // for Int (sign applied by the consumer)
    std::size_t line = 1, col = 1;
};

std::vector<Tok> lex(std::string_view s, std::size_t line) {
    std::vector<Tok> out;
    std::size_t i = 0;
    auto tok = [&](Tk k, std::size_t start, std::size_t len) {
        out.push_back({k, std::string(s.substr(start, len)), 0, line, start + 1});
    };
    while (i < s.size()) {
        const char c = s[i];
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
        } else if (c == '#') {
            break;  // comment to end of line
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            tok(Tk::Ident, i, j - i);
            i = j;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            tok(Tk::Int, i, j - i);
            out.back().value = std::stol(out.back().text);
            i = j;
        } else if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
            tok(Tk::Arrow, i, 2);
            i += 2;
        } else if (c == '-' && i + 1 < s.size() &&
                   std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
            std::size_t j = i + 1;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            tok(Tk::Int, i, j - i);
            out.back().value = std::stol(out.back().text);
            i = j;
        } else {
            Tk k;
            switch (c) {
            case '(': k = Tk::LParen; break;
            case ')': k = Tk::RParen; break;
            case ';': k = Tk::Semi; break;
            case ',': k = Tk::Comma; break;
            case '+': k = Tk::Plus; break;
            case '*': k = Tk::Star; break;
            case ':': k = Tk::Colon; break;
            case '=': k = Tk::Equals; break;
            case '\'': k = Tk::Quote; break;
            default:
                throw ParseError(line, i + 1, std::string("unexpected character '") + c + "'");
            }
            tok(k, i, 1);
            ++i;
        }
    }
    out.push_back({Tk::End, "", 0, line, s.size() + 1});
    return out;
}

const char* describe(Tk k) {
    switch (k) {
    case Tk::Ident: return "identifier";
    case Tk::Int: return "integer";
    case Tk::LParen: return "'('";
    case Tk::RParen: return "')'";
    case Tk::Semi: return "';'";
    case Tk::Comma: return "','";
    case Tk::Plus: return "'+'";
    case Tk::Star: return "'*'";
    case Tk::Arrow: return "'->'";
    case Tk::Colon: return "':'";
    case Tk::Equals: return "'='";
    case Tk::Quote: return "'''";
    case Tk::End: return "end of input";
    }
    return "?";
}

struct Parser {
    std::vector<Tok> ts;
    std::size_t pos = 0;

    Parser(std::string_view text, std::size_t line) : ts(lex(text, line)) {}

    const Tok& peek(std::size_t ahead = 0) const {
        return ts[std::min(pos + ahead, ts.size() - 1)];
    }
    bool accept(Tk k) {
        if (peek().kind != k) return false;
        ++pos;
        return true;
    }
    Tok expect(Tk k, const char* what) {
        if (peek().kind != k)
            throw ParseError(peek().line, peek().col,
                             std::string("expected ") + what + ", found " +
                                 describe(peek().kind) +
                                 (peek().kind == Tk::End ? "" : " '" + peek().text + "'"));
        return ts[pos++];
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(peek().line, peek().col, msg);
    }
    void expect_end() {
        if (peek().kind != Tk::End)
            fail("unexpected trailing input '" + peek().text + "'");
    }

    // ---- objects ----

    Obj obj() {
        Obj t = term();
        while (accept(Tk::Plus)) t = sum(t, term());
        return t;
    }
    Obj term() {
        Obj f = factor();
        while (accept(Tk::Star)) f = prod(f, factor());
        return f;
    }
    Obj factor() {
        const Tok& t = peek();
        if (t.kind == Tk::Int) {
            ++pos;
            if (t.value == 0) return zero();
            if (t.value == 1) return one();
            throw ParseError(t.line, t.col, "object literals are 0 and 1");
        }
        if (t.kind == Tk::Ident) {
            ++pos;
            return atom(t.text);
        }
        if (accept(Tk::LParen)) {
            Obj o = obj();
            expect(Tk::RParen, "')'");
            return o;
        }
        fail("expected an object");
    }

    // ---- morphisms ----

    bool at_sum_op() const {
        return peek().kind == Tk::LParen && peek(1).kind == Tk::Plus &&
               peek(2).kind == Tk::RParen;
    }
    bool at_prod_op() const {
        return peek().kind == Tk::LParen && peek(1).kind == Tk::Ident && peek(1).text == "x" &&
               peek(2).kind == Tk::RParen;
    }

    Morph morph() {
        Morph m = sum_expr();
        while (accept(Tk::Semi)) m = comp(m, sum_expr());
        return m;
    }
    Morph sum_expr() {
        Morph m = prod_expr();
        while (at_sum_op()) {
            pos += 3;
            m = sum_m(m, prod_expr());
        }
        return m;
    }
    Morph prod_expr() {
        Morph m = primary();
        while (at_prod_op()) {
            pos += 3;
            m = prod_m(m, primary());
        }
        return m;
    }

    std::vector<Obj> obj_args(std::size_t n) {
        expect(Tk::LParen, "'('");
        std::vector<Obj> out;
        out.push_back(obj());
        while (out.size() < n) {
            expect(Tk::Comma, "','");
            out.push_back(obj());
        }
        expect(Tk::RParen, "')'");
        return out;
    }

    Morph primary() {
        if (peek().kind == Tk::LParen) {
            ++pos;
            Morph m = morph();
            expect(Tk::RParen, "')'");
            return m;
        }
        const Tok t = expect(Tk::Ident, "a morphism");
        const std::string& k = t.text;
        if (k == "inv") {
            expect(Tk::LParen, "'('");
            Morph m = morph();
            expect(Tk::RParen, "')'");
            return inv(m);
        }
        if (k == "id") return id(obj_args(1)[0]);
        if (k == "aP") {
            auto a = obj_args(3);
            return alpha_plus(a[0], a[1], a[2]);
        }
        if (k == "aT") {
            auto a = obj_args(3);
            return alpha_times(a[0], a[1], a[2]);
        }
        if (k == "lP") return lambda_plus(obj_args(1)[0]);
        if (k == "rP") return rho_plus(obj_args(1)[0]);
        if (k == "lT") return lambda_times(obj_args(1)[0]);
        if (k == "rT") return rho_times(obj_args(1)[0]);
        if (k == "gP") {
            auto a = obj_args(2);
            return gamma_plus(a[0], a[1]);
        }
        if (k == "gT") {
            auto a = obj_args(2);
            return gamma_times(a[0], a[1]);
        }
        if (k == "delta") {
            auto a = obj_args(3);
            return delta(a[0], a[1], a[2]);
        }
        if (k == "eps") return epsilon(obj_args(1)[0]);
        throw ParseError(t.line, t.col, "unknown morphism '" + k + "'");
    }
};

// splits into lines, keeping 1-based numbers
std::vector<std::pair<std::size_t, std::string_view>> split_lines(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string_view>> out;
    std::size_t line = 1, start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == '\n') {
            out.emplace_back(line, text.substr(start, i - start));
            start = i + 1;
            ++line;
        }
    }
    return out;
}

}  // namespace

Obj parse_object(std::string_view text) {
    Parser p(text, 1);
    Obj o = p.obj();
    p.expect_end();
    return o;
}

Morph parse_morphism(std::string_view text) {
    Parser p(text, 1);
    Morph m = p.morph();
    p.expect_end();
    return m;
}

BraidWord parse_braid(std::string_view text, int strands) {
    Parser p(text, 1);
    BraidWord w;
    int need = 1;
    while (p.peek().kind != Tk::End) {
        const Tok t = p.expect(Tk::Ident, "a generator like s1");
        if (t.text.size() < 2 || t.text[0] != 's' ||
            !std::all_of(t.text.begin() + 1, t.text.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw ParseError(t.line, t.col, "unknown generator '" + t.text + "'");
        const int idx = std::stoi(t.text.substr(1));
        if (idx < 1) throw ParseError(t.line, t.col, "generator indices start at s1");
        const int sign = p.accept(Tk::Quote) ? -1 : 1;
        w.gens.push_back({idx, sign});
        need = std::max(need, idx + 1);
    }
    if (strands == 0) {
        w.strands = need;
    } else if (strands < need) {
        throw ParseError(1, 1,
                         "word needs at least " + std::to_string(need) + " strands, got " +
                             std::to_string(strands));
    } else {
        w.strands = strands;
    }
    return w;
}

Assignment parse_assignment_text(std::string_view text) {
    Assignment asg;
    for (auto [no, line] : split_lines(text)) {
        Parser p(line, no);
        if (p.peek().kind == Tk::End) continue;
        const Tok name = p.expect(Tk::Ident, "an atom name");
        p.expect(Tk::Equals, "'='");
        GradedBasis degrees;
        if (p.peek().kind != Tk::End) {
            degrees.push_back(static_cast<int>(p.expect(Tk::Int, "a degree").value));
            while (p.accept(Tk::Comma))
                degrees.push_back(static_cast<int>(p.expect(Tk::Int, "a degree").value));
        }
        p.expect_end();
        asg.atoms[name.text] = std::move(degrees);
    }
    return asg;
}

void apply_atom_spec(Assignment& asg, std::string_view spec) {
    Parser p(spec, 1);
    const Tok name = p.expect(Tk::Ident, "an atom name");
    p.expect(Tk::Equals, "'='");
    GradedBasis degrees;
    if (p.peek().kind != Tk::End) {
        degrees.push_back(static_cast<int>(p.expect(Tk::Int, "a degree").value));
        while (p.accept(Tk::Comma))
            degrees.push_back(static_cast<int>(p.expect(Tk::Int, "a degree").value));
    }
    p.expect_end();
    asg.atoms[name.text] = std::move(degrees);
}

Diagram parse_diagram_file(std::string_view text) {
    std::string name;
    std::vector<Obj> vertices;
    std::vector<Edge> edges;
    enum { Preamble, Vertices, Edges } state = Preamble;
    bool saw_name = false;

    for (auto [no, line] : split_lines(text)) {
        Parser p(line, no);
        if (p.peek().kind == Tk::End) continue;

        if (p.peek().kind == Tk::Ident && p.peek().text == "diagram" && state == Preamble) {
            ++p.pos;
            name = p.expect(Tk::Ident, "a diagram name").text;
            p.expect_end();
            saw_name = true;
            continue;
        }
        if (p.peek().kind == Tk::Ident && p.peek().text == "vertices" &&
            p.peek(1).kind == Tk::Colon) {
            p.pos += 2;
            p.expect_end();
            state = Vertices;
            continue;
        }
        if (p.peek().kind == Tk::Ident && p.peek().text == "edges" &&
            p.peek(1).kind == Tk::Colon) {
            p.pos += 2;
            p.expect_end();
            state = Edges;
            continue;
        }
        if (state == Vertices) {
            vertices.push_back(p.obj());
            p.expect_end();
        } else if (state == Edges) {
            const Tok s = p.expect(Tk::Int, "a source vertex index");
            p.expect(Tk::Arrow, "'->'");
            const Tok d = p.expect(Tk::Int, "a target vertex index");
            p.expect(Tk::Colon, "':'");
            Morph m = p.morph();
            p.expect_end();
            if (s.value < 0 || static_cast<std::size_t>(s.value) >= vertices.size())
                throw ParseError(s.line, s.col, "vertex index out of range");
            if (d.value < 0 || static_cast<std::size_t>(d.value) >= vertices.size())
                throw ParseError(d.line, d.col, "vertex index out of range");
            edges.push_back({static_cast<std::size_t>(s.value),
                             static_cast<std::size_t>(d.value), std::move(m)});
        } else {
            p.fail("expected 'diagram NAME', 'vertices:' or 'edges:'");
        }
    }
    if (!saw_name) throw ParseError(1, 1, "missing 'diagram NAME' header");
    return Diagram::make(std::move(name), std::move(vertices), std::move(edges));
}

}  // namespace braidcoh
