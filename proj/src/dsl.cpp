#include "speh/dsl.hpp"

#include <cctype>
#include <vector>

namespace speh {

namespace {

struct Token {
    enum class Kind { Ident, Int, LParen, RParen, Comma, Semi, Slash, Minus, Caret, LBrace, RBrace, Star, DotDot, End };
    Kind kind;
    std::string text;
    int line;
    int col;
};

const char* tokenName(Token::Kind k) {
    switch (k) {
        case Token::Kind::Ident: return "identifier";
        case Token::Kind::Int: return "integer";
        case Token::Kind::LParen: return "'('";
        case Token::Kind::RParen: return "')'";
        case Token::Kind::Comma: return "','";
        case Token::Kind::Semi: return "';'";
        case Token::Kind::Slash: return "'/'";
        case Token::Kind::Minus: return "'-'";
        case Token::Kind::Caret: return "'^'";
        case Token::Kind::LBrace: return "'{'";
        case Token::Kind::RBrace: return "'}'";
        case Token::Kind::Star: return "'*'";
        case Token::Kind::DotDot: return "'..'";
        case Token::Kind::End: return "end of input";
    }
    return "?";
}

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    int line = 1;
    int col = 1;
    std::size_t i = 0;
    auto push = [&](Token::Kind k, std::string t, int l, int c) {
        out.push_back(Token{k, std::move(t), l, c});
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            ++col;
            ++i;
            continue;
        }
        int tl = line;
        int tc = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                num += text[i++];
                ++col;
            }
            if (num.size() > 9)
                fail(errc::syntax_error, "integer literal too large", tl, tc);
            push(Token::Kind::Int, std::move(num), tl, tc);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
                id += text[i++];
                ++col;
            }
            push(Token::Kind::Ident, std::move(id), tl, tc);
            continue;
        }
        if (c == '.') {
            if (i + 1 < text.size() && text[i + 1] == '.') {
                push(Token::Kind::DotDot, "..", tl, tc);
                i += 2;
                col += 2;
                continue;
            }
            fail(errc::syntax_error, "unexpected '.'", tl, tc);
        }
        Token::Kind k;
        switch (c) {
            case '(': k = Token::Kind::LParen; break;
            case ')': k = Token::Kind::RParen; break;
            case ',': k = Token::Kind::Comma; break;
            case ';': k = Token::Kind::Semi; break;
            case '/': k = Token::Kind::Slash; break;
            case '-': k = Token::Kind::Minus; break;
            case '^': k = Token::Kind::Caret; break;
            case '{': k = Token::Kind::LBrace; break;
            case '}': k = Token::Kind::RBrace; break;
            case '*': k = Token::Kind::Star; break;
            default:
                fail(errc::syntax_error, std::string("unexpected character '") + c + "'", tl, tc);
        }
        push(k, std::string(1, c), tl, tc);
        ++i;
        ++col;
    }
    push(Token::Kind::End, "", line, col);
    return out;
}

class Parser {
public:
    Parser(const std::string& text, const Alphabet& alphabet)
        : tokens_(lex(text)), alphabet_(alphabet) {}

    Expr parseRepAll() {
        Expr e = parseRep();
        expectEnd();
        return e;
    }

    Expr parseSegmentAll() {
        Expr e = parseSegmentExpr();
        expectEnd();
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_++]; }

    [[noreturn]] void unexpected(const std::string& expected) {
        const Token& t = peek();
        std::string got = t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
        fail(errc::syntax_error, "expected " + expected + ", got " + got, t.line, t.col);
    }

    Token expect(Token::Kind k) {
        if (peek().kind != k) unexpected(tokenName(k));
        return next();
    }

    void expectEnd() {
        if (peek().kind != Token::Kind::End) unexpected("'x' or end of input");
    }

    bool peekIdent(const char* word) const {
        return peek().kind == Token::Kind::Ident && peek().text == word;
    }

    long long parseInt() {
        Token t = expect(Token::Kind::Int);
        return std::stoll(t.text);
    }

    Rat parseRat() {
        bool neg = false;
        while (peek().kind == Token::Kind::Minus) {
            next();
            neg = !neg;
        }
        Token t = expect(Token::Kind::Int);
        long long num = std::stoll(t.text);
        long long den = 1;
        if (peek().kind == Token::Kind::Slash) {
            next();
            Token d = expect(Token::Kind::Int);
            den = std::stoll(d.text);
            if (den == 0) fail(errc::syntax_error, "zero denominator", d.line, d.col);
        }
        return Rat(neg ? -num : num, den);
    }

    std::string parseCuspidalId() {
        const Token& t = peek();
        if (t.kind != Token::Kind::Ident) unexpected("a cuspidal id");
        if (!alphabet_.contains(t.text))
            fail(errc::unknown_symbol, "cuspidal '" + t.text + "' is not declared", t.line, t.col);
        return next().text;
    }

    Expr parseRep() {
        std::vector<Expr> factors;
        Expr first = parseFactor();
        int line = first.line;
        int col = first.col;
        factors.push_back(std::move(first));
        while (peekIdent("x")) {
            next();
            factors.push_back(parseFactor());
        }
        if (factors.size() == 1) return std::move(factors.front());
        Expr e;
        e.kind = Expr::Kind::Product;
        e.line = line;
        e.col = col;
        e.children = std::move(factors);
        return e;
    }

    Expr parseFactor() {
        const Token& t = peek();
        if (t.kind == Token::Kind::Int) {
            if (t.text == "1") {
                Expr e;
                e.kind = Expr::Kind::Trivial;
                e.line = t.line;
                e.col = t.col;
                next();
                return e;
            }
            unexpected("a factor (one of u, pi, St, nu, D, 1)");
        }
        if (peekIdent("u")) return parseSpeh();
        if (peekIdent("pi")) return parseComp();
        if (peekIdent("St") || peekIdent("nu") || peekIdent("D")) return parseSegmentExpr();
        unexpected("a factor (one of u, pi, St, nu, D, 1)");
    }

    Expr parseSpeh() {
        Token u = next(); // "u"
        expect(Token::Kind::LParen);
        Expr seg = parseSegmentExpr();
        expect(Token::Kind::Comma);
        const Token& kTok = peek();
        long long k = parseInt();
        if (k < 1) fail(errc::bad_multiplier, "Speh multiplier must be >= 1", kTok.line, kTok.col);
        if (k > 1000000)
            fail(errc::bad_multiplier, "Speh multiplier too large", kTok.line, kTok.col);
        expect(Token::Kind::RParen);
        Expr e;
        e.kind = Expr::Kind::Speh;
        e.line = u.line;
        e.col = u.col;
        e.number = static_cast<int>(k);
        e.children.push_back(std::move(seg));
        return e;
    }

    Expr parseComp() {
        Token p = next(); // "pi"
        expect(Token::Kind::LParen);
        if (!peekIdent("u")) unexpected("'u(' (complementary factors wrap a Speh factor)");
        Expr speh = parseSpeh();
        expect(Token::Kind::Comma);
        const Token& aTok = peek();
        Rat alpha = parseRat();
        if (!(Rat(0) < alpha && alpha < Rat(1, 2)))
            fail(errc::alpha_out_of_range,
                 "complementary parameter must lie strictly between 0 and 1/2, got " + alpha.str(),
                 aTok.line, aTok.col);
        expect(Token::Kind::RParen);
        Expr e;
        e.kind = Expr::Kind::Comp;
        e.line = p.line;
        e.col = p.col;
        e.a = alpha;
        e.children.push_back(std::move(speh));
        return e;
    }

    Expr parseSegmentExpr() {
        if (peekIdent("St")) {
            Token st = next();
            expect(Token::Kind::LParen);
            std::string id = parseCuspidalId();
            expect(Token::Kind::Comma);
            const Token& lTok = peek();
            long long l = parseInt();
            if (l > 1000000)
                fail(errc::syntax_error, "segment length too large", lTok.line, lTok.col);
            expect(Token::Kind::RParen);
            Expr e;
            e.kind = Expr::Kind::SegmentLit;
            e.line = st.line;
            e.col = st.col;
            e.id = std::move(id);
            e.number = static_cast<int>(l);
            return e;
        }
        if (peekIdent("nu")) {
            Token nu = next();
            expect(Token::Kind::Caret);
            expect(Token::Kind::LBrace);
            Rat shift = parseRat();
            expect(Token::Kind::RBrace);
            expect(Token::Kind::Star);
            Expr seg = parseSegmentExpr();
            Expr e;
            e.kind = Expr::Kind::TwistedSegment;
            e.line = nu.line;
            e.col = nu.col;
            e.a = shift;
            e.children.push_back(std::move(seg));
            return e;
        }
        if (peekIdent("D")) {
            Token d = next();
            expect(Token::Kind::LParen);
            std::string id = parseCuspidalId();
            expect(Token::Kind::Semi);
            Rat lo = parseRat();
            expect(Token::Kind::DotDot);
            const Token& hiTok = peek();
            Rat hi = parseRat();
            expect(Token::Kind::RParen);
            Rat span = hi - lo;
            if (!span.isInteger() || span.num() < 0)
                fail(errc::invalid_endpoints,
                     "endpoints " + lo.str() + ".." + hi.str() +
                         " must differ by a non-negative integer",
                     hiTok.line, hiTok.col);
            Expr e;
            e.kind = Expr::Kind::EndpointSegment;
            e.line = d.line;
            e.col = d.col;
            e.id = std::move(id);
            e.a = lo;
            e.b = hi;
            return e;
        }
        unexpected("a segment (one of St, nu, D)");
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    const Alphabet& alphabet_;
};

SpehFactor lowerSpeh(const Expr& e, const Alphabet& a) {
    if (e.kind != Expr::Kind::Speh || e.children.size() != 1)
        fail(errc::type_error, "Speh factors wrap a segment", e.line, e.col);
    Segment seg = lowerSegment(e.children.front(), a);
    if (seg.trivial())
        fail(errc::non_unitary_segment, "Speh factors need a segment of positive length",
             e.children.front().line, e.children.front().col);
    if (!seg.unitary())
        fail(errc::non_unitary_segment,
             toText(seg) + " is twisted; factors must be unitary", e.children.front().line,
             e.children.front().col);
    return mkSpeh(seg, e.number);
}

void collectFactors(const Expr& e, const Alphabet& a, std::vector<Factor>& out) {
    switch (e.kind) {
        case Expr::Kind::Trivial:
            return;
        case Expr::Kind::Product:
            for (const Expr& c : e.children) collectFactors(c, a, out);
            return;
        case Expr::Kind::Speh:
            out.push_back(lowerSpeh(e, a));
            return;
        case Expr::Kind::Comp: {
            if (e.children.size() != 1 || e.children.front().kind != Expr::Kind::Speh)
                fail(errc::type_error, "complementary factors wrap a Speh factor", e.line, e.col);
            SpehFactor base = lowerSpeh(e.children.front(), a);
            out.push_back(mkComplementary(base.delta, base.k, e.a));
            return;
        }
        case Expr::Kind::SegmentLit:
        case Expr::Kind::TwistedSegment:
        case Expr::Kind::EndpointSegment: {
            Segment seg = lowerSegment(e, a);
            if (seg.trivial()) return; // the trivial representation contributes nothing
            if (!seg.unitary())
                fail(errc::non_unitary_segment,
                     toText(seg) + " is twisted; factors must be unitary", e.line, e.col);
            out.push_back(mkSpeh(seg, 1));
            return;
        }
    }
}

} // namespace

Expr parse(const std::string& text, const Alphabet& alphabet) {
    return Parser(text, alphabet).parseRepAll();
}

Expr parseSegment(const std::string& text, const Alphabet& alphabet) {
    return Parser(text, alphabet).parseSegmentAll();
}

Segment lowerSegment(const Expr& e, const Alphabet& alphabet) {
    switch (e.kind) {
        case Expr::Kind::SegmentLit:
            if (!alphabet.contains(e.id))
                fail(errc::unknown_symbol, "cuspidal '" + e.id + "' is not declared", e.line, e.col);
            return steinberg(alphabet.at(e.id), e.number);
        case Expr::Kind::TwistedSegment:
            if (e.children.size() != 1)
                fail(errc::type_error, "twist wraps a segment", e.line, e.col);
            return twist(lowerSegment(e.children.front(), alphabet), e.a);
        case Expr::Kind::EndpointSegment:
            if (!alphabet.contains(e.id))
                fail(errc::unknown_symbol, "cuspidal '" + e.id + "' is not declared", e.line, e.col);
            return fromEndpoints(alphabet.at(e.id), e.a, e.b);
        default:
            fail(errc::type_error, "expected a segment expression", e.line, e.col);
    }
}

UnitaryRep lower(const Expr& e, const Alphabet& alphabet) {
    std::vector<Factor> factors;
    collectFactors(e, alphabet, factors);
    return UnitaryRep(std::move(factors));
}

std::string printCanonical(const UnitaryRep& r) {
    return toText(r);
}

} // namespace speh
