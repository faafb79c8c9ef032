#include "cerl/parser.hpp"

#include <cctype>
#include <sstream>

#include "cerl/values.hpp"

namespace cerl {

std::string describe(const ParseError& err) {
    std::ostringstream out;
    out << "parse error at " << err.line << ":" << err.column << ": "
        << err.message;
    if (!err.expected.empty()) {
        out << " (expected ";
        for (std::size_t i = 0; i < err.expected.size(); ++i) {
            if (i) out << ", ";
            out << err.expected[i];
        }
        out << ")";
    }
    return out.str();
}

namespace {

enum class Tok {
    Int,
    Atom,
    Var,
    KwFun,
    KwCall,
    KwApply,
    KwCase,
    KwOf,
    KwWhen,
    KwLet,
    KwIn,
    KwLetrec,
    KwEnd,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    TildeBrace,  // ~{
    BraceTilde,  // }~
    Comma,
    Bar,
    Equals,
    Arrow,     // ->
    MapArrow,  // =>
    Less,
    Greater,
    Slash,
    Colon,
    Eof,
};

const char* tok_name(Tok t) {
    switch (t) {
        case Tok::Int: return "integer";
        case Tok::Atom: return "atom";
        case Tok::Var: return "variable";
        case Tok::KwFun: return "'fun'";
        case Tok::KwCall: return "'call'";
        case Tok::KwApply: return "'apply'";
        case Tok::KwCase: return "'case'";
        case Tok::KwOf: return "'of'";
        case Tok::KwWhen: return "'when'";
        case Tok::KwLet: return "'let'";
        case Tok::KwIn: return "'in'";
        case Tok::KwLetrec: return "'letrec'";
        case Tok::KwEnd: return "'end'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::LBracket: return "'['";
        case Tok::RBracket: return "']'";
        case Tok::LBrace: return "'{'";
        case Tok::RBrace: return "'}'";
        case Tok::TildeBrace: return "'~{'";
        case Tok::BraceTilde: return "'}~'";
        case Tok::Comma: return "','";
        case Tok::Bar: return "'|'";
        case Tok::Equals: return "'='";
        case Tok::Arrow: return "'->'";
        case Tok::MapArrow: return "'=>'";
        case Tok::Less: return "'<'";
        case Tok::Greater: return "'>'";
        case Tok::Slash: return "'/'";
        case Tok::Colon: return "':'";
        case Tok::Eof: return "end of input";
    }
    return "?";
}

struct Token {
    Tok kind = Tok::Eof;
    std::string text;          // atom/variable spelling
    std::int64_t number = 0;   // integer payload
    int line = 1;
    int column = 1;
};

[[noreturn]] void error_at(int line, int column, std::string message,
                           std::vector<std::string> expected = {}) {
    throw ParseError{line, column, std::move(message), std::move(expected)};
}

class Lexer {
  public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_space_and_comments();
            Token t = next();
            out.push_back(t);
            if (t.kind == Tok::Eof) return out;
        }
    }

  private:
    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;

    bool eof() const { return pos_ >= src_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }
    char advance() {
        char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skip_space_and_comments() {
        for (;;) {
            while (!eof() && std::isspace(static_cast<unsigned char>(peek())))
                advance();
            if (!eof() && peek() == '%') {
                while (!eof() && peek() != '\n') advance();
                continue;
            }
            return;
        }
    }

    Token make(Tok kind, int line, int column) {
        Token t;
        t.kind = kind;
        t.line = line;
        t.column = column;
        return t;
    }

    Token next() {
        const int line = line_;
        const int column = column_;
        if (eof()) return make(Tok::Eof, line, column);
        char c = advance();
        switch (c) {
            case '(': return make(Tok::LParen, line, column);
            case ')': return make(Tok::RParen, line, column);
            case '[': return make(Tok::LBracket, line, column);
            case ']': return make(Tok::RBracket, line, column);
            case '{': return make(Tok::LBrace, line, column);
            case ',': return make(Tok::Comma, line, column);
            case '|': return make(Tok::Bar, line, column);
            case '<': return make(Tok::Less, line, column);
            case '>': return make(Tok::Greater, line, column);
            case '/': return make(Tok::Slash, line, column);
            case ':': return make(Tok::Colon, line, column);
            case '}':
                if (peek() == '~') {
                    advance();
                    return make(Tok::BraceTilde, line, column);
                }
                return make(Tok::RBrace, line, column);
            case '~':
                if (peek() == '{') {
                    advance();
                    return make(Tok::TildeBrace, line, column);
                }
                error_at(line, column, "stray '~'", {"'~{'"});
            case '=':
                if (peek() == '>') {
                    advance();
                    return make(Tok::MapArrow, line, column);
                }
                return make(Tok::Equals, line, column);
            case '-':
                if (peek() == '>') {
                    advance();
                    return make(Tok::Arrow, line, column);
                }
                if (std::isdigit(static_cast<unsigned char>(peek())))
                    return number(line, column, true);
                error_at(line, column, "stray '-'", {"'->'", "integer"});
            case '\'': return atom(line, column);
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            --pos_;  // reuse the digit; column bookkeeping below
            --column_;
            return number(line, column, false);
        }
        if (std::isupper(static_cast<unsigned char>(c))) {
            std::string name(1, c);
            while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                              peek() == '_'))
                name += advance();
            Token t = make(Tok::Var, line, column);
            t.text = std::move(name);
            return t;
        }
        if (std::islower(static_cast<unsigned char>(c))) {
            std::string word(1, c);
            while (!eof() && std::isalpha(static_cast<unsigned char>(peek())))
                word += advance();
            if (word == "fun") return make(Tok::KwFun, line, column);
            if (word == "call") return make(Tok::KwCall, line, column);
            if (word == "apply") return make(Tok::KwApply, line, column);
            if (word == "case") return make(Tok::KwCase, line, column);
            if (word == "of") return make(Tok::KwOf, line, column);
            if (word == "when") return make(Tok::KwWhen, line, column);
            if (word == "let") return make(Tok::KwLet, line, column);
            if (word == "in") return make(Tok::KwIn, line, column);
            if (word == "letrec") return make(Tok::KwLetrec, line, column);
            if (word == "end") return make(Tok::KwEnd, line, column);
            error_at(line, column, "unknown word '" + word + "'",
                     {"keyword", "quoted atom"});
        }
        error_at(line, column, std::string("unexpected character '") + c + "'");
    }

    Token number(int line, int column, bool negative) {
        std::string digits;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek())))
            digits += advance();
        Token t = make(Tok::Int, line, column);
        try {
            t.number = std::stoll((negative ? "-" : "") + digits);
        } catch (const std::out_of_range&) {
            error_at(line, column, "integer literal out of range");
        }
        return t;
    }

    Token atom(int line, int column) {
        std::string text;
        for (;;) {
            if (eof())
                error_at(line, column, "unterminated atom", {"'''"});
            char c = advance();
            if (c == '\'') break;
            if (c == '\n')
                error_at(line, column, "unterminated atom", {"'''"});
            text += c;
        }
        if (text.empty())
            error_at(line, column, "atom text must be non-empty");
        if (text.front() == '@')
            error_at(line, column,
                     "atoms starting with '@' are reserved");
        Token t = make(Tok::Atom, line, column);
        t.text = std::move(text);
        return t;
    }
};

class Parser {
  public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    ExprPtr run() {
        ExprPtr e = expr();
        expect(Tok::Eof);
        return e;
    }

  private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;

    const Token& cur() const { return tokens_[pos_]; }
    bool at(Tok kind) const { return cur().kind == kind; }
    Token take() { return tokens_[pos_++]; }

    Token expect(Tok kind) {
        if (!at(kind))
            error_at(cur().line, cur().column,
                     std::string("unexpected ") + tok_name(cur().kind),
                     {tok_name(kind)});
        return take();
    }

    bool eat(Tok kind) {
        if (!at(kind)) return false;
        take();
        return true;
    }

    std::size_t arity() {
        Token t = expect(Tok::Int);
        if (t.number < 0)
            error_at(t.line, t.column, "arity must be non-negative");
        return static_cast<std::size_t>(t.number);
    }

    FunctionIdentifier funid() {
        Token name = expect(Tok::Atom);
        expect(Tok::Slash);
        return FunctionIdentifier{name.text, arity()};
    }

    std::vector<std::string> var_list(Tok close) {
        std::vector<std::string> out;
        if (eat(close)) return out;
        out.push_back(expect(Tok::Var).text);
        while (eat(Tok::Comma)) out.push_back(expect(Tok::Var).text);
        expect(close);
        return out;
    }

    std::vector<ExprPtr> expr_list(Tok close) {
        std::vector<ExprPtr> out;
        if (eat(close)) return out;
        out.push_back(expr());
        while (eat(Tok::Comma)) out.push_back(expr());
        expect(close);
        return out;
    }

    ExprPtr expr() {
        switch (cur().kind) {
            case Tok::Int: return eint(take().number);
            case Tok::Atom: {
                Token a = take();
                if (eat(Tok::Slash)) return efunsig(a.text, arity());
                return eatom(a.text);
            }
            case Tok::Var: return evar(take().text);
            case Tok::LBracket: {
                take();
                if (eat(Tok::RBracket)) return elit(EmptyList{});
                ExprPtr head = expr();
                expect(Tok::Bar);
                ExprPtr tail = expr();
                expect(Tok::RBracket);
                return elist(std::move(head), std::move(tail));
            }
            case Tok::LBrace: {
                take();
                if (eat(Tok::RBrace)) return elit(EmptyTuple{});
                std::vector<ExprPtr> elements;
                elements.push_back(expr());
                while (eat(Tok::Comma)) elements.push_back(expr());
                expect(Tok::RBrace);
                return etuple(std::move(elements));
            }
            case Tok::TildeBrace: {
                take();
                if (eat(Tok::BraceTilde)) return elit(EmptyMap{});
                std::vector<ExprPtr> keys, values;
                keys.push_back(expr());
                expect(Tok::MapArrow);
                values.push_back(expr());
                while (eat(Tok::Comma)) {
                    keys.push_back(expr());
                    expect(Tok::MapArrow);
                    values.push_back(expr());
                }
                expect(Tok::BraceTilde);
                return emap(std::move(keys), std::move(values));
            }
            case Tok::KwFun: return fun();
            case Tok::KwCall: {
                take();
                Token f = expect(Tok::Atom);
                if (eat(Tok::Colon)) {
                    // Module-qualified form: the module atom is accepted
                    // and dropped, only the function name is kept.
                    f = expect(Tok::Atom);
                }
                expect(Tok::LParen);
                auto args = expr_list(Tok::RParen);
                return ecall(f.text, std::move(args));
            }
            case Tok::KwApply: {
                take();
                ExprPtr target = expr();
                expect(Tok::LParen);
                auto args = expr_list(Tok::RParen);
                return eapply(std::move(target), std::move(args));
            }
            case Tok::KwCase: return case_expr();
            case Tok::KwLet: return let_expr();
            case Tok::KwLetrec: return letrec_expr();
            default:
                error_at(cur().line, cur().column,
                         std::string("unexpected ") + tok_name(cur().kind),
                         {"expression"});
        }
    }

    ExprPtr fun() {
        expect(Tok::KwFun);
        expect(Tok::LParen);
        auto params = var_list(Tok::RParen);
        expect(Tok::Arrow);
        ExprPtr body = expr();
        return efun(std::move(params), std::move(body));
    }

    ExprPtr case_expr() {
        take();  // case
        ExprPtr scrutinee = expr();
        expect(Tok::KwOf);
        std::vector<Clause> clauses;
        do {
            PatternPtr p = pattern();
            expect(Tok::KwWhen);
            ExprPtr guard = expr();
            expect(Tok::Arrow);
            ExprPtr body = expr();
            clauses.push_back(
                Clause{std::move(p), std::move(guard), std::move(body)});
        } while (!eat(Tok::KwEnd));
        return ecase(std::move(scrutinee), std::move(clauses));
    }

    ExprPtr let_expr() {
        take();  // let
        std::vector<std::string> vars;
        std::vector<ExprPtr> binds;
        if (eat(Tok::Less)) {
            vars = var_list(Tok::Greater);
            expect(Tok::Equals);
            expect(Tok::Less);
            binds = expr_list(Tok::Greater);
        } else {
            vars.push_back(expect(Tok::Var).text);
            expect(Tok::Equals);
            binds.push_back(expr());
        }
        expect(Tok::KwIn);
        ExprPtr body = expr();
        return elet(std::move(vars), std::move(binds), std::move(body));
    }

    ExprPtr letrec_expr() {
        take();  // letrec
        std::vector<FunctionIdentifier> fnames;
        std::vector<FunDef> funs;
        do {
            fnames.push_back(funid());
            expect(Tok::Equals);
            expect(Tok::KwFun);
            expect(Tok::LParen);
            auto params = var_list(Tok::RParen);
            expect(Tok::Arrow);
            ExprPtr fun_body = expr();
            funs.push_back(FunDef{std::move(params), std::move(fun_body)});
        } while (eat(Tok::Comma));
        expect(Tok::KwIn);
        ExprPtr body = expr();
        return eletrec(std::move(fnames), std::move(funs), std::move(body));
    }

    PatternPtr pattern() {
        switch (cur().kind) {
            case Tok::Int: return pint(take().number);
            case Tok::Atom: return patom(take().text);
            case Tok::Var: return pvar(take().text);
            case Tok::LBracket: {
                take();
                if (eat(Tok::RBracket)) return plit(EmptyList{});
                PatternPtr head = pattern();
                expect(Tok::Bar);
                PatternPtr tail = pattern();
                expect(Tok::RBracket);
                return plist(std::move(head), std::move(tail));
            }
            case Tok::LBrace: {
                take();
                if (eat(Tok::RBrace)) return plit(EmptyTuple{});
                std::vector<PatternPtr> elements;
                elements.push_back(pattern());
                while (eat(Tok::Comma)) elements.push_back(pattern());
                expect(Tok::RBrace);
                return ptuple(std::move(elements));
            }
            case Tok::TildeBrace: {
                take();
                expect(Tok::BraceTilde);  // only the empty-map literal
                return plit(EmptyMap{});
            }
            default:
                error_at(cur().line, cur().column,
                         std::string("unexpected ") + tok_name(cur().kind),
                         {"pattern"});
        }
    }
};

}  // namespace

ParseResult parse_expr(std::string_view src) {
    try {
        return Parser(Lexer(src).run()).run();
    } catch (ParseError& err) {
        return err;
    }
}

std::optional<Literal> parse_literal_text(std::string_view src) {
    auto r = parse_expr(src);
    const auto* e = std::get_if<ExprPtr>(&r);
    if (!e) return std::nullopt;
    const auto* lit = std::get_if<ELiteral>(&(*e)->node);
    if (!lit) return std::nullopt;
    return lit->lit;
}

// -------------------------------------------------------------- formatting

namespace {

void format(const Expression& e, std::ostringstream& out);

void format(const Pattern& p, std::ostringstream& out) {
    if (const auto* v = std::get_if<PVar>(&p.node)) {
        out << v->name;
    } else if (const auto* l = std::get_if<PLiteral>(&p.node)) {
        out << render_literal(l->lit);
    } else if (const auto* c = std::get_if<PList>(&p.node)) {
        out << "[";
        format(*c->head, out);
        out << " | ";
        format(*c->tail, out);
        out << "]";
    } else {
        const auto& t = std::get<PTuple>(p.node);
        out << "{";
        for (std::size_t i = 0; i < t.elements.size(); ++i) {
            if (i) out << ", ";
            format(*t.elements[i], out);
        }
        out << "}";
    }
}

void format_args(const std::vector<ExprPtr>& args, std::ostringstream& out) {
    out << "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) out << ", ";
        format(*args[i], out);
    }
    out << ")";
}

void format_fun(const std::vector<std::string>& params, const Expression& body,
                std::ostringstream& out) {
    out << "fun(";
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) out << ", ";
        out << params[i];
    }
    out << ") -> ";
    format(body, out);
}

void format(const Expression& e, std::ostringstream& out) {
    if (const auto* n = std::get_if<ELiteral>(&e.node)) {
        out << render_literal(n->lit);
    } else if (const auto* n = std::get_if<EVar>(&e.node)) {
        out << n->name;
    } else if (const auto* n = std::get_if<EFunSig>(&e.node)) {
        out << render_funid(n->fid);
    } else if (const auto* n = std::get_if<EFun>(&e.node)) {
        format_fun(n->params, *n->body, out);
    } else if (const auto* n = std::get_if<EList>(&e.node)) {
        out << "[";
        format(*n->head, out);
        out << " | ";
        format(*n->tail, out);
        out << "]";
    } else if (const auto* n = std::get_if<ETuple>(&e.node)) {
        out << "{";
        for (std::size_t i = 0; i < n->elements.size(); ++i) {
            if (i) out << ", ";
            format(*n->elements[i], out);
        }
        out << "}";
    } else if (const auto* n = std::get_if<ECall>(&e.node)) {
        out << "call '" << n->fname << "'";
        format_args(n->args, out);
    } else if (const auto* n = std::get_if<EApply>(&e.node)) {
        out << "apply ";
        format(*n->target, out);
        format_args(n->args, out);
    } else if (const auto* n = std::get_if<ECase>(&e.node)) {
        out << "case ";
        format(*n->scrutinee, out);
        out << " of";
        for (const auto& c : n->clauses) {
            out << " ";
            format(*c.pattern, out);
            out << " when ";
            format(*c.guard, out);
            out << " -> ";
            format(*c.body, out);
        }
        out << " end";
    } else if (const auto* n = std::get_if<ELet>(&e.node)) {
        if (n->vars.size() == 1 && n->binds.size() == 1) {
            out << "let " << n->vars[0] << " = ";
            format(*n->binds[0], out);
        } else {
            out << "let <";
            for (std::size_t i = 0; i < n->vars.size(); ++i) {
                if (i) out << ", ";
                out << n->vars[i];
            }
            out << "> = <";
            for (std::size_t i = 0; i < n->binds.size(); ++i) {
                if (i) out << ", ";
                format(*n->binds[i], out);
            }
            out << ">";
        }
        out << " in ";
        format(*n->body, out);
    } else if (const auto* n = std::get_if<ELetrec>(&e.node)) {
        out << "letrec ";
        for (std::size_t i = 0; i < n->fnames.size(); ++i) {
            if (i) out << ", ";
            out << render_funid(n->fnames[i]) << " = ";
            format_fun(n->funs[i].params, *n->funs[i].body, out);
        }
        out << " in ";
        format(*n->body, out);
    } else {
        const auto& m = std::get<EMap>(e.node);
        out << "~{";
        for (std::size_t i = 0; i < m.keys.size(); ++i) {
            if (i) out << ", ";
            format(*m.keys[i], out);
            out << " => ";
            format(*m.values[i], out);
        }
        out << "}~";
    }
}

}  // namespace

std::string format_expr(const Expression& e) {
    std::ostringstream out;
    format(e, out);
    return out.str();
}

std::string format_expr(const ExprPtr& e) { return format_expr(*e); }

std::string format_pattern(const Pattern& p) {
    std::ostringstream out;
    format(p, out);
    return out.str();
}

}  // namespace cerl
