#include "emst/lang.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <sstream>

namespace emst::lang {

SyntaxError::SyntaxError(int line_, int col_, const std::string& expected_)
    : Error("syntax error at " + std::to_string(line_) + ":" + std::to_string(col_) +
            ": expected " + expected_),
      line(line_), col(col_), expected(expected_) {}

namespace {
const char* analysis_kind_text(AnalysisError::Kind k) {
    switch (k) {
        case AnalysisError::Kind::UndeclaredVariable: return "undeclared variable";
        case AnalysisError::Kind::DuplicateDeclaration: return "duplicate declaration";
        case AnalysisError::Kind::KindMismatch: return "scalar/array misuse";
        case AnalysisError::Kind::ExpressionTooDeep: return "expression too deep";
    }
    return "analysis error";
}
} // namespace

AnalysisError::AnalysisError(Kind kind_, const std::string& name_, int line_)
    : Error(std::string(analysis_kind_text(kind_)) + " '" + name_ + "' at line " +
            std::to_string(line_)),
      kind(kind_), name(name_), line(line_) {}

const char* binop_text(BinOp op) {
    switch (op) {
        case BinOp::Add: return "+";
        case BinOp::Sub: return "-";
        case BinOp::Lt: return "<";
        case BinOp::Gt: return ">";
        case BinOp::Eq: return "=";
        case BinOp::Le: return "<=";
        case BinOp::Ge: return ">=";
        case BinOp::Ne: return "!=";
        case BinOp::And: return "and";
        case BinOp::Or: return "or";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

struct Token {
    enum class Kind { Eof, Ident, Int, Sym };
    Kind kind = Kind::Eof;
    std::string text;
    int value = 0;
    int line = 1, col = 1;
};

bool is_keyword(const std::string& s) {
    static const char* kw[] = {"var", "if", "else", "while", "repeat", "until",
                               "swap", "read", "write", "halt", "and", "or",
                               "not", "from", "to"};
    return std::find_if(std::begin(kw), std::end(kw),
                        [&](const char* k) { return s == k; }) != std::end(kw);
}

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance_token(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance_token();
        return t;
    }

private:
    void advance_token() {
        skip_ws();
        tok_ = Token{};
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= text_.size()) {
            tok_.kind = Token::Kind::Eof;
            tok_.text = "end of input";
            return;
        }
        unsigned char c = text_[pos_];
        if (std::isalpha(c) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                bump();
            tok_.kind = Token::Kind::Ident;
            tok_.text = text_.substr(start, pos_ - start);
            return;
        }
        if (std::isdigit(c)) {
            long v = 0;
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                v = v * 10 + (text_[pos_] - '0');
                if (v > 32767) throw SyntaxError(tok_.line, tok_.col, "integer literal in 0..32767");
                bump();
            }
            tok_.kind = Token::Kind::Int;
            tok_.text = text_.substr(start, pos_ - start);
            tok_.value = static_cast<int>(v);
            return;
        }
        // Multi-byte comparison glyphs and two-character operators.
        static const struct { const char* seq; const char* out; } multi[] = {
            {"<=", "<="}, {">=", ">="}, {"!=", "!="},
            {"\xE2\x89\xA4", "<="}, {"\xE2\x89\xA5", ">="}, {"\xE2\x89\xA0", "!="},
        };
        for (const auto& m : multi) {
            size_t n = std::strlen(m.seq);
            if (text_.compare(pos_, n, m.seq) == 0) {
                tok_.kind = Token::Kind::Sym;
                tok_.text = m.out;
                for (size_t i = 0; i < n; ++i) bump();
                return;
            }
        }
        static const char singles[] = ";,[]{}()=+-<>";
        if (std::strchr(singles, c) != nullptr) {
            tok_.kind = Token::Kind::Sym;
            tok_.text = std::string(1, static_cast<char>(c));
            bump();
            return;
        }
        throw SyntaxError(line_, col_, "token");
    }

    void skip_ws() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n')
                bump();
            else
                break;
        }
    }

    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

// ---------------------------------------------------------------------------
// Parser

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    Ast run() {
        Ast ast;
        while (is_ident("var")) ast.decls.push_back(decl());
        while (lex_.peek().kind != Token::Kind::Eof) ast.stmts.push_back(stmt());
        return ast;
    }

private:
    bool is_ident(const char* s) const {
        return lex_.peek().kind == Token::Kind::Ident && lex_.peek().text == s;
    }
    bool is_sym(const char* s) const {
        return lex_.peek().kind == Token::Kind::Sym && lex_.peek().text == s;
    }

    Token expect_sym(const char* s) {
        if (!is_sym(s)) fail(std::string("'") + s + "'");
        return lex_.take();
    }
    Token expect_kw(const char* s) {
        if (!is_ident(s)) fail(std::string("'") + s + "'");
        return lex_.take();
    }
    Token expect_name() {
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::Ident || is_keyword(t.text)) fail("identifier");
        return lex_.take();
    }
    Token expect_int() {
        if (lex_.peek().kind != Token::Kind::Int) fail("integer");
        return lex_.take();
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw SyntaxError(lex_.peek().line, lex_.peek().col, what);
    }

    Decl decl() {
        Token kw = lex_.take(); // var
        Token name = expect_name();
        Decl d;
        d.name = name.text;
        d.line = kw.line;
        d.col = kw.col;
        if (is_sym("[")) {
            lex_.take();
            Token len = expect_int();
            if (len.value < 1) throw SyntaxError(len.line, len.col, "array length of at least 1");
            d.is_array = true;
            d.length = len.value;
            expect_sym("]");
        }
        expect_sym(";");
        return d;
    }

    LValue lvalue() {
        Token name = expect_name();
        LValue lv;
        lv.name = name.text;
        lv.line = name.line;
        lv.col = name.col;
        if (is_sym("[")) {
            lex_.take();
            lv.index = expr();
            expect_sym("]");
        }
        return lv;
    }

    std::vector<StmtPtr> block() {
        expect_sym("{");
        std::vector<StmtPtr> out;
        while (!is_sym("}")) out.push_back(stmt());
        lex_.take();
        return out;
    }

    int port_suffix(const char* kw) {
        if (is_ident(kw)) {
            lex_.take();
            Token p = expect_int();
            if (p.value > 7) throw SyntaxError(p.line, p.col, "port in 0..7");
            return p.value;
        }
        return 0;
    }

    StmtPtr stmt() {
        const Token& t = lex_.peek();
        auto s = std::make_unique<Stmt>();
        s->line = t.line;
        s->col = t.col;
        if (t.kind != Token::Kind::Ident) fail("statement");
        if (t.text == "if") {
            lex_.take();
            s->kind = Stmt::Kind::If;
            s->expr = expr();
            s->body = block();
            if (is_ident("else")) {
                lex_.take();
                s->else_body = block();
            }
            return s;
        }
        if (t.text == "while") {
            lex_.take();
            s->kind = Stmt::Kind::While;
            s->expr = expr();
            s->body = block();
            return s;
        }
        if (t.text == "repeat") {
            lex_.take();
            s->kind = Stmt::Kind::RepeatUntil;
            s->body = block();
            expect_kw("until");
            s->expr = expr();
            expect_sym(";");
            return s;
        }
        if (t.text == "swap") {
            lex_.take();
            s->kind = Stmt::Kind::Swap;
            s->target = lvalue();
            expect_sym(",");
            s->target2 = lvalue();
            expect_sym(";");
            return s;
        }
        if (t.text == "read") {
            lex_.take();
            s->kind = Stmt::Kind::Read;
            s->target = lvalue();
            s->port = port_suffix("from");
            expect_sym(";");
            return s;
        }
        if (t.text == "write") {
            lex_.take();
            s->kind = Stmt::Kind::Write;
            s->expr = expr();
            s->port = port_suffix("to");
            expect_sym(";");
            return s;
        }
        if (t.text == "halt") {
            lex_.take();
            s->kind = Stmt::Kind::Halt;
            expect_sym(";");
            return s;
        }
        if (is_keyword(t.text)) fail("statement");
        s->kind = Stmt::Kind::Assign;
        s->target = lvalue();
        expect_sym("=");
        s->expr = expr();
        expect_sym(";");
        return s;
    }

    ExprPtr expr() { return or_expr(); }

    ExprPtr binary(BinOp op, ExprPtr l, ExprPtr r, int line, int col) {
        auto e = std::make_unique<Expr>();
        e->kind = Expr::Kind::Binary;
        e->bop = op;
        e->lhs = std::move(l);
        e->rhs = std::move(r);
        e->line = line;
        e->col = col;
        return e;
    }

    ExprPtr or_expr() {
        ExprPtr e = and_expr();
        while (is_ident("or")) {
            Token t = lex_.take();
            e = binary(BinOp::Or, std::move(e), and_expr(), t.line, t.col);
        }
        return e;
    }

    ExprPtr and_expr() {
        ExprPtr e = not_expr();
        while (is_ident("and")) {
            Token t = lex_.take();
            e = binary(BinOp::And, std::move(e), not_expr(), t.line, t.col);
        }
        return e;
    }

    ExprPtr not_expr() {
        if (is_ident("not")) {
            Token t = lex_.take();
            auto e = std::make_unique<Expr>();
            e->kind = Expr::Kind::Unary;
            e->uop = UnOp::Not;
            e->lhs = not_expr();
            e->line = t.line;
            e->col = t.col;
            return e;
        }
        return cmp_expr();
    }

    ExprPtr cmp_expr() {
        ExprPtr e = add_expr();
        static const struct { const char* sym; BinOp op; } cmps[] = {
            {"<=", BinOp::Le}, {">=", BinOp::Ge}, {"!=", BinOp::Ne},
            {"<", BinOp::Lt},  {">", BinOp::Gt},  {"=", BinOp::Eq},
        };
        for (const auto& c : cmps) {
            if (is_sym(c.sym)) {
                Token t = lex_.take();
                return binary(c.op, std::move(e), add_expr(), t.line, t.col);
            }
        }
        return e;
    }

    ExprPtr add_expr() {
        ExprPtr e = primary();
        while (is_sym("+") || is_sym("-")) {
            Token t = lex_.take();
            BinOp op = t.text == "+" ? BinOp::Add : BinOp::Sub;
            e = binary(op, std::move(e), primary(), t.line, t.col);
        }
        return e;
    }

    ExprPtr primary() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::Int) {
            Token v = lex_.take();
            auto e = std::make_unique<Expr>();
            e->kind = Expr::Kind::IntLit;
            e->value = v.value;
            e->line = v.line;
            e->col = v.col;
            return e;
        }
        if (is_sym("(")) {
            lex_.take();
            ExprPtr e = expr();
            expect_sym(")");
            return e;
        }
        if (t.kind == Token::Kind::Ident && !is_keyword(t.text)) {
            Token name = lex_.take();
            auto e = std::make_unique<Expr>();
            e->name = name.text;
            e->line = name.line;
            e->col = name.col;
            if (is_sym("[")) {
                lex_.take();
                e->kind = Expr::Kind::Index;
                e->index = expr();
                expect_sym("]");
            } else {
                e->kind = Expr::Kind::Var;
            }
            return e;
        }
        fail("expression");
    }

    Lexer lex_;
};

} // namespace

Ast parse(const SourceProgram& src) {
    Parser p(src.text);
    return p.run();
}

// ---------------------------------------------------------------------------
// Structural equality and cloning

bool equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Expr::Kind::IntLit: return a.value == b.value;
        case Expr::Kind::Var: return a.name == b.name;
        case Expr::Kind::Index: return a.name == b.name && equal(*a.index, *b.index);
        case Expr::Kind::Binary:
            return a.bop == b.bop && equal(*a.lhs, *b.lhs) && equal(*a.rhs, *b.rhs);
        case Expr::Kind::Unary: return a.uop == b.uop && equal(*a.lhs, *b.lhs);
    }
    return false;
}

namespace {

bool equal_lv(const LValue& a, const LValue& b) {
    if (a.name != b.name) return false;
    if ((a.index == nullptr) != (b.index == nullptr)) return false;
    return a.index == nullptr || equal(*a.index, *b.index);
}

bool equal_stmts(const std::vector<StmtPtr>& a, const std::vector<StmtPtr>& b);

bool equal_stmt(const Stmt& a, const Stmt& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Stmt::Kind::Assign:
            return equal_lv(a.target, b.target) && equal(*a.expr, *b.expr);
        case Stmt::Kind::If:
            return equal(*a.expr, *b.expr) && equal_stmts(a.body, b.body) &&
                   equal_stmts(a.else_body, b.else_body);
        case Stmt::Kind::While:
        case Stmt::Kind::RepeatUntil:
            return equal(*a.expr, *b.expr) && equal_stmts(a.body, b.body);
        case Stmt::Kind::Swap:
            return equal_lv(a.target, b.target) && equal_lv(a.target2, b.target2);
        case Stmt::Kind::Read:
            return equal_lv(a.target, b.target) && a.port == b.port;
        case Stmt::Kind::Write:
            return equal(*a.expr, *b.expr) && a.port == b.port;
        case Stmt::Kind::Halt:
            return true;
    }
    return false;
}

bool equal_stmts(const std::vector<StmtPtr>& a, const std::vector<StmtPtr>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!equal_stmt(*a[i], *b[i])) return false;
    return true;
}

ExprPtr clone_expr(const Expr& e) {
    auto out = std::make_unique<Expr>();
    out->kind = e.kind;
    out->line = e.line;
    out->col = e.col;
    out->value = e.value;
    out->name = e.name;
    out->bop = e.bop;
    out->uop = e.uop;
    if (e.index) out->index = clone_expr(*e.index);
    if (e.lhs) out->lhs = clone_expr(*e.lhs);
    if (e.rhs) out->rhs = clone_expr(*e.rhs);
    return out;
}

LValue clone_lv(const LValue& lv) {
    LValue out;
    out.name = lv.name;
    out.line = lv.line;
    out.col = lv.col;
    if (lv.index) out.index = clone_expr(*lv.index);
    return out;
}

StmtPtr clone_stmt(const Stmt& s) {
    auto out = std::make_unique<Stmt>();
    out->kind = s.kind;
    out->line = s.line;
    out->col = s.col;
    out->target = clone_lv(s.target);
    out->target2 = clone_lv(s.target2);
    out->port = s.port;
    if (s.expr) out->expr = clone_expr(*s.expr);
    for (const auto& c : s.body) out->body.push_back(clone_stmt(*c));
    for (const auto& c : s.else_body) out->else_body.push_back(clone_stmt(*c));
    return out;
}

} // namespace

bool equal(const Ast& a, const Ast& b) {
    if (a.decls.size() != b.decls.size()) return false;
    for (size_t i = 0; i < a.decls.size(); ++i) {
        const Decl& da = a.decls[i];
        const Decl& db = b.decls[i];
        if (da.name != db.name || da.is_array != db.is_array || da.length != db.length)
            return false;
    }
    return equal_stmts(a.stmts, b.stmts);
}

Ast clone(const Ast& a) {
    Ast out;
    out.decls = a.decls;
    for (const auto& s : a.stmts) out.stmts.push_back(clone_stmt(*s));
    return out;
}

// ---------------------------------------------------------------------------
// Analysis

namespace {

bool is_comparison(BinOp op) {
    switch (op) {
        case BinOp::Lt:
        case BinOp::Gt:
        case BinOp::Eq:
        case BinOp::Le:
        case BinOp::Ge:
        case BinOp::Ne:
            return true;
        default:
            return false;
    }
}

// Registers needed to evaluate an expression with the code generator's
// stack-of-temporaries scheme. Comparisons use one scratch register for the
// overflow-corrected sign test; array reads use one for the bounds check.
int reg_need(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::IntLit:
        case Expr::Kind::Var:
            return 1;
        case Expr::Kind::Index:
            return reg_need(*e.index) + 1;
        case Expr::Kind::Unary:
            return reg_need(*e.lhs);
        case Expr::Kind::Binary: {
            int n = std::max(reg_need(*e.lhs), reg_need(*e.rhs) + 1);
            return is_comparison(e.bop) ? n + 1 : n;
        }
    }
    return 1;
}

class Analyzer {
public:
    explicit Analyzer(const Ast& ast) : ast_(ast) {}

    std::map<std::string, Symbol> run() {
        for (const Decl& d : ast_.decls) {
            if (symbols_.count(d.name))
                throw AnalysisError(AnalysisError::Kind::DuplicateDeclaration, d.name, d.line);
            Symbol s;
            s.is_array = d.is_array;
            s.length = d.is_array ? d.length : 1;
            s.decl_line = d.line;
            symbols_.emplace(d.name, s);
        }
        stmts(ast_.stmts);
        return symbols_;
    }

private:
    const Symbol& lookup(const std::string& name, int line) const {
        auto it = symbols_.find(name);
        if (it == symbols_.end())
            throw AnalysisError(AnalysisError::Kind::UndeclaredVariable, name, line);
        return it->second;
    }

    void expr(const Expr& e) {
        switch (e.kind) {
            case Expr::Kind::IntLit:
                return;
            case Expr::Kind::Var:
                if (lookup(e.name, e.line).is_array)
                    throw AnalysisError(AnalysisError::Kind::KindMismatch, e.name, e.line);
                return;
            case Expr::Kind::Index:
                if (!lookup(e.name, e.line).is_array)
                    throw AnalysisError(AnalysisError::Kind::KindMismatch, e.name, e.line);
                expr(*e.index);
                return;
            case Expr::Kind::Unary:
                expr(*e.lhs);
                return;
            case Expr::Kind::Binary:
                expr(*e.lhs);
                expr(*e.rhs);
                return;
        }
    }

    void lvalue(const LValue& lv) {
        const Symbol& s = lookup(lv.name, lv.line);
        if (s.is_array != (lv.index != nullptr))
            throw AnalysisError(AnalysisError::Kind::KindMismatch, lv.name, lv.line);
        if (lv.index) expr(*lv.index);
    }

    void check_depth(int need, int line) {
        if (need > 6)
            throw AnalysisError(AnalysisError::Kind::ExpressionTooDeep, "", line);
    }

    int lv_need(const LValue& lv, int base) const {
        // Index evaluated at stack offset `base`, plus the bounds-check temp.
        return lv.index ? base + reg_need(*lv.index) + 1 : base;
    }

    void stmt(const Stmt& s) {
        switch (s.kind) {
            case Stmt::Kind::Assign:
                lvalue(s.target);
                expr(*s.expr);
                check_depth(std::max(reg_need(*s.expr), lv_need(s.target, 1)), s.line);
                return;
            case Stmt::Kind::If:
            case Stmt::Kind::While:
            case Stmt::Kind::RepeatUntil:
                expr(*s.expr);
                check_depth(reg_need(*s.expr), s.line);
                stmts(s.body);
                stmts(s.else_body);
                return;
            case Stmt::Kind::Swap:
                lvalue(s.target);
                lvalue(s.target2);
                check_depth(std::max({lv_need(s.target, 0) + 1, lv_need(s.target2, 1) + 1, 4}),
                            s.line);
                return;
            case Stmt::Kind::Read:
                lvalue(s.target);
                check_depth(lv_need(s.target, 1), s.line);
                return;
            case Stmt::Kind::Write:
                expr(*s.expr);
                check_depth(reg_need(*s.expr), s.line);
                return;
            case Stmt::Kind::Halt:
                return;
        }
    }

    void stmts(const std::vector<StmtPtr>& list) {
        for (const auto& s : list) stmt(*s);
    }

    const Ast& ast_;
    std::map<std::string, Symbol> symbols_;
};

} // namespace

CheckedProgram analyze(Ast ast, const std::string& name) {
    Analyzer a(ast);
    CheckedProgram p;
    p.symbols = a.run();
    p.ast = std::move(ast);
    p.name = name;
    return p;
}

// ---------------------------------------------------------------------------
// Pretty printer

namespace {

int prec(const Expr& e) {
    if (e.kind == Expr::Kind::Unary) return 3;
    if (e.kind != Expr::Kind::Binary) return 6;
    switch (e.bop) {
        case BinOp::Or: return 1;
        case BinOp::And: return 2;
        case BinOp::Add:
        case BinOp::Sub: return 5;
        default: return 4; // comparisons
    }
}

void print_expr(std::ostream& os, const Expr& e, int ctx);

void print_child(std::ostream& os, const Expr& child, int parent_prec, bool right) {
    int p = prec(child);
    bool parens = p < parent_prec || (right && p == parent_prec);
    if (parens) os << "(";
    print_expr(os, child, 0);
    if (parens) os << ")";
}

void print_expr(std::ostream& os, const Expr& e, int) {
    switch (e.kind) {
        case Expr::Kind::IntLit:
            os << e.value;
            return;
        case Expr::Kind::Var:
            os << e.name;
            return;
        case Expr::Kind::Index:
            os << e.name << "[";
            print_expr(os, *e.index, 0);
            os << "]";
            return;
        case Expr::Kind::Unary: {
            os << "not ";
            int p = prec(*e.lhs);
            bool parens = p < 3;
            if (parens) os << "(";
            print_expr(os, *e.lhs, 0);
            if (parens) os << ")";
            return;
        }
        case Expr::Kind::Binary: {
            int my = prec(e);
            print_child(os, *e.lhs, my, false);
            os << " " << binop_text(e.bop) << " ";
            print_child(os, *e.rhs, my, true);
            return;
        }
    }
}

void print_lv(std::ostream& os, const LValue& lv) {
    os << lv.name;
    if (lv.index) {
        os << "[";
        print_expr(os, *lv.index, 0);
        os << "]";
    }
}

void print_stmts(std::ostream& os, const std::vector<StmtPtr>& list, int indent);

void print_stmt(std::ostream& os, const Stmt& s, int indent) {
    std::string pad(static_cast<size_t>(indent) * 4, ' ');
    os << pad;
    switch (s.kind) {
        case Stmt::Kind::Assign:
            print_lv(os, s.target);
            os << " = ";
            print_expr(os, *s.expr, 0);
            os << ";\n";
            return;
        case Stmt::Kind::If:
            os << "if ";
            print_expr(os, *s.expr, 0);
            os << " {\n";
            print_stmts(os, s.body, indent + 1);
            os << pad << "}";
            if (!s.else_body.empty()) {
                os << " else {\n";
                print_stmts(os, s.else_body, indent + 1);
                os << pad << "}";
            }
            os << "\n";
            return;
        case Stmt::Kind::While:
            os << "while ";
            print_expr(os, *s.expr, 0);
            os << " {\n";
            print_stmts(os, s.body, indent + 1);
            os << pad << "}\n";
            return;
        case Stmt::Kind::RepeatUntil:
            os << "repeat {\n";
            print_stmts(os, s.body, indent + 1);
            os << pad << "} until ";
            print_expr(os, *s.expr, 0);
            os << ";\n";
            return;
        case Stmt::Kind::Swap:
            os << "swap ";
            print_lv(os, s.target);
            os << ", ";
            print_lv(os, s.target2);
            os << ";\n";
            return;
        case Stmt::Kind::Read:
            os << "read ";
            print_lv(os, s.target);
            if (s.port != 0) os << " from " << s.port;
            os << ";\n";
            return;
        case Stmt::Kind::Write:
            os << "write ";
            print_expr(os, *s.expr, 0);
            if (s.port != 0) os << " to " << s.port;
            os << ";\n";
            return;
        case Stmt::Kind::Halt:
            os << "halt;\n";
            return;
    }
}

void print_stmts(std::ostream& os, const std::vector<StmtPtr>& list, int indent) {
    for (const auto& s : list) print_stmt(os, *s, indent);
}

} // namespace

SourceProgram pretty_print(const Ast& ast, const std::string& name) {
    std::ostringstream os;
    for (const Decl& d : ast.decls) {
        os << "var " << d.name;
        if (d.is_array) os << "[" << d.length << "]";
        os << ";\n";
    }
    print_stmts(os, ast.stmts, 0);
    return SourceProgram{name, os.str()};
}

} // namespace emst::lang
