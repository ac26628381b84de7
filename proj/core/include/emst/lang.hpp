#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "emst/errors.hpp"

// Frontend for the .mhl mini-language: a tiny imperative language whose
// only control constructs are if/else, while, and repeat/until. Integers
// are 16-bit two's complement and wrap on overflow; arrays are statically
// sized and bounds-checked at runtime.
//
// Grammar (EBNF):
//   program := decl* stmt*
//   decl    := "var" ident ("[" int "]")? ";"
//   stmt    := ident ("[" expr "]")? "=" expr ";"
//            | "if" expr "{" stmt* "}" ("else" "{" stmt* "}")?
//            | "while" expr "{" stmt* "}"
//            | "repeat" "{" stmt* "}" "until" expr ";"
//            | "swap" lvalue "," lvalue ";"
//            | "read" lvalue ("from" int)? ";"
//            | "write" expr ("to" int)? ";"
//            | "halt" ";"
// Expressions: integer literals (0..32767), variables, array indexing,
// + and - (left associative), comparisons (< > = <= >= != and the UTF-8
// forms of the last three), "and"/"or"/"not", and parentheses.
// Comparisons yield 1/0. read/write default to port 0.

namespace emst::lang {

struct SourceProgram {
    std::string name;
    std::string text;
};

class SyntaxError : public Error {
public:
    SyntaxError(int line, int col, const std::string& expected);
    int line;
    int col;
    std::string expected;
};

class AnalysisError : public Error {
public:
    enum class Kind { UndeclaredVariable, DuplicateDeclaration, KindMismatch, ExpressionTooDeep };
    AnalysisError(Kind kind, const std::string& name, int line);
    Kind kind;
    std::string name;
    int line;
};

enum class BinOp { Add, Sub, Lt, Gt, Eq, Le, Ge, Ne, And, Or };
enum class UnOp { Not };

const char* binop_text(BinOp op);

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
    enum class Kind { IntLit, Var, Index, Binary, Unary };
    Kind kind = Kind::IntLit;
    int line = 0, col = 0;
    int value = 0;            // IntLit
    std::string name;         // Var, Index
    ExprPtr index;            // Index
    BinOp bop = BinOp::Add;   // Binary
    UnOp uop = UnOp::Not;     // Unary
    ExprPtr lhs, rhs;         // Binary; Unary uses lhs only
};

struct LValue {
    std::string name;
    ExprPtr index;            // null for scalars
    int line = 0, col = 0;
};

struct Stmt;
using StmtPtr = std::unique_ptr<Stmt>;

struct Stmt {
    enum class Kind { Assign, If, While, RepeatUntil, Swap, Read, Write, Halt };
    Kind kind = Kind::Halt;
    int line = 0, col = 0;
    LValue target;                 // Assign, Read, Swap (first operand)
    LValue target2;                // Swap (second operand)
    ExprPtr expr;                  // Assign value, If/While/Until condition, Write value
    std::vector<StmtPtr> body;     // If-then, While, RepeatUntil
    std::vector<StmtPtr> else_body;
    int port = 0;                  // Read, Write
};

struct Decl {
    std::string name;
    bool is_array = false;
    int length = 0;
    int line = 0, col = 0;
};

struct Ast {
    std::vector<Decl> decls;
    std::vector<StmtPtr> stmts;
};

bool equal(const Expr& a, const Expr& b);
bool equal(const Ast& a, const Ast& b);
Ast clone(const Ast& a);

struct Symbol {
    bool is_array = false;
    int length = 1;    // static size in words
    int decl_line = 0;
};

struct CheckedProgram {
    Ast ast;
    std::map<std::string, Symbol> symbols;
    std::string name;
};

// Parses source text. Throws SyntaxError with 1-based line/column on any
// malformed input; never crashes on arbitrary bytes.
Ast parse(const SourceProgram& src);

// Builds the symbol table, rejects undeclared/duplicate identifiers and
// scalar/array misuse, and enforces the temporary-stack depth bound that
// code generation relies on (six registers).
CheckedProgram analyze(Ast ast, const std::string& name = "");

// Canonical text form; parse(pretty_print(a)) is structurally equal to a.
SourceProgram pretty_print(const Ast& ast, const std::string& name = "pretty");

} // namespace emst::lang
