#pragma once
// Abstract syntax of the sequential Core Erlang subset: literals, patterns,
// expressions and clauses, plus static well-formedness and free variables.

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace cerl {

// ---------------------------------------------------------------- literals

struct Atom {
    std::string text;
    bool operator==(const Atom&) const = default;
};
struct Integer {
    std::int64_t value = 0;
    bool operator==(const Integer&) const = default;
};
struct EmptyList {
    bool operator==(const EmptyList&) const = default;
};
struct EmptyTuple {
    bool operator==(const EmptyTuple&) const = default;
};
struct EmptyMap {
    bool operator==(const EmptyMap&) const = default;
};

// No float alternative: integer arithmetic is all the subset needs.
using Literal = std::variant<Atom, Integer, EmptyList, EmptyTuple, EmptyMap>;

struct FunctionIdentifier {
    std::string name;
    std::size_t arity = 0;
    bool operator==(const FunctionIdentifier&) const = default;
};
bool operator<(const FunctionIdentifier& a, const FunctionIdentifier& b);
std::string render_funid(const FunctionIdentifier& fid);  // 'name'/arity

// ---------------------------------------------------------------- patterns

struct Pattern;
using PatternPtr = std::shared_ptr<const Pattern>;

struct PVar {
    std::string name;
};
struct PLiteral {
    Literal lit;
};
struct PList {
    PatternPtr head;
    PatternPtr tail;
};
struct PTuple {
    std::vector<PatternPtr> elements;
};

struct Pattern {
    std::variant<PVar, PLiteral, PList, PTuple> node;
};

bool operator==(const Pattern& a, const Pattern& b);

// -------------------------------------------------------------- expressions

struct Expression;
using ExprPtr = std::shared_ptr<const Expression>;

struct Clause {
    PatternPtr pattern;
    ExprPtr guard;
    ExprPtr body;
};

// One function definition of a letrec: parameter list plus body.
struct FunDef {
    std::vector<std::string> params;
    ExprPtr body;
};

struct ELiteral {
    Literal lit;
};
struct EVar {
    std::string name;
};
struct EFunSig {
    FunctionIdentifier fid;
};
struct EFun {
    std::vector<std::string> params;
    ExprPtr body;
};
struct EList {
    ExprPtr head;
    ExprPtr tail;
};
struct ETuple {
    std::vector<ExprPtr> elements;
};
struct ECall {
    std::string fname;
    std::vector<ExprPtr> args;
};
struct EApply {
    ExprPtr target;
    std::vector<ExprPtr> args;
};
struct ECase {
    ExprPtr scrutinee;
    std::vector<Clause> clauses;
};
struct ELet {
    std::vector<std::string> vars;
    std::vector<ExprPtr> binds;
    ExprPtr body;
};
struct ELetrec {
    std::vector<FunctionIdentifier> fnames;
    std::vector<FunDef> funs;
    ExprPtr body;
};
struct EMap {
    std::vector<ExprPtr> keys;
    std::vector<ExprPtr> values;
};

struct Expression {
    std::variant<ELiteral, EVar, EFunSig, EFun, EList, ETuple, ECall, EApply,
                 ECase, ELet, ELetrec, EMap>
        node;
};

// Deep structural equality (shared_ptr children are compared by value).
bool operator==(const Expression& a, const Expression& b);
bool operator==(const Clause& a, const Clause& b);
bool operator==(const FunDef& a, const FunDef& b);

// ---------------------------------------------------------------- builders

PatternPtr pvar(std::string name);
PatternPtr plit(Literal lit);
PatternPtr pint(std::int64_t v);
PatternPtr patom(std::string text);
PatternPtr plist(PatternPtr head, PatternPtr tail);
PatternPtr ptuple(std::vector<PatternPtr> elements);

ExprPtr elit(Literal lit);
ExprPtr eint(std::int64_t v);
ExprPtr eatom(std::string text);
ExprPtr evar(std::string name);
ExprPtr efunsig(std::string name, std::size_t arity);
ExprPtr efun(std::vector<std::string> params, ExprPtr body);
ExprPtr elist(ExprPtr head, ExprPtr tail);
ExprPtr etuple(std::vector<ExprPtr> elements);
ExprPtr ecall(std::string fname, std::vector<ExprPtr> args);
ExprPtr eapply(ExprPtr target, std::vector<ExprPtr> args);
ExprPtr ecase(ExprPtr scrutinee, std::vector<Clause> clauses);
ExprPtr elet(std::vector<std::string> vars, std::vector<ExprPtr> binds,
             ExprPtr body);
ExprPtr eletrec(std::vector<FunctionIdentifier> fnames,
                std::vector<FunDef> funs, ExprPtr body);
ExprPtr emap(std::vector<ExprPtr> keys, std::vector<ExprPtr> values);

// ------------------------------------------------------------ static checks

enum class DiagCode {
    LengthMismatch,    // let binds/vars, letrec funs/fnames, map keys/values
    NonlinearPattern,  // a variable occurs twice within one pattern
    DuplicateParams,   // fun parameter names are not pairwise distinct
    ArityMismatch,     // letrec fun parameter count differs from its arity
    EmptyAtom,
    EmptyFunctionName,
};
const char* diag_code_name(DiagCode code);

struct Diagnostic {
    std::string path;  // "/" is the root, segments like "/clauses[0]/guard"
    DiagCode code = DiagCode::LengthMismatch;
    std::string detail;
};

// Purely structural; never evaluates anything. Empty result means well formed.
std::vector<Diagnostic> well_formed(const Expression& e);

// Identifiers referenced but not bound within e. Variable names and function
// identifiers live in separate namespaces.
struct FreeVars {
    std::set<std::string> vars;
    std::set<FunctionIdentifier> fun_ids;
    bool operator==(const FreeVars&) const = default;
};
FreeVars free_variables(const Expression& e);

}  // namespace cerl
