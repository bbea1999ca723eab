// Copyright 2026 The quditc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cctype>
#include <cmath>
#include <deque>
#include <set>

#include "quditc/qasm.hpp"

namespace quditc::qasm {

double eval_expr(const ExprPtr& e, const std::map<std::string, double>& env) {
    switch (e->kind) {
        case Expr::Kind::Number: return e->number;
        case Expr::Kind::Pi: return M_PI;
        case Expr::Kind::Ident: {
            auto it = env.find(e->name);
            if (it == env.end()) {
                throw Error("non-numeric parameter: unbound identifier '" + e->name + "'",
                            e->span);
            }
            return it->second;
        }
        case Expr::Kind::Unary: return -eval_expr(e->args[0], env);
        case Expr::Kind::Binary: {
            const double a = eval_expr(e->args[0], env);
            const double b = eval_expr(e->args[1], env);
            switch (e->op) {
                case '+': return a + b;
                case '-': return a - b;
                case '*': return a * b;
                case '/': return a / b;
                case '^': return std::pow(a, b);
            }
            throw InternalError("unknown binary operator");
        }
        case Expr::Kind::Call: {
            const double a = eval_expr(e->args[0], env);
            if (e->name == "sin") return std::sin(a);
            if (e->name == "cos") return std::cos(a);
            if (e->name == "tan") return std::tan(a);
            if (e->name == "exp") return std::exp(a);
            if (e->name == "ln") return std::log(a);
            if (e->name == "sqrt") return std::sqrt(a);
            throw Error("unknown function '" + e->name + "'", e->span);
        }
    }
    throw InternalError("unreachable expression kind");
}

const GateDef* Program::find_gate(const std::string& name) const {
    auto it = gate_index.find(name);
    return it == gate_index.end() ? nullptr : &gatedefs[it->second];
}

IncludeResolver no_includes() {
    return [](const std::string& name, const SourceSpan& span) -> std::string {
        throw Error("cannot resolve include \"" + name + "\"", span);
    };
}

namespace {

// ---- lexer -----------------------------------------------------------------

enum class Tok {
    Ident,
    Real,
    Integer,
    Str,
    Symbol,  // single-char () [] {} , ; + - * / ^
    Arrow,   // ->
    EqEq,    // ==
    End,
};

struct Token {
    Tok kind = Tok::End;
    std::string text;
    double real = 0.0;
    long integer = 0;
    SourceSpan span;
};

class Lexer {
  public:
    Lexer(const std::string& text, std::string file) : text_(text), file_(std::move(file)) {}

    Token next() {
        skip_ws();
        Token t;
        t.span = {file_, line_, col_};
        if (pos_ >= text_.size()) return t;
        const char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                t.text += take();
            }
            t.kind = Tok::Ident;
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && pos_ + 1 < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
            bool is_real = false;
            while (pos_ < text_.size()) {
                const char d = text_[pos_];
                if (std::isdigit(static_cast<unsigned char>(d))) {
                    t.text += take();
                } else if (d == '.') {
                    is_real = true;
                    t.text += take();
                } else if (d == 'e' || d == 'E') {
                    is_real = true;
                    t.text += take();
                    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
                        t.text += take();
                    }
                } else {
                    break;
                }
            }
            if (is_real) {
                t.kind = Tok::Real;
                try {
                    t.real = std::stod(t.text);
                } catch (const std::exception&) {
                    throw Error("malformed number '" + t.text + "'", t.span);
                }
            } else {
                t.kind = Tok::Integer;
                try {
                    t.integer = std::stol(t.text);
                } catch (const std::exception&) {
                    throw Error("integer literal out of range '" + t.text + "'", t.span);
                }
                t.real = static_cast<double>(t.integer);
            }
            return t;
        }
        if (c == '"') {
            take();
            while (pos_ < text_.size() && text_[pos_] != '"') t.text += take();
            if (pos_ >= text_.size()) throw Error("unterminated string", t.span);
            take();
            t.kind = Tok::Str;
            return t;
        }
        if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
            take();
            take();
            t.kind = Tok::Arrow;
            t.text = "->";
            return t;
        }
        if (c == '=' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '=') {
            take();
            take();
            t.kind = Tok::EqEq;
            t.text = "==";
            return t;
        }
        if (std::string("()[]{},;+-*/^").find(c) != std::string::npos) {
            t.kind = Tok::Symbol;
            t.text = take();
            return t;
        }
        throw Error(std::string("unexpected character '") + c + "'", t.span);
    }

  private:
    char take() {
        const char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_ws() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                take();
            } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
                while (pos_ < text_.size() && text_[pos_] != '\n') take();
            } else {
                break;
            }
        }
    }

    const std::string& text_;
    std::string file_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

// ---- parser ----------------------------------------------------------------

class Parser {
  public:
    Parser(const std::string& text, const std::string& file, const IncludeResolver& resolver,
           Program& program, bool is_include)
        : lexer_(text, file), resolver_(resolver), program_(program), is_include_(is_include) {
        advance();
    }

    void run() {
        if (!is_include_) parse_header();
        while (cur_.kind != Tok::End) parse_toplevel();
    }

  private:
    [[noreturn]] void fail(const std::string& msg, const SourceSpan& span) {
        throw Error(msg, span);
    }
    [[noreturn]] void fail(const std::string& msg) { fail(msg, cur_.span); }

    void advance() { cur_ = lexer_.next(); }

    bool at_symbol(char c) const { return cur_.kind == Tok::Symbol && cur_.text[0] == c; }
    bool at_ident(const char* s) const { return cur_.kind == Tok::Ident && cur_.text == s; }

    void expect_symbol(char c, const char* what) {
        if (!at_symbol(c)) fail(std::string("expected '") + c + "' " + what);
        advance();
    }

    std::string expect_ident(const char* what) {
        if (cur_.kind != Tok::Ident) fail(std::string("expected identifier ") + what);
        std::string s = cur_.text;
        advance();
        return s;
    }

    long expect_integer(const char* what) {
        if (cur_.kind != Tok::Integer) fail(std::string("expected integer ") + what);
        long v = cur_.integer;
        advance();
        return v;
    }

    void parse_header() {
        if (!at_ident("OPENQASM")) fail("expected OPENQASM header");
        advance();
        if (cur_.kind != Tok::Real || cur_.text != "2.0") {
            fail("only OPENQASM 2.0 is supported");
        }
        program_.version = cur_.text;
        advance();
        expect_symbol(';', "after version");
    }

    void parse_toplevel() {
        const SourceSpan span = cur_.span;
        if (at_ident("include")) {
            advance();
            if (cur_.kind != Tok::Str) fail("expected file name string after include");
            const std::string name = cur_.text;
            advance();
            expect_symbol(';', "after include");
            program_.includes.push_back(name);
            const std::string source = resolver_(name, span);
            Parser inner(source, name, resolver_, program_, /*is_include=*/true);
            inner.run();
            return;
        }
        if (at_ident("qreg") || at_ident("creg")) {
            const bool quantum = cur_.text == "qreg";
            advance();
            const SourceSpan nspan = cur_.span;
            const std::string name = expect_ident("for register name");
            expect_symbol('[', "in register declaration");
            const long size = expect_integer("register size");
            expect_symbol(']', "in register declaration");
            expect_symbol(';', "after register declaration");
            if (size < 1) fail("register size must be positive", nspan);
            if (register_size(name, true) || register_size(name, false)) {
                fail("register '" + name + "' already declared", nspan);
            }
            auto& regs = quantum ? program_.qregs : program_.cregs;
            regs.emplace_back(name, static_cast<int>(size));
            return;
        }
        if (at_ident("gate") || at_ident("opaque")) {
            parse_gatedef(cur_.text == "opaque");
            return;
        }
        program_.body.push_back(parse_statement());
    }

    void parse_gatedef(bool opaque) {
        const SourceSpan span = cur_.span;
        advance();
        GateDef def;
        def.span = span;
        def.opaque = opaque;
        def.name = expect_ident("for gate name");
        if (program_.find_gate(def.name)) fail("gate '" + def.name + "' already defined", span);
        if (at_symbol('(')) {
            advance();
            if (!at_symbol(')')) {
                def.params.push_back(expect_ident("for gate parameter"));
                while (at_symbol(',')) {
                    advance();
                    def.params.push_back(expect_ident("for gate parameter"));
                }
            }
            expect_symbol(')', "after gate parameters");
        }
        def.qargs.push_back(expect_ident("for gate qubit argument"));
        while (at_symbol(',')) {
            advance();
            def.qargs.push_back(expect_ident("for gate qubit argument"));
        }
        {
            std::set<std::string> names(def.qargs.begin(), def.qargs.end());
            if (names.size() != def.qargs.size()) fail("duplicate qubit argument name", span);
        }
        if (opaque) {
            expect_symbol(';', "after opaque declaration");
        } else {
            expect_symbol('{', "to open gate body");
            while (!at_symbol('}')) {
                if (cur_.kind == Tok::End) fail("unterminated gate body", span);
                if (at_ident("barrier")) {
                    def.body.push_back(parse_barrier_in_gate(def));
                } else {
                    def.body.push_back(parse_gate_body_call(def));
                }
            }
            advance();
        }
        program_.gate_index[def.name] = program_.gatedefs.size();
        program_.gatedefs.push_back(std::move(def));
    }

    BarrierStmt parse_barrier_in_gate(const GateDef& def) {
        BarrierStmt b;
        b.span = cur_.span;
        advance();
        while (true) {
            Argument a;
            a.span = cur_.span;
            a.reg = expect_ident("for barrier argument");
            check_formal(def, a.reg, a.span);
            b.args.push_back(std::move(a));
            if (!at_symbol(',')) break;
            advance();
        }
        expect_symbol(';', "after barrier");
        return b;
    }

    GateCall parse_gate_body_call(const GateDef& def) {
        GateCall call;
        call.span = cur_.span;
        call.name = expect_ident("for gate call");
        const GateDef* callee = program_.find_gate(call.name);
        if (!callee) {
            fail("unknown gate '" + call.name + "' (gates may only reference earlier defs)",
                 call.span);
        }
        if (at_symbol('(')) {
            advance();
            if (!at_symbol(')')) {
                call.params.push_back(parse_expr(&def));
                while (at_symbol(',')) {
                    advance();
                    call.params.push_back(parse_expr(&def));
                }
            }
            expect_symbol(')', "after gate parameters");
        }
        while (true) {
            Argument a;
            a.span = cur_.span;
            a.reg = expect_ident("for gate argument");
            check_formal(def, a.reg, a.span);
            call.args.push_back(std::move(a));
            if (!at_symbol(',')) break;
            advance();
        }
        expect_symbol(';', "after gate call");
        check_call_shape(*callee, call);
        {
            std::set<std::string> distinct;
            for (const auto& a : call.args) {
                if (!distinct.insert(a.reg).second) {
                    fail("duplicate qubit argument '" + a.reg + "'", a.span);
                }
            }
        }
        return call;
    }

    void check_formal(const GateDef& def, const std::string& name, const SourceSpan& span) {
        for (const auto& q : def.qargs) {
            if (q == name) return;
        }
        fail("'" + name + "' is not a qubit argument of gate '" + def.name + "'", span);
    }

    void check_call_shape(const GateDef& callee, const GateCall& call) {
        if (static_cast<int>(call.params.size()) != static_cast<int>(callee.params.size())) {
            fail("gate '" + call.name + "' expects " + std::to_string(callee.params.size()) +
                     " parameter(s), got " + std::to_string(call.params.size()),
                 call.span);
        }
        if (call.args.size() != callee.qargs.size()) {
            fail("gate '" + call.name + "' expects " + std::to_string(callee.qargs.size()) +
                     " qubit argument(s), got " + std::to_string(call.args.size()),
                 call.span);
        }
    }

    Statement parse_statement() {
        if (at_ident("measure")) return parse_measure();
        if (at_ident("barrier")) return parse_barrier();
        if (at_ident("reset")) return parse_reset();
        if (at_ident("if")) return parse_conditional();
        return parse_toplevel_call();
    }

    Argument parse_argument(bool quantum) {
        Argument a;
        a.span = cur_.span;
        a.reg = expect_ident(quantum ? "for quantum argument" : "for classical argument");
        const auto size = register_size(a.reg, quantum);
        if (!size) {
            fail(std::string(quantum ? "quantum" : "classical") + " register '" + a.reg +
                     "' is not declared",
                 a.span);
        }
        if (at_symbol('[')) {
            advance();
            const SourceSpan ispan = cur_.span;
            const long idx = expect_integer("index");
            expect_symbol(']', "after index");
            if (idx < 0 || idx >= *size) {
                fail("index out of range: " + a.reg + "[" + std::to_string(idx) + "] (size " +
                         std::to_string(*size) + ")",
                     ispan);
            }
            a.index = static_cast<int>(idx);
        }
        return a;
    }

    std::optional<int> register_size(const std::string& name, bool quantum) const {
        const auto& regs = quantum ? program_.qregs : program_.cregs;
        for (const auto& [n, s] : regs) {
            if (n == name) return s;
        }
        return std::nullopt;
    }

    GateCall parse_toplevel_call() {
        GateCall call;
        call.span = cur_.span;
        call.name = expect_ident("for statement");
        const GateDef* callee = program_.find_gate(call.name);
        if (!callee) fail("unknown gate '" + call.name + "'", call.span);
        if (at_symbol('(')) {
            advance();
            if (!at_symbol(')')) {
                call.params.push_back(parse_expr(nullptr));
                while (at_symbol(',')) {
                    advance();
                    call.params.push_back(parse_expr(nullptr));
                }
            }
            expect_symbol(')', "after gate parameters");
        }
        while (true) {
            call.args.push_back(parse_argument(true));
            if (!at_symbol(',')) break;
            advance();
        }
        expect_symbol(';', "after gate call");
        check_call_shape(*callee, call);
        return call;
    }

    MeasureStmt parse_measure() {
        MeasureStmt m;
        m.span = cur_.span;
        advance();
        m.src = parse_argument(true);
        if (cur_.kind != Tok::Arrow) fail("expected '->' in measure");
        advance();
        m.dst = parse_argument(false);
        expect_symbol(';', "after measure");
        return m;
    }

    BarrierStmt parse_barrier() {
        BarrierStmt b;
        b.span = cur_.span;
        advance();
        while (true) {
            b.args.push_back(parse_argument(true));
            if (!at_symbol(',')) break;
            advance();
        }
        expect_symbol(';', "after barrier");
        return b;
    }

    ResetStmt parse_reset() {
        ResetStmt r;
        r.span = cur_.span;
        advance();
        r.target = parse_argument(true);
        expect_symbol(';', "after reset");
        return r;
    }

    CondStmt parse_conditional() {
        CondStmt c;
        c.span = cur_.span;
        advance();
        expect_symbol('(', "after if");
        const SourceSpan cspan = cur_.span;
        c.creg = expect_ident("for classical register");
        if (!register_size(c.creg, false)) {
            fail("classical register '" + c.creg + "' is not declared", cspan);
        }
        if (cur_.kind != Tok::EqEq) fail("expected '==' in if condition");
        advance();
        c.value = expect_integer("comparison value");
        expect_symbol(')', "after if condition");
        Statement inner = parse_statement();
        if (auto* g = std::get_if<GateCall>(&inner)) {
            c.body = std::move(*g);
        } else if (auto* m = std::get_if<MeasureStmt>(&inner)) {
            c.body = std::move(*m);
        } else if (auto* r = std::get_if<ResetStmt>(&inner)) {
            c.body = std::move(*r);
        } else {
            fail("only gate, measure, or reset may be conditional", c.span);
        }
        return c;
    }

    // expr := term (('+'|'-') term)* ; term := factor (('*'|'/') factor)* ;
    // factor := power ; power := unary ('^' power)? ; unary := '-' unary | atom
    ExprPtr parse_expr(const GateDef* def) { return parse_additive(def); }

    ExprPtr make_binary(char op, ExprPtr a, ExprPtr b, SourceSpan span) {
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Binary;
        e->op = op;
        e->args = {std::move(a), std::move(b)};
        e->span = std::move(span);
        return e;
    }

    ExprPtr parse_additive(const GateDef* def) {
        ExprPtr lhs = parse_multiplicative(def);
        while (cur_.kind == Tok::Symbol && (cur_.text[0] == '+' || cur_.text[0] == '-')) {
            const char op = cur_.text[0];
            const SourceSpan span = cur_.span;
            advance();
            lhs = make_binary(op, lhs, parse_multiplicative(def), span);
        }
        return lhs;
    }

    ExprPtr parse_multiplicative(const GateDef* def) {
        ExprPtr lhs = parse_power(def);
        while (cur_.kind == Tok::Symbol && (cur_.text[0] == '*' || cur_.text[0] == '/')) {
            const char op = cur_.text[0];
            const SourceSpan span = cur_.span;
            advance();
            lhs = make_binary(op, lhs, parse_power(def), span);
        }
        return lhs;
    }

    ExprPtr parse_power(const GateDef* def) {
        ExprPtr lhs = parse_unary(def);
        if (at_symbol('^')) {  // right-associative
            const SourceSpan span = cur_.span;
            advance();
            lhs = make_binary('^', lhs, parse_power(def), span);
        }
        return lhs;
    }

    ExprPtr parse_unary(const GateDef* def) {
        if (at_symbol('-')) {
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Unary;
            e->op = '-';
            e->span = cur_.span;
            advance();
            e->args.push_back(parse_unary(def));
            return e;
        }
        return parse_atom(def);
    }

    ExprPtr parse_atom(const GateDef* def) {
        auto e = std::make_shared<Expr>();
        e->span = cur_.span;
        if (cur_.kind == Tok::Real || cur_.kind == Tok::Integer) {
            e->kind = Expr::Kind::Number;
            e->number = cur_.real;
            advance();
            return e;
        }
        if (at_symbol('(')) {
            advance();
            ExprPtr inner = parse_expr(def);
            expect_symbol(')', "in expression");
            return inner;
        }
        if (cur_.kind == Tok::Ident) {
            const std::string name = cur_.text;
            const SourceSpan span = cur_.span;
            advance();
            if (at_symbol('(')) {
                static const std::set<std::string> kFuncs = {"sin", "cos",  "tan",
                                                             "exp", "sqrt", "ln"};
                if (!kFuncs.count(name)) fail("unknown function '" + name + "'", span);
                advance();
                e->kind = Expr::Kind::Call;
                e->name = name;
                e->args.push_back(parse_expr(def));
                expect_symbol(')', "after function argument");
                return e;
            }
            if (name == "pi") {
                e->kind = Expr::Kind::Pi;
                return e;
            }
            if (def) {
                for (const auto& p : def->params) {
                    if (p == name) {
                        e->kind = Expr::Kind::Ident;
                        e->name = name;
                        return e;
                    }
                }
            }
            fail("unknown identifier '" + name + "' in expression", span);
        }
        fail("expected expression");
    }

    Lexer lexer_;
    Token cur_;
    const IncludeResolver& resolver_;
    Program& program_;
    bool is_include_;
};

}  // namespace

Program parse_qasm(const std::string& text, const std::string& filename,
                   const IncludeResolver& resolver) {
    Program program;
    Parser parser(text, filename, resolver, program, /*is_include=*/false);
    parser.run();
    return program;
}

}  // namespace quditc::qasm
