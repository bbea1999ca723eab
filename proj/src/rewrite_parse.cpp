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
#include <set>

#include "quditc/rewrite.hpp"

namespace quditc::rw {

namespace {

const std::set<std::string> kFunctions1 = {"sin", "cos", "tan", "sqrt", "abs", "floor"};
const std::set<std::string> kFunctions2 = {"atan2", "mod"};

bool is_function(const std::string& name) {
    return kFunctions1.count(name) || kFunctions2.count(name);
}

struct Token {
    enum class Kind { Ident, Number, Punct, End };
    Kind kind = Kind::End;
    std::string text;
    double number = 0.0;
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
            t.kind = Token::Kind::Ident;
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && pos_ + 1 < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
            bool dotted = false;
            while (pos_ < text_.size()) {
                const char d = text_[pos_];
                if (std::isdigit(static_cast<unsigned char>(d)) || (d == '.' && !dotted)) {
                    dotted |= d == '.';
                    t.text += take();
                } else if (d == 'e' || d == 'E') {
                    t.text += take();
                    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
                        t.text += take();
                    }
                } else {
                    break;
                }
            }
            t.kind = Token::Kind::Number;
            try {
                t.number = std::stod(t.text);
            } catch (const std::exception&) {
                throw Error("malformed number '" + t.text + "'", t.span);
            }
            return t;
        }
        // multi-char operators first
        for (const char* op : {"=>", "==", "!=", "<=", ">=", "&&", "||"}) {
            if (text_.compare(pos_, 2, op) == 0) {
                t.kind = Token::Kind::Punct;
                t.text = op;
                take();
                take();
                return t;
            }
        }
        if (std::string("(){},;.+-*/<>=").find(c) != std::string::npos) {
            t.kind = Token::Kind::Punct;
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

class Parser {
  public:
    Parser(const std::string& text, const std::string& file) : lexer_(text, file) { advance(); }

    RuleScript run() {
        RuleScript script;
        while (cur_.kind != Token::Kind::End) script.rules.push_back(parse_rule());
        return script;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) { throw Error(msg, cur_.span); }
    [[noreturn]] void fail(const std::string& msg, const SourceSpan& span) {
        throw Error(msg, span);
    }

    void advance() { cur_ = lexer_.next(); }

    bool at(const char* punct) const {
        return cur_.kind == Token::Kind::Punct && cur_.text == punct;
    }

    void expect(const char* punct, const char* what) {
        if (!at(punct)) fail(std::string("expected '") + punct + "' " + what);
        advance();
    }

    std::string expect_ident(const char* what) {
        if (cur_.kind != Token::Kind::Ident) fail(std::string("expected identifier ") + what);
        std::string s = cur_.text;
        advance();
        return s;
    }

    RewriteRule parse_rule() {
        RewriteRule rule;
        rule.span = cur_.span;
        rule.pattern.push_back(parse_pattern_term());
        while (at(".")) {
            advance();
            rule.pattern.push_back(parse_pattern_term());
        }
        expect("=>", "between pattern and block");
        rule.block = parse_block();
        rule.display = render_pattern(rule.pattern);
        validate_bindings(rule);
        return rule;
    }

    static std::string render_pattern(const std::vector<PatternTerm>& pattern) {
        std::string out;
        for (std::size_t k = 0; k < pattern.size(); ++k) {
            if (k) out += " . ";
            out += pattern[k].gate;
            if (!pattern[k].param_vars.empty()) {
                out += '(';
                for (std::size_t i = 0; i < pattern[k].param_vars.size(); ++i) {
                    if (i) out += ", ";
                    out += pattern[k].param_vars[i];
                }
                out += ')';
            }
            for (std::size_t i = 0; i < pattern[k].qubit_vars.size(); ++i) {
                out += i ? "," : " ";
                out += pattern[k].qubit_vars[i];
            }
        }
        return out;
    }

    PatternTerm parse_pattern_term() {
        PatternTerm term;
        term.span = cur_.span;
        term.gate = expect_ident("for pattern gate");
        if (at("(")) {
            advance();
            if (!at(")")) {
                term.param_vars.push_back(expect_ident("for parameter variable"));
                while (at(",")) {
                    advance();
                    term.param_vars.push_back(expect_ident("for parameter variable"));
                }
            }
            expect(")", "after parameter variables");
        }
        while (cur_.kind == Token::Kind::Ident) {
            term.qubit_vars.push_back(expect_ident("for qubit variable"));
            if (!at(",")) break;
            advance();
        }
        std::set<std::string> pv(term.param_vars.begin(), term.param_vars.end());
        if (pv.size() != term.param_vars.size()) {
            fail("duplicate parameter variable in pattern term", term.span);
        }
        return term;
    }

    std::vector<StmtPtr> parse_block() {
        expect("{", "to open block");
        std::vector<StmtPtr> body;
        while (!at("}")) {
            if (cur_.kind == Token::Kind::End) fail("unterminated block");
            body.push_back(parse_stmt());
        }
        advance();
        return body;
    }

    StmtPtr parse_stmt() {
        auto stmt = std::make_shared<Stmt>();
        stmt->span = cur_.span;
        if (cur_.kind == Token::Kind::Ident && cur_.text == "if") {
            advance();
            stmt->kind = Stmt::Kind::If;
            stmt->cond = parse_expr();
            stmt->then_body = parse_block();
            if (cur_.kind == Token::Kind::Ident && cur_.text == "else") {
                advance();
                if (cur_.kind == Token::Kind::Ident && cur_.text == "if") {
                    stmt->else_body.push_back(parse_stmt());
                } else {
                    stmt->else_body = parse_block();
                }
            }
            return stmt;
        }
        if (cur_.kind == Token::Kind::Ident && cur_.text == "return") {
            advance();
            stmt->kind = Stmt::Kind::Return;
            if (cur_.kind == Token::Kind::Ident && cur_.text == "id") {
                advance();
            } else {
                stmt->composition.push_back(parse_call_term());
                while (at(".")) {
                    advance();
                    stmt->composition.push_back(parse_call_term());
                }
            }
            expect(";", "after return");
            return stmt;
        }
        stmt->kind = Stmt::Kind::Assign;
        stmt->name = expect_ident("for assignment");
        expect("=", "in assignment");
        stmt->value = parse_expr();
        expect(";", "after assignment");
        return stmt;
    }

    CallTerm parse_call_term() {
        CallTerm call;
        call.span = cur_.span;
        call.gate = expect_ident("for gate call");
        if (at("(")) {
            advance();
            if (!at(")")) {
                call.params.push_back(parse_expr());
                while (at(",")) {
                    advance();
                    call.params.push_back(parse_expr());
                }
            }
            expect(")", "after call parameters");
        }
        while (cur_.kind == Token::Kind::Ident && cur_.text != "return" && cur_.text != "if" &&
               cur_.text != "else") {
            call.qubit_vars.push_back(expect_ident("for qubit variable"));
            if (!at(",")) break;
            advance();
        }
        return call;
    }

    // precedence: || < && < comparisons < additive < multiplicative < unary
    RExprPtr parse_expr() { return parse_or(); }

    RExprPtr make_binary(std::string op, RExprPtr a, RExprPtr b, SourceSpan span) {
        auto e = std::make_shared<RExpr>();
        e->kind = RExpr::Kind::Binary;
        e->op = std::move(op);
        e->args = {std::move(a), std::move(b)};
        e->span = std::move(span);
        return e;
    }

    RExprPtr parse_or() {
        RExprPtr lhs = parse_and();
        while (at("||")) {
            const SourceSpan span = cur_.span;
            advance();
            lhs = make_binary("||", lhs, parse_and(), span);
        }
        return lhs;
    }

    RExprPtr parse_and() {
        RExprPtr lhs = parse_compare();
        while (at("&&")) {
            const SourceSpan span = cur_.span;
            advance();
            lhs = make_binary("&&", lhs, parse_compare(), span);
        }
        return lhs;
    }

    RExprPtr parse_compare() {
        RExprPtr lhs = parse_additive();
        for (const char* op : {"==", "!=", "<=", ">=", "<", ">"}) {
            if (at(op)) {
                const SourceSpan span = cur_.span;
                advance();
                return make_binary(op, lhs, parse_additive(), span);
            }
        }
        return lhs;
    }

    RExprPtr parse_additive() {
        RExprPtr lhs = parse_multiplicative();
        while (at("+") || at("-")) {
            const std::string op = cur_.text;
            const SourceSpan span = cur_.span;
            advance();
            lhs = make_binary(op, lhs, parse_multiplicative(), span);
        }
        return lhs;
    }

    RExprPtr parse_multiplicative() {
        RExprPtr lhs = parse_unary();
        while (at("*") || at("/")) {
            const std::string op = cur_.text;
            const SourceSpan span = cur_.span;
            advance();
            lhs = make_binary(op, lhs, parse_unary(), span);
        }
        return lhs;
    }

    RExprPtr parse_unary() {
        if (at("-")) {
            auto e = std::make_shared<RExpr>();
            e->kind = RExpr::Kind::Unary;
            e->span = cur_.span;
            advance();
            e->args.push_back(parse_unary());
            return e;
        }
        return parse_atom();
    }

    RExprPtr parse_atom() {
        auto e = std::make_shared<RExpr>();
        e->span = cur_.span;
        if (cur_.kind == Token::Kind::Number) {
            e->kind = RExpr::Kind::Number;
            e->number = cur_.number;
            advance();
            return e;
        }
        if (at("(")) {
            advance();
            RExprPtr inner = parse_expr();
            expect(")", "in expression");
            return inner;
        }
        if (cur_.kind == Token::Kind::Ident) {
            const std::string name = cur_.text;
            advance();
            if (at("(")) {
                if (!is_function(name)) fail("unknown function '" + name + "'", e->span);
                advance();
                e->kind = RExpr::Kind::Call;
                e->name = name;
                if (!at(")")) {
                    e->args.push_back(parse_expr());
                    while (at(",")) {
                        advance();
                        e->args.push_back(parse_expr());
                    }
                }
                expect(")", "after function arguments");
                const std::size_t want = kFunctions2.count(name) ? 2 : 1;
                if (e->args.size() != want) {
                    fail("function '" + name + "' takes " + std::to_string(want) + " argument(s)",
                         e->span);
                }
                return e;
            }
            if (name == "pi") {
                e->kind = RExpr::Kind::Pi;
                return e;
            }
            e->kind = RExpr::Kind::Var;
            e->name = name;
            return e;
        }
        fail("expected expression");
    }

    // ---- static binding checks ----

    void collect_vars(const RExprPtr& e, const std::set<std::string>& bound) {
        if (e->kind == RExpr::Kind::Var) {
            if (!bound.count(e->name)) fail("unbound variable '" + e->name + "'", e->span);
            return;
        }
        for (const auto& a : e->args) collect_vars(a, bound);
    }

    void check_stmts(const std::vector<StmtPtr>& stmts, std::set<std::string>& bound,
                     const std::set<std::string>& qubit_vars, bool has_implicit) {
        for (const auto& s : stmts) {
            switch (s->kind) {
                case Stmt::Kind::Assign:
                    collect_vars(s->value, bound);
                    bound.insert(s->name);
                    break;
                case Stmt::Kind::If: {
                    collect_vars(s->cond, bound);
                    // conservative: assignments inside branches bind onward
                    check_stmts(s->then_body, bound, qubit_vars, has_implicit);
                    check_stmts(s->else_body, bound, qubit_vars, has_implicit);
                    break;
                }
                case Stmt::Kind::Return:
                    for (const auto& call : s->composition) {
                        for (const auto& p : call.params) collect_vars(p, bound);
                        if (call.qubit_vars.empty()) {
                            if (!has_implicit) {
                                fail("call '" + call.gate +
                                         "' omits qubit variables but the pattern binds no "
                                         "implicit tuple",
                                     call.span);
                            }
                        } else {
                            for (const auto& qv : call.qubit_vars) {
                                if (!qubit_vars.count(qv)) {
                                    fail("unbound qubit variable '" + qv + "'", call.span);
                                }
                            }
                        }
                    }
                    break;
            }
        }
    }

    void validate_bindings(const RewriteRule& rule) {
        std::set<std::string> bound;
        std::set<std::string> qubit_vars;
        bool has_implicit = false;
        for (const auto& term : rule.pattern) {
            for (const auto& pv : term.param_vars) {
                if (!bound.insert(pv).second) {
                    fail("parameter variable '" + pv + "' bound twice in pattern", term.span);
                }
            }
            if (term.qubit_vars.empty()) {
                has_implicit = true;
            } else {
                for (const auto& qv : term.qubit_vars) qubit_vars.insert(qv);
            }
        }
        std::set<std::string> env = bound;
        check_stmts(rule.block, env, qubit_vars, has_implicit);
    }

    Lexer lexer_;
    Token cur_;
};

}  // namespace

RuleScript parse_rules(const std::string& text, const std::string& filename) {
    return Parser(text, filename).run();
}

void validate_rules(const RuleScript& script, const GateTable& gates) {
    for (const auto& rule : script.rules) {
        int implicit_arity = -1;
        for (const auto& term : rule.pattern) {
            auto it = gates.find(term.gate);
            if (it == gates.end()) {
                throw Error("rule '" + rule.display + "' references non-native gate '" +
                                term.gate + "'",
                            term.span);
            }
            if (static_cast<int>(term.param_vars.size()) != it->second.params) {
                throw Error("rule '" + rule.display + "': gate '" + term.gate + "' has " +
                                std::to_string(it->second.params) + " parameter(s)",
                            term.span);
            }
            if (term.qubit_vars.empty()) {
                if (implicit_arity == -1) {
                    implicit_arity = it->second.arity;
                } else if (implicit_arity != it->second.arity) {
                    throw Error("rule '" + rule.display +
                                    "': implicit qubit tuple shared by gates of different arity",
                                term.span);
                }
            } else if (static_cast<int>(term.qubit_vars.size()) != it->second.arity) {
                throw Error("rule '" + rule.display + "': gate '" + term.gate + "' acts on " +
                                std::to_string(it->second.arity) + " qubit(s)",
                            term.span);
            }
        }
        // returns
        std::function<void(const std::vector<StmtPtr>&)> walk =
            [&](const std::vector<StmtPtr>& stmts) {
                for (const auto& s : stmts) {
                    if (s->kind == Stmt::Kind::If) {
                        walk(s->then_body);
                        walk(s->else_body);
                    } else if (s->kind == Stmt::Kind::Return) {
                        for (const auto& call : s->composition) {
                            auto it = gates.find(call.gate);
                            if (it == gates.end()) {
                                throw Error("rule '" + rule.display +
                                                "' returns non-native gate '" + call.gate + "'",
                                            call.span);
                            }
                            if (static_cast<int>(call.params.size()) != it->second.params) {
                                throw Error("rule '" + rule.display + "': gate '" + call.gate +
                                                "' has " + std::to_string(it->second.params) +
                                                " parameter(s)",
                                            call.span);
                            }
                            const int arity = call.qubit_vars.empty()
                                                  ? implicit_arity
                                                  : static_cast<int>(call.qubit_vars.size());
                            if (arity != it->second.arity) {
                                throw Error("rule '" + rule.display + "': gate '" + call.gate +
                                                "' acts on " +
                                                std::to_string(it->second.arity) + " qubit(s)",
                                            call.span);
                            }
                        }
                    }
                }
            };
        walk(rule.block);
    }
}

}  // namespace quditc::rw
