#include "elp/syntax.hpp"

#include <cctype>
#include <map>
#include <set>

#include "elp/errors.hpp"

namespace elp::ast {

namespace {

enum class Tok { Ident, Var, Not, True, False, LParen, RParen, Comma, Dot, If, Bar, Minus, End };

struct Token {
    Tok kind;
    std::string text;
    Pos pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_blank();
            Pos p{line_, col_};
            if (i_ >= src_.size()) {
                out.push_back({Tok::End, "", p});
                return out;
            }
            char c = src_[i_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                std::string word;
                while (i_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == '_')) {
                    word += src_[i_];
                    advance();
                }
                Tok kind = Tok::Ident;
                if (word == "not") {
                    kind = Tok::Not;
                } else if (std::isupper(static_cast<unsigned char>(word[0])) || word[0] == '_') {
                    kind = Tok::Var;
                }
                out.push_back({kind, word, p});
                continue;
            }
            if (c == '#') {
                std::string word = "#";
                advance();
                while (i_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[i_]))) {
                    word += src_[i_];
                    advance();
                }
                if (word == "#true") {
                    out.push_back({Tok::True, word, p});
                } else if (word == "#false") {
                    out.push_back({Tok::False, word, p});
                } else {
                    throw ParseError(p.line, p.column, "unknown directive '" + word + "'");
                }
                continue;
            }
            if (c == ':' && i_ + 1 < src_.size() && src_[i_ + 1] == '-') {
                advance();
                advance();
                out.push_back({Tok::If, ":-", p});
                continue;
            }
            Tok kind{};
            switch (c) {
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            case ',': kind = Tok::Comma; break;
            case '.': kind = Tok::Dot; break;
            case '|': kind = Tok::Bar; break;
            case '-': kind = Tok::Minus; break;
            default:
                throw ParseError(p.line, p.column, std::string("unexpected character '") + c + "'");
            }
            advance();
            out.push_back({kind, std::string(1, c), p});
        }
    }

private:
    void advance() {
        if (src_[i_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++i_;
    }

    void skip_blank() {
        while (i_ < src_.size()) {
            char c = src_[i_];
            if (c == '%') {
                while (i_ < src_.size() && src_[i_] != '\n') {
                    advance();
                }
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                return;
            }
        }
    }

    std::string_view src_;
    std::size_t i_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Program run() {
        Program prog;
        while (peek().kind != Tok::End) {
            prog.rules.push_back(rule());
        }
        return prog;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        return toks_[std::min(k_ + ahead, toks_.size() - 1)];
    }
    Token next() { return toks_[k_ < toks_.size() - 1 ? k_++ : k_]; }

    [[noreturn]] void fail(const Token& t, const std::string& what) const {
        throw ParseError(t.pos.line, t.pos.column, what);
    }

    void expect(Tok kind, const char* what) {
        if (peek().kind != kind) {
            fail(peek(), std::string("expected ") + what + (peek().kind == Tok::End ? " before end of input" : ", found '" + peek().text + "'"));
        }
        next();
    }

    bool atom_start() const {
        return peek().kind == Tok::Ident || (peek().kind == Tok::Minus && peek(1).kind == Tok::Ident);
    }

    Rule rule() {
        Rule r;
        r.pos = peek().pos;
        if (atom_start()) {
            r.head.push_back(atom());
            while (true) {
                if (peek().kind == Tok::Bar || (peek().kind == Tok::Ident && peek().text == "v")) {
                    next();
                    if (!atom_start()) {
                        fail(peek(), "expected an atom after disjunction");
                    }
                    r.head.push_back(atom());
                } else {
                    break;
                }
            }
        }
        if (peek().kind == Tok::If) {
            next();
            r.body.push_back(literal());
            while (peek().kind == Tok::Comma) {
                next();
                r.body.push_back(literal());
            }
        } else if (r.head.empty()) {
            fail(peek(), "expected a rule");
        }
        expect(Tok::Dot, "'.'");
        return r;
    }

    Atom atom() {
        Atom a;
        a.pos = peek().pos;
        if (peek().kind == Tok::Minus) {
            next();
            a.strong_neg = true;
        }
        if (peek().kind != Tok::Ident || std::isdigit(static_cast<unsigned char>(peek().text[0]))) {
            fail(peek(), "expected a predicate name");
        }
        a.name = next().text;
        if (peek().kind == Tok::LParen) {
            next();
            a.args.push_back(term());
            while (peek().kind == Tok::Comma) {
                next();
                a.args.push_back(term());
            }
            expect(Tok::RParen, "')'");
        }
        return a;
    }

    Term term() {
        const Token& t = peek();
        if (t.kind == Tok::Ident) {
            return Term{next().text, false};
        }
        if (t.kind == Tok::Var) {
            return Term{next().text, true};
        }
        fail(t, "expected a term");
    }

    bool modality_next() const {
        return peek().kind == Tok::Var && (peek().text == "K" || peek().text == "M");
    }

    Literal literal() {
        const Token start = peek();
        int nots = 0;
        while (peek().kind == Tok::Not) {
            next();
            ++nots;
        }
        if (modality_next()) {
            if (nots > 1) {
                fail(start, "at most one 'not' may precede a modality");
            }
            SubjectiveLiteral s;
            s.negated = nots == 1;
            s.modality = next().text == "K" ? Modality::K : Modality::M;
            const Token inner_start = peek();
            if (peek().kind == Tok::Dot || peek().kind == Tok::Comma || peek().kind == Tok::End) {
                fail(inner_start, "modality needs an argument");
            }
            s.inner = objective(0, inner_start);
            if (std::holds_alternative<Constant>(s.inner.base)) {
                fail(inner_start, "modality applied to a truth constant");
            }
            return s;
        }
        return objective(nots, start);
    }

    ObjectiveLiteral objective(int nots, const Token& start) {
        while (peek().kind == Tok::Not) {
            next();
            ++nots;
        }
        if (nots > 2) {
            fail(start, "negation depth greater than 2");
        }
        ObjectiveLiteral l;
        l.negations = nots;
        if (peek().kind == Tok::True) {
            next();
            l.base = Constant::Top;
        } else if (peek().kind == Tok::False) {
            next();
            l.base = Constant::Bottom;
        } else if (modality_next()) {
            fail(peek(), "nested modality");
        } else if (atom_start()) {
            l.base = atom();
        } else {
            fail(peek(), "expected a literal");
        }
        return l;
    }

    std::vector<Token> toks_;
    std::size_t k_ = 0;
};

void collect_constants(const Atom& a, std::set<std::string>& out) {
    for (const auto& t : a.args) {
        if (!t.variable) {
            out.insert(t.text);
        }
    }
}

template <class F>
void for_each_atom(Rule& r, F&& f) {
    for (auto& h : r.head) {
        f(h);
    }
    for (auto& l : r.body) {
        ObjectiveLiteral& o = std::holds_alternative<ObjectiveLiteral>(l) ? std::get<ObjectiveLiteral>(l)
                                                                            : std::get<SubjectiveLiteral>(l).inner;
        if (auto* a = std::get_if<Atom>(&o.base)) {
            f(*a);
        }
    }
}

constexpr std::size_t kMaxInstances = 1'000'000;

} // namespace

bool Atom::ground() const {
    for (const auto& t : args) {
        if (t.variable) {
            return false;
        }
    }
    return true;
}

Program parse_program(std::string_view text) {
    return Parser(Lexer(text).run()).run();
}

Program ground(const Program& program) {
    std::set<std::string> constant_set;
    for (Rule r : program.rules) {
        for_each_atom(r, [&](Atom& a) { collect_constants(a, constant_set); });
    }
    const std::vector<std::string> constants(constant_set.begin(), constant_set.end());

    Program out;
    std::set<std::string> seen;
    auto emit = [&](Rule r) {
        if (seen.insert(to_string(r)).second) {
            out.rules.push_back(std::move(r));
        }
    };

    for (const Rule& rule : program.rules) {
        std::vector<std::string> vars;
        Rule copy = rule;
        for_each_atom(copy, [&](Atom& a) {
            for (const auto& t : a.args) {
                if (t.variable && std::find(vars.begin(), vars.end(), t.text) == vars.end()) {
                    vars.push_back(t.text);
                }
            }
        });
        if (vars.empty()) {
            emit(rule);
            continue;
        }
        if (constants.empty()) {
            throw GroundingError("rule at line " + std::to_string(rule.pos.line) +
                                 " has variables but the program has no constants");
        }
        std::size_t total = 1;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            total *= constants.size();
            if (total > kMaxInstances) {
                throw CapacityError("grounding rule at line " + std::to_string(rule.pos.line) + " is too large");
            }
        }
        std::vector<std::size_t> pick(vars.size(), 0);
        for (std::size_t n = 0; n < total; ++n) {
            std::map<std::string, std::string> binding;
            for (std::size_t v = 0; v < vars.size(); ++v) {
                binding[vars[v]] = constants[pick[v]];
            }
            Rule inst = rule;
            for_each_atom(inst, [&](Atom& a) {
                for (auto& t : a.args) {
                    if (t.variable) {
                        t = Term{binding.at(t.text), false};
                    }
                }
            });
            emit(std::move(inst));
            for (std::size_t v = vars.size(); v-- > 0;) {
                if (++pick[v] < constants.size()) {
                    break;
                }
                pick[v] = 0;
            }
        }
    }
    return out;
}

std::string to_string(const Term& t) { return t.text; }

std::string to_string(const Atom& a) {
    std::string out = a.strong_neg ? "-" : "";
    out += a.name;
    if (!a.args.empty()) {
        out += '(';
        for (std::size_t i = 0; i < a.args.size(); ++i) {
            out += (i ? "," : "") + a.args[i].text;
        }
        out += ')';
    }
    return out;
}

std::string to_string(const ObjectiveLiteral& l) {
    std::string out;
    for (int i = 0; i < l.negations; ++i) {
        out += "not ";
    }
    if (const auto* a = std::get_if<Atom>(&l.base)) {
        out += to_string(*a);
    } else {
        out += std::get<Constant>(l.base) == Constant::Top ? "#true" : "#false";
    }
    return out;
}

std::string to_string(const SubjectiveLiteral& l) {
    std::string out = l.negated ? "not " : "";
    out += l.modality == Modality::K ? "K " : "M ";
    return out + to_string(l.inner);
}

std::string to_string(const Literal& l) {
    return std::visit([](const auto& x) { return to_string(x); }, l);
}

std::string to_string(const Rule& r) {
    std::string out;
    for (std::size_t i = 0; i < r.head.size(); ++i) {
        out += (i ? " | " : "") + to_string(r.head[i]);
    }
    if (!r.body.empty() || r.head.empty()) {
        out += r.head.empty() ? ":- " : " :- ";
        if (r.body.empty()) {
            out += "#true";
        }
        for (std::size_t i = 0; i < r.body.size(); ++i) {
            out += (i ? ", " : "") + to_string(r.body[i]);
        }
    }
    return out + ".";
}

std::string to_string(const Program& p) {
    std::string out;
    for (const auto& r : p.rules) {
        out += to_string(r) + "\n";
    }
    return out;
}

} // namespace elp::ast
