#include "elp/program.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "elp/errors.hpp"

namespace elp {

ObjectiveLiteral ObjectiveLiteral::negated() const {
    ObjectiveLiteral l = *this;
    l.negations = negations == 2 ? 1 : static_cast<std::uint8_t>(negations + 1);
    return l;
}

bool ObjectiveLiteral::eval(AtomSet i) const {
    bool v = base == Base::Atom ? i.contains(atom) : base == Base::Top;
    return (negations % 2 == 0) ? v : !v;
}

AtomSet Rule::head_set() const {
    AtomSet s;
    for (AtomId a : head) {
        s.insert(a);
    }
    return s;
}

namespace {

const ObjectiveLiteral& objective_part(const Literal& l) {
    if (const auto* o = std::get_if<ObjectiveLiteral>(&l)) {
        return *o;
    }
    return std::get<SubjectiveLiteral>(l).core.inner;
}

} // namespace

AtomSet Rule::atoms() const {
    AtomSet s = head_set();
    for (const auto& l : body) {
        const auto& o = objective_part(l);
        if (o.base == Base::Atom) {
            s.insert(o.atom);
        }
    }
    return s;
}

AtomSet Rule::body_obj_atoms() const {
    AtomSet s;
    for (const auto& l : body) {
        if (const auto* o = std::get_if<ObjectiveLiteral>(&l); o && o->base == Base::Atom) {
            s.insert(o->atom);
        }
    }
    return s;
}

AtomSet Rule::body_sub_atoms() const {
    AtomSet s;
    for (const auto& l : body) {
        if (const auto* sl = std::get_if<SubjectiveLiteral>(&l); sl && sl->core.inner.base == Base::Atom) {
            s.insert(sl->core.inner.atom);
        }
    }
    return s;
}

bool Rule::has_subjective() const {
    return std::any_of(body.begin(), body.end(), [](const Literal& l) { return std::holds_alternative<SubjectiveLiteral>(l); });
}

bool Rule::is_subjective_constraint() const {
    return head.empty() && !body.empty() &&
           std::all_of(body.begin(), body.end(), [](const Literal& l) { return std::holds_alternative<SubjectiveLiteral>(l); });
}

AtomSet Program::atoms() const {
    AtomSet s;
    for (const auto& r : rules_) {
        s |= r.atoms();
    }
    return s;
}

AtomSet Program::head_atoms() const {
    AtomSet s;
    for (const auto& r : rules_) {
        s |= r.head_set();
    }
    return s;
}

bool Program::objective() const {
    return std::none_of(rules_.begin(), rules_.end(), [](const Rule& r) { return r.has_subjective(); });
}

bool Program::has_m() const {
    for (const auto& r : rules_) {
        for (const auto& l : r.body) {
            if (const auto* s = std::get_if<SubjectiveLiteral>(&l); s && s->core.modality == Modality::M) {
                return true;
            }
        }
    }
    return false;
}

std::vector<SubjectiveCore> Program::cores() const {
    std::vector<SubjectiveCore> out;
    for (const auto& r : rules_) {
        for (const auto& l : r.body) {
            if (const auto* s = std::get_if<SubjectiveLiteral>(&l)) {
                if (std::find(out.begin(), out.end(), s->core) == out.end()) {
                    out.push_back(s->core);
                }
            }
        }
    }
    return out;
}

Program Program::with_rule(Rule r) const {
    auto rules = rules_;
    rules.push_back(std::move(r));
    return with_rules(std::move(rules));
}

Program Program::without_rule(std::size_t index) const {
    auto rules = rules_;
    rules.erase(rules.begin() + static_cast<std::ptrdiff_t>(index));
    return with_rules(std::move(rules));
}

std::string Program::to_string() const { return ast::to_string(to_ast(*this)); }

std::string Program::to_string(const Rule& r) const {
    return ast::to_string(to_ast(Program(table_, {r})).rules.front());
}

std::string Program::to_string(const Literal& l) const {
    Rule r;
    r.body.push_back(l);
    std::string s = to_string(r);
    // ":- <lit>."
    return s.substr(3, s.size() - 4);
}

namespace {

ast::Atom to_ast_atom(const Atom& a) {
    ast::Atom out;
    out.name = a.name;
    out.strong_neg = a.strong_neg;
    for (const auto& arg : a.args) {
        out.args.push_back(ast::Term{arg, false});
    }
    return out;
}

Atom from_ast_atom(const ast::Atom& a) {
    if (!a.ground()) {
        throw GroundingError("atom " + ast::to_string(a) + " is not ground");
    }
    Atom out;
    out.name = a.name;
    out.strong_neg = a.strong_neg;
    for (const auto& t : a.args) {
        out.args.push_back(t.text);
    }
    return out;
}

ast::ObjectiveLiteral to_ast_obj(const ObjectiveLiteral& l, const AtomTable& t) {
    ast::ObjectiveLiteral out;
    out.negations = l.negations;
    switch (l.base) {
    case Base::Atom: out.base = to_ast_atom(t[l.atom]); break;
    case Base::Top: out.base = ast::Constant::Top; break;
    case Base::Bottom: out.base = ast::Constant::Bottom; break;
    }
    return out;
}

ObjectiveLiteral from_ast_obj(const ast::ObjectiveLiteral& l, const AtomTable& t) {
    ObjectiveLiteral out;
    out.negations = static_cast<std::uint8_t>(l.negations);
    if (const auto* a = std::get_if<ast::Atom>(&l.base)) {
        out.base = Base::Atom;
        out.atom = t.id(from_ast_atom(*a).text());
    } else {
        out.base = std::get<ast::Constant>(l.base) == ast::Constant::Top ? Base::Top : Base::Bottom;
    }
    return out;
}

Rule rule_from_ast(const ast::Rule& r, const AtomTable& t) {
    Rule out;
    for (const auto& h : r.head) {
        out.head.push_back(t.id(from_ast_atom(h).text()));
    }
    std::sort(out.head.begin(), out.head.end());
    out.head.erase(std::unique(out.head.begin(), out.head.end()), out.head.end());
    for (const auto& l : r.body) {
        if (const auto* o = std::get_if<ast::ObjectiveLiteral>(&l)) {
            out.body.emplace_back(from_ast_obj(*o, t));
        } else {
            const auto& s = std::get<ast::SubjectiveLiteral>(l);
            SubjectiveLiteral sl;
            sl.negated = s.negated;
            sl.core.modality = s.modality == ast::Modality::K ? Modality::K : Modality::M;
            sl.core.inner = from_ast_obj(s.inner, t);
            out.body.emplace_back(sl);
        }
    }
    return out;
}

void collect_atoms(const ast::Program& p, std::vector<Atom>& out) {
    for (const auto& r : p.rules) {
        for (const auto& h : r.head) {
            out.push_back(from_ast_atom(h));
        }
        for (const auto& l : r.body) {
            const ast::ObjectiveLiteral& o = std::holds_alternative<ast::ObjectiveLiteral>(l)
                                                 ? std::get<ast::ObjectiveLiteral>(l)
                                                 : std::get<ast::SubjectiveLiteral>(l).inner;
            if (const auto* a = std::get_if<ast::Atom>(&o.base)) {
                out.push_back(from_ast_atom(*a));
            }
        }
    }
}

Program compile_with(const ast::Program& ground_ast, bool norm, std::vector<Atom> atoms) {
    collect_atoms(ground_ast, atoms);
    auto table = std::make_shared<AtomTable>(std::move(atoms));
    std::vector<Rule> rules;
    rules.reserve(ground_ast.rules.size());
    for (const auto& r : ground_ast.rules) {
        rules.push_back(rule_from_ast(r, *table));
    }
    Program p(table, std::move(rules));
    return norm ? normalize(p) : p;
}

} // namespace

ast::Program to_ast(const Program& p) {
    ast::Program out;
    for (const auto& r : p.rules()) {
        ast::Rule ar;
        for (AtomId h : r.head) {
            ar.head.push_back(to_ast_atom(p.table()[h]));
        }
        for (const auto& l : r.body) {
            if (const auto* o = std::get_if<ObjectiveLiteral>(&l)) {
                ar.body.emplace_back(to_ast_obj(*o, p.table()));
            } else {
                const auto& s = std::get<SubjectiveLiteral>(l);
                ast::SubjectiveLiteral as;
                as.negated = s.negated;
                as.modality = s.core.modality == Modality::K ? ast::Modality::K : ast::Modality::M;
                as.inner = to_ast_obj(s.core.inner, p.table());
                ar.body.emplace_back(as);
            }
        }
        out.rules.push_back(std::move(ar));
    }
    return out;
}

Program compile(const ast::Program& ground_ast, bool norm) { return compile_with(ground_ast, norm, {}); }

Program normalize(const Program& p) {
    std::vector<Atom> atoms = p.table().atoms();
    bool grew = false;
    for (const auto& a : p.table().atoms()) {
        if (a.strong_neg && !p.table().find(a.complement().text())) {
            atoms.push_back(a.complement());
            grew = true;
        }
    }
    Program base = grew ? rebase(p, std::make_shared<AtomTable>(std::move(atoms))) : p;
    const AtomTable& t = base.table();
    std::vector<Rule> rules = base.rules();
    for (AtomId id = 0; id < t.size(); ++id) {
        if (!t[id].strong_neg) {
            continue;
        }
        Rule c;
        AtomId pos = t.id(t[id].complement().text());
        c.body = {ObjectiveLiteral::of(pos), ObjectiveLiteral::of(id)};
        Rule swapped = c;
        std::swap(swapped.body[0], swapped.body[1]);
        if (std::find(rules.begin(), rules.end(), c) == rules.end() &&
            std::find(rules.begin(), rules.end(), swapped) == rules.end()) {
            rules.push_back(std::move(c));
        }
    }
    return base.with_rules(std::move(rules));
}

Program eliminate_m(const Program& p) {
    std::vector<Rule> rules = p.rules();
    for (auto& r : rules) {
        for (auto& l : r.body) {
            auto* s = std::get_if<SubjectiveLiteral>(&l);
            if (s && s->core.modality == Modality::M) {
                s->core.modality = Modality::K;
                s->core.inner = s->core.inner.negated();
                s->negated = !s->negated;
            }
        }
    }
    return p.with_rules(std::move(rules));
}

Program load_program(std::string_view text) { return compile(ast::ground(ast::parse_program(text)), true); }

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Program load_program_file(const std::filesystem::path& path) { return load_program(read_file(path)); }

AtomSet rebase(AtomSet s, const AtomTable& from, const AtomTable& to) {
    AtomSet out;
    s.for_each([&](AtomId a) { out.insert(to.id(from.text(a))); });
    return out;
}

Program rebase(const Program& p, const AtomTablePtr& table) {
    std::vector<AtomId> map(p.table().size());
    for (AtomId a = 0; a < p.table().size(); ++a) {
        map[a] = table->id(p.table().text(a));
    }
    auto fix = [&](ObjectiveLiteral& o) {
        if (o.base == Base::Atom) {
            o.atom = map[o.atom];
        }
    };
    std::vector<Rule> rules = p.rules();
    for (auto& r : rules) {
        for (auto& h : r.head) {
            h = map[h];
        }
        std::sort(r.head.begin(), r.head.end());
        for (auto& l : r.body) {
            if (auto* o = std::get_if<ObjectiveLiteral>(&l)) {
                fix(*o);
            } else {
                fix(std::get<SubjectiveLiteral>(l).core.inner);
            }
        }
    }
    return Program(table, std::move(rules));
}

Program extend(const Program& p, std::string_view text) {
    ast::Program combined = to_ast(p);
    for (auto& r : ast::parse_program(text).rules) {
        combined.rules.push_back(std::move(r));
    }
    return compile_with(ast::ground(combined), true, p.table().atoms());
}

Program canonicalize(const Program& p) {
    std::vector<Rule> rules;
    for (const auto& r : p.rules()) {
        Rule c;
        c.head = r.head;
        bool dead = false;
        for (const auto& l : r.body) {
            const auto* o = std::get_if<ObjectiveLiteral>(&l);
            if (o && o->is_constant()) {
                if (!o->eval(AtomSet{})) {
                    dead = true;
                }
                continue;
            }
            if (std::find(c.body.begin(), c.body.end(), l) == c.body.end()) {
                c.body.push_back(l);
            }
        }
        if (dead) {
            continue;
        }
        std::sort(c.body.begin(), c.body.end());
        rules.push_back(std::move(c));
    }
    std::sort(rules.begin(), rules.end(), [](const Rule& a, const Rule& b) {
        return std::tie(a.head, a.body) < std::tie(b.head, b.body);
    });
    rules.erase(std::unique(rules.begin(), rules.end()), rules.end());
    return p.with_rules(std::move(rules));
}

} // namespace elp
