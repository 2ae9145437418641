#include "llk/formula.hpp"

#include <algorithm>

namespace llk {

F Formula::var(std::string n) {
    auto f = std::make_shared<Formula>();
    f->conn = Conn::Var;
    f->name = std::move(n);
    return f;
}

F Formula::top() {
    static const F t = [] {
        auto f = std::make_shared<Formula>();
        f->conn = Conn::Top;
        return F(f);
    }();
    return t;
}

F Formula::one() {
    static const F t = [] {
        auto f = std::make_shared<Formula>();
        f->conn = Conn::One;
        return F(f);
    }();
    return t;
}

F Formula::bin(Conn c, F a, F b) {
    auto f = std::make_shared<Formula>();
    f->conn = c;
    f->l = std::move(a);
    f->r = std::move(b);
    return f;
}

F Formula::bang(F a) {
    auto f = std::make_shared<Formula>();
    f->conn = Conn::Bang;
    f->l = std::move(a);
    return f;
}

const char* conn_name(Conn c) {
    switch (c) {
        case Conn::Var: return "v";
        case Conn::Top: return "top";
        case Conn::One: return "one";
        case Conn::And: return "and";
        case Conn::With: return "with";
        case Conn::Tensor: return "tensor";
        case Conn::Impl: return "impl";
        case Conn::Lolli: return "lolli";
        case Conn::Bang: return "bang";
    }
    return "?";
}

std::string Formula::str() const {
    switch (conn) {
        case Conn::Var: return "(v " + name + ")";
        case Conn::Top: return "(top)";
        case Conn::One: return "(one)";
        case Conn::Bang: return "(bang " + l->str() + ")";
        default: return std::string("(") + conn_name(conn) + " " + l->str() + " " + r->str() + ")";
    }
}

std::string Formula::pretty() const {
    auto wrap = [](const F& f) {
        bool atomic = f->conn == Conn::Var || f->conn == Conn::Top || f->conn == Conn::One ||
                      f->conn == Conn::Bang;
        return atomic ? f->pretty() : "(" + f->pretty() + ")";
    };
    switch (conn) {
        case Conn::Var: return name;
        case Conn::Top: return "T";
        case Conn::One: return "1";
        case Conn::Bang: return "!" + wrap(l);
        case Conn::And: return wrap(l) + " /\\ " + wrap(r);
        case Conn::With: return wrap(l) + " & " + wrap(r);
        case Conn::Tensor: return wrap(l) + " * " + wrap(r);
        case Conn::Impl: return wrap(l) + " => " + wrap(r);
        case Conn::Lolli: return wrap(l) + " -o " + wrap(r);
    }
    return "?";
}

bool operator==(const Formula& a, const Formula& b) {
    if (&a == &b) return true;
    if (a.conn != b.conn) return false;
    switch (a.conn) {
        case Conn::Var: return a.name == b.name;
        case Conn::Top:
        case Conn::One: return true;
        case Conn::Bang: return *a.l == *b.l;
        default: return *a.l == *b.l && *a.r == *b.r;
    }
}

bool feq(const F& a, const F& b) { return a == b || *a == *b; }

int fsize(const F& f) {
    switch (f->conn) {
        case Conn::Var:
        case Conn::Top:
        case Conn::One: return 1;
        case Conn::Bang: return 1 + fsize(f->l);
        default: return 1 + fsize(f->l) + fsize(f->r);
    }
}

void collect_vars(const F& f, std::vector<std::string>& out) {
    if (f->conn == Conn::Var) {
        if (std::find(out.begin(), out.end(), f->name) == out.end()) out.push_back(f->name);
        return;
    }
    if (f->l) collect_vars(f->l, out);
    if (f->r) collect_vars(f->r, out);
}

std::string Sequent::str() const {
    std::string s = "(seq";
    if (ctx.empty()) s += " ()";
    for (const auto& f : ctx) s += " " + f->str();
    s += " " + concl->str() + ")";
    return s;
}

std::string Sequent::pretty() const {
    std::string s;
    for (size_t i = 0; i < ctx.size(); ++i) {
        if (i) s += ", ";
        s += ctx[i]->pretty();
    }
    if (!s.empty()) s += " ";
    return s + "|- " + concl->pretty();
}

bool seq_eq(const Sequent& a, const Sequent& b) {
    if (a.ctx.size() != b.ctx.size() || !feq(a.concl, b.concl)) return false;
    for (size_t i = 0; i < a.ctx.size(); ++i)
        if (!feq(a.ctx[i], b.ctx[i])) return false;
    return true;
}

F formula_from_sexpr(const Sexpr& s) {
    if (!s.is_list() || s.head().empty()) throw ParseError("expected formula", s.pos);
    const std::string& h = s.head();
    size_t n = s.items.size() - 1;
    auto need = [&](size_t k) {
        if (n != k)
            throw ParseError("formula '" + h + "' takes " + std::to_string(k) + " argument(s)", s.pos);
    };
    if (h == "v") {
        need(1);
        if (!s.items[1].is_atom() || s.items[1].atom.empty())
            throw ParseError("variable name must be a nonempty symbol", s.items[1].pos);
        return Formula::var(s.items[1].atom);
    }
    if (h == "top") {
        need(0);
        return Formula::top();
    }
    if (h == "one") {
        need(0);
        return Formula::one();
    }
    if (h == "bang") {
        need(1);
        return Formula::bang(formula_from_sexpr(s.items[1]));
    }
    static const std::pair<const char*, Conn> bins[] = {{"and", Conn::And},       {"with", Conn::With},
                                                        {"tensor", Conn::Tensor}, {"impl", Conn::Impl},
                                                        {"lolli", Conn::Lolli}};
    for (const auto& [name, c] : bins) {
        if (h == name) {
            need(2);
            return Formula::bin(c, formula_from_sexpr(s.items[1]), formula_from_sexpr(s.items[2]));
        }
    }
    throw ParseError("unknown connective '" + h + "'", s.pos);
}

Sequent sequent_from_sexpr(const Sexpr& s) {
    if (s.head() != "seq") throw ParseError("expected (seq ...)", s.pos);
    // An empty context is written as an explicit "()" so that "(seq g)" is rejected.
    if (s.items.size() < 3) throw ParseError("sequent needs context and conclusion", s.pos);
    Sequent q;
    size_t first = 1;
    if (s.items[1].is_list() && s.items[1].items.empty()) {
        if (s.items.size() != 3) throw ParseError("empty context marker must stand alone", s.items[1].pos);
        first = 2;
    }
    for (size_t i = first; i + 1 < s.items.size(); ++i) q.ctx.push_back(formula_from_sexpr(s.items[i]));
    q.concl = formula_from_sexpr(s.items.back());
    return q;
}

F parse_formula(const std::string& text) { return formula_from_sexpr(parse_sexpr(text)); }

}  // namespace llk
