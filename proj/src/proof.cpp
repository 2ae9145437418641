#include "llk/proof.hpp"

#include <map>

namespace llk {

namespace {

struct RuleInfo {
    Rule rule;
    const char* name;
    int arity;
    bool split;
};

const RuleInfo kRules[] = {
    {Rule::Ax, "ax", 0, false},
    {Rule::Cut, "cut", 2, true},
    {Rule::Weak, "weak", 1, false},
    {Rule::Contr, "contr", 1, false},
    {Rule::Ex, "ex", 1, false},
    {Rule::AndLeft1, "and-left-1", 1, false},
    {Rule::AndLeft2, "and-left-2", 1, false},
    {Rule::AndRight, "and-right", 2, false},
    {Rule::TopRight, "top-right", 0, false},
    {Rule::ImplLeft, "impl-left", 2, true},
    {Rule::ImplRight, "impl-right", 1, false},
    {Rule::WithLeft1, "with-left-1", 1, false},
    {Rule::WithLeft2, "with-left-2", 1, false},
    {Rule::WithRight, "with-right", 2, false},
    {Rule::LolliLeft, "lolli-left", 2, true},
    {Rule::LolliRight, "lolli-right", 1, false},
    {Rule::TensorLeft, "tensor-left", 1, false},
    {Rule::TensorRight, "tensor-right", 2, true},
    {Rule::OneLeft, "one-left", 1, false},
    {Rule::OneRight, "one-right", 0, false},
    {Rule::Der, "der", 1, false},
    {Rule::Prom, "prom", 1, false},
    {Rule::BangWeak, "bang-weak", 1, false},
    {Rule::BangContr, "bang-contr", 1, false},
    {Rule::CoWeak, "co-weak", 0, false},
    {Rule::CoContr, "co-contr", 2, true},
    {Rule::CoDer, "co-der", 1, false},
    {Rule::Zero, "zero", 0, false},
    {Rule::Sum, "sum", 2, false},
};

const RuleInfo& info(Rule r) { return kRules[static_cast<int>(r)]; }

}  // namespace

const char* rule_name(Rule r) { return info(r).name; }
int rule_arity(Rule r) { return info(r).arity; }
bool rule_has_split(Rule r) { return info(r).split; }

std::optional<Rule> rule_from_name(const std::string& s) {
    for (const auto& ri : kRules)
        if (s == ri.name) return ri.rule;
    return std::nullopt;
}

const char* system_name(System s) {
    switch (s) {
        case System::LJ: return "lj";
        case System::IMALL: return "imall";
        case System::ILL: return "ill";
        case System::DILL: return "dill";
    }
    return "?";
}

std::optional<System> system_from_name(const std::string& s) {
    if (s == "lj" || s == "LJ") return System::LJ;
    if (s == "imall" || s == "IMALL") return System::IMALL;
    if (s == "ill" || s == "ILL") return System::ILL;
    if (s == "dill" || s == "DILL") return System::DILL;
    return std::nullopt;
}

bool is_linear(System s) { return s != System::LJ; }

P Proof::make(Rule r, Sequent s, std::vector<P> prem, int split, int pos) {
    auto p = std::make_shared<Proof>();
    p->rule = r;
    p->concl = std::move(s);
    p->prem = std::move(prem);
    p->split = split;
    p->pos = pos;
    return p;
}

bool proof_eq(const P& a, const P& b) {
    if (a == b) return true;
    if (a->rule != b->rule || a->split != b->split || a->pos != b->pos) return false;
    if (!seq_eq(a->concl, b->concl) || a->prem.size() != b->prem.size()) return false;
    for (size_t i = 0; i < a->prem.size(); ++i)
        if (!proof_eq(a->prem[i], b->prem[i])) return false;
    return true;
}

int proof_size(const P& p) {
    int n = 1;
    for (const auto& q : p->prem) n += proof_size(q);
    return n;
}

int proof_height(const P& p) {
    int h = 0;
    for (const auto& q : p->prem) h = std::max(h, proof_height(q));
    return h + 1;
}

int count_cuts(const P& p) {
    int n = p->rule == Rule::Cut ? 1 : 0;
    for (const auto& q : p->prem) n += count_cuts(q);
    return n;
}

P proof_from_sexpr(const Sexpr& s) {
    if (!s.is_list() || s.head().empty()) throw ParseError("expected proof node", s.pos);
    auto rule = rule_from_name(s.head());
    if (!rule) throw ParseError("unknown rule tag '" + s.head() + "'", s.pos);
    if (s.items.size() < 2) throw ParseError("proof node needs a sequent", s.pos);
    Sequent q = sequent_from_sexpr(s.items[1]);
    std::vector<P> prem;
    int split = -1, pos = -1;
    size_t i = 2;
    for (; i < s.items.size() && !s.items[i].is_atom(); ++i) prem.push_back(proof_from_sexpr(s.items[i]));
    for (; i < s.items.size(); i += 2) {
        const Sexpr& key = s.items[i];
        if (!key.is_atom() || key.atom.empty() || key.atom[0] != ':')
            throw ParseError("premises must precede annotations", key.pos);
        if (i + 1 >= s.items.size() || !s.items[i + 1].is_atom())
            throw ParseError("annotation " + key.atom + " needs an integer", key.pos);
        int v;
        try {
            size_t used = 0;
            v = std::stoi(s.items[i + 1].atom, &used);
            if (used != s.items[i + 1].atom.size() || v < 0) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError("annotation " + key.atom + " needs a nonnegative integer", s.items[i + 1].pos);
        }
        if (key.atom == ":split") {
            if (!rule_has_split(*rule)) throw ParseError(std::string(":split not allowed on ") + rule_name(*rule), key.pos);
            if (split >= 0) throw ParseError("duplicate :split", key.pos);
            split = v;
        } else if (key.atom == ":pos") {
            if (*rule != Rule::Ex) throw ParseError(std::string(":pos not allowed on ") + rule_name(*rule), key.pos);
            if (pos >= 0) throw ParseError("duplicate :pos", key.pos);
            pos = v;
        } else {
            throw ParseError("unknown annotation " + key.atom, key.pos);
        }
    }
    int ar = rule_arity(*rule);
    if (static_cast<int>(prem.size()) != ar)
        throw ParseError(std::string("rule ") + rule_name(*rule) + " takes " + std::to_string(ar) +
                             " premise(s), got " + std::to_string(prem.size()),
                         s.pos);
    if (rule_has_split(*rule) && split < 0) throw ParseError(std::string("rule ") + rule_name(*rule) + " needs :split", s.pos);
    if (*rule == Rule::Ex && pos < 0) throw ParseError("rule ex needs :pos", s.pos);
    return Proof::make(*rule, std::move(q), std::move(prem), split, pos);
}

P parse_proof(const std::string& text) { return proof_from_sexpr(parse_sexpr(text)); }

std::string print_proof(const P& p) {
    std::string s = "(";
    s += rule_name(p->rule);
    s += " " + p->concl.str();
    for (const auto& q : p->prem) s += " " + print_proof(q);
    if (p->split >= 0) s += " :split " + std::to_string(p->split);
    if (p->pos >= 0) s += " :pos " + std::to_string(p->pos);
    return s + ")";
}

std::string path_str(const Path& p) {
    if (p.empty()) return "root";
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += '.';
        s += std::to_string(p[i]);
    }
    return s;
}

P subproof_at(const P& root, const Path& path) {
    P cur = root;
    for (int k : path) {
        if (k < 0 || k >= static_cast<int>(cur->prem.size())) throw std::out_of_range("bad proof path " + path_str(path));
        cur = cur->prem[k];
    }
    return cur;
}

namespace {

P replace_rec(const P& node, const Path& path, size_t depth, const P& repl) {
    if (depth == path.size()) return repl;
    int k = path[depth];
    if (k < 0 || k >= static_cast<int>(node->prem.size())) throw std::out_of_range("bad proof path " + path_str(path));
    auto prem = node->prem;
    prem[k] = replace_rec(node->prem[k], path, depth + 1, repl);
    return Proof::make(node->rule, node->concl, std::move(prem), node->split, node->pos);
}

// ---- validation ----

bool conn_allowed(Conn c, System s) {
    switch (c) {
        case Conn::Var:
        case Conn::Top: return true;
        case Conn::And:
        case Conn::Impl: return s == System::LJ;
        case Conn::One:
        case Conn::With:
        case Conn::Tensor:
        case Conn::Lolli: return s != System::LJ;
        case Conn::Bang: return s == System::ILL || s == System::DILL;
    }
    return false;
}

std::optional<Conn> bad_conn(const F& f, System s) {
    if (!conn_allowed(f->conn, s)) return f->conn;
    if (f->l)
        if (auto c = bad_conn(f->l, s)) return c;
    if (f->r)
        if (auto c = bad_conn(f->r, s)) return c;
    return std::nullopt;
}

bool rule_allowed(Rule r, System s) {
    switch (r) {
        case Rule::Ax:
        case Rule::Cut:
        case Rule::Ex:
        case Rule::TopRight: return true;
        case Rule::Weak:
        case Rule::Contr: return s != System::IMALL;
        case Rule::AndLeft1:
        case Rule::AndLeft2:
        case Rule::AndRight:
        case Rule::ImplLeft:
        case Rule::ImplRight: return s == System::LJ;
        case Rule::WithLeft1:
        case Rule::WithLeft2:
        case Rule::WithRight:
        case Rule::LolliLeft:
        case Rule::LolliRight:
        case Rule::TensorLeft:
        case Rule::TensorRight:
        case Rule::OneLeft:
        case Rule::OneRight: return s != System::LJ;
        case Rule::Der:
        case Rule::Prom:
        case Rule::BangWeak:
        case Rule::BangContr: return s == System::ILL || s == System::DILL;
        case Rule::CoWeak:
        case Rule::CoContr:
        case Rule::CoDer:
        case Rule::Zero:
        case Rule::Sum: return s == System::DILL;
    }
    return false;
}

using Ctx = std::vector<F>;

Ctx slice(const Ctx& c, size_t from, size_t to) { return Ctx(c.begin() + from, c.begin() + to); }

Ctx cat(Ctx a, const Ctx& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

bool ctx_eq(const Ctx& a, const Ctx& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!feq(a[i], b[i])) return false;
    return true;
}

class Validator {
public:
    explicit Validator(System s) : sys_(s) {}
    ValidationReport report;

    void node(const P& p, Path& path) {
        check(p, path);
        for (size_t i = 0; i < p->prem.size(); ++i) {
            path.push_back(static_cast<int>(i));
            node(p->prem[i], path);
            path.pop_back();
        }
    }

private:
    System sys_;

    void fail(const Path& path, const P& p, std::string msg) {
        report.violations.push_back({path, rule_name(p->rule), std::move(msg)});
    }

    // Premise k must prove exactly ctx |- c.
    bool expect(const Path& path, const P& p, int k, const Ctx& ctx, const F& c) {
        const Sequent& got = p->prem[k]->concl;
        if (ctx_eq(got.ctx, ctx) && feq(got.concl, c)) return true;
        fail(path, p,
             "premise " + std::to_string(k) + " should be " + Sequent{ctx, c}.pretty() + " but is " + got.pretty());
        return false;
    }

    void check(const P& p, const Path& path) {
        const Ctx& G = p->concl.ctx;
        const F& C = p->concl.concl;
        const size_t n = G.size();
        if (static_cast<int>(p->prem.size()) != rule_arity(p->rule)) {
            fail(path, p, "wrong number of premises");
            return;
        }
        for (const auto& f : G)
            if (auto c = bad_conn(f, sys_)) fail(path, p, std::string("connective ") + conn_name(*c) + " not in " + system_name(sys_));
        if (auto c = bad_conn(C, sys_)) fail(path, p, std::string("connective ") + conn_name(*c) + " not in " + system_name(sys_));
        if (!rule_allowed(p->rule, sys_)) {
            if ((p->rule == Rule::Weak || p->rule == Rule::Contr) && sys_ == System::IMALL)
                fail(path, p, std::string(p->rule == Rule::Weak ? "weakening" : "contraction") + " is not a rule of imall");
            else
                fail(path, p, std::string("rule ") + rule_name(p->rule) + " not in " + system_name(sys_));
            return;
        }
        auto last_is = [&](Conn c) -> F {
            if (n == 0 || G.back()->conn != c) return nullptr;
            return G.back();
        };
        auto need_split = [&](size_t limit) -> bool {
            if (p->split < 0 || static_cast<size_t>(p->split) > limit) {
                fail(path, p, ":split " + std::to_string(p->split) + " out of range");
                return false;
            }
            return true;
        };
        const bool lin = is_linear(sys_);
        switch (p->rule) {
            case Rule::Ax:
                if (n != 1 || !feq(G[0], C)) fail(path, p, "axiom must have the shape A |- A");
                break;
            case Rule::Cut: {
                if (!need_split(n)) break;
                size_t k = p->split;
                const F& B = p->prem[0]->concl.concl;
                expect(path, p, 0, slice(G, 0, k), B);
                if (lin)
                    expect(path, p, 1, cat(slice(G, k, n), {B}), C);
                else
                    expect(path, p, 1, cat({B}, slice(G, k, n)), C);
                break;
            }
            case Rule::Weak:
            case Rule::BangWeak:
                if (n == 0) {
                    fail(path, p, "weakening needs a nonempty context");
                    break;
                }
                if (sys_ != System::LJ && !G.back()->is_bang()) fail(path, p, "weakening restricted to !A");
                expect(path, p, 0, slice(G, 0, n - 1), C);
                break;
            case Rule::Contr:
            case Rule::BangContr:
                if (n == 0) {
                    fail(path, p, "contraction needs a nonempty context");
                    break;
                }
                if (sys_ != System::LJ && !G.back()->is_bang()) fail(path, p, "contraction restricted to !A");
                expect(path, p, 0, cat(G, {G.back()}), C);
                break;
            case Rule::Ex: {
                if (p->pos < 0 || static_cast<size_t>(p->pos) + 1 >= n) {
                    fail(path, p, ":pos " + std::to_string(p->pos) + " out of range");
                    break;
                }
                Ctx q = G;
                std::swap(q[p->pos], q[p->pos + 1]);
                expect(path, p, 0, q, C);
                break;
            }
            case Rule::AndLeft1:
            case Rule::AndLeft2:
            case Rule::WithLeft1:
            case Rule::WithLeft2: {
                bool is_and = p->rule == Rule::AndLeft1 || p->rule == Rule::AndLeft2;
                F a = last_is(is_and ? Conn::And : Conn::With);
                if (!a) {
                    fail(path, p, std::string("last hypothesis must be a ") + (is_and ? "conjunction" : "with"));
                    break;
                }
                bool first = p->rule == Rule::AndLeft1 || p->rule == Rule::WithLeft1;
                expect(path, p, 0, cat(slice(G, 0, n - 1), {first ? a->l : a->r}), C);
                break;
            }
            case Rule::AndRight:
            case Rule::WithRight: {
                Conn c = p->rule == Rule::AndRight ? Conn::And : Conn::With;
                if (C->conn != c) {
                    fail(path, p, std::string("conclusion must be a ") + conn_name(c));
                    break;
                }
                expect(path, p, 0, G, C->l);
                expect(path, p, 1, G, C->r);
                break;
            }
            case Rule::TopRight:
                if (C->conn != Conn::Top) fail(path, p, "conclusion must be top");
                break;
            case Rule::ImplLeft: {
                if (n == 0 || G[0]->conn != Conn::Impl) {
                    fail(path, p, "first hypothesis must be an implication");
                    break;
                }
                if (!need_split(n - 1)) break;
                size_t k = p->split;
                expect(path, p, 0, slice(G, 1, 1 + k), G[0]->l);
                expect(path, p, 1, cat({G[0]->r}, slice(G, 1 + k, n)), C);
                break;
            }
            case Rule::LolliLeft: {
                F a = last_is(Conn::Lolli);
                if (!a) {
                    fail(path, p, "last hypothesis must be a linear implication");
                    break;
                }
                if (!need_split(n - 1)) break;
                size_t k = p->split;
                expect(path, p, 0, slice(G, 0, k), a->l);
                expect(path, p, 1, cat(slice(G, k, n - 1), {a->r}), C);
                break;
            }
            case Rule::ImplRight:
            case Rule::LolliRight: {
                Conn c = p->rule == Rule::ImplRight ? Conn::Impl : Conn::Lolli;
                if (C->conn != c) {
                    fail(path, p, std::string("conclusion must be ") + conn_name(c));
                    break;
                }
                expect(path, p, 0, cat(G, {C->l}), C->r);
                break;
            }
            case Rule::TensorLeft: {
                F a = last_is(Conn::Tensor);
                if (!a) {
                    fail(path, p, "last hypothesis must be a tensor");
                    break;
                }
                expect(path, p, 0, cat(slice(G, 0, n - 1), {a->l, a->r}), C);
                break;
            }
            case Rule::TensorRight: {
                if (C->conn != Conn::Tensor) {
                    fail(path, p, "conclusion must be a tensor");
                    break;
                }
                if (!need_split(n)) break;
                expect(path, p, 0, slice(G, 0, p->split), C->l);
                expect(path, p, 1, slice(G, p->split, n), C->r);
                break;
            }
            case Rule::OneLeft:
                if (!last_is(Conn::One)) {
                    fail(path, p, "last hypothesis must be one");
                    break;
                }
                expect(path, p, 0, slice(G, 0, n - 1), C);
                break;
            case Rule::OneRight:
                if (n != 0 || C->conn != Conn::One) fail(path, p, "one-right must conclude |- 1");
                break;
            case Rule::Der: {
                F a = last_is(Conn::Bang);
                if (!a) {
                    fail(path, p, "dereliction needs a last hypothesis !A");
                    break;
                }
                expect(path, p, 0, cat(slice(G, 0, n - 1), {a->l}), C);
                break;
            }
            case Rule::Prom:
                if (C->conn != Conn::Bang) {
                    fail(path, p, "promotion must conclude !B");
                    break;
                }
                for (const auto& f : G)
                    if (!f->is_bang()) {
                        fail(path, p, "promotion context must be !A1, ..., !An");
                        break;
                    }
                expect(path, p, 0, G, C->l);
                break;
            case Rule::CoWeak:
                if (n != 0 || C->conn != Conn::Bang) fail(path, p, "co-weakening must conclude |- !A");
                break;
            case Rule::CoContr:
                if (C->conn != Conn::Bang) {
                    fail(path, p, "co-contraction must conclude !A");
                    break;
                }
                if (!need_split(n)) break;
                expect(path, p, 0, slice(G, 0, p->split), C);
                expect(path, p, 1, slice(G, p->split, n), C);
                break;
            case Rule::CoDer:
                if (C->conn != Conn::Bang) {
                    fail(path, p, "co-dereliction must conclude !A");
                    break;
                }
                expect(path, p, 0, G, C->l);
                break;
            case Rule::Zero:
                break;
            case Rule::Sum:
                expect(path, p, 0, G, C);
                expect(path, p, 1, G, C);
                break;
        }
    }
};

// ---- enumeration ----

class Enumerator {
public:
    Enumerator(System s, const EnumerateOptions& o) : sys_(s), opt_(o) {}

    const std::vector<P>& run(const Sequent& s, int depth) {
        std::string key = std::to_string(depth) + s.str();
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        std::vector<P> out;
        if (depth >= 1) expand(s, depth, out);
        return memo_.emplace(key, std::move(out)).first->second;
    }

private:
    System sys_;
    EnumerateOptions opt_;
    size_t made_ = 0;
    std::map<std::string, std::vector<P>> memo_;

    void emit(std::vector<P>& out, P p) {
        made_ += 1;
        if (made_ > opt_.node_budget) throw ResourceLimit("enumeration exceeded node budget of " + std::to_string(opt_.node_budget));
        out.push_back(std::move(p));
    }

    void one(std::vector<P>& out, Rule r, const Sequent& s, const Sequent& q, int d, int split = -1, int pos = -1) {
        const auto& ps = run(q, d - 1);
        for (const auto& a : ps) emit(out, Proof::make(r, s, {a}, split, pos));
    }

    void two(std::vector<P>& out, Rule r, const Sequent& s, const Sequent& q0, const Sequent& q1, int d, int split = -1) {
        const auto ps0 = run(q0, d - 1);
        if (ps0.empty()) return;
        const auto ps1 = run(q1, d - 1);
        for (const auto& a : ps0)
            for (const auto& b : ps1) emit(out, Proof::make(r, s, {a, b}, split));
    }

    void expand(const Sequent& s, int d, std::vector<P>& out) {
        const Ctx& G = s.ctx;
        const F& C = s.concl;
        const size_t n = G.size();
        auto ok = [&](Rule r) { return rule_allowed(r, sys_); };
        const bool lj = sys_ == System::LJ;

        if (n == 1 && feq(G[0], C)) emit(out, Proof::make(Rule::Ax, s));
        if (C->conn == Conn::Top) emit(out, Proof::make(Rule::TopRight, s));
        if (ok(Rule::OneRight) && n == 0 && C->conn == Conn::One) emit(out, Proof::make(Rule::OneRight, s));
        if (ok(Rule::CoWeak) && n == 0 && C->conn == Conn::Bang) emit(out, Proof::make(Rule::CoWeak, s));
        if (ok(Rule::Zero)) emit(out, Proof::make(Rule::Zero, s));
        if (d == 1) return;

        // structural
        if (n > 0 && (lj || G.back()->is_bang()) && (lj ? ok(Rule::Weak) : ok(Rule::BangWeak)))
            one(out, lj ? Rule::Weak : Rule::BangWeak, s, {slice(G, 0, n - 1), C}, d);
        if (n > 0 && (lj || G.back()->is_bang()) && (lj ? ok(Rule::Contr) : ok(Rule::BangContr)))
            one(out, lj ? Rule::Contr : Rule::BangContr, s, {cat(G, {G.back()}), C}, d);
        for (size_t k = 0; k + 1 < n; ++k) {
            Ctx q = G;
            std::swap(q[k], q[k + 1]);
            one(out, Rule::Ex, s, {q, C}, d, -1, static_cast<int>(k));
        }

        // left rules
        if (n > 0) {
            const F& L = G.back();
            Ctx rest = slice(G, 0, n - 1);
            if (L->conn == Conn::And && ok(Rule::AndLeft1)) {
                one(out, Rule::AndLeft1, s, {cat(rest, {L->l}), C}, d);
                one(out, Rule::AndLeft2, s, {cat(rest, {L->r}), C}, d);
            }
            if (L->conn == Conn::With && ok(Rule::WithLeft1)) {
                one(out, Rule::WithLeft1, s, {cat(rest, {L->l}), C}, d);
                one(out, Rule::WithLeft2, s, {cat(rest, {L->r}), C}, d);
            }
            if (L->conn == Conn::Tensor && ok(Rule::TensorLeft)) one(out, Rule::TensorLeft, s, {cat(rest, {L->l, L->r}), C}, d);
            if (L->conn == Conn::One && ok(Rule::OneLeft)) one(out, Rule::OneLeft, s, {rest, C}, d);
            if (L->conn == Conn::Bang && ok(Rule::Der)) one(out, Rule::Der, s, {cat(rest, {L->l}), C}, d);
            if (L->conn == Conn::Lolli && ok(Rule::LolliLeft))
                for (size_t k = 0; k <= n - 1; ++k)
                    two(out, Rule::LolliLeft, s, {slice(G, 0, k), L->l}, {cat(slice(G, k, n - 1), {L->r}), C}, d,
                        static_cast<int>(k));
            const F& H = G.front();
            if (H->conn == Conn::Impl && ok(Rule::ImplLeft))
                for (size_t k = 0; k <= n - 1; ++k)
                    two(out, Rule::ImplLeft, s, {slice(G, 1, 1 + k), H->l}, {cat({H->r}, slice(G, 1 + k, n)), C}, d,
                        static_cast<int>(k));
        }

        // right rules
        switch (C->conn) {
            case Conn::And:
                if (ok(Rule::AndRight)) two(out, Rule::AndRight, s, {G, C->l}, {G, C->r}, d);
                break;
            case Conn::With:
                if (ok(Rule::WithRight)) two(out, Rule::WithRight, s, {G, C->l}, {G, C->r}, d);
                break;
            case Conn::Impl:
                if (ok(Rule::ImplRight)) one(out, Rule::ImplRight, s, {cat(G, {C->l}), C->r}, d);
                break;
            case Conn::Lolli:
                if (ok(Rule::LolliRight)) one(out, Rule::LolliRight, s, {cat(G, {C->l}), C->r}, d);
                break;
            case Conn::Tensor:
                if (ok(Rule::TensorRight))
                    for (size_t k = 0; k <= n; ++k)
                        two(out, Rule::TensorRight, s, {slice(G, 0, k), C->l}, {slice(G, k, n), C->r}, d,
                            static_cast<int>(k));
                break;
            case Conn::Bang: {
                bool all_bang = true;
                for (const auto& f : G) all_bang = all_bang && f->is_bang();
                if (ok(Rule::Prom) && all_bang) one(out, Rule::Prom, s, {G, C->l}, d);
                if (ok(Rule::CoDer)) one(out, Rule::CoDer, s, {G, C->l}, d);
                if (ok(Rule::CoContr))
                    for (size_t k = 0; k <= n; ++k)
                        two(out, Rule::CoContr, s, {slice(G, 0, k), C}, {slice(G, k, n), C}, d, static_cast<int>(k));
                break;
            }
            default:
                break;
        }
        if (ok(Rule::Sum)) two(out, Rule::Sum, s, s, s, d);
    }
};

}  // namespace

P replace_at(const P& root, const Path& path, P repl) { return replace_rec(root, path, 0, repl); }

ValidationReport validate_proof(const P& p, System sys) {
    Validator v(sys);
    Path path;
    v.node(p, path);
    return v.report;
}

std::vector<P> enumerate_proofs(const Sequent& s, System sys, const EnumerateOptions& opt) {
    if (opt.max_depth < 1) throw std::invalid_argument("max_depth must be at least 1");
    Enumerator e(sys, opt);
    return e.run(s, opt.max_depth);
}

}  // namespace llk
