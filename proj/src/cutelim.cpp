#include "llk/cutelim.hpp"

#include <algorithm>
#include <unordered_map>

namespace llk {

std::string Redex::kind_str() const {
    switch (kind) {
        case RedexKind::AxiomCutLeft: return "axiom-cut-left";
        case RedexKind::AxiomCutRight: return "axiom-cut-right";
        case RedexKind::PrincipalPair: return "principal-pair(" + rule_l + "," + rule_r + ")";
        case RedexKind::CommutativeLeft: return "commutative-left";
        case RedexKind::CommutativeRight: return "commutative-right";
    }
    return "?";
}

const char* strategy_name(Strategy s) {
    return s == Strategy::LeftmostInnermost ? "leftmost-innermost" : "leftmost-outermost";
}

std::vector<int> origins(const Proof& n, int k, System sys) {
    const int m = static_cast<int>(n.prem.at(k)->concl.ctx.size());
    std::vector<int> o(m);
    auto ident = [&] {
        for (int j = 0; j < m; ++j) o[j] = j;
    };
    auto drop_last = [&](int d) {
        for (int j = 0; j < m; ++j) o[j] = j < m - d ? j : -1;
    };
    switch (n.rule) {
        case Rule::Cut:
            if (k == 0) ident();
            else if (sys == System::LJ)
                for (int j = 0; j < m; ++j) o[j] = j == 0 ? -1 : n.split + j - 1;
            else
                for (int j = 0; j < m; ++j) o[j] = j == m - 1 ? -1 : n.split + j;
            break;
        case Rule::Weak: case Rule::BangWeak: case Rule::OneLeft:
        case Rule::AndRight: case Rule::WithRight: case Rule::Prom: case Rule::CoDer: case Rule::Sum:
            ident();
            break;
        case Rule::Contr: case Rule::BangContr: case Rule::TensorLeft:
            drop_last(2);
            break;
        case Rule::Ex:
            ident();
            std::swap(o[n.pos], o[n.pos + 1]);
            break;
        case Rule::AndLeft1: case Rule::AndLeft2: case Rule::WithLeft1: case Rule::WithLeft2:
        case Rule::Der: case Rule::ImplRight: case Rule::LolliRight:
            drop_last(1);
            break;
        case Rule::TensorRight: case Rule::CoContr:
            for (int j = 0; j < m; ++j) o[j] = k == 0 ? j : n.split + j;
            break;
        case Rule::ImplLeft:
            for (int j = 0; j < m; ++j) o[j] = k == 0 ? 1 + j : (j == 0 ? -1 : n.split + j);
            break;
        case Rule::LolliLeft:
            for (int j = 0; j < m; ++j) o[j] = k == 0 ? j : (j == m - 1 ? -1 : n.split + j);
            break;
        default:
            break;
    }
    return o;
}

namespace {

// A subproof together with stable ids for the occurrences in its context.
struct W {
    P p;
    std::vector<int> ids;
};

std::vector<int> without(const std::vector<int>& v, int x) {
    std::vector<int> r;
    for (int y : v)
        if (y != x) r.push_back(y);
    return r;
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

int index_of(const std::vector<int>& v, int x) {
    auto it = std::find(v.begin(), v.end(), x);
    if (it == v.end()) throw std::logic_error("occurrence id not found");
    return static_cast<int>(it - v.begin());
}

bool right_principal(Rule r) {
    switch (r) {
        case Rule::AndRight: case Rule::TopRight: case Rule::ImplRight: case Rule::WithRight:
        case Rule::LolliRight: case Rule::TensorRight: case Rule::OneRight: case Rule::Prom:
        case Rule::CoWeak: case Rule::CoContr: case Rule::CoDer:
            return true;
        default:
            return false;
    }
}

bool is_weak(Rule r) { return r == Rule::Weak || r == Rule::BangWeak; }
bool is_contr(Rule r) { return r == Rule::Contr || r == Rule::BangContr; }

// Context index of the formula a left rule introduces, or -1.
int principal_index(const Proof& n) {
    int sz = static_cast<int>(n.concl.ctx.size());
    switch (n.rule) {
        case Rule::Weak: case Rule::Contr: case Rule::BangWeak: case Rule::BangContr:
        case Rule::AndLeft1: case Rule::AndLeft2: case Rule::WithLeft1: case Rule::WithLeft2:
        case Rule::TensorLeft: case Rule::OneLeft: case Rule::Der: case Rule::LolliLeft:
            return sz - 1;
        case Rule::ImplLeft:
            return 0;
        default:
            return -1;
    }
}

struct Engine {
    System sys = System::LJ;
    int next = 0;
    std::unordered_map<int, F> form;

    int fresh(const F& f) {
        form[next] = f;
        return next++;
    }

    std::vector<F> forms(const std::vector<int>& ids) const {
        std::vector<F> r;
        for (int i : ids) r.push_back(form.at(i));
        return r;
    }

    W node(Rule r, const std::vector<int>& ids, const F& concl, std::vector<P> prem, int split = -1, int pos = -1) {
        return {Proof::make(r, Sequent{forms(ids), concl}, std::move(prem), split, pos), ids};
    }


    // Adjacent exchanges until the context reads `target`.
    W reorder(W w, const std::vector<int>& target) {
        if (target.size() != w.ids.size()) throw std::logic_error("reorder: size mismatch");
        for (size_t i = 0; i < target.size(); ++i) {
            int j = index_of(w.ids, target[i]);
            if (j < static_cast<int>(i)) throw std::logic_error("reorder: duplicate id");
            for (; j > static_cast<int>(i); --j) {
                std::swap(w.ids[j - 1], w.ids[j]);
                w = node(Rule::Ex, w.ids, w.p->concl.concl, {w.p}, -1, j - 1);
            }
        }
        return w;
    }

    std::vector<int> prem_ids(const W& w, int k) {
        const Proof& n = *w.p;
        auto o = origins(n, k, sys);
        std::vector<int> r;
        const auto& pctx = n.prem[k]->concl.ctx;
        for (size_t j = 0; j < o.size(); ++j) r.push_back(o[j] >= 0 ? w.ids[o[j]] : fresh(pctx[j]));
        return r;
    }

    W mk_cut(const W& a, W b, int slot) {
        auto rest = without(b.ids, slot);
        b = reorder(b, sys == System::LJ ? concat({slot}, rest) : concat(rest, {slot}));
        return node(Rule::Cut, concat(a.ids, rest), b.p->concl.concl, {a.p, b.p}, static_cast<int>(a.ids.size()));
    }

    W sum(const W& x, const W& y) {
        W y2 = reorder(y, x.ids);
        return node(Rule::Sum, x.ids, x.p->concl.concl, {x.p, y2.p});
    }

    struct Analysis {
        RedexKind kind;
        Rule rl, rr;
        bool blocked = false;
        W rho;  // right subproof with exchanges above the cut skipped
    };

    Analysis analyze(const W& w1, const W& w2, int s) {
        W rho = w2;
        while (rho.p->rule == Rule::Ex) rho = {rho.p->prem[0], prem_ids(rho, 0)};
        Analysis a{RedexKind::CommutativeRight, w1.p->rule, rho.p->rule, false, rho};
        Rule l = w1.p->rule, r = rho.p->rule;
        if (l == Rule::Ax) a.kind = RedexKind::AxiomCutLeft;
        else if (r == Rule::Ax) a.kind = RedexKind::AxiomCutRight;
        else if (l == Rule::Zero || l == Rule::Sum) a.kind = RedexKind::CommutativeLeft;
        else if (r == Rule::Zero || r == Rule::Sum) a.kind = RedexKind::CommutativeRight;
        else if (!right_principal(l)) {
            a.kind = RedexKind::CommutativeLeft;
            a.blocked = l == Rule::Cut;
        } else if (principal_index(*rho.p) >= 0 && rho.ids[principal_index(*rho.p)] == s)
            a.kind = RedexKind::PrincipalPair;
        else {
            a.kind = RedexKind::CommutativeRight;
            a.blocked = r == Rule::Cut;
        }
        return a;
    }

    W reduce(const W& w1, const W& w2, int s) {
        Analysis a = analyze(w1, w2, s);
        switch (a.kind) {
            case RedexKind::AxiomCutLeft: {
                W r = w2;
                r.ids[index_of(r.ids, s)] = w1.ids.at(0);
                return r;
            }
            case RedexKind::AxiomCutRight:
                return w1;
            case RedexKind::CommutativeLeft:
                return commute_left(w1, w2, s);
            case RedexKind::CommutativeRight:
                return commute_right(w1, a.rho, s);
            case RedexKind::PrincipalPair:
                return principal(w1, a.rho, s);
        }
        throw std::logic_error("unreachable");
    }

    W commute_left(const W& w1, const W& w2, int s) {
        const Proof& n = *w1.p;
        auto g2 = without(w2.ids, s);
        const F& C = w2.p->concl.concl;
        if (n.rule == Rule::Zero) return node(Rule::Zero, concat(w1.ids, g2), C, {});
        if (n.rule == Rule::Sum) {
            W x = mk_cut({n.prem[0], w1.ids}, w2, s);
            W y = mk_cut({n.prem[1], w1.ids}, w2, s);
            return sum(x, y);
        }
        // the premise that carries the cut formula, and where Γ2 goes in it and in the conclusion
        int k = (n.rule == Rule::ImplLeft || n.rule == Rule::LolliLeft || n.rule == Rule::Cut) ? 1 : 0;
        auto pids = prem_ids(w1, k);
        int pm = static_cast<int>(pids.size()), cm = static_cast<int>(w1.ids.size());
        int pins = pm, cins = cm;
        switch (n.rule) {
            case Rule::Weak: case Rule::BangWeak: case Rule::OneLeft:
                cins = cm - 1;
                break;
            case Rule::Contr: case Rule::BangContr: case Rule::TensorLeft:
                pins = pm - 2;
                cins = cm - 1;
                break;
            case Rule::AndLeft1: case Rule::AndLeft2: case Rule::WithLeft1: case Rule::WithLeft2: case Rule::Der:
            case Rule::LolliLeft:
                pins = pm - 1;
                cins = cm - 1;
                break;
            case Rule::Cut:
                if (sys != System::LJ) pins = pm - 1;
                break;
            case Rule::Ex: case Rule::ImplLeft:
                break;
            default:
                throw StepError(std::string("no commutative-left step for ") + rule_name(n.rule));
        }
        W inner = mk_cut({n.prem[k], pids}, w2, s);
        std::vector<int> ptarget(pids.begin(), pids.begin() + pins);
        ptarget = concat(concat(ptarget, g2), std::vector<int>(pids.begin() + pins, pids.end()));
        inner = reorder(inner, ptarget);
        std::vector<int> cids(w1.ids.begin(), w1.ids.begin() + cins);
        cids = concat(concat(cids, g2), std::vector<int>(w1.ids.begin() + cins, w1.ids.end()));
        std::vector<P> prem = n.prem;
        prem[k] = inner.p;
        int split = rule_has_split(n.rule) ? static_cast<int>(prem[0]->concl.ctx.size()) : -1;
        return node(n.rule, cids, C, prem, split, n.pos);
    }

    W commute_right(const W& w1, const W& rho, int s) {
        const Proof& n = *rho.p;
        const F& C = n.concl.concl;
        auto replaced = [&](const std::vector<int>& ids) {
            std::vector<int> r;
            for (int x : ids)
                if (x == s) r = concat(r, w1.ids);
                else r.push_back(x);
            return r;
        };
        if (n.rule == Rule::Prom && w1.p->rule != Rule::Prom)
            throw StepError(std::string("cannot push a cut on ") + rule_name(w1.p->rule) + " into a promotion");
        std::vector<P> prem;
        for (size_t k = 0; k < n.prem.size(); ++k) {
            auto pids = prem_ids(rho, static_cast<int>(k));
            if (std::find(pids.begin(), pids.end(), s) == pids.end()) {
                prem.push_back(n.prem[k]);
                continue;
            }
            W c = mk_cut(w1, {n.prem[k], pids}, s);
            prem.push_back(reorder(c, replaced(pids)).p);
        }
        int split = rule_has_split(n.rule) ? static_cast<int>(prem[0]->concl.ctx.size()) : -1;
        return node(n.rule, replaced(rho.ids), C, prem, split, n.pos);
    }

    // Weakens ρ's premise by every formula of w1 (ρ weakens the cut formula).
    W weaken_all(const W& w1, const W& rho) {
        W t{rho.p->prem[0], prem_ids(rho, 0)};
        for (int x : w1.ids) t = node(rho.p->rule, concat(t.ids, {x}), t.p->concl.concl, {t.p});
        return t;
    }

    // Duplicates w1 into both contracted copies, then contracts its context.
    W duplicate(const W& w1, const W& rho) {
        auto pids = prem_ids(rho, 0);
        int a1 = pids[pids.size() - 2], a2 = pids.back();
        W t = mk_cut(w1, {rho.p->prem[0], pids}, a2);
        std::vector<int> copy;
        for (int x : w1.ids) copy.push_back(fresh(form.at(x)));
        t = mk_cut({w1.p, copy}, t, a1);
        for (size_t i = 0; i < w1.ids.size(); ++i) {
            int x = w1.ids[i], cx = copy[i];
            auto others = without(without(t.ids, x), cx);
            t = reorder(t, concat(others, {x, cx}));
            t = node(rho.p->rule, concat(others, {x}), t.p->concl.concl, {t.p});
        }
        return t;
    }

    W principal(const W& w1, const W& rho, int s) {
        const Proof& l = *w1.p;
        const Proof& r = *rho.p;
        const F& C = r.concl.concl;
        auto fail = [&]() -> W {
            throw StepError(std::string("no principal step for ") + rule_name(l.rule) + " against " + rule_name(r.rule));
        };
        bool co = l.rule == Rule::CoDer || l.rule == Rule::CoWeak || l.rule == Rule::CoContr;
        if (!co && (is_weak(r.rule) || is_contr(r.rule))) {
            if (sys != System::LJ && l.rule != Rule::Prom) fail();
            return is_weak(r.rule) ? weaken_all(w1, rho) : duplicate(w1, rho);
        }
        switch (r.rule) {
            case Rule::AndLeft1: case Rule::AndLeft2: case Rule::WithLeft1: case Rule::WithLeft2: {
                if (l.rule != Rule::AndRight && l.rule != Rule::WithRight) fail();
                int i = (r.rule == Rule::AndLeft1 || r.rule == Rule::WithLeft1) ? 0 : 1;
                auto pids = prem_ids(rho, 0);
                return mk_cut({l.prem[i], w1.ids}, {r.prem[0], pids}, pids.back());
            }
            case Rule::ImplLeft: case Rule::LolliLeft: {
                if (l.rule != Rule::ImplRight && l.rule != Rule::LolliRight) fail();
                auto body = prem_ids(w1, 0);  // Γ1, A
                auto qids = prem_ids(rho, 0);  // ⊢ A
                auto rids = prem_ids(rho, 1);  // B in first or last position
                int fb = r.rule == Rule::ImplLeft ? rids.front() : rids.back();
                W t = mk_cut({r.prem[0], qids}, {l.prem[0], body}, body.back());
                return mk_cut(t, {r.prem[1], rids}, fb);
            }
            case Rule::TensorLeft: {
                if (l.rule != Rule::TensorRight) fail();
                auto pids = prem_ids(rho, 0);
                int a1 = pids[pids.size() - 2], a2 = pids.back();
                W t = mk_cut({l.prem[1], prem_ids(w1, 1)}, {r.prem[0], pids}, a2);
                return mk_cut({l.prem[0], prem_ids(w1, 0)}, t, a1);
            }
            case Rule::OneLeft:
                if (l.rule != Rule::OneRight) fail();
                return {r.prem[0], prem_ids(rho, 0)};
            case Rule::Der: {
                auto pids = prem_ids(rho, 0);
                if (l.rule == Rule::Prom || l.rule == Rule::CoDer) return mk_cut({l.prem[0], w1.ids}, {r.prem[0], pids}, pids.back());
                if (l.rule == Rule::CoWeak) return node(Rule::Zero, without(rho.ids, s), C, {});
                if (l.rule == Rule::CoContr) {
                    auto ida = prem_ids(w1, 0), idb = prem_ids(w1, 1);
                    int w = fresh(form.at(s));
                    W wk = node(Rule::BangWeak, concat(rho.ids, {w}), C, {rho.p});
                    W x = mk_cut({l.prem[1], idb}, mk_cut({l.prem[0], ida}, wk, s), w);
                    W y = mk_cut({l.prem[0], ida}, mk_cut({l.prem[1], idb}, wk, s), w);
                    return sum(x, y);
                }
                return fail();
            }
            case Rule::Weak: case Rule::BangWeak: {
                auto pids = prem_ids(rho, 0);
                if (l.rule == Rule::CoWeak) return {r.prem[0], pids};
                if (l.rule == Rule::CoDer) return node(Rule::Zero, concat(w1.ids, pids), C, {});
                if (l.rule == Rule::CoContr) {
                    W t{r.prem[0], pids};
                    int wa = fresh(form.at(s)), wb = fresh(form.at(s));
                    t = node(Rule::BangWeak, concat(t.ids, {wa}), C, {t.p});
                    t = node(Rule::BangWeak, concat(t.ids, {wb}), C, {t.p});
                    t = mk_cut({l.prem[0], prem_ids(w1, 0)}, t, wa);
                    return mk_cut({l.prem[1], prem_ids(w1, 1)}, t, wb);
                }
                return fail();
            }
            case Rule::Contr: case Rule::BangContr: {
                auto pids = prem_ids(rho, 0);
                int a1 = pids[pids.size() - 2], a2 = pids.back();
                W body{r.prem[0], pids};
                const F& bA = form.at(s);
                if (l.rule == Rule::CoWeak) return mk_cut(w1, mk_cut(w1, body, a2), a1);
                if (l.rule == Rule::CoDer) {
                    W cw = node(Rule::CoWeak, {}, bA, {});
                    W x = mk_cut(w1, mk_cut(cw, body, a2), a1);
                    W y = mk_cut(w1, mk_cut(cw, body, a1), a2);
                    return sum(x, y);
                }
                if (l.rule == Rule::CoContr) {
                    auto cc = [&](int& u, int& v) {
                        u = fresh(bA);
                        v = fresh(bA);
                        W au = node(Rule::Ax, {u}, bA, {}), av = node(Rule::Ax, {v}, bA, {});
                        return node(Rule::CoContr, {u, v}, bA, {au.p, av.p}, 1);
                    };
                    int u1, v1, u2, v2;
                    W c1 = cc(u1, v1), c2 = cc(u2, v2);
                    W t = mk_cut(c2, mk_cut(c1, body, a1), a2);
                    for (auto [x, y] : {std::pair{u1, u2}, std::pair{v1, v2}}) {
                        auto others = without(without(t.ids, x), y);
                        t = reorder(t, concat(others, {x, y}));
                        t = node(Rule::BangContr, concat(others, {x}), C, {t.p});
                    }
                    t = mk_cut({l.prem[0], prem_ids(w1, 0)}, t, u1);
                    return mk_cut({l.prem[1], prem_ids(w1, 1)}, t, v1);
                }
                return fail();
            }
            default:
                return fail();
        }
    }
};

struct Setup {
    Engine e;
    W w1, w2;
    std::vector<int> ids;
    int slot = 0;
};

Setup setup(const P& cut, System sys) {
    if (!cut || cut->rule != Rule::Cut) throw StepError("redex address is not a cut node");
    Setup st;
    st.e.sys = sys;
    for (const auto& f : cut->concl.ctx) st.ids.push_back(st.e.fresh(f));
    int k = cut->split;
    std::vector<int> g1(st.ids.begin(), st.ids.begin() + k), g2(st.ids.begin() + k, st.ids.end());
    st.slot = st.e.fresh(cut->prem[0]->concl.concl);
    st.w1 = {cut->prem[0], g1};
    st.w2 = {cut->prem[1], sys == System::LJ ? concat({st.slot}, g2) : concat(g2, {st.slot})};
    return st;
}

void collect(const P& p, System sys, Path& path, std::vector<Redex>& out) {
    if (p->rule == Rule::Cut) out.push_back(classify_cut(p, sys, path));
    for (size_t k = 0; k < p->prem.size(); ++k) {
        path.push_back(static_cast<int>(k));
        collect(p->prem[k], sys, path, out);
        path.pop_back();
    }
}

}  // namespace

Redex classify_cut(const P& cut, System sys, Path path) {
    Setup st = setup(cut, sys);
    auto a = st.e.analyze(st.w1, st.w2, st.slot);
    return Redex{std::move(path), a.kind, rule_name(a.rl), rule_name(a.rr), a.blocked};
}

std::vector<Redex> find_redexes(const P& p, System sys) {
    std::vector<Redex> out;
    Path path;
    collect(p, sys, path, out);
    return out;
}

P step(const P& p, const Redex& r, System sys) {
    P cut;
    try {
        cut = subproof_at(p, r.path);
    } catch (const std::out_of_range&) {
        throw StepError("invalid redex address " + path_str(r.path));
    }
    Setup st = setup(cut, sys);
    W res = st.e.reorder(st.e.reduce(st.w1, st.w2, st.slot), st.ids);
    if (!seq_eq(res.p->concl, cut->concl)) throw std::logic_error("cut step changed the end-sequent");
    return replace_at(p, r.path, res.p);
}

namespace {

int contractions_on(const P& n, int pos, System sys) {
    int m = static_cast<int>(n->concl.ctx.size());
    if (is_contr(n->rule) && pos == m - 1) {
        int pm = m + 1;
        return 1 + contractions_on(n->prem[0], pm - 2, sys) + contractions_on(n->prem[0], pm - 1, sys);
    }
    int total = 0;
    for (size_t k = 0; k < n->prem.size(); ++k) {
        auto o = origins(*n, static_cast<int>(k), sys);
        for (size_t j = 0; j < o.size(); ++j)
            if (o[j] == pos) total += contractions_on(n->prem[k], static_cast<int>(j), sys);
    }
    return total;
}

int measure_rec(const P& p) {
    int total = 0;
    if (p->rule == Rule::Cut && p->prem[0]->rule == Rule::Prom) {
        const P& r = p->prem[1];
        // the slot sits first (LJ shape) or last; a promotion cut is never LJ
        int slot = static_cast<int>(r->concl.ctx.size()) - 1;
        total += contractions_on(r, slot, System::ILL);
    }
    for (const auto& q : p->prem) total += measure_rec(q);
    return total;
}

}  // namespace

int promoted_cut_measure(const P& p) { return measure_rec(p); }

NormalizeResult normalize(const P& p, System sys, Strategy strategy, int fuel, bool keep_steps) {
    NormalizeResult res;
    P cur = p;
    for (;;) {
        auto rs = find_redexes(cur, sys);
        if (rs.empty()) {
            res.complete = true;
            break;
        }
        if (static_cast<int>(res.trace.size()) >= fuel) break;
        const Redex* pick = nullptr;
        for (const auto& r : rs) {
            bool ok = strategy == Strategy::LeftmostInnermost ? count_cuts(subproof_at(cur, r.path)) == 1 : !r.blocked;
            if (ok) {
                pick = &r;
                break;
            }
        }
        if (!pick) throw std::logic_error("no reducible cut");
        TraceEntry t{*pick, count_cuts(cur), 0, proof_size(cur), 0, promoted_cut_measure(cur), 0};
        cur = step(cur, *pick, sys);
        t.cuts_after = count_cuts(cur);
        t.size_after = proof_size(cur);
        t.promoted_after = promoted_cut_measure(cur);
        res.trace.push_back(t);
        if (keep_steps) res.steps.push_back(cur);
    }
    res.proof = cur;
    return res;
}

}  // namespace llk
