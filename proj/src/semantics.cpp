#include "llk/semantics.hpp"

#include <algorithm>
#include <set>

namespace llk {

Obj interpret_formula(const Env& e, const F& f, const Assignment& a) {
    switch (f->conn) {
        case Conn::Var: {
            auto it = a.find(f->name);
            if (it == a.end()) throw MissingVariable("no value for variable " + f->name);
            return it->second;
        }
        case Conn::Top: return e.top();
        case Conn::One: return e.one();
        case Conn::And:
        case Conn::With: return e.with(interpret_formula(e, f->l, a), interpret_formula(e, f->r, a));
        case Conn::Tensor: return e.tensor(interpret_formula(e, f->l, a), interpret_formula(e, f->r, a));
        case Conn::Impl:
        case Conn::Lolli: return e.lolli(interpret_formula(e, f->l, a), interpret_formula(e, f->r, a));
        case Conn::Bang: return e.bang(interpret_formula(e, f->l, a));
    }
    throw std::logic_error("interpret_formula: bad connective");
}

namespace {

using Objs = std::vector<Obj>;

Objs slice(const Objs& v, size_t from, size_t to) { return Objs(v.begin() + from, v.begin() + to); }
Objs cat(Objs a, const Objs& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

class Interp {
public:
    Interp(const Env& e, System s, const Assignment& a) : e_(e), cart_(s == System::LJ), a_(a) {}

    Obj T(const Objs& g) const {
        if (g.empty()) return cart_ ? e_.top() : e_.one();
        Obj t = g[0];
        for (size_t i = 1; i < g.size(); ++i) t = cart_ ? e_.with(t, g[i]) : e_.tensor(t, g[i]);
        return t;
    }

    Obj I(const F& f) const { return interpret_formula(e_, f, a_); }

    Mor run(const P& p) {
        Objs g;
        for (const auto& f : p->concl.ctx) g.push_back(interpret_formula(e_, f, a_));
        Obj c = interpret_formula(e_, p->concl.concl, a_);
        Mor r = cart_ ? cartesian(*p, g, c) : linear(*p, g, c);
        if (r->dom != T(g) || r->cod != c)
            throw TypeError(std::string(rule_name(p->rule)) + ": built " + obj_str(r->dom) + " → " + obj_str(r->cod) +
                            " for " + p->concl.str());
        return r;
    }

private:
    // ---- cartesian contexts

    Mor proj(const Objs& g, size_t i) const {
        if (g.size() == 1) return e_.id(g[0]);
        Objs pre = slice(g, 0, g.size() - 1);
        if (i + 1 == g.size()) return e_.pr1(T(pre), g.back());
        return e_.comp(proj(pre, i), e_.pr0(T(pre), g.back()));
    }

    Mor tuple(Obj dom, const std::vector<Mor>& fs) const {
        if (fs.empty()) return e_.term(dom);
        Mor t = fs[0];
        for (size_t i = 1; i < fs.size(); ++i) t = e_.pair(t, fs[i]);
        return t;
    }

    Mor select(const Objs& g, const std::vector<size_t>& idx) const {
        std::vector<Mor> fs;
        for (size_t i : idx) fs.push_back(proj(g, i));
        return tuple(T(g), fs);
    }

    static std::vector<size_t> range(size_t from, size_t to) {
        std::vector<size_t> r;
        for (size_t i = from; i < to; ++i) r.push_back(i);
        return r;
    }

    Mor cartesian(const Proof& p, const Objs& g, Obj c) {
        size_t n = g.size();
        auto prem = [&](int k) { return run(p.prem[k]); };
        switch (p.rule) {
            case Rule::Ax: return e_.id(c);
            case Rule::Cut: {
                size_t k = p.split;
                Mor f = e_.comp(prem(0), select(g, range(0, k)));
                std::vector<Mor> fs{f};
                for (size_t i = k; i < n; ++i) fs.push_back(proj(g, i));
                return e_.comp(prem(1), tuple(T(g), fs));
            }
            case Rule::Weak: return e_.comp(prem(0), select(g, range(0, n - 1)));
            case Rule::Contr: {
                auto idx = range(0, n);
                idx.push_back(n - 1);
                return e_.comp(prem(0), select(g, idx));
            }
            case Rule::Ex: {
                auto idx = range(0, n);
                std::swap(idx[p.pos], idx[p.pos + 1]);
                return e_.comp(prem(0), select(g, idx));
            }
            case Rule::AndLeft1:
            case Rule::AndLeft2: {
                std::vector<Mor> fs;
                for (size_t i = 0; i + 1 < n; ++i) fs.push_back(proj(g, i));
                Obj l = I(p.concl.ctx.back()->l), r = I(p.concl.ctx.back()->r);
                Mor pr = p.rule == Rule::AndLeft1 ? e_.pr0(l, r) : e_.pr1(l, r);
                fs.push_back(e_.comp(pr, proj(g, n - 1)));
                return e_.comp(prem(0), tuple(T(g), fs));
            }
            case Rule::AndRight: return e_.pair(prem(0), prem(1));
            case Rule::TopRight: return e_.term(T(g));
            case Rule::ImplLeft: {
                size_t k = p.split;
                Obj a = I(p.concl.ctx[0]->l), b = I(p.concl.ctx[0]->r);
                Mor f = e_.comp(prem(0), select(g, range(1, 1 + k)));
                std::vector<Mor> fs{e_.comp(e_.ev(a, b), e_.pair(proj(g, 0), f))};
                for (size_t i = 1 + k; i < n; ++i) fs.push_back(proj(g, i));
                return e_.comp(prem(1), tuple(T(g), fs));
            }
            case Rule::ImplRight: {
                Obj a = I(p.concl.concl->l);
                Mor f = prem(0);
                // ⟦Γ⟧ × A → ⟦Γ, A⟧ is the identity unless Γ is empty
                if (n == 0) f = e_.comp(f, e_.pr1(e_.top(), a));
                return e_.cur(f);
            }
            default: throw Unsupported(std::string("LJ has no rule ") + rule_name(p.rule));
        }
    }

    // ---- monoidal contexts

    Mor split(const Objs& g1, const Objs& g2) const {
        if (g2.empty()) return e_.rho_inv(T(g1));
        if (g1.empty()) return e_.lambda_inv(T(g2));
        if (g2.size() == 1) return e_.id(T(cat(g1, g2)));
        Objs g2p = slice(g2, 0, g2.size() - 1);
        return e_.comp(e_.alpha(T(g1), T(g2p), g2.back()), e_.tensor(split(g1, g2p), e_.id(g2.back())));
    }

    Mor join(const Objs& g1, const Objs& g2) const {
        if (g2.empty()) return e_.rho(T(g1));
        if (g1.empty()) return e_.lambda(T(g2));
        if (g2.size() == 1) return e_.id(T(cat(g1, g2)));
        Objs g2p = slice(g2, 0, g2.size() - 1);
        return e_.comp(e_.tensor(join(g1, g2p), e_.id(g2.back())), e_.alpha_inv(T(g1), T(g2p), g2.back()));
    }

    // ⟦Γ', A⟧ → ⟦Γ', Δ⟧ acting by h : A → ⟦Δ⟧ on the last hypothesis
    Mor on_last(const Objs& g, const Mor& h, const Objs& d) const {
        Objs pre = slice(g, 0, g.size() - 1);
        return e_.comp({join(pre, d), e_.tensor(e_.id(T(pre)), h), split(pre, {g.back()})});
    }

    Mor exchange(const Objs& g, size_t i) const {
        Objs pre = slice(g, 0, i), post = slice(g, i + 2, g.size());
        Objs ab{g[i], g[i + 1]}, ba{g[i + 1], g[i]};
        Mor inner = e_.comp({join(ba, post), e_.tensor(e_.gamma(g[i], g[i + 1]), e_.id(T(post))), split(ab, post)});
        return e_.comp({join(pre, cat(ba, post)), e_.tensor(e_.id(T(pre)), inner), split(pre, cat(ab, post))});
    }

    // ⟦!A1, ..., !An⟧ → !(A1 & ... & An), iterating m2 from the left
    Obj W(const Objs& as) const {
        if (as.empty()) return e_.top();
        Obj w = as[0];
        for (size_t i = 1; i < as.size(); ++i) w = e_.with(w, as[i]);
        return w;
    }

    Mor seely(const Objs& as) const {
        if (as.empty()) return e_.m0();
        Mor m = e_.id(e_.bang(as[0]));
        for (size_t i = 1; i < as.size(); ++i)
            m = e_.comp(e_.m2(W(slice(as, 0, i)), as[i]), e_.tensor(m, e_.id(e_.bang(as[i]))));
        return m;
    }

    Mor seely_inv(const Objs& as) const {
        if (as.empty()) return e_.m0_inv();
        Mor m = e_.id(e_.bang(as[0]));
        for (size_t i = 1; i < as.size(); ++i)
            m = e_.comp(e_.tensor(m, e_.id(e_.bang(as[i]))), e_.m2_inv(W(slice(as, 0, i)), as[i]));
        return m;
    }

    Mor linear(const Proof& p, const Objs& g, Obj c) {
        size_t n = g.size();
        auto prem = [&](int k) { return run(p.prem[k]); };
        // the last hypothesis and the conclusion, one connective down
        auto last_l = [&] { return I(p.concl.ctx.back()->l); };
        auto last_r = [&] { return I(p.concl.ctx.back()->r); };
        auto concl_l = [&] { return I(p.concl.concl->l); };
        switch (p.rule) {
            case Rule::Ax: return e_.id(c);
            case Rule::Cut: {
                size_t k = p.split;
                Objs g1 = slice(g, 0, k), g2 = slice(g, k, n);
                Mor f = prem(0);
                Obj b = f->cod;
                return e_.comp({prem(1), join(g2, {b}), e_.gamma(b, T(g2)), e_.tensor(f, e_.id(T(g2))), split(g1, g2)});
            }
            case Rule::Weak:
            case Rule::BangWeak: return e_.comp(prem(0), on_last(g, e_.weak(last_l()), {}));
            case Rule::Contr:
            case Rule::BangContr: return e_.comp(prem(0), on_last(g, e_.contr(last_l()), {g.back(), g.back()}));
            case Rule::Ex: return e_.comp(prem(0), exchange(g, p.pos));
            case Rule::WithLeft1:
            case Rule::WithLeft2: {
                Obj l = last_l(), r = last_r();
                bool first = p.rule == Rule::WithLeft1;
                return e_.comp(prem(0), on_last(g, first ? e_.pr0(l, r) : e_.pr1(l, r), {first ? l : r}));
            }
            case Rule::WithRight: return e_.pair(prem(0), prem(1));
            case Rule::TopRight: return e_.term(T(g));
            case Rule::LolliLeft: {
                size_t k = p.split;
                Obj lo = g.back(), a = last_l(), b = last_r();
                Objs g0 = slice(g, 0, k), g1 = slice(g, k, n - 1), rest = cat(g1, {lo});
                Mor f = prem(0);
                return e_.comp({prem(1), join(g1, {b}), e_.tensor(e_.id(T(g1)), e_.ev(a, b)), e_.alpha(T(g1), lo, a),
                                e_.tensor(split(g1, {lo}), e_.id(a)), e_.gamma(a, T(rest)),
                                e_.tensor(f, e_.id(T(rest))), split(g0, rest)});
            }
            case Rule::LolliRight: return e_.cur(e_.comp(prem(0), join(g, {concl_l()})));
            case Rule::TensorLeft: {
                Obj t = g.back();
                return e_.comp(prem(0), on_last(g, e_.id(t), {last_l(), last_r()}));
            }
            case Rule::TensorRight: {
                size_t k = p.split;
                return e_.comp(e_.tensor(prem(0), prem(1)), split(slice(g, 0, k), slice(g, k, n)));
            }
            case Rule::OneLeft: return e_.comp(prem(0), on_last(g, e_.id(e_.one()), {}));
            case Rule::OneRight: return e_.id(e_.one());
            case Rule::Der: return e_.comp(prem(0), on_last(g, e_.der(last_l()), {last_l()}));
            case Rule::Prom: {
                Objs as;
                for (const auto& f : p.concl.ctx) as.push_back(I(f->l));
                Mor f = prem(0);
                return e_.comp({e_.bang(f), e_.bang(seely_inv(as)), e_.dig(W(as)), seely(as)});
            }
            case Rule::CoWeak: return e_.coweak(concl_l());
            case Rule::CoContr: {
                size_t k = p.split;
                return e_.comp({e_.cocontr(concl_l()), e_.tensor(prem(0), prem(1)), split(slice(g, 0, k), slice(g, k, n))});
            }
            case Rule::CoDer: return e_.comp(e_.coder(concl_l()), prem(0));
            case Rule::Zero: return e_.zero(T(g), c);
            case Rule::Sum: return e_.sum(prem(0), prem(1));
            default: throw Unsupported(std::string("no linear clause for ") + rule_name(p.rule));
        }
    }

    const Env& e_;
    bool cart_;
    const Assignment& a_;
};

}  // namespace

Obj interpret_context(const Env& e, System s, const std::vector<F>& ctx, const Assignment& a) {
    Objs g;
    for (const auto& f : ctx) g.push_back(interpret_formula(e, f, a));
    return Interp(e, s, a).T(g);
}

Mor interpret_proof(const Env& e, const P& p, System s, const Assignment& a) { return Interp(e, s, a).run(p); }

namespace {

void vars_of(const P& p, std::set<std::string>& out) {
    std::vector<std::string> v;
    for (const auto& f : p->concl.ctx) collect_vars(f, v);
    collect_vars(p->concl.concl, v);
    out.insert(v.begin(), v.end());
    for (const auto& q : p->prem) vars_of(q, out);
}

}  // namespace

std::vector<std::string> proof_vars(const P& p) {
    std::set<std::string> s;
    vars_of(p, s);
    return {s.begin(), s.end()};
}

std::vector<Assignment> all_assignments(const std::vector<std::string>& vars, const std::vector<Obj>& objects) {
    std::vector<Assignment> out;
    if (objects.empty() && !vars.empty()) return out;
    std::vector<size_t> idx(vars.size(), 0);
    for (;;) {
        Assignment a;
        for (size_t i = 0; i < vars.size(); ++i) a[vars[i]] = objects[idx[i]];
        out.push_back(std::move(a));
        size_t i = vars.size();
        while (i > 0 && ++idx[i - 1] == objects.size()) idx[--i] = 0;
        if (i == 0) break;
    }
    return out;
}

nlohmann::json InvarianceReport::to_json() const {
    nlohmann::json j;
    j["ok"] = ok;
    j["steps"] = steps;
    j["comparisons"] = comparisons;
    j["assignments"] = assignments;
    if (!error.empty()) j["error"] = error;
    if (!failure.is_null()) j["failure"] = failure;
    return j;
}

InvarianceReport check_invariance(const Model& m, const P& p, System s, const InvarianceOptions& o) {
    InvarianceReport rep;
    Env e(m);
    e.mutated = o.mutated;
    auto as = all_assignments(proof_vars(p), o.objects);
    rep.assignments = static_cast<int>(as.size());
    std::vector<Mor> base(as.size());

    auto assignment_json = [](const Assignment& a) {
        nlohmann::json j = nlohmann::json::object();
        for (const auto& [k, v] : a) j[k] = obj_str(v);
        return j;
    };
    // compares q against the input proof under every assignment
    auto compare = [&](const P& q, nlohmann::json where) {
        for (size_t i = 0; i < as.size() && rep.ok; ++i) {
            ++rep.comparisons;
            Mor d = interpret_proof(e, q, s, as[i]);
            if (!m.equal(d, base[i])) {
                rep.ok = false;
                where["assignment"] = assignment_json(as[i]);
                where["difference"] = mor_difference(m, base[i], d);
                where["proof"] = print_proof(q);
                rep.failure = std::move(where);
            }
        }
    };
    try {
        for (size_t i = 0; i < as.size(); ++i) base[i] = interpret_proof(e, p, s, as[i]);
        if (o.all_root_redexes)
            for (const auto& r : find_redexes(p, s)) {
                P q;
                try {
                    q = step(p, r, s);
                } catch (const StepError&) {
                    continue;  // no local step for this cut shape
                }
                ++rep.steps;
                compare(q, {{"strategy", "root"}, {"path", path_str(r.path)}, {"kind", r.kind_str()}});
                if (!rep.ok) return rep;
            }
        for (Strategy st : o.strategies) {
            auto nr = normalize(p, s, st, o.fuel, true);
            for (size_t k = 0; k < nr.steps.size(); ++k) {
                ++rep.steps;
                const auto& t = nr.trace[k];
                compare(nr.steps[k], {{"strategy", strategy_name(st)},
                                      {"step", k},
                                      {"path", path_str(t.redex.path)},
                                      {"kind", t.redex.kind_str()}});
                if (!rep.ok) return rep;
            }
        }
    } catch (const std::exception& ex) {
        rep.ok = false;
        rep.error = ex.what();
    }
    return rep;
}

}  // namespace llk
