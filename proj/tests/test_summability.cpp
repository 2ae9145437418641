#include <algorithm>

#include "doctest.h"
#include "llk/relational.hpp"
#include "llk/summability.hpp"

using namespace llk;

namespace {

std::vector<int> table(const Mor& f) { return dynamic_cast<const PartialFun&>(*f).t; }

bool related(const Relational& m, const Mor& f, Pt x, Pt y) {
    const auto& p = m.pre(dynamic_cast<const RNode&>(*f), y);
    return std::find(p.begin(), p.end(), x) != p.end();
}

std::vector<Pt> image(const Relational& m, const Mor& f, Pt x) {
    std::vector<Pt> out;
    for (Pt y : m.web(f->cod))
        if (related(m, f, x, y)) out.push_back(y);
    return out;
}

}  // namespace

TEST_CASE("partial functions: summable exactly on disjoint domains") {
    PartialFns m(2);
    auto ps = build_pfn(m);
    auto searched = ps;
    searched.candidate = nullptr;
    Obj a = obj_base(2), x = obj_base(2);
    int summable = 0;
    for (const Mor& f0 : m.homs(a, x))
        for (const Mor& f1 : m.homs(a, x)) {
            auto t0 = table(f0), t1 = table(f1);
            bool disjoint = true;
            for (size_t i = 0; i < t0.size(); ++i) disjoint &= t0[i] < 0 || t1[i] < 0;
            auto w = witness_and_sum(ps, f0, f1), ws = witness_and_sum(searched, f0, f1);
            CHECK(bool(w) == disjoint);
            REQUIRE(bool(ws) == bool(w));
            if (w) CHECK(m.equal(w->pairing, ws->pairing));
            if (!w) continue;
            ++summable;
            auto s = table(w->sum);
            for (size_t i = 0; i < s.size(); ++i) CHECK(s[i] == (t0[i] >= 0 ? t0[i] : t1[i]));
        }
    // pairs of partial maps 2 → 2 with disjoint domains: (1 + 2 + 2)^2
    CHECK(summable == 25);
}

TEST_CASE("partial functions are not additive") {
    PartialFns m(1);
    auto ps = build_pfn(m);
    Mor f = m.id(obj_base(1));
    CHECK_FALSE(witness_and_sum(ps, f, f));
}

TEST_CASE("the toy passes the whole summability suite") {
    PartialFns m(2);
    auto ps = build_pfn(m);
    for (bool search : {false, true}) {
        if (search) ps.candidate = nullptr;
        auto r = run_summability_suite(ps, m.objects());
        for (const auto& d : r.diagrams) {
            CAPTURE(d.name);
            CHECK(d.pass());
            CHECK(d.cases > 0);
        }
    }
}

TEST_CASE("a toy whose projections forget the side is caught") {
    PartialFns m(1);
    auto ps = build_pfn(m);
    ps.pi1 = ps.pi0;
    auto r = run_summability_suite(ps, m.objects());
    CHECK(r.find("joint-monic")->status == "fail");
    CHECK_FALSE(r.pass());
}

TEST_CASE("a toy with a lopsided sum breaks neutrality") {
    PartialFns m(1);
    auto ps = build_pfn(m);
    auto proj0 = ps.pi0;
    ps.sigma = proj0;  // forgets the right summand
    auto r = run_summability_suite(ps, m.objects());
    CHECK(r.find("neutrality")->status == "fail");
    CHECK(r.find("commutativity")->status == "fail");
}

TEST_CASE("toy monad data") {
    PartialFns m(2);
    auto ps = build_pfn(m);
    Obj x = obj_base(2);
    auto d = monad_data(ps, x);
    Obj sx = ps.S(x);
    CHECK(table(d.iota0) == std::vector<int>{0, 1});
    CHECK(table(d.iota1) == std::vector<int>{2, 3});
    CHECK(table(d.swap) == std::vector<int>{2, 3, 0, 1});
    // θ: ll ↦ l, lr and rl ↦ r, rr undefined
    CHECK(table(d.theta) == std::vector<int>{0, 1, 2, 3, 2, 3, -1, -1});
    auto dsx = monad_data(ps, sx);
    CHECK(m.equal(m.comp(d.theta, dsx.iota0), m.id(sx)));
    CHECK(m.equal(m.comp(d.theta, ps.Smap(d.iota0)), m.id(sx)));
    CHECK(m.equal(m.comp(d.theta, dsx.theta), m.comp(d.theta, ps.Smap(d.theta))));
}

TEST_CASE("S& over rel: witnesses are pairings and sums are unions") {
    Relational m(rel_options(2, 2));
    Env e(m);
    auto ps = build_swith(e);
    Obj a = obj_base(1), x = obj_base(2);
    Mor f0 = m.relation(a, x, {{p_atom(0), p_atom(0)}});
    Mor f1 = m.relation(a, x, {{p_atom(0), p_atom(1)}});
    auto w = witness_and_sum(ps, f0, f1);
    REQUIRE(w);
    CHECK(m.equal(w->sum, m.relation(a, x, {{p_atom(0), p_atom(0)}, {p_atom(0), p_atom(1)}})));
    // (π0, π1) is summable with witness id and sum σ
    auto p = witness_and_sum(ps, e.pi0(x), e.pi1(x));
    REQUIRE(p);
    CHECK(m.equal(p->pairing, e.id(e.S(x))));
    CHECK(m.equal(p->sum, e.sigma(x)));
    // (f, 0) has witness ⟨f, 0⟩ and sum f
    auto n = witness_and_sum(ps, f0, e.zero(a, x));
    REQUIRE(n);
    CHECK(m.equal(n->sum, f0));
}

TEST_CASE("S& over rel: generic suite and monad data at small sizes") {
    Relational m(rel_options(1, 2));
    Env e(m);
    auto ps = build_swith(e);
    auto r = run_summability_suite(ps, m.objects());
    CHECK(r.pass());
    Relational m2(rel_options(2, 2));
    Env e2(m2);
    auto ps2 = build_swith(e2);
    for (Obj x : m2.objects()) {
        auto d = monad_data(ps2, x);
        CHECK(m2.equal(d.iota0, e2.iota0(x)));
        CHECK(m2.equal(d.iota1, e2.iota1(x)));
        CHECK(m2.equal(d.swap, e2.swap(x)));
        CHECK(m2.equal(d.theta, e2.theta(x)));
    }
}

TEST_CASE("derive from the codereliction, pointwise") {
    Relational m(rel_options(2, 3));
    Env e(m);
    Obj x = obj_base(2);
    Mor d = e.derive(x);
    Pt l0 = p_inj(0, p_atom(0)), l1 = p_inj(0, p_atom(1)), r1 = p_inj(1, p_atom(1));
    // one right-hand element: the left part plus that element
    CHECK(image(m, d, p_bag({l0, l1, r1})) == std::vector<Pt>{p_bag({p_atom(0), p_atom(1), p_atom(1)})});
    CHECK(image(m, d, p_bag({r1})) == std::vector<Pt>{p_bag({p_atom(1)})});
    // none, or two: no output
    CHECK(image(m, d, p_bag({l0, l1})).empty());
    CHECK(image(m, d, p_bag({r1, r1})).empty());
    // ∂ keeps a purely left multiset in coordinate 0
    Mor dc = e.dcoh(x);
    Pt pure = p_bag({l0, l1});
    CHECK(image(m, dc, pure) == std::vector<Pt>{p_inj(0, p_bag({p_atom(0), p_atom(1)}))});
}
