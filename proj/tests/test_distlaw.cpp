#include "doctest.h"
#include "llk/distlaw.hpp"
#include "llk/relational.hpp"
#include "llk/suites.hpp"

using namespace llk;

namespace {

LawOptions small(const Model& m, int upto) {
    LawOptions o;
    for (Obj x : m.objects())
        if (static_cast<int>(o.objects.size()) <= upto) o.objects.push_back(x);
    return o;
}

void all_pass(const SuiteReport& r) {
    for (const auto& d : r.diagrams) {
        CAPTURE(r.suite);
        CAPTURE(d.name);
        CAPTURE(d.error);
        CHECK(d.pass());
        CHECK(d.cases > 0);
    }
}

NatTrans broken_der() {
    return {"der'", [](const Env& e, Obj x) { return e.model().mutate(e.der(x)); }};
}

}  // namespace

TEST_CASE("the three laws are distributive laws over S") {
    Relational m(rel_options(2, 2));
    Env e(m);
    auto o = small(m, 2);
    for (const auto& d : {law_identity(), law_bang(), law_bangbang()}) all_pass(is_dist_law(e, d, o));
}

TEST_CASE("extension and law determine each other") {
    Relational m(rel_options(2, 2));
    Env e(m);
    auto o = small(m, 2);
    for (const auto& d : {law_identity(), law_bang(), law_bangbang()}) {
        auto r = check_extension(e, d, o);
        all_pass(r);
        CHECK(r.find("round-trip-functor")->exhaustive);
    }
}

TEST_CASE("a perturbed codereliction is not a law and its extension is not a functor") {
    Relational m(rel_options(2, 2));
    Env e(m);
    e.mutated = {"dcoh"};
    auto o = small(m, 2);
    CHECK_FALSE(is_dist_law(e, law_bang(), o).pass());
    auto r = check_extension(e, law_bang(), o);
    // the round trip is a bijection and survives any Λ
    CHECK(r.find("round-trip-law")->pass());
    CHECK(r.find("round-trip-functor")->pass());
    CHECK_FALSE(r.pass());
}

TEST_CASE("dlaw morphisms are exactly the maps that extend") {
    Relational m(rel_options(2, 2));
    Env e(m);
    auto o = small(m, 2);
    DistLaw id = law_identity(), b = law_bang(), bb = law_bangbang();
    struct Case {
        NatTrans a;
        const DistLaw *f, *g;
        bool expected;
    };
    for (const auto& c : {Case{nat_der(), &b, &id, true}, Case{nat_dig(), &b, &bb, true}, Case{nat_id(), &b, &b, true},
                          Case{broken_der(), &b, &id, false}}) {
        CAPTURE(c.a.name);
        auto sq = is_dlaw_morphism(e, c.a, *c.f, *c.g, o);
        CheckResult nat;
        auto ext = extend_nat(e, c.a, *c.f, *c.g, o, &nat);
        CHECK(sq.pass() == c.expected);
        CHECK(nat.pass() == c.expected);
        CHECK(bool(ext) == c.expected);
        if (!c.expected) CHECK(nat.counterexample.contains("morphisms"));
    }
}

TEST_CASE("the extended family is the Kleisli image of α") {
    Relational m(rel_options(1, 2));
    Env e(m);
    auto ext = extend_nat(e, nat_der(), law_bang(), law_identity(), small(m, 1));
    REQUIRE(ext);
    Obj x = obj_base(1);
    CHECK(m.equal(ext->at(e, x), e.comp(e.iota0(x), e.der(x))));
}

TEST_CASE("∂ distributes the comonad over S") {
    Relational m(rel_options(2, 2));
    Env e(m);
    auto o = small(m, 2);
    all_pass(is_comonad_dist_law(e, colaw_S(), o));
    Env bad(m);
    bad.mutated = {"dcoh"};
    CHECK_FALSE(is_comonad_dist_law(bad, colaw_S(), o).pass());
    // dig occurs once on each side of the cosum square, so its mutant is invisible there
    bad.mutated = {"dig"};
    CHECK(is_comonad_dist_law(bad, colaw_S(), o).find("lift-cosum")->pass());
}

TEST_CASE("dlaw squares for der and dig are the chain axioms") {
    Relational m(rel_options(2, 2));
    auto o = small(m, 2);
    for (std::set<std::string> mut : {std::set<std::string>{}, {"dig"}, {"dcoh"}, {"derive-nofilter"}}) {
        Env e(m);
        e.mutated = mut;
        CheckOptions co;
        co.mutated = mut;
        auto cd = run_suite(m, builtin_suite("cohdiff"), co);
        CHECK(is_dlaw_morphism(e, nat_der(), law_bang(), law_identity(), o).pass() == cd.find("∂-chain-1")->pass());
        CHECK(is_dlaw_morphism(e, nat_dig(), law_bang(), law_bangbang(), o).pass() == cd.find("∂-chain-2")->pass());
    }
}

TEST_CASE("m0 and m2 squares agree with the Leibniz axioms") {
    Relational m(rel_options(2, 2));
    for (std::set<std::string> mut : {std::set<std::string>{}, {"m2"}, {"dcoh"}, {"theta"}}) {
        CAPTURE(mut.size());
        CheckOptions co;
        co.mutated = mut;
        auto dl = run_suite(m, builtin_suite("distlaw"), co);
        auto cd = run_suite(m, builtin_suite("cohdiff"), co);
        CHECK(dl.find("m0-morphism")->status == cd.find("∂-Leibniz-1")->status);
        CHECK(dl.find("m2-morphism")->status == cd.find("∂-Leibniz-2")->status);
    }
}

TEST_CASE("combined report") {
    Relational m(rel_options(1, 2));
    Env e(m);
    auto r = distlaw_report(e, small(m, 1), {});
    CHECK(r.suite == "distlaw");
    all_pass(r);
    CHECK(r.find("distlaw[!!].lift-sum"));
    CHECK(r.find("extend-nat[dig]"));
}
