#include "doctest.h"
#include "llk/finset.hpp"
#include "llk/kleisli.hpp"
#include "llk/relational.hpp"
#include "llk/suites.hpp"

using namespace llk;

namespace {

SuiteReport run(const Model& m, const std::string& suite, std::set<std::string> mutated = {}) {
    CheckOptions o;
    o.mutated = std::move(mutated);
    return run_suite(m, builtin_suite(suite), o);
}

std::map<std::string, std::string> statuses(const SuiteReport& r) {
    std::map<std::string, std::string> out;
    for (const auto& d : r.diagrams) out[d.name] = d.status;
    return out;
}

}  // namespace

TEST_CASE("dialect errors are reported with positions") {
    CHECK_THROWS_AS(parse_suite("(suite s (diagram d (objects A)))"), ParseError);
    CHECK_THROWS_AS(parse_suite("(suite s (diagram d (eq (id A) (id A))) (diagram d (eq (id A) (id A))))"), ParseError);
    CHECK_THROWS_AS(parse_suite("(suite s (unique u (objects A) (map h A A)))"), ParseError);
    CHECK_THROWS_AS(parse_suite("(suite s (diagram d (morphisms (f A)) (eq f f)))"), ParseError);
    try {
        parse_suite("(suite s\n  (diagram d (frobnicate)))");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("2:") != std::string::npos);
    }
}

TEST_CASE("every built-in suite parses and names are unique") {
    for (const auto& n : suite_names()) {
        CAPTURE(n);
        const SuiteSpec& s = builtin_suite(n);
        CHECK(s.name == n);
        CHECK_FALSE(s.diagrams.empty());
    }
    CHECK_THROWS_AS(builtin_suite("nosuch"), std::out_of_range);
}

TEST_CASE("unknown operators and ill-typed sides are errors, not failures") {
    Relational m(rel_options(1, 2));
    auto s = parse_suite(R"((suite s
        (diagram unknown (objects A) (eq (frob A) (id A)))
        (diagram sides (objects A B) (eq (id A) (id B)))
        (diagram inner (objects A B) (eq (comp (id A) (id B)) (id A)))))");
    auto r = run_suite(m, s, {});
    CHECK_FALSE(r.pass());
    for (const auto& d : r.diagrams) {
        CAPTURE(d.name);
        CHECK(d.status == "error");
        CHECK_FALSE(d.error.empty());
    }
}

TEST_CASE("comonad laws hold in rel and dig mutations are caught") {
    Relational m(rel_options(1, 2));
    auto good = run(m, "comonad");
    CHECK(good.pass());
    auto bad = run(m, "comonad", {"dig"});
    const CheckResult* sq = bad.find("dig-square");
    REQUIRE(sq);
    CHECK(sq->status == "fail");
    CHECK(sq->counterexample.contains("objects"));
    CHECK(sq->counterexample["difference"]["only_lhs"].size() + sq->counterexample["difference"]["only_rhs"].size() > 0);
    // diagrams without dig are untouched
    CHECK(bad.find("bang-id")->pass());
}

TEST_CASE("cartesian closed structure of finset, exhaustively") {
    FinSet m(2);
    for (const char* s : {"category", "cartesian", "closed", "monoidal"}) {
        CAPTURE(s);
        auto r = run(m, s);
        CHECK(r.pass());
        for (const auto& d : r.diagrams) CHECK(d.exhaustive);
    }
}

TEST_CASE("a non-injective key map yields two witnesses") {
    FinSet m(2);
    auto s = parse_suite(R"((suite s
        (unique half (objects A B) (map h A (with B B)) (keys (comp (pr0 B B) h)))))");
    auto r = run_suite(m, s, {});
    const auto& d = r.diagrams.at(0);
    CHECK(d.status == "fail");
    CHECK(d.counterexample.contains("h1"));
    CHECK(d.counterexample.contains("h2"));
    // the smallest instantiation comes first
    CHECK(d.counterexample["objects"]["A"] == "1");
    CHECK(d.counterexample["objects"]["B"] == "2");
}

TEST_CASE("uniqueness in rel is certified through atoms") {
    Relational m(rel_options(2, 2));
    auto r = run(m, "cartesian");
    CHECK(r.pass());
    CHECK(r.find("pair-unique")->method == "certificate");
    auto s = parse_suite(R"((suite s
        (unique half (objects A B) (map h A (with B B)) (keys (comp (pr0 B B) h)))))");
    CHECK(run_suite(m, s, {}).diagrams.at(0).status == "fail");
}

TEST_CASE("finite coherence spaces reject the codereliction") {
    Relational m(coh_options(2));
    auto r = run(m, "differential");
    CHECK(r.find("d-linear")->status == "error");
    CHECK(run(m, "seely").pass());
}

TEST_CASE("sampling is reproducible") {
    Relational m(rel_options(3, 2));
    CheckOptions o;
    o.samples = 20;
    o.exhaustive_limit = 16;
    const auto& d = builtin_suite("comonad").diagrams.at(1);
    REQUIRE(d.name == "bang-comp");
    auto a = check_diagram(m, d, o), b = check_diagram(m, d, o);
    CHECK(a.method == "sampled");
    CHECK_FALSE(a.exhaustive);
    CHECK(a.cases == b.cases);
    CHECK(a.pass());
}

TEST_CASE("worker count does not change the report") {
    Relational m(rel_options(2, 2));
    CheckOptions o;
    auto one = run_suite(m, builtin_suite("seely"), o);
    o.workers = 3;
    auto three = run_suite(m, builtin_suite("seely"), o);
    CHECK(one.to_json() == three.to_json());
}

TEST_CASE("full and derive-reduced coherent differentiation agree") {
    Relational m(rel_options(2, 2));
    // a perturbed codereliction keeps the shape ∂ = ⟨!π0, derive⟩, so the
    // equivalence must survive it
    for (std::set<std::string> mut : {std::set<std::string>{}, {"dbar"}}) {
        auto full = statuses(run(m, "cohdiff", mut));
        auto red = statuses(run(m, "cohdiff-reduced", mut));
        int compared = 0;
        for (const auto& [name, st] : full) {
            if (!red.count(name)) continue;
            CAPTURE(name);
            CHECK(st == red[name]);
            ++compared;
        }
        CHECK(compared == 9);
    }
    auto full = run(m, "cohdiff");
    CHECK(full.pass());
    CHECK(full.diagrams.size() == 9);
}

TEST_CASE("kleisli over S: lifted monoidal structure") {
    Relational base(rel_options(1, 2));
    Env be(base);
    KleisliS k(be);
    CHECK(run(k, "category").pass());
    CHECK(run(k, "monoidal").pass());
    CHECK(run(k, "kleisli-s").pass());
    // the Kleisli structure is built in its base env, so perturb that one
    Env bad_env(base);
    bad_env.mutated = {"theta"};
    KleisliS bad(bad_env);
    auto r = run(bad, "category");
    CHECK(r.find("id-left")->status == "fail");
}

TEST_CASE("report json shape") {
    Relational m(rel_options(1, 2));
    auto j = run(m, "comonad", {"dig"}).to_json();
    CHECK(j["suite"] == "comonad");
    REQUIRE(j["diagrams"].is_array());
    for (const auto& d : j["diagrams"]) {
        CHECK(d.contains("name"));
        CHECK(d.contains("status"));
        CHECK(d.contains("counterexample") == (d["status"] == "fail"));
    }
}
