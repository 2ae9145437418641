#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "llk/proof.hpp"

using namespace llk;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Sequent seq(const std::string& t) { return sequent_from_sexpr(parse_sexpr(t)); }

}  // namespace

TEST_CASE("parse single axiom") {
    P p = parse_proof("(ax (seq (v A) (v A)))");
    CHECK(p->rule == Rule::Ax);
    CHECK(p->prem.empty());
    CHECK(p->concl.ctx.size() == 1);
    CHECK(p->concl.concl->name == "A");
}

TEST_CASE("sequent without context marker is rejected") {
    try {
        parse_proof("(ax (seq (v A)))");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("sequent needs context and conclusion") != std::string::npos);
    }
}

TEST_CASE("parse errors carry line and column") {
    try {
        parse_proof("(ax (seq (v A) (v A))\n  (bogus (seq () (top))))");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.pos.line == 2);
        CHECK(e.pos.col == 3);
    }
    CHECK_THROWS_AS(parse_proof("(frobnicate (seq (v A) (v A)))"), ParseError);
    CHECK_THROWS_AS(parse_proof("(ax (seq (v A) (v A)) (ax (seq (v A) (v A))))"), ParseError);
    CHECK_THROWS_AS(parse_proof("(cut (seq (v A) (v A)) (ax (seq (v A) (v A))) (ax (seq (v A) (v A))))"), ParseError);
    CHECK_THROWS_AS(parse_proof("(ax (seq (v A) (v A))"), ParseError);
}

TEST_CASE("round trip on lj_and corpus file") {
    std::string text = slurp(std::string(LLK_CORPUS_DIR) + "/lj_and.llp");
    REQUIRE(!text.empty());
    P p = parse_proof(text);
    CHECK(print_proof(p) == normalize_whitespace(text));
    CHECK(proof_eq(parse_proof(print_proof(p)), p));
}

TEST_CASE("axiom valid in every system") {
    P p = parse_proof("(ax (seq (v v) (v v)))");
    for (System s : {System::LJ, System::IMALL, System::ILL, System::DILL}) CHECK(validate_proof(p, s).valid());
}

TEST_CASE("and-right shares the context") {
    P p = parse_proof(
        "(and-right (seq (v v) (and (v v) (v v))) (ax (seq (v v) (v v))) (ax (seq (v v) (v v))))");
    CHECK(validate_proof(p, System::LJ).valid());
    CHECK_FALSE(validate_proof(p, System::IMALL).valid());
}

TEST_CASE("contraction on a non-bang formula in ILL") {
    P p = parse_proof(
        "(contr (seq (v A) (tensor (v A) (v A)))"
        "  (tensor-right (seq (v A) (v A) (tensor (v A) (v A))) (ax (seq (v A) (v A))) (ax (seq (v A) (v A))) :split 1))");
    auto r = validate_proof(p, System::ILL);
    REQUIRE_FALSE(r.valid());
    CHECK(r.violations[0].message == "contraction restricted to !A");
    CHECK(path_str(r.violations[0].path) == "root");
}

TEST_CASE("cut shapes follow each system") {
    // LJ: cut formula first in the right premise
    P lj = parse_proof(
        "(cut (seq (v A) (v B) (and (v A) (v B)))"
        "  (ax (seq (v A) (v A)))"
        "  (and-right (seq (v A) (v B) (and (v A) (v B)))"
        "    (weak (seq (v A) (v B) (v A)) (ax (seq (v A) (v A))))"
        "    (ex (seq (v A) (v B) (v B)) (weak (seq (v B) (v A) (v B)) (ax (seq (v B) (v B)))) :pos 0))"
        "  :split 1)");
    CHECK(validate_proof(lj, System::LJ).valid());
    // linear: cut formula last
    P lin = parse_proof(
        "(cut (seq (v A) (v B) (tensor (v B) (v A)))"
        "  (ax (seq (v A) (v A)))"
        "  (tensor-right (seq (v B) (v A) (tensor (v B) (v A))) (ax (seq (v B) (v B))) (ax (seq (v A) (v A))) :split 1)"
        "  :split 1)");
    CHECK(validate_proof(lin, System::IMALL).valid());
}

TEST_CASE("validation reports node paths") {
    P p = parse_proof(
        "(with-right (seq (v A) (with (v A) (v B))) (ax (seq (v A) (v A))) (ax (seq (v A) (v B))))");
    auto r = validate_proof(p, System::IMALL);
    REQUIRE(r.violations.size() == 1);
    CHECK(path_str(r.violations[0].path) == "1");
}

TEST_CASE("enumeration examples") {
    EnumerateOptions o;
    o.max_depth = 1;
    CHECK(enumerate_proofs(seq("(seq (v v) (v v))"), System::LJ, o).size() == 1);
    o.max_depth = 4;
    CHECK(enumerate_proofs(seq("(seq (v v) (tensor (v v) (v v)))"), System::IMALL, o).empty());
    CHECK(enumerate_proofs(seq("(seq (v v) (with (v v) (v v)))"), System::IMALL, o).size() >= 1);
}

TEST_CASE("enumerated proofs are valid, cut-free and distinct") {
    EnumerateOptions o;
    o.max_depth = 4;
    const std::pair<const char*, System> cases[] = {
        {"(seq (v a) (v b) (and (v b) (v a)))", System::LJ},
        {"(seq (v a) (impl (v b) (v a)))", System::LJ},
        {"(seq (v a) (v b) (tensor (v a) (v b)))", System::IMALL},
        {"(seq (with (v a) (v b)) (with (v b) (v a)))", System::IMALL},
        {"(seq (bang (v a)) (tensor (v a) (v a)))", System::ILL},
        {"(seq (bang (v a)) (bang (bang (v a))))", System::ILL},
    };
    for (const auto& [text, sys] : cases) {
        auto ps = enumerate_proofs(seq(text), sys, o);
        CHECK(!ps.empty());
        std::set<std::string> seen;
        for (const auto& p : ps) {
            CHECK(validate_proof(p, sys).valid());
            CHECK(count_cuts(p) == 0);
            CHECK(proof_height(p) <= 4);
            seen.insert(print_proof(p));
        }
        CHECK(seen.size() == ps.size());
    }
}

TEST_CASE("enumeration budget") {
    EnumerateOptions o;
    o.max_depth = 6;
    o.node_budget = 100;
    CHECK_THROWS_AS(enumerate_proofs(seq("(seq (v a) (v b) (tensor (v a) (v b)))"), System::DILL, o), ResourceLimit);
}

TEST_CASE("validation is monotone from imall to ill to dill") {
    EnumerateOptions o;
    o.max_depth = 4;
    for (const char* text : {"(seq (v a) (v b) (tensor (v b) (v a)))", "(seq (with (v a) (one)) (v a))",
                             "(seq (lolli (v a) (v b)) (v a) (v b))"}) {
        for (const auto& p : enumerate_proofs(seq(text), System::IMALL, o)) {
            CHECK(validate_proof(p, System::ILL).valid());
            CHECK(validate_proof(p, System::DILL).valid());
        }
    }
}

TEST_CASE("exchange closure") {
    EnumerateOptions o;
    o.max_depth = 3;
    for (const auto& p : enumerate_proofs(seq("(seq (v a) (v b) (tensor (v a) (v b)))"), System::IMALL, o)) {
        Sequent s = p->concl;
        std::swap(s.ctx[0], s.ctx[1]);
        P q = Proof::make(Rule::Ex, s, {p}, -1, 0);
        CHECK(validate_proof(q, System::IMALL).valid());
    }
}

TEST_CASE("parse of print is identity") {
    EnumerateOptions o;
    o.max_depth = 3;
    for (const auto& p : enumerate_proofs(seq("(seq (bang (v a)) (tensor (v a) (v a)))"), System::ILL, o))
        CHECK(proof_eq(parse_proof(print_proof(p)), p));
}
