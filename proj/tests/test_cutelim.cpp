#include "doctest.h"
#include "llk/corpus.hpp"
#include "llk/cutelim.hpp"

using namespace llk;

namespace {

const std::vector<CorpusEntry>& corpus() {
    static const auto c = load_corpus(LLK_CORPUS_DIR);
    return c;
}

const CorpusEntry& entry(const std::string& file) {
    for (const auto& e : corpus())
        if (e.file == file) return e;
    throw std::runtime_error("missing corpus file " + file);
}

}  // namespace

TEST_CASE("cut-free proofs have no redexes") {
    P p = entry("lj_and.llp").proof;
    CHECK(find_redexes(p, System::LJ).empty());
    auto r = normalize(p, System::LJ, Strategy::LeftmostInnermost, 10);
    CHECK(r.complete);
    CHECK(r.trace.empty());
    CHECK(proof_eq(r.proof, p));
}

TEST_CASE("axiom on the left") {
    P pi = entry("lj_and.llp").proof;
    P ax = parse_proof("(ax (seq (and (v A) (v B)) (and (v A) (v B))))");
    Sequent s = pi->concl;
    P cut = Proof::make(Rule::Cut, s, {ax, pi}, 1);
    REQUIRE(validate_proof(cut, System::LJ).valid());
    auto rs = find_redexes(cut, System::LJ);
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].kind == RedexKind::AxiomCutLeft);
    CHECK(rs[0].path.empty());
    CHECK(proof_eq(step(cut, rs[0], System::LJ), pi));
}

TEST_CASE("pair against first projection") {
    P r = parse_proof("(and-right (seq (v A) (and (v A) (v A))) (ax (seq (v A) (v A))) (ax (seq (v A) (v A))))");
    P l = parse_proof("(and-left-1 (seq (and (v A) (v A)) (v A)) (ax (seq (v A) (v A))))");
    P cut = parse_proof("(cut (seq (v A) (v A)) " + print_proof(r) + " " + print_proof(l) + " :split 1)");
    REQUIRE(validate_proof(cut, System::LJ).valid());
    auto rs = find_redexes(cut, System::LJ);
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].kind == RedexKind::PrincipalPair);
    CHECK(rs[0].kind_str() == "principal-pair(and-right,and-left-1)");
    P out = step(cut, rs[0], System::LJ);
    P want = parse_proof("(cut (seq (v A) (v A)) (ax (seq (v A) (v A))) (ax (seq (v A) (v A))) :split 1)");
    CHECK(proof_eq(out, want));
}

TEST_CASE("step rejects addresses that are not cuts") {
    P p = entry("lj_cut_chain.llp").proof;
    Redex bogus{{0}, RedexKind::AxiomCutLeft, "", "", false};
    CHECK_THROWS_AS(step(p, bogus, System::LJ), StepError);
    Redex off{{7, 7}, RedexKind::AxiomCutLeft, "", "", false};
    CHECK_THROWS_AS(step(p, off, System::LJ), StepError);
}

TEST_CASE("corpus classification matches the manifest") {
    int invalid = 0;
    for (const auto& e : corpus()) {
        CAPTURE(e.file);
        auto r = validate_proof(e.proof, e.system);
        CHECK(r.valid() == e.valid);
        if (!e.valid) {
            ++invalid;
            REQUIRE_FALSE(r.violations.empty());
            CHECK(r.violations[0].message == e.violation);
        }
    }
    CHECK(corpus().size() >= 30);
    CHECK(invalid >= 8);
}

TEST_CASE("subject reduction on every corpus redex") {
    for (const auto& e : corpus()) {
        if (!e.valid) continue;
        CAPTURE(e.file);
        for (const auto& r : find_redexes(e.proof, e.system)) {
            P q = step(e.proof, r, e.system);
            CHECK(validate_proof(q, e.system).valid());
            CHECK(seq_eq(q->concl, e.proof->concl));
        }
    }
}

TEST_CASE("both strategies normalize the corpus, every step validates") {
    for (const auto& e : corpus()) {
        if (!e.valid) continue;
        for (Strategy s : {Strategy::LeftmostInnermost, Strategy::LeftmostOutermost}) {
            CAPTURE(e.file);
            CAPTURE(strategy_name(s));
            auto r = normalize(e.proof, e.system, s, 10000, true);
            REQUIRE(r.complete);
            CHECK(count_cuts(r.proof) == 0);
            CHECK(seq_eq(r.proof->concl, e.proof->concl));
            for (const auto& q : r.steps) CHECK(validate_proof(q, e.system).valid());
            for (size_t i = 0; i + 1 < r.trace.size(); ++i) {
                CHECK(r.trace[i].cuts_after == r.trace[i + 1].cuts_before);
                CHECK(r.trace[i].size_after == r.trace[i + 1].size_before);
            }
            auto again = normalize(r.proof, e.system, s, 10000);
            CHECK(again.trace.empty());
            CHECK(proof_eq(again.proof, r.proof));
        }
    }
}

TEST_CASE("stacked cuts regression") {
    auto r = normalize(entry("lj_cut_chain.llp").proof, System::LJ, Strategy::LeftmostInnermost, 10000);
    REQUIRE(r.complete);
    CHECK(r.trace.size() <= 40);
    CHECK(r.trace.size() == 11);
    CHECK(r.trace.front().cuts_before == 3);
}

TEST_CASE("pair cut takes four steps") {
    auto r = normalize(entry("lj_pair_cut.llp").proof, System::LJ, Strategy::LeftmostInnermost, 10000);
    REQUIRE(r.complete);
    CHECK(r.trace.size() == 4);
    CHECK(r.trace[0].redex.kind == RedexKind::PrincipalPair);
    CHECK(r.trace[3].redex.kind == RedexKind::AxiomCutLeft);
}

TEST_CASE("promotion against contraction duplicates but lowers the measure") {
    const auto& e = entry("dill_dup.llp");
    // one contraction acts on the promoted formula
    CHECK(promoted_cut_measure(e.proof) == 1);
    auto r = normalize(e.proof, e.system, Strategy::LeftmostInnermost, 10000);
    REQUIRE(r.complete);
    const auto& t = r.trace.front();
    CHECK(t.redex.kind_str() == "principal-pair(prom,bang-contr)");
    CHECK(t.cuts_after > t.cuts_before);
    CHECK(t.promoted_after < t.promoted_before);
    CHECK(t.size_after > t.size_before);
}

TEST_CASE("sum commutation in DiLL") {
    const auto& e = entry("dill_sum.llp");
    auto rs = find_redexes(e.proof, e.system);
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].kind == RedexKind::CommutativeLeft);
    P q = step(e.proof, rs[0], e.system);
    CHECK(q->rule == Rule::Sum);
    CHECK(count_cuts(q) == 2);
    CHECK(validate_proof(q, e.system).valid());
}

TEST_CASE("fuel exhaustion returns a partial trace") {
    auto r = normalize(entry("lj_cut_chain.llp").proof, System::LJ, Strategy::LeftmostInnermost, 2);
    CHECK_FALSE(r.complete);
    CHECK(r.trace.size() == 2);
    CHECK(count_cuts(r.proof) > 0);
}

TEST_CASE("blocked cuts are skipped by the outermost strategy") {
    const auto& e = entry("lj_cut_chain.llp");
    auto rs = find_redexes(e.proof, e.system);
    REQUIRE(rs.size() == 3);
    // root: axiom on the left; middle: right premise is a cut
    CHECK_FALSE(rs[0].blocked);
    CHECK(rs[1].blocked);
    CHECK_FALSE(rs[2].blocked);
    // a blocked cut can still be stepped directly
    P q = step(e.proof, rs[1], e.system);
    CHECK(validate_proof(q, e.system).valid());
}

TEST_CASE("origins agree with the validator's context split") {
    const auto& e = entry("imall_lolli_cut.llp");
    const Proof& ll = *e.proof->prem[1];
    REQUIRE(ll.rule == Rule::LolliLeft);
    CHECK(origins(ll, 0, System::IMALL) == std::vector<int>{0});
    CHECK(origins(ll, 1, System::IMALL) == std::vector<int>{-1});
}
