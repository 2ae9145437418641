#include "doctest.h"
#include "llk/corpus.hpp"
#include "llk/finset.hpp"
#include "llk/relational.hpp"
#include "llk/semantics.hpp"

using namespace llk;

namespace {

std::vector<int> table(const Mor& f) { return dynamic_cast<const FinFun&>(*f).t; }

const std::vector<CorpusEntry>& corpus() {
    static const auto c = load_corpus(LLK_CORPUS_DIR);
    return c;
}

const CorpusEntry& entry(const std::string& file) {
    for (const auto& c : corpus())
        if (c.file == file) return c;
    throw std::runtime_error("no corpus entry " + file);
}

std::vector<Obj> upto(const Model& m, int n) {
    std::vector<Obj> r;
    for (Obj x : m.objects())
        if (static_cast<int>(r.size()) <= n) r.push_back(x);
    return r;
}

void each_node(const P& p, Path& at, const std::function<void(const P&, const Path&)>& fn) {
    fn(p, at);
    for (size_t i = 0; i < p->prem.size(); ++i) {
        at.push_back(static_cast<int>(i));
        each_node(p->prem[i], at, fn);
        at.pop_back();
    }
}

}  // namespace

TEST_CASE("formulas in finset") {
    FinSet m(3);
    Env e(m);
    Assignment a{{"v", obj_base(2)}};
    CHECK(FinSet::size(interpret_formula(e, parse_formula("(top)"), a)) == 1);
    CHECK(FinSet::size(interpret_formula(e, parse_formula("(and (v v) (v v))"), a)) == 4);
    CHECK(FinSet::size(interpret_formula(e, parse_formula("(impl (v v) (v v))"), a)) == 4);
    CHECK_THROWS_AS(interpret_formula(e, parse_formula("(v w)"), a), MissingVariable);
    // contexts associate to the left and the empty context is the unit
    CHECK(interpret_context(e, System::LJ, {}, a) == e.top());
    F v = parse_formula("(v v)");
    CHECK(interpret_context(e, System::IMALL, {v, v, v}, a) == e.tensor(e.tensor(a["v"], a["v"]), a["v"]));
}

TEST_CASE("!(v & v) and !v ⊗ !v agree on points of bounded mass") {
    Relational m(rel_options(1, 2));
    Env e(m);
    Assignment a{{"v", obj_base(1)}};
    Obj l = interpret_formula(e, parse_formula("(bang (with (v v) (v v)))"), a);
    Obj r = interpret_formula(e, parse_formula("(tensor (bang (v v)) (bang (v v)))"), a);
    // bags of size ≤ 2 over two points, and pairs of bags over one point with sizes summing to ≤ 2
    int bags = 0, pairs = 0;
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; i + j <= 2; ++j) {
            ++bags;
            ++pairs;
        }
    CHECK(m.web(l).size() == static_cast<size_t>(bags));
    CHECK(m.pairs(e.m2(obj_base(1), obj_base(1))).size() == static_cast<size_t>(pairs));
    CHECK(m.web(r).size() == 9);
}

TEST_CASE("axiom and pairing clauses") {
    FinSet m(3);
    Env e(m);
    Assignment a{{"v", obj_base(2)}};
    P ax = parse_proof("(ax (seq (v v) (v v)))");
    CHECK(table(interpret_proof(e, ax, System::LJ, a)) == std::vector<int>{0, 1});
    P dup = parse_proof("(and-right (seq (v v) (and (v v) (v v))) (ax (seq (v v) (v v))) (ax (seq (v v) (v v))))");
    // (x, y) is encoded as 2x + y
    CHECK(table(interpret_proof(e, dup, System::LJ, a)) == std::vector<int>{0, 3});
    CHECK(m.equal(interpret_proof(e, dup, System::LJ, a), e.delta(a["v"])));
}

TEST_CASE("codereliction followed by dereliction is the identity") {
    Relational m(rel_options(2, 2));
    Env e(m);
    const auto& c = entry("dill_coder_der.llp");
    for (Obj x : upto(m, 2)) {
        Mor d = interpret_proof(e, c.proof, System::DILL, {{"A", x}});
        CHECK(m.equal(d, e.id(x)));
    }
}

TEST_CASE("every valid corpus proof interprets with matching types") {
    FinSet fs(2);
    Relational rel(rel_options(2, 2));
    int done = 0;
    for (const auto& c : corpus()) {
        if (!c.valid) continue;
        CAPTURE(c.file);
        const Model& m = c.system == System::DILL ? static_cast<const Model&>(rel) : fs;
        Env e(m);
        for (const auto& a : all_assignments(proof_vars(c.proof), upto(m, 2))) {
            Mor d = interpret_proof(e, c.proof, c.system, a);
            CHECK(d->dom == interpret_context(e, c.system, c.proof->concl.ctx, a));
        }
        ++done;
    }
    CHECK(done >= 22);
}

TEST_CASE("cut elimination preserves the denotation of the pairing example") {
    FinSet m(3);
    const auto& c = entry("lj_pair_cut.llp");
    InvarianceOptions o;
    o.objects = upto(m, 3);
    auto r = check_invariance(m, c.proof, System::LJ, o);
    CHECK(r.ok);
    CHECK(r.error.empty());
    CHECK(r.assignments == 16);
    CHECK(r.steps > 0);
}

TEST_CASE("a sum pushed through a cut keeps its denotation in rel") {
    Relational m(rel_options(2, 2));
    InvarianceOptions o;
    o.objects = upto(m, 2);
    auto r = check_invariance(m, entry("dill_sum.llp").proof, System::DILL, o);
    CHECK(r.ok);
    CHECK(r.steps > 0);
}

TEST_CASE("a broken model is caught at the step that exposes it") {
    // with one pair of dig removed, erasing a promoted proof changes its denotation
    Relational m(rel_options(2, 2));
    InvarianceOptions o;
    o.objects = upto(m, 2);
    const auto& c = entry("ill_prom_weak.llp");
    CHECK(check_invariance(m, c.proof, System::ILL, o).ok);
    o.mutated = {"dig"};
    auto r = check_invariance(m, c.proof, System::ILL, o);
    CHECK_FALSE(r.ok);
    REQUIRE(r.failure.is_object());
    for (const char* k : {"path", "kind", "assignment", "difference", "proof"}) CHECK(r.failure.contains(k));
}

TEST_CASE("denotations are modular") {
    // swapping any subproof for another cut-free proof of the same sequent with
    // the same denotation leaves the whole denotation unchanged
    FinSet m(2);
    Env e(m);
    for (const char* file : {"lj_pair_cut.llp", "lj_cut_chain.llp", "imall_with_cut.llp"}) {
        CAPTURE(file);
        const auto& c = entry(file);
        auto as = all_assignments(proof_vars(c.proof), upto(m, 2));
        std::vector<Mor> whole;
        for (const auto& a : as) whole.push_back(interpret_proof(e, c.proof, c.system, a));
        int swaps = 0;
        Path at;
        each_node(c.proof, at, [&](const P& q, const Path& path) {
            EnumerateOptions eo;
            eo.max_depth = 3;
            for (const P& alt : enumerate_proofs(q->concl, c.system, eo)) {
                bool same = true;
                for (const auto& a : as) same &= m.equal(interpret_proof(e, q, c.system, a), interpret_proof(e, alt, c.system, a));
                if (!same) continue;
                P r = replace_at(c.proof, path, alt);
                for (size_t i = 0; i < as.size(); ++i) CHECK(m.equal(interpret_proof(e, r, c.system, as[i]), whole[i]));
                ++swaps;
            }
        });
        CHECK(swaps > 0);
    }
}

TEST_CASE("assignments enumerate every map") {
    FinSet m(2);
    auto as = all_assignments({"A", "B"}, upto(m, 2));
    CHECK(as.size() == 9);
    CHECK(all_assignments({}, upto(m, 2)).size() == 1);
}
