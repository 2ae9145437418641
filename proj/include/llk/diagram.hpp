#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "llk/env.hpp"
#include "llk/sexpr.hpp"

namespace llk {

// One assertion of a suite, in the diagram dialect:
//   (diagram NAME (objects A B) (morphisms (f A B) (g B A base)) (eq LHS RHS))
//   (unique  NAME (objects A B C) (map h C (with A B)) (keys (comp (pr0 A B) h) ...))
// A diagram asserts LHS = RHS for every instantiation; a uniqueness check
// asserts that h ↦ (keys) is injective on hom(Dom, Cod).
struct DiagramSpec {
    enum class Kind { Eq, Unique };
    struct MorVar {
        std::string name;
        Sexpr dom, cod;
        bool base = false;  // a morphism of the base model, embedded by kappa
    };

    Kind kind = Kind::Eq;
    std::string name;
    std::vector<std::string> objects;
    std::vector<MorVar> morphisms;
    Sexpr lhs, rhs;             // Eq
    MorVar map;                 // Unique
    std::vector<Sexpr> keys;    // Unique
};

struct SuiteSpec {
    std::string name;
    std::vector<DiagramSpec> diagrams;
};

SuiteSpec parse_suite(const std::string& text);
std::vector<SuiteSpec> parse_suites(const std::string& text);

// Evaluation of object and morphism expressions against an Env.
struct Bindings {
    std::map<std::string, Obj> objects;
    std::map<std::string, Mor> morphisms;
};
Obj eval_object(const Env& e, const Sexpr& x, const Bindings& b);
Mor eval_morphism(const Env& e, const Sexpr& x, const Bindings& b);
// Names of the morphism operators understood by eval_morphism.
std::vector<std::string> morphism_ops();

struct CheckOptions {
    uint64_t seed = 1;
    double exhaustive_limit = 1 << 16;  // assignments per object instantiation
    int samples = 200;                  // per object instantiation when sampling
    int workers = 1;
    std::set<std::string> mutated;      // passed to Env::mutated
    // object instantiations: tuples of model objects, or this explicit list
    std::vector<Obj> objects;
};

struct CheckResult {
    std::string name;
    std::string status;  // pass | fail | error
    bool exhaustive = true;
    std::string method;  // atoms | exhaustive | sampled | certificate | none
    long cases = 0;
    nlohmann::json counterexample;  // null unless failed
    std::string error;

    bool pass() const { return status == "pass"; }
};

struct SuiteReport {
    std::string suite, model;
    std::vector<CheckResult> diagrams;

    bool pass() const;
    const CheckResult* find(const std::string& name) const;
    nlohmann::json to_json() const;
};

CheckResult check_diagram(const Model& m, const DiagramSpec& d, const CheckOptions& o);
SuiteReport run_suite(const Model& m, const SuiteSpec& s, const CheckOptions& o);

// Points on one side only (relational) or both sides in full.
nlohmann::json mor_difference(const Model& m, const Mor& l, const Mor& r);

// LLK_WORKERS, or 1.
int default_workers();

}  // namespace llk
