#pragma once

#include <functional>
#include <optional>

#include "llk/diagram.hpp"
#include "llk/env.hpp"

namespace llk {

// Finite sets and partial functions. with(A, B) is read here as the disjoint
// union A + B (left points first), which is what the toy summability needs.
struct PartialFun : MorBase {
    std::vector<int> t;  // -1: undefined
};

class PartialFns : public Model {
public:
    explicit PartialFns(int max_size = 2) : max_(max_size) {}

    std::string name() const override { return "pfn"; }
    std::vector<Obj> objects() const override;
    static int size(Obj o);
    static Mor fun(Obj dom, Obj cod, std::vector<int> t);

    Obj with(Obj a, Obj b) const override;
    std::optional<double> hom_count(Obj a, Obj b) const override;
    std::vector<Mor> homs(Obj a, Obj b) const override;
    Mor random_hom(Obj a, Obj b, std::mt19937_64& rng) const override;
    bool equal(const Mor& f, const Mor& g) const override;
    nlohmann::json to_json(const Mor& f) const override;
    Mor id(Obj a) const override;
    Mor comp(const Mor& g, const Mor& f) const override;
    Mor zero(Obj a, Obj b) const override;

private:
    int max_;
};

// A pre-summability structure (S, π0, π1, σ) given as callbacks over a model.
struct PreSummability {
    const Model* model = nullptr;
    std::function<Obj(Obj)> S;
    std::function<Mor(const Mor&)> Smap;
    std::function<Mor(Obj)> pi0, pi1, sigma;
    std::function<Mor(Obj, Obj)> zero;
    std::function<Mor(const Mor&, const Mor&)> comp;
    // Proposed witness for a pair; verified before use. Without it the
    // witness is searched for in hom(A, SX).
    std::function<std::optional<Mor>(const Mor&, const Mor&)> candidate;
};

struct Witness {
    Mor pairing;  // ⟨f0, f1⟩ : A → SX
    Mor sum;      // σ ∘ ⟨f0, f1⟩
};

// nullopt: the pair is not summable (no witness in the enumerated hom-set).
std::optional<Witness> witness_and_sum(const PreSummability& ps, const Mor& f0, const Mor& f1);

// S& on an additive model: SX = X & X, πi = pri, σ = pr0 + pr1.
PreSummability build_swith(const Env& e);
// The toy: SX = X + X, πi the partial inverses of the injections, σ the codiagonal.
// Summable exactly when the domains are disjoint, so not additive. The
// candidate is the obvious copairing; clear it to search hom(A, SX) instead.
PreSummability build_pfn(const PartialFns& m);

// The monad and its companions built from witnesses at one object.
struct SMonadData {
    Mor iota0, iota1, swap, theta;
};
// Throws std::runtime_error naming the first defining pair that is not summable.
SMonadData monad_data(const PreSummability& ps, Obj x);

// Exhaustive checks over all objects of the model: S(0) = 0, joint monicity,
// naturality of π0/π1/σ, neutrality, commutativity, S-witness, S-assoc.
SuiteReport run_summability_suite(const PreSummability& ps, const std::vector<Obj>& objects);

}  // namespace llk
