#pragma once

#include <map>
#include <mutex>
#include <unordered_map>

#include "llk/model.hpp"
#include "llk/points.hpp"

namespace llk {

enum class RK {
    Id, Comp, Tensor, Pair, Proj0, Proj1, Term, Zero, Union,
    Alpha, AlphaInv, Lam, LamInv, Rho, RhoInv, Gam, Ev, Cur,
    Bang, Der, Dig, M0, M0Inv, M2, M2Inv, CoDer, CoWeak, CoContr,
    Table, Minus,
};

class Relational;

// A morphism of Rel or FinCoh, evaluated lazily backwards: pre(y) is the set
// of domain points related to codomain point y. Every generator has finite
// preimages, so composites are exact whatever the truncation of the webs.
struct RNode : MorBase {
    RK kind;
    std::vector<std::shared_ptr<const RNode>> kids;
    Obj p0 = nullptr, p1 = nullptr;  // object parameters
    bool closed = true;              // no Table/Minus leaf below: safe to share
    std::map<Pt, PtSet> table;       // Table
    Pt mx = 0, my = 0;               // Minus: removed pair

    mutable std::mutex mu;
    mutable std::unordered_map<Pt, PtSet> memo;
};
using RMor = std::shared_ptr<const RNode>;

struct RelOptions {
    bool coherence = false;  // FinCoh: webs with coherence, ! = finite cliques
    int max_size = 2;        // base objects: sizes 0..max_size (Rel), spaces up to iso (FinCoh)
    int degree = 2;          // Rel: ! webs truncated to mass ≤ degree
    double budget = 1 << 20; // largest hom-set enumerated
    size_t web_budget = 1 << 16;
};

class Relational : public Model {
public:
    explicit Relational(RelOptions o);

    std::string name() const override { return opt_.coherence ? "coh" : "rel"; }
    bool relational() const override { return true; }
    bool full_powerset() const override { return !opt_.coherence; }
    bool linear(const std::string& op, int arg) const override;
    std::vector<Obj> objects() const override { return objects_; }
    const RelOptions& options() const { return opt_; }

    Obj one() const override { return obj_make(OK::One); }
    Obj top() const override { return obj_make(OK::Top); }
    Obj tensor(Obj a, Obj b) const override { return obj_make(OK::Tensor, a, b); }
    Obj with(Obj a, Obj b) const override { return obj_make(OK::With, a, b); }
    Obj lolli(Obj a, Obj b) const override { return obj_make(OK::Lolli, a, b); }
    Obj bang(Obj a) const override { return obj_make(OK::Bang, a); }

    // Canonically ordered points; truncated by mass in Rel, complete in FinCoh.
    const std::vector<Pt>& web(Obj a) const;
    bool coherent(Obj a, Pt x, Pt y) const;
    bool is_clique(Obj a, const std::vector<Pt>& xs) const;
    const PtSet& pre(const RNode& f, Pt y) const;
    Mor relation(Obj a, Obj b, const std::vector<std::pair<Pt, Pt>>& xy) const;

    std::optional<double> hom_count(Obj a, Obj b) const override;
    std::vector<Mor> homs(Obj a, Obj b) const override;
    Mor random_hom(Obj a, Obj b, std::mt19937_64& rng) const override;
    std::vector<Mor> atoms(Obj a, Obj b) const override;
    bool equal(const Mor& f, const Mor& g) const override;
    nlohmann::json to_json(const Mor& f) const override;
    Mor mutate(const Mor& f) const override;
    std::vector<std::pair<std::string, std::string>> pairs(const Mor& f) const override;

    Mor id(Obj a) const override;
    Mor comp(const Mor& g, const Mor& f) const override;
    Mor tensor(const Mor& f, const Mor& g) const override;
    Mor pair(const Mor& f, const Mor& g) const override;
    Mor pr0(Obj a, Obj b) const override;
    Mor pr1(Obj a, Obj b) const override;
    Mor term(Obj a) const override;
    Mor alpha(Obj a, Obj b, Obj c) const override;
    Mor alpha_inv(Obj a, Obj b, Obj c) const override;
    Mor lambda(Obj a) const override;
    Mor lambda_inv(Obj a) const override;
    Mor rho(Obj a) const override;
    Mor rho_inv(Obj a) const override;
    Mor gamma(Obj a, Obj b) const override;
    Mor ev(Obj a, Obj b) const override;
    Mor cur(const Mor& f, Obj c, Obj a, Obj b) const override;
    Mor bang(const Mor& f) const override;
    Mor der(Obj a) const override;
    Mor dig(Obj a) const override;
    Mor m0() const override;
    Mor m0_inv() const override;
    Mor m2(Obj a, Obj b) const override;
    Mor m2_inv(Obj a, Obj b) const override;
    Mor coder(Obj a) const override;
    Mor support(Obj a) const override;
    Mor coweak(Obj a) const override;
    Mor cocontr(Obj a) const override;
    Mor zero(Obj a, Obj b) const override;
    Mor sum(const Mor& f, const Mor& g) const override;

private:
    RMor node(RK k, Obj dom, Obj cod, std::vector<RMor> kids = {}, Obj p0 = nullptr, Obj p1 = nullptr) const;
    PtSet compute(const RNode& f, Pt y) const;
    std::vector<Pt> enumerate(Obj a) const;
    std::vector<std::vector<Pt>> cliques(Obj a, const std::vector<Pt>& pts, double cap) const;
    std::vector<std::pair<Pt, Pt>> hom_pairs(Obj a, Obj b) const;
    void require_linear_only(const char* op) const;

    RelOptions opt_;
    std::vector<Obj> objects_;
    mutable std::mutex web_mu_, node_mu_, count_mu_;
    mutable std::map<Obj, std::vector<Pt>> webs_;
    mutable std::map<std::string, RMor> nodes_;
    mutable std::map<std::pair<Obj, Obj>, std::optional<double>> counts_;
};

// Rel over bases 0..max_size with ! truncated at the given degree.
RelOptions rel_options(int max_size, int degree);
// FinCoh over all coherence spaces with at most max_points points (up to iso).
RelOptions coh_options(int max_points);
// The coherence spaces with at most n points, one per isomorphism class.
std::vector<Obj> coh_spaces(int n);

}  // namespace llk
