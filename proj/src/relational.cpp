#include "llk/relational.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

#include "llk/proof.hpp"

namespace llk {

namespace {

const RNode& R(const Mor& m) {
    auto* r = dynamic_cast<const RNode*>(m.get());
    if (!r) throw TypeError("relational model: foreign morphism");
    return *r;
}

RMor RP(const Mor& m) {
    R(m);
    return std::static_pointer_cast<const RNode>(m);
}

PtSet unite(PtSet a, const PtSet& b) {
    a.insert(a.end(), b.begin(), b.end());
    normalize_set(a);
    return a;
}

// All sub-multisets of a sorted multiset, each once.
void splits(const std::vector<Pt>& m, size_t i, std::vector<Pt>& left, std::vector<Pt>& right,
            std::vector<std::pair<std::vector<Pt>, std::vector<Pt>>>& out) {
    if (i == m.size()) {
        out.emplace_back(left, right);
        return;
    }
    size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    size_t k = j - i;
    for (size_t take = 0; take <= k; ++take) {
        for (size_t t = 0; t < take; ++t) left.push_back(m[i]);
        for (size_t t = take; t < k; ++t) right.push_back(m[i]);
        splits(m, j, left, right, out);
        left.resize(left.size() - take);
        right.resize(right.size() - (k - take));
    }
}

}  // namespace

RelOptions rel_options(int max_size, int degree) {
    RelOptions o;
    o.max_size = max_size;
    o.degree = degree;
    return o;
}

RelOptions coh_options(int max_points) {
    RelOptions o;
    o.coherence = true;
    o.max_size = max_points;
    return o;
}

std::vector<Obj> coh_spaces(int n) {
    if (n > 4) throw ResourceLimit("coherence spaces: at most 4 points supported");
    std::vector<Obj> out;
    for (int k = 0; k <= n; ++k) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
        std::set<std::vector<bool>> seen;
        std::vector<int> perm(k);
        for (unsigned mask = 0; mask < (1u << edges.size()); ++mask) {
            std::vector<bool> best;
            std::iota(perm.begin(), perm.end(), 0);
            do {
                std::vector<bool> m(k * k, false);
                for (int i = 0; i < k; ++i) m[i * k + i] = true;
                for (size_t e = 0; e < edges.size(); ++e)
                    if (mask >> e & 1) {
                        int a = perm[edges[e].first], b = perm[edges[e].second];
                        m[a * k + b] = m[b * k + a] = true;
                    }
                if (best.empty() || m < best) best = m;
            } while (std::next_permutation(perm.begin(), perm.end()));
            if (k == 0) best = {};
            if (seen.insert(best).second) out.push_back(obj_base(k, k == 0 ? std::vector<bool>{} : best));
        }
    }
    return out;
}

Relational::Relational(RelOptions o) : opt_(o) {
    if (opt_.coherence) objects_ = coh_spaces(opt_.max_size);
    else {
        if (opt_.degree < 1) throw std::invalid_argument("rel: degree must be at least 1");
        for (int n = 0; n <= opt_.max_size; ++n) objects_.push_back(obj_base(n));
    }
}

bool Relational::linear(const std::string& op, int) const {
    return op == "comp" || op == "tensor" || op == "pair" || op == "cur" || op == "S" || op == "sum";
}

// ---- webs

bool Relational::coherent(Obj a, Pt x, Pt y) const {
    if (x == y) return true;
    const PointData &px = pdata(x), &py = pdata(y);
    switch (a->kind) {
        case OK::Base:
            return a->coh.empty() ? true : static_cast<bool>(a->coh[px.a * a->n + py.a]);
        case OK::One: case OK::Top:
            return true;
        case OK::Tensor:
            return coherent(a->a, px.a, py.a) && coherent(a->b, px.b, py.b);
        case OK::With:
            return px.a != py.a || coherent(px.a == 0 ? a->a : a->b, px.b, py.b);
        case OK::Lolli:
            // dual(A ⊗ dual B): x = y, or a ≁ a', or (b ≠ b' and b ⌢ b')
            return !coherent(a->a, px.a, py.a) || (px.b != py.b && coherent(a->b, px.b, py.b));
        case OK::Bang: {
            std::vector<Pt> u = px.elems;
            u.insert(u.end(), py.elems.begin(), py.elems.end());
            return is_clique(a->a, u);
        }
    }
    return false;
}

bool Relational::is_clique(Obj a, const std::vector<Pt>& xs) const {
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = i + 1; j < xs.size(); ++j)
            if (!coherent(a, xs[i], xs[j])) return false;
    return true;
}

std::vector<std::vector<Pt>> Relational::cliques(Obj a, const std::vector<Pt>& pts, double cap) const {
    std::vector<std::vector<Pt>> out;
    std::vector<Pt> cur;
    std::function<void(size_t)> go = [&](size_t i) {
        if (static_cast<double>(out.size()) > cap) throw ResourceLimit("coh: too many cliques in " + obj_str(a));
        if (i == pts.size()) {
            out.push_back(cur);
            return;
        }
        go(i + 1);
        bool ok = true;
        for (Pt c : cur) ok = ok && coherent(a, c, pts[i]);
        if (ok) {
            cur.push_back(pts[i]);
            go(i + 1);
            cur.pop_back();
        }
    };
    go(0);
    return out;
}

std::vector<Pt> Relational::enumerate(Obj a) const {
    const int d = opt_.coherence ? 1 << 30 : opt_.degree;
    std::vector<Pt> out;
    switch (a->kind) {
        case OK::Base:
            for (int i = 0; i < a->n; ++i) out.push_back(p_atom(i));
            break;
        case OK::One:
            out.push_back(p_unit());
            break;
        case OK::Top:
            break;
        case OK::Tensor: case OK::Lolli:
            for (Pt x : web(a->a))
                for (Pt y : web(a->b)) {
                    out.push_back(p_pair(x, y));
                    if (out.size() > opt_.web_budget) throw ResourceLimit("web of " + obj_str(a) + " over budget");
                }
            break;
        case OK::With:
            for (Pt x : web(a->a)) out.push_back(p_inj(0, x));
            for (Pt y : web(a->b)) out.push_back(p_inj(1, y));
            break;
        case OK::Bang: {
            const auto& base = web(a->a);
            if (opt_.coherence) {
                for (auto& c : cliques(a->a, base, static_cast<double>(opt_.web_budget))) out.push_back(p_bag(c));
                break;
            }
            std::vector<Pt> cur;
            std::function<void(size_t, int)> go = [&](size_t i, int left) {
                if (i == base.size()) {
                    out.push_back(p_bag(cur));
                    if (out.size() > opt_.web_budget) throw ResourceLimit("web of " + obj_str(a) + " over budget");
                    return;
                }
                int w = std::max(1, mass(base[i]));
                size_t pushed = 0;
                go(i + 1, left);
                while (left - w * static_cast<int>(pushed + 1) >= 0) {
                    cur.push_back(base[i]);
                    ++pushed;
                    go(i + 1, left - w * static_cast<int>(pushed));
                }
                cur.resize(cur.size() - pushed);
            };
            go(0, d);
            break;
        }
    }
    sort_canonical(out);
    return out;
}

const std::vector<Pt>& Relational::web(Obj a) const {
    {
        std::lock_guard<std::mutex> lock(web_mu_);
        auto it = webs_.find(a);
        if (it != webs_.end()) return it->second;
    }
    auto w = enumerate(a);
    std::lock_guard<std::mutex> lock(web_mu_);
    return webs_.emplace(a, std::move(w)).first->second;
}

// ---- nodes

RMor Relational::node(RK k, Obj dom, Obj cod, std::vector<RMor> kids, Obj p0, Obj p1) const {
    bool closed = k != RK::Table && k != RK::Minus;
    for (const auto& c : kids) closed = closed && c->closed;
    std::string key;
    if (closed) {
        key = std::to_string(static_cast<int>(k)) + "|" + obj_str(dom) + "|" + obj_str(cod) + "|" +
              (p0 ? obj_str(p0) : "") + "|" + (p1 ? obj_str(p1) : "");
        for (const auto& c : kids) key += "|" + std::to_string(reinterpret_cast<uintptr_t>(c.get()));
        std::lock_guard<std::mutex> lock(node_mu_);
        auto it = nodes_.find(key);
        if (it != nodes_.end()) return it->second;
    }
    auto n = std::make_shared<RNode>();
    n->kind = k;
    n->dom = dom;
    n->cod = cod;
    n->kids = std::move(kids);
    n->p0 = p0;
    n->p1 = p1;
    n->closed = closed;
    if (closed) {
        std::lock_guard<std::mutex> lock(node_mu_);
        return nodes_.emplace(key, n).first->second;
    }
    return n;
}

const PtSet& Relational::pre(const RNode& f, Pt y) const {
    {
        std::lock_guard<std::mutex> lock(f.mu);
        auto it = f.memo.find(y);
        if (it != f.memo.end()) return it->second;
    }
    PtSet s = compute(f, y);
    std::lock_guard<std::mutex> lock(f.mu);
    return f.memo.emplace(y, std::move(s)).first->second;
}

PtSet Relational::compute(const RNode& f, Pt y) const {
    const PointData& py = pdata(y);
    PtSet out;
    auto K = [&](int i) -> const RNode& { return *f.kids[i]; };
    switch (f.kind) {
        case RK::Id:
            out = {y};
            break;
        case RK::Comp:
            for (Pt z : pre(K(0), y)) {
                const auto& s = pre(K(1), z);
                out.insert(out.end(), s.begin(), s.end());
            }
            break;
        case RK::Tensor:
            for (Pt x1 : pre(K(0), py.a))
                for (Pt x2 : pre(K(1), py.b)) out.push_back(p_pair(x1, x2));
            break;
        case RK::Pair:
            out = pre(K(py.a == 0 ? 0 : 1), py.b);
            break;
        case RK::Proj0:
            out = {p_inj(0, y)};
            break;
        case RK::Proj1:
            out = {p_inj(1, y)};
            break;
        case RK::Term: case RK::Zero:
            break;
        case RK::Union:
            out = unite(pre(K(0), y), pre(K(1), y));
            break;
        case RK::Alpha: {
            const PointData& bc = pdata(py.b);
            out = {p_pair(p_pair(py.a, bc.a), bc.b)};
            break;
        }
        case RK::AlphaInv: {
            const PointData& ab = pdata(py.a);
            out = {p_pair(ab.a, p_pair(ab.b, py.b))};
            break;
        }
        case RK::Lam:
            out = {p_pair(p_unit(), y)};
            break;
        case RK::LamInv:
            out = {py.b};
            break;
        case RK::Rho:
            out = {p_pair(y, p_unit())};
            break;
        case RK::RhoInv:
            out = {py.a};
            break;
        case RK::Gam:
            out = {p_pair(py.b, py.a)};
            break;
        case RK::Ev:
            // ((a,b),a) over the (truncated) web of A
            for (Pt a : web(f.p0)) out.push_back(p_pair(p_pair(a, y), a));
            break;
        case RK::Cur:
            for (Pt ca : pre(K(0), py.b)) {
                const PointData& q = pdata(ca);
                if (q.b == py.a) out.push_back(q.a);
            }
            break;
        case RK::Bang: {
            const auto& ys = py.elems;
            std::vector<const PtSet*> choices;
            for (Pt e : ys) choices.push_back(&pre(K(0), e));
            std::vector<Pt> pick;
            std::function<void(size_t)> go = [&](size_t i) {
                if (i == ys.size()) {
                    std::vector<Pt> b = pick;
                    if (opt_.coherence) {
                        normalize_set(b);
                        if (!is_clique(f.dom->a, b)) return;
                    }
                    out.push_back(p_bag(b));
                    return;
                }
                for (Pt x : *choices[i]) {
                    pick.push_back(x);
                    go(i + 1);
                    pick.pop_back();
                }
            };
            go(0);
            break;
        }
        case RK::Der:
            out = {p_bag({y})};
            break;
        case RK::Dig: {
            std::vector<Pt> all;
            for (Pt m : py.elems) {
                const auto& e = pdata(m).elems;
                all.insert(all.end(), e.begin(), e.end());
            }
            if (opt_.coherence) normalize_set(all);
            out = {p_bag(all)};
            break;
        }
        case RK::M0:
            out = {p_unit()};
            break;
        case RK::M0Inv:
            out = {p_bag({})};
            break;
        case RK::M2: {
            std::vector<Pt> l, r;
            for (Pt e : py.elems) (pdata(e).a == 0 ? l : r).push_back(pdata(e).b);
            out = {p_pair(p_bag(l), p_bag(r))};
            break;
        }
        case RK::M2Inv: {
            std::vector<Pt> all;
            for (Pt e : pdata(py.a).elems) all.push_back(p_inj(0, e));
            for (Pt e : pdata(py.b).elems) all.push_back(p_inj(1, e));
            out = {p_bag(all)};
            break;
        }
        case RK::CoDer:
            if (py.elems.size() == 1) out = {py.elems[0]};
            break;
        case RK::CoWeak:
            if (py.elems.empty()) out = {p_unit()};
            break;
        case RK::CoContr: {
            std::vector<std::pair<std::vector<Pt>, std::vector<Pt>>> sp;
            std::vector<Pt> l, r;
            splits(py.elems, 0, l, r, sp);
            for (auto& [a, b] : sp) out.push_back(p_pair(p_bag(a), p_bag(b)));
            break;
        }
        case RK::Table: {
            auto it = f.table.find(y);
            if (it != f.table.end()) out = it->second;
            break;
        }
        case RK::Minus:
            out = pre(K(0), y);
            if (y == f.my) out.erase(std::remove(out.begin(), out.end(), f.mx), out.end());
            break;
    }
    normalize_set(out);
    return out;
}

Mor Relational::relation(Obj a, Obj b, const std::vector<std::pair<Pt, Pt>>& xy) const {
    auto n = node(RK::Table, a, b);
    auto* w = const_cast<RNode*>(n.get());
    for (auto [x, y] : xy) w->table[y].push_back(x);
    for (auto& [y, s] : w->table) normalize_set(s);
    return n;
}

// ---- hom-sets

std::vector<std::pair<Pt, Pt>> Relational::hom_pairs(Obj a, Obj b) const {
    std::vector<std::pair<Pt, Pt>> out;
    for (Pt x : web(a))
        for (Pt y : web(b)) out.emplace_back(x, y);
    return out;
}

std::optional<double> Relational::hom_count(Obj a, Obj b) const {
    {
        std::lock_guard<std::mutex> lock(count_mu_);
        auto it = counts_.find({a, b});
        if (it != counts_.end()) return it->second;
    }
    std::optional<double> r;
    double n = static_cast<double>(web(a).size() * web(b).size());
    if (!opt_.coherence) {
        if (n <= std::log2(opt_.budget)) r = std::pow(2.0, n);
    } else if (n <= 64) {
        std::vector<Pt> pts;
        for (Pt x : web(a))
            for (Pt y : web(b)) pts.push_back(p_pair(x, y));
        try {
            r = static_cast<double>(cliques(lolli(a, b), pts, opt_.budget).size());
        } catch (const ResourceLimit&) {
        }
    }
    std::lock_guard<std::mutex> lock(count_mu_);
    counts_[{a, b}] = r;
    return r;
}

std::vector<Mor> Relational::homs(Obj a, Obj b) const {
    if (!hom_count(a, b)) throw ResourceLimit(name() + ": hom-set " + obj_str(a) + " -> " + obj_str(b) + " over budget");
    auto ps = hom_pairs(a, b);
    std::vector<Mor> out;
    if (opt_.coherence) {
        std::vector<Pt> pts;
        for (auto [x, y] : ps) pts.push_back(p_pair(x, y));
        for (const auto& c : cliques(lolli(a, b), pts, opt_.budget)) {
            std::vector<std::pair<Pt, Pt>> xy;
            for (Pt p : c) xy.emplace_back(pdata(p).a, pdata(p).b);
            out.push_back(relation(a, b, xy));
        }
        return out;
    }
    for (uint64_t mask = 0; mask < (uint64_t(1) << ps.size()); ++mask) {
        std::vector<std::pair<Pt, Pt>> xy;
        for (size_t i = 0; i < ps.size(); ++i)
            if (mask >> i & 1) xy.push_back(ps[i]);
        out.push_back(relation(a, b, xy));
    }
    return out;
}

Mor Relational::random_hom(Obj a, Obj b, std::mt19937_64& rng) const {
    auto ps = hom_pairs(a, b);
    std::shuffle(ps.begin(), ps.end(), rng);
    static const double density[] = {0.05, 0.15, 0.35, 0.6};
    double p = density[rng() % 4];
    std::uniform_real_distribution<double> u(0, 1);
    std::vector<std::pair<Pt, Pt>> xy;
    Obj l = lolli(a, b);
    for (auto [x, y] : ps) {
        if (u(rng) >= p) continue;
        if (opt_.coherence) {
            bool ok = true;
            for (auto [x2, y2] : xy) ok = ok && coherent(l, p_pair(x, y), p_pair(x2, y2));
            if (!ok) continue;
        }
        xy.emplace_back(x, y);
    }
    return relation(a, b, xy);
}

std::vector<Mor> Relational::atoms(Obj a, Obj b) const {
    std::vector<Mor> out{relation(a, b, {})};
    for (auto xy : hom_pairs(a, b)) out.push_back(relation(a, b, {xy}));
    return out;
}

bool Relational::equal(const Mor& f, const Mor& g) const {
    if (f == g) return true;
    const RNode &F = R(f), &G = R(g);
    for (Pt y : web(f->cod))
        if (pre(F, y) != pre(G, y)) return false;
    return true;
}

nlohmann::json Relational::to_json(const Mor& f) const {
    nlohmann::json out = nlohmann::json::array();
    const RNode& F = R(f);
    for (Pt y : web(f->cod)) {
        PtSet xs = pre(F, y);
        sort_canonical(xs);
        for (Pt x : xs) out.push_back({pt_str(x), pt_str(y)});
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> Relational::pairs(const Mor& f) const {
    std::vector<std::pair<std::string, std::string>> out;
    const RNode& F = R(f);
    for (Pt y : web(f->cod))
        for (Pt x : pre(F, y)) out.emplace_back(pt_str(x), pt_str(y));
    return out;
}

Mor Relational::mutate(const Mor& f) const {
    const RNode& F = R(f);
    for (Pt y : web(f->cod)) {
        PtSet xs = pre(F, y);
        if (xs.empty()) continue;
        sort_canonical(xs);
        auto n = node(RK::Minus, f->dom, f->cod, {RP(f)});
        auto* w = const_cast<RNode*>(n.get());
        w->mx = xs.front();
        w->my = y;
        return n;
    }
    return f;  // nothing to remove
}

// ---- structure

Mor Relational::id(Obj a) const { return node(RK::Id, a, a); }
Mor Relational::comp(const Mor& g, const Mor& f) const { return node(RK::Comp, f->dom, g->cod, {RP(g), RP(f)}); }
Mor Relational::tensor(const Mor& f, const Mor& g) const {
    return node(RK::Tensor, tensor(f->dom, g->dom), tensor(f->cod, g->cod), {RP(f), RP(g)});
}
Mor Relational::pair(const Mor& f, const Mor& g) const {
    return node(RK::Pair, f->dom, with(f->cod, g->cod), {RP(f), RP(g)});
}
Mor Relational::pr0(Obj a, Obj b) const { return node(RK::Proj0, with(a, b), a); }
Mor Relational::pr1(Obj a, Obj b) const { return node(RK::Proj1, with(a, b), b); }
Mor Relational::term(Obj a) const { return node(RK::Term, a, top()); }
Mor Relational::alpha(Obj a, Obj b, Obj c) const {
    return node(RK::Alpha, tensor(tensor(a, b), c), tensor(a, tensor(b, c)));
}
Mor Relational::alpha_inv(Obj a, Obj b, Obj c) const {
    return node(RK::AlphaInv, tensor(a, tensor(b, c)), tensor(tensor(a, b), c));
}
Mor Relational::lambda(Obj a) const { return node(RK::Lam, tensor(one(), a), a); }
Mor Relational::lambda_inv(Obj a) const { return node(RK::LamInv, a, tensor(one(), a)); }
Mor Relational::rho(Obj a) const { return node(RK::Rho, tensor(a, one()), a); }
Mor Relational::rho_inv(Obj a) const { return node(RK::RhoInv, a, tensor(a, one())); }
Mor Relational::gamma(Obj a, Obj b) const { return node(RK::Gam, tensor(a, b), tensor(b, a)); }
Mor Relational::ev(Obj a, Obj b) const { return node(RK::Ev, tensor(lolli(a, b), a), b, {}, a, b); }
Mor Relational::cur(const Mor& f, Obj c, Obj a, Obj b) const { return node(RK::Cur, c, lolli(a, b), {RP(f)}); }
Mor Relational::bang(const Mor& f) const { return node(RK::Bang, bang(f->dom), bang(f->cod), {RP(f)}); }
Mor Relational::der(Obj a) const { return node(RK::Der, bang(a), a); }
Mor Relational::dig(Obj a) const { return node(RK::Dig, bang(a), bang(bang(a))); }
Mor Relational::m0() const { return node(RK::M0, one(), bang(top())); }
Mor Relational::m0_inv() const { return node(RK::M0Inv, bang(top()), one()); }
Mor Relational::m2(Obj a, Obj b) const { return node(RK::M2, tensor(bang(a), bang(b)), bang(with(a, b))); }
Mor Relational::m2_inv(Obj a, Obj b) const { return node(RK::M2Inv, bang(with(a, b)), tensor(bang(a), bang(b))); }

Mor Relational::support(Obj a) const {
    std::vector<std::pair<Pt, Pt>> xy;
    for (Pt m : web(bang(a)))
        for (Pt x : pdata(m).elems) xy.emplace_back(m, x);
    return relation(bang(a), a, xy);
}

void Relational::require_linear_only(const char* op) const {
    if (opt_.coherence) throw Unsupported(std::string("coh: no ") + op + " (not a differential model)");
}

Mor Relational::coder(Obj a) const {
    require_linear_only("codereliction");
    return node(RK::CoDer, a, bang(a));
}
Mor Relational::coweak(Obj a) const {
    require_linear_only("coweakening");
    return node(RK::CoWeak, one(), bang(a));
}
Mor Relational::cocontr(Obj a) const {
    require_linear_only("cocontraction");
    return node(RK::CoContr, tensor(bang(a), bang(a)), bang(a));
}
Mor Relational::zero(Obj a, Obj b) const {
    require_linear_only("sums");
    return node(RK::Zero, a, b);
}
Mor Relational::sum(const Mor& f, const Mor& g) const {
    require_linear_only("sums");
    return node(RK::Union, f->dom, f->cod, {RP(f), RP(g)});
}

}  // namespace llk
