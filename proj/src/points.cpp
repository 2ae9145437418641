#include "llk/points.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace llk {

namespace {

constexpr size_t kChunkBits = 12;
constexpr size_t kChunk = size_t(1) << kChunkBits;
constexpr size_t kMaxChunks = size_t(1) << 16;

struct Key {
    PK kind;
    uint32_t a, b;
    std::vector<Pt> elems;
    bool operator<(const Key& o) const {
        return std::tie(kind, a, b, elems) < std::tie(o.kind, o.a, o.b, o.elems);
    }
};

struct Pool {
    std::mutex mu;
    std::map<Key, Pt> index;
    std::array<std::atomic<PointData*>, kMaxChunks> chunks{};
    uint32_t size = 0;

    Pt intern(Key k, int m) {
        std::lock_guard<std::mutex> lock(mu);
        auto it = index.find(k);
        if (it != index.end()) return it->second;
        Pt id = size++;
        size_t c = id >> kChunkBits;
        if (c >= kMaxChunks) throw std::runtime_error("point pool exhausted");
        if (!chunks[c].load()) chunks[c].store(new PointData[kChunk]);
        PointData& d = chunks[c].load()[id & (kChunk - 1)];
        d.kind = k.kind;
        d.a = k.a;
        d.b = k.b;
        d.elems = k.elems;
        d.mass = m;
        index.emplace(std::move(k), id);
        return id;
    }
};

Pool& pool() {
    static Pool* p = new Pool;
    return *p;
}

}  // namespace

const PointData& pdata(Pt p) { return pool().chunks[p >> kChunkBits].load()[p & (kChunk - 1)]; }

Pt p_atom(int i) { return pool().intern({PK::Atom, static_cast<uint32_t>(i), 0, {}}, 1); }
Pt p_unit() { return pool().intern({PK::Unit, 0, 0, {}}, 0); }
Pt p_pair(Pt x, Pt y) { return pool().intern({PK::Pair, x, y, {}}, mass(x) + mass(y)); }
Pt p_inj(int side, Pt x) { return pool().intern({PK::Inj, static_cast<uint32_t>(side), x, {}}, mass(x)); }

Pt p_bag(std::vector<Pt> elems) {
    std::sort(elems.begin(), elems.end());
    int m = 0;
    for (Pt e : elems) m += std::max(1, mass(e));
    return pool().intern({PK::Bag, 0, 0, std::move(elems)}, m);
}

namespace {

int cmp(Pt x, Pt y);

std::vector<Pt> canon(const std::vector<Pt>& v) {
    std::vector<Pt> r = v;
    std::sort(r.begin(), r.end(), pt_less);
    return r;
}

int cmp(Pt x, Pt y) {
    if (x == y) return 0;
    const PointData &a = pdata(x), &b = pdata(y);
    if (a.mass != b.mass) return a.mass < b.mass ? -1 : 1;
    if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
    switch (a.kind) {
        case PK::Atom:
            return a.a < b.a ? -1 : 1;
        case PK::Unit:
            return 0;
        case PK::Pair:
            if (int c = cmp(a.a, b.a)) return c;
            return cmp(a.b, b.b);
        case PK::Inj:
            if (a.a != b.a) return a.a < b.a ? -1 : 1;
            return cmp(a.b, b.b);
        case PK::Bag: {
            if (a.elems.size() != b.elems.size()) return a.elems.size() < b.elems.size() ? -1 : 1;
            auto ca = canon(a.elems), cb = canon(b.elems);
            for (size_t i = 0; i < ca.size(); ++i)
                if (int c = cmp(ca[i], cb[i])) return c;
            return 0;
        }
    }
    return 0;
}

}  // namespace

bool pt_less(Pt x, Pt y) { return cmp(x, y) < 0; }

void sort_canonical(std::vector<Pt>& v) { std::sort(v.begin(), v.end(), pt_less); }

std::string pt_str(Pt p) {
    const PointData& d = pdata(p);
    switch (d.kind) {
        case PK::Atom: return std::to_string(d.a);
        case PK::Unit: return "*";
        case PK::Pair: return "(" + pt_str(d.a) + "," + pt_str(d.b) + ")";
        case PK::Inj: return (d.a == 0 ? "l:" : "r:") + pt_str(d.b);
        case PK::Bag: {
            std::string s = "[";
            bool first = true;
            for (Pt e : canon(d.elems)) {
                if (!first) s += ",";
                first = false;
                s += pt_str(e);
            }
            return s + "]";
        }
    }
    return "?";
}

nlohmann::json pt_json(Pt p) { return pt_str(p); }

void normalize_set(PtSet& s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

}  // namespace llk
