#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace llk {

// Web points of the relational models, interned process-wide. Equal points
// share one id, so sets of points compare as sorted id vectors.
using Pt = uint32_t;

enum class PK : uint8_t { Atom, Unit, Pair, Inj, Bag };

struct PointData {
    PK kind;
    uint32_t a = 0, b = 0;  // Atom: a = index; Pair: a, b; Inj: a = side, b = inner
    std::vector<Pt> elems;  // Bag, sorted by id (a multiset, or a set in coherence spaces)
    int mass = 0;
};

Pt p_atom(int i);
Pt p_unit();
Pt p_pair(Pt x, Pt y);
Pt p_inj(int side, Pt x);
Pt p_bag(std::vector<Pt> elems);

const PointData& pdata(Pt p);
inline int mass(Pt p) { return pdata(p).mass; }

// Size first, then structure; independent of interning order.
bool pt_less(Pt x, Pt y);
void sort_canonical(std::vector<Pt>& v);
std::string pt_str(Pt p);
nlohmann::json pt_json(Pt p);

using PtSet = std::vector<Pt>;  // sorted by id, no duplicates
void normalize_set(PtSet& s);

}  // namespace llk
