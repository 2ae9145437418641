#pragma once

#include <string>
#include <vector>

namespace llk {

enum class OK { Base, One, Top, Tensor, With, Lolli, Bang };

struct ObjNode;
// Interned and never freed: equal objects are the same pointer.
using Obj = const ObjNode*;

struct ObjNode {
    OK kind;
    int n = 0;                 // Base: number of points
    std::vector<bool> coh;     // Base in coherence spaces: n*n coherence matrix (empty otherwise)
    Obj a = nullptr, b = nullptr;
    std::string key;
};

Obj obj_base(int n, std::vector<bool> coh = {});
Obj obj_make(OK k, Obj a = nullptr, Obj b = nullptr);
const std::string& obj_str(Obj o);

}  // namespace llk
