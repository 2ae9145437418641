#include "llk/object.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace llk {

namespace {

std::mutex mu;
std::map<std::string, std::unique_ptr<ObjNode>>& table() {
    static auto* t = new std::map<std::string, std::unique_ptr<ObjNode>>;
    return *t;
}

Obj intern(ObjNode n) {
    std::lock_guard<std::mutex> lock(mu);
    auto& t = table();
    auto it = t.find(n.key);
    if (it != t.end()) return it->second.get();
    auto p = std::make_unique<ObjNode>(std::move(n));
    Obj r = p.get();
    t.emplace(r->key, std::move(p));
    return r;
}

const char* kind_word(OK k) {
    switch (k) {
        case OK::Tensor: return "tensor";
        case OK::With: return "with";
        case OK::Lolli: return "lolli";
        case OK::Bang: return "bang";
        case OK::One: return "one";
        case OK::Top: return "top";
        default: return "base";
    }
}

}  // namespace

Obj obj_base(int n, std::vector<bool> coh) {
    ObjNode o{OK::Base, n, std::move(coh), nullptr, nullptr, std::to_string(n)};
    if (!o.coh.empty()) {
        o.key += ":";
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) o.key += o.coh[i * n + j] ? '1' : '0';
    }
    return intern(std::move(o));
}

Obj obj_make(OK k, Obj a, Obj b) {
    ObjNode o{k, 0, {}, a, b, ""};
    if (k == OK::One || k == OK::Top) o.key = kind_word(k);
    else if (k == OK::Bang) o.key = std::string("(bang ") + a->key + ")";
    else o.key = std::string("(") + kind_word(k) + " " + a->key + " " + b->key + ")";
    return intern(std::move(o));
}

const std::string& obj_str(Obj o) { return o->key; }

}  // namespace llk
