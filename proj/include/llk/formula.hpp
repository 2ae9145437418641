#pragma once

#include <memory>
#include <string>
#include <vector>

#include "llk/sexpr.hpp"

namespace llk {

enum class Conn { Var, Top, One, And, With, Tensor, Impl, Lolli, Bang };

struct Formula;
using F = std::shared_ptr<const Formula>;

struct Formula {
    Conn conn;
    std::string name;  // Var only
    F l, r;            // r unused for Bang

    static F var(std::string n);
    static F top();
    static F one();
    static F bin(Conn c, F a, F b);
    static F bang(F a);

    bool is_bang() const { return conn == Conn::Bang; }
    std::string str() const;     // s-expression form
    std::string pretty() const;  // infix, for messages
};

bool operator==(const Formula& a, const Formula& b);
bool feq(const F& a, const F& b);
int fsize(const F& f);
void collect_vars(const F& f, std::vector<std::string>& out);

const char* conn_name(Conn c);

struct Sequent {
    std::vector<F> ctx;
    F concl;

    std::string str() const;
    std::string pretty() const;
};

bool seq_eq(const Sequent& a, const Sequent& b);

F formula_from_sexpr(const Sexpr& s);
Sequent sequent_from_sexpr(const Sexpr& s);
F parse_formula(const std::string& text);

}  // namespace llk
