#include "llk/sexpr.hpp"

#include <cctype>

namespace llk {

namespace {

class Reader {
public:
    explicit Reader(const std::string& t) : text_(t) {}

    std::vector<Sexpr> all() {
        std::vector<Sexpr> out;
        skip();
        while (i_ < text_.size()) {
            out.push_back(form());
            skip();
        }
        return out;
    }

private:
    const std::string& text_;
    size_t i_ = 0;
    SrcPos pos_;

    void advance() {
        if (text_[i_] == '\n') {
            ++pos_.line;
            pos_.col = 1;
        } else {
            ++pos_.col;
        }
        ++i_;
    }

    void skip() {
        while (i_ < text_.size()) {
            char c = text_[i_];
            if (c == ';') {
                while (i_ < text_.size() && text_[i_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    Sexpr form() {
        Sexpr s;
        s.pos = pos_;
        char c = text_[i_];
        if (c == ')') throw ParseError("unexpected ')'", pos_);
        if (c == '(') {
            s.kind = Sexpr::Kind::List;
            advance();
            skip();
            while (true) {
                if (i_ >= text_.size()) throw ParseError("unterminated list", s.pos);
                if (text_[i_] == ')') {
                    advance();
                    break;
                }
                s.items.push_back(form());
                skip();
            }
            return s;
        }
        s.kind = Sexpr::Kind::Atom;
        while (i_ < text_.size()) {
            char d = text_[i_];
            if (d == '(' || d == ')' || d == ';' || std::isspace(static_cast<unsigned char>(d))) break;
            s.atom.push_back(d);
            advance();
        }
        return s;
    }
};

}  // namespace

const std::string& Sexpr::head() const {
    static const std::string empty;
    if (!is_list() || items.empty() || !items[0].is_atom()) return empty;
    return items[0].atom;
}

std::string Sexpr::str() const {
    if (is_atom()) return atom;
    std::string out = "(";
    for (size_t k = 0; k < items.size(); ++k) {
        if (k) out += ' ';
        out += items[k].str();
    }
    out += ')';
    return out;
}

std::vector<Sexpr> parse_sexprs(const std::string& text) { return Reader(text).all(); }

Sexpr parse_sexpr(const std::string& text) {
    auto forms = parse_sexprs(text);
    if (forms.empty()) throw ParseError("empty input", SrcPos{});
    if (forms.size() > 1) throw ParseError("trailing input after first form", forms[1].pos);
    return forms[0];
}

std::string normalize_whitespace(const std::string& text) {
    std::string out;
    for (const auto& f : parse_sexprs(text)) {
        if (!out.empty()) out += ' ';
        out += f.str();
    }
    return out;
}

}  // namespace llk
