#include "alternator/instance.hpp"

#include <algorithm>
#include <cctype>

namespace alternator {

namespace {

using nlohmann::json;

// structural problems have no useful byte position; 0,0 marks "whole document"
[[noreturn]] void bad(const std::string& msg) { throw ParseError(msg, 0, 0); }

const json& need(const json& doc, const char* key, const char* where) {
    if (!doc.is_object() || !doc.contains(key))
        bad(std::string(where) + ": missing key \"" + key + "\"");
    return doc.at(key);
}

std::string need_string(const json& doc, const char* key, const char* where) {
    const json& v = need(doc, key, where);
    if (!v.is_string()) bad(std::string(where) + ": \"" + key + "\" must be a string");
    return v.get<std::string>();
}

FieldElement parse_elem(const FieldPtr& F, const json& v, const char* where) {
    if (!v.is_string()) bad(std::string(where) + ": element must be a string");
    return F->parse(v.get<std::string>());
}

}  // namespace

FieldPtr build_field(const json& doc) {
    const std::string kind = need_string(doc, "kind", "field");
    if (kind == "ratfunc") {
        const json& vs = need(doc, "vars", "field");
        if (!vs.is_array() || vs.empty()) bad("field: \"vars\" must be a non-empty array");
        std::vector<std::string> vars;
        for (const auto& v : vs) {
            if (!v.is_string()) bad("field: variable names must be strings");
            vars.push_back(v.get<std::string>());
        }
        return Field::rationals(std::move(vars));
    }
    if (kind == "gf2k") {
        const json& kj = need(doc, "k", "field");
        if (!kj.is_number_integer()) bad("field: \"k\" must be an integer");
        const int k = kj.get<int>();
        if (!doc.contains("modulus")) return Field::gf2k(k);
        const json& mj = doc.at("modulus");
        if (!mj.is_array()) bad("field: \"modulus\" must be an array of bits");
        std::vector<int> bits;
        for (const auto& b : mj) {
            if (!b.is_number_integer()) bad("field: modulus bits must be integers");
            bits.push_back(b.get<int>());
        }
        return Field::gf2k(k, bits);
    }
    bad("field: unknown kind \"" + kind + "\"");
}

Vec parse_quaternion_element(const FieldPtr& F, std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty quaternion element", 1, 1);

    Vec v(4, F->zero());
    auto basis_index = [](std::string_view t) -> int {
        if (t == "1") return 0;
        if (t == "i") return 1;
        if (t == "j") return 2;
        if (t == "ij") return 3;
        return -1;
    };

    std::size_t start = 0;
    int depth = 0;
    for (std::size_t pos = 0; pos <= s.size(); ++pos) {
        if (pos < s.size()) {
            if (s[pos] == '(') ++depth;
            if (s[pos] == ')') --depth;
            if (s[pos] != '+' || depth != 0) continue;
        }
        const std::string_view term = std::string_view(s).substr(start, pos - start);
        start = pos + 1;
        if (term.empty()) throw ParseError("empty term in quaternion element", 1, 1);

        int idx = basis_index(term);
        if (idx >= 0) {
            v[idx] += F->one();
            continue;
        }
        // last top-level '*' may split off a basis token
        std::size_t split = std::string_view::npos;
        int d2 = 0;
        for (std::size_t i = 0; i < term.size(); ++i) {
            if (term[i] == '(') ++d2;
            if (term[i] == ')') --d2;
            if (term[i] == '*' && d2 == 0) split = i;
        }
        if (split != std::string_view::npos &&
            (idx = basis_index(term.substr(split + 1))) >= 0) {
            v[idx] += F->parse(term.substr(0, split));
        } else {
            v[0] += F->parse(term);
        }
    }
    return v;
}

namespace {

AlgebraPtr build_algebra(const FieldPtr& F, const json& doc) {
    const std::string kind = need_string(doc, "kind", "algebra");
    if (kind == "matrix") {
        const json& nj = need(doc, "n", "matrix algebra");
        if (!nj.is_number_integer()) bad("matrix algebra: \"n\" must be an integer");
        const int n = nj.get<int>();
        const json& uj = need(doc, "u_diag", "matrix algebra");
        if (!uj.is_array()) bad("matrix algebra: \"u_diag\" must be an array");
        std::vector<FieldElement> u;
        for (const auto& e : uj) u.push_back(parse_elem(F, e, "u_diag"));
        return InvolutionAlgebra::matrix_algebra(F, n, u);
    }
    if (kind == "quaternion") {
        const FieldElement a = F->parse(need_string(doc, "a", "quaternion algebra"));
        const FieldElement b = F->parse(need_string(doc, "b", "quaternion algebra"));
        const Vec u = parse_quaternion_element(F, need_string(doc, "u", "quaternion algebra"));
        return InvolutionAlgebra::quaternion_algebra(a, b, u);
    }
    if (kind == "tensor") {
        const json& fj = need(doc, "factors", "tensor algebra");
        if (!fj.is_array() || fj.size() < 2)
            bad("tensor algebra: \"factors\" must list at least two algebras");
        AlgebraPtr acc = build_algebra(F, fj.at(0));
        for (std::size_t i = 1; i < fj.size(); ++i)
            acc = InvolutionAlgebra::tensor(acc, build_algebra(F, fj.at(i)));
        return acc;
    }
    bad("algebra: unknown kind \"" + kind + "\"");
}

}  // namespace

AlgebraPtr build_instance(const json& doc) {
    const FieldPtr F = build_field(need(doc, "field", "instance"));
    return build_algebra(F, need(doc, "algebra", "instance"));
}

AlgebraPtr parse_instance_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        int line = 1, col = 1;
        // e.byte is one past the offending character
        const std::size_t stop = std::min(e.byte > 0 ? e.byte - 1 : 0, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string msg = e.what();
        if (const std::size_t cut = msg.find("] "); cut != std::string::npos)
            msg = msg.substr(cut + 2);
        throw ParseError("invalid JSON: " + msg, line, col);
    }
    return build_instance(doc);
}

}  // namespace alternator
