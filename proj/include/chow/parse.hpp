#pragma once
#include <cctype>
#include <sstream>
#include <string>

#include "chow/poly.hpp"

namespace chow {

// Grammar (whitespace allowed between tokens):
//   poly   := term (('+'|'-') term)*
//   term   := [sign] coeff ('*' factor)* | [sign] factor ('*' factor)*
//   coeff  := integer | integer '/' integer
//   factor := varname ['^' positive-integer]
inline Poly parse_poly(const std::string& text, const SpecPtr& spec) {
    size_t pos = 0;
    auto skip = [&] { while (pos < text.size() && std::isspace((unsigned char)text[pos])) pos++; };
    auto fail = [&](const std::string& why) -> void {
        throw parse_error("parse error at offset " + std::to_string(pos) + ": " + why);
    };
    auto read_uint = [&]() -> Int {
        skip();
        size_t start = pos;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) pos++;
        if (pos == start) fail("expected integer");
        return Int(text.substr(start, pos - start));
    };
    auto read_name = [&]() -> std::string {
        skip();
        size_t start = pos;
        if (pos >= text.size() || !(std::isalpha((unsigned char)text[pos]) || text[pos] == '_'))
            fail("expected variable name");
        pos++;
        while (pos < text.size() &&
               (std::isalnum((unsigned char)text[pos]) || text[pos] == '_'))
            pos++;
        return text.substr(start, pos - start);
    };

    skip();
    if (pos >= text.size()) throw parse_error("empty polynomial text");

    Poly result = Poly::zero(spec);
    bool first = true;
    while (true) {
        skip();
        if (pos >= text.size()) {
            if (first) fail("expected term");
            break;
        }
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            pos++;
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        skip();
        Rat coeff = sign;
        bool saw_coeff = false;
        if (pos < text.size() && std::isdigit((unsigned char)text[pos])) {
            Int num = read_uint();
            Int den = 1;
            skip();
            if (pos < text.size() && text[pos] == '/') {
                pos++;
                den = read_uint();
                if (den == 0) fail("zero denominator");
            }
            coeff *= Rat(num, den);
            saw_coeff = true;
        }
        std::vector<int> exps(spec->nvars(), 0);
        bool saw_factor = false;
        while (true) {
            skip();
            if (saw_coeff || saw_factor) {
                if (pos < text.size() && text[pos] == '*') {
                    pos++;
                } else {
                    break;
                }
            } else if (pos >= text.size() ||
                       !(std::isalpha((unsigned char)text[pos]) || text[pos] == '_')) {
                break;
            }
            std::string name = read_name();
            int vi = spec->index_of(name);
            if (vi < 0) throw parse_error("unknown variable: " + name);
            int e = 1;
            skip();
            if (pos < text.size() && text[pos] == '^') {
                pos++;
                Int ei = read_uint();
                if (ei < 1 || ei >= kMaxExponent) fail("exponent out of range");
                e = (int)ei;
            }
            exps[vi] += e;
            saw_factor = true;
        }
        if (!saw_coeff && !saw_factor) fail("expected coefficient or variable");
        result += Poly::monomial(spec, spec->monomial(exps), coeff);
        first = false;
    }
    return result;
}

// Canonical text: terms in descending monomial order, factors in variable-list
// order, unit coefficients and unit exponents omitted, no whitespace.
inline std::string render_monomial(const Monomial& m, const RingSpec& spec) {
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < spec.nvars(); i++) {
        if (!m.e[i]) continue;
        if (any) os << '*';
        os << spec.name(i);
        if (m.e[i] > 1) os << '^' << (int)m.e[i];
        any = true;
    }
    return any ? os.str() : std::string();
}

inline std::string render_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    const auto& spec = *p.spec();
    bool first = true;
    for (const auto& t : p.terms()) {
        Rat c = t.c;
        if (first) {
            if (c < 0) {
                os << '-';
                c = -c;
            }
        } else {
            os << (c < 0 ? '-' : '+');
            if (c < 0) c = -c;
        }
        std::string mono = render_monomial(t.m, spec);
        if (mono.empty()) {
            os << to_string(c);
        } else {
            if (c != 1) os << to_string(c) << '*';
            os << mono;
        }
        first = false;
    }
    return os.str();
}

}  // namespace chow
