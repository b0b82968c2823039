#pragma once
#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "chow/rational.hpp"
#include "chow/ringspec.hpp"

namespace chow {

// Sparse multivariate polynomial over Q.  Terms are kept in strictly
// descending monomial order; no zero coefficients, no duplicate monomials.
class Poly {
public:
    struct Term {
        Monomial m;
        Rat c;
    };

    Poly() = default;
    explicit Poly(SpecPtr spec) : spec_(std::move(spec)) {}

    static Poly zero(SpecPtr spec) { return Poly(std::move(spec)); }

    static Poly constant(SpecPtr spec, Rat c) {
        Poly p(std::move(spec));
        if (c != 0) p.terms_.push_back({p.spec_->one(), std::move(c)});
        return p;
    }

    static Poly monomial(SpecPtr spec, Monomial m, Rat c = 1) {
        Poly p(std::move(spec));
        if (c != 0) p.terms_.push_back({m, std::move(c)});
        return p;
    }

    static Poly variable(SpecPtr spec, int i, int exp = 1) {
        auto m = spec->var_monomial(i, exp);
        return monomial(std::move(spec), m);
    }

    static Poly variable(SpecPtr spec, const std::string& name, int exp = 1) {
        int i = spec->index_of(name);
        if (i < 0) throw spec_error("unknown variable: " + name);
        return variable(std::move(spec), i, exp);
    }

    static Poly from_terms(SpecPtr spec, std::vector<Term> raw) {
        Poly p(std::move(spec));
        std::sort(raw.begin(), raw.end(),
                  [&](const Term& a, const Term& b) { return p.spec_->greater(a.m, b.m); });
        for (auto& t : raw) {
            if (t.c == 0) continue;
            if (!p.terms_.empty() && p.terms_.back().m == t.m)
                p.terms_.back().c += t.c;
            else
                p.terms_.push_back(std::move(t));
            if (p.terms_.back().c == 0) p.terms_.pop_back();
        }
        return p;
    }

    const SpecPtr& spec() const { return spec_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    const Term& leading() const {
        if (is_zero()) throw algebra_error("leading term of zero polynomial");
        return terms_.front();
    }

    bool operator==(const Poly& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (size_t i = 0; i < terms_.size(); i++)
            if (!(terms_[i].m == o.terms_[i].m) || terms_[i].c != o.terms_[i].c) return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // ---- arithmetic ----

    Poly operator-() const {
        Poly r = *this;
        for (auto& t : r.terms_) t.c = -t.c;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) { return merged(a, b, 1); }
    friend Poly operator-(const Poly& a, const Poly& b) { return merged(a, b, -1); }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        check_same(a, b);
        if (a.is_zero() || b.is_zero()) return zero(a.spec_);
        const Poly& s = a.size() <= b.size() ? a : b;
        const Poly& l = a.size() <= b.size() ? b : a;
        Poly acc = zero(a.spec_);
        for (const auto& t : s.terms_) acc = merged_scaled(acc, l, t.c, t.m);
        return acc;
    }

    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const Rat& c) const {
        if (c == 0) return zero(spec_);
        Poly r = *this;
        for (auto& t : r.terms_) t.c *= c;
        return r;
    }

    friend Poly operator*(const Rat& c, const Poly& p) { return p.scaled(c); }
    friend Poly operator*(const Poly& p, const Rat& c) { return p.scaled(c); }

    Poly pow(int n) const {
        if (n < 0) throw algebra_error("negative power of a polynomial");
        Poly r = constant(spec_, 1);
        Poly base = *this;
        while (n) {
            if (n & 1) r = r * base;
            n >>= 1;
            if (n) base = base * base;
        }
        return r;
    }

    // this + c * m * g, the reduction workhorse
    Poly add_scaled(const Poly& g, const Rat& c, const Monomial& m) const {
        check_same(*this, g);
        return merged_scaled(*this, g, c, m);
    }

    // ---- grading ----

    int weighted_degree() const {  // max over terms; -1 for zero
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, (int)t.m.wdeg);
        return d;
    }

    std::optional<int> homogeneous_degree() const {
        if (is_zero()) return std::nullopt;
        int d = terms_.front().m.wdeg;
        for (const auto& t : terms_)
            if (t.m.wdeg != d) return std::nullopt;
        return d;
    }

    std::map<int, Poly> graded_components() const {
        std::map<int, Poly> out;
        for (const auto& t : terms_) {
            auto it = out.find(t.m.wdeg);
            if (it == out.end()) it = out.emplace(t.m.wdeg, zero(spec_)).first;
            it->second.terms_.push_back(t);  // preserves descending order within a degree
        }
        return out;
    }

    Poly graded_part(int d) const {
        Poly r = zero(spec_);
        for (const auto& t : terms_)
            if (t.m.wdeg == d) r.terms_.push_back(t);
        return r;
    }

    Poly truncated(int maxdeg) const {
        Poly r = zero(spec_);
        for (const auto& t : terms_)
            if (t.m.wdeg <= maxdeg) r.terms_.push_back(t);
        return r;
    }

    bool uses_var(int i) const {
        for (const auto& t : terms_)
            if (t.m.e[i]) return true;
        return false;
    }

    // ---- substitution (realizes ring morphisms) ----

    // images[i] is the image of variable i; all images share one target spec.
    Poly substitute(const std::vector<Poly>& images, const SpecPtr& target) const {
        if ((int)images.size() != spec_->nvars()) throw spec_error("substitute: one image per variable required");
        for (const auto& im : images)
            if (!im.spec()->same_as(*target)) throw spec_error("substitute: images in mixed specs");
        // cache powers per variable up to the max exponent used
        std::vector<std::vector<Poly>> pows(spec_->nvars());
        for (int i = 0; i < spec_->nvars(); i++) {
            int maxe = 0;
            for (const auto& t : terms_) maxe = std::max(maxe, (int)t.m.e[i]);
            pows[i].push_back(constant(target, 1));
            for (int e = 1; e <= maxe; e++) pows[i].push_back(pows[i].back() * images[i]);
        }
        Poly acc = zero(target);
        for (const auto& t : terms_) {
            Poly prod = constant(target, t.c);
            for (int i = 0; i < spec_->nvars(); i++)
                if (t.m.e[i]) prod = prod * pows[i][t.m.e[i]];
            acc = acc + prod;
        }
        return acc;
    }

    // exact division; returns nullopt if the remainder is nonzero
    static std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
        check_same(a, b);
        if (b.is_zero()) throw algebra_error("division by zero polynomial");
        Poly rem = a, quot = zero(a.spec_);
        const auto& lb = b.leading();
        while (!rem.is_zero()) {
            const auto& lr = rem.leading();
            if (!a.spec_->divides(lb.m, lr.m)) return std::nullopt;
            Monomial q = a.spec_->div(lr.m, lb.m);
            Rat c = lr.c / lb.c;
            quot = quot.add_scaled(constant(a.spec_, 1), c, q);
            rem = rem.add_scaled(b, -c, q);
        }
        return quot;
    }

    // map through a variable permutation / embedding into another spec;
    // to_index[i] is the position of our variable i in the target spec
    Poly reindexed(const SpecPtr& target, const std::vector<int>& to_index) const {
        Poly r = zero(target);
        std::vector<Term> raw;
        raw.reserve(terms_.size());
        for (const auto& t : terms_) {
            std::vector<int> exps(target->nvars(), 0);
            for (int i = 0; i < spec_->nvars(); i++) {
                if (!t.m.e[i]) continue;
                if (to_index[i] < 0) throw spec_error("reindexed: variable has no target slot");
                exps[to_index[i]] = t.m.e[i];
            }
            raw.push_back({target->monomial(exps), t.c});
        }
        return from_terms(target, std::move(raw));
    }

    static void check_same(const Poly& a, const Poly& b) {
        if (!a.spec_ || !b.spec_ || !a.spec_->same_as(*b.spec_))
            throw spec_error("operands from different ring specs");
    }

private:
    // a + c * m * g with both inputs sorted
    static Poly merged_scaled(const Poly& a, const Poly& g, const Rat& c, const Monomial& m) {
        Poly r = zero(a.spec_);
        r.terms_.reserve(a.size() + g.size());
        size_t i = 0, j = 0;
        const auto& sp = *a.spec_;
        while (i < a.terms_.size() || j < g.terms_.size()) {
            if (j == g.terms_.size()) {
                r.terms_.push_back(a.terms_[i++]);
                continue;
            }
            Monomial gm = sp.mul(g.terms_[j].m, m);
            if (i == a.terms_.size()) {
                Rat v = c * g.terms_[j].c;
                if (v != 0) r.terms_.push_back({gm, std::move(v)});
                j++;
                continue;
            }
            int cmpv = sp.compare(a.terms_[i].m, gm);
            if (cmpv > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (cmpv < 0) {
                Rat v = c * g.terms_[j].c;
                if (v != 0) r.terms_.push_back({gm, std::move(v)});
                j++;
            } else {
                Rat v = a.terms_[i].c + c * g.terms_[j].c;
                if (v != 0) r.terms_.push_back({gm, std::move(v)});
                i++;
                j++;
            }
        }
        return r;
    }

    static Poly merged(const Poly& a, const Poly& b, int sign) {
        check_same(a, b);
        return merged_scaled(a, b, Rat(sign), a.spec_ ? a.spec_->one() : Monomial{});
    }

    SpecPtr spec_;
    std::vector<Term> terms_;
};

}  // namespace chow
