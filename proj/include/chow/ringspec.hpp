#pragma once
#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "chow/errors.hpp"

namespace chow {

constexpr int kMaxVars = 12;
constexpr int kMaxExponent = 1 << 14;

// Exponent vector with cached weighted degree. The active length and the
// weights live in the owning RingSpec.
struct Monomial {
    std::array<uint16_t, kMaxVars> e{};
    int32_t wdeg = 0;

    bool operator==(const Monomial& o) const { return wdeg == o.wdeg && e == o.e; }
    bool is_one() const {
        for (auto x : e)
            if (x) return false;
        return true;
    }
};

// Variable set with weights and a monomial order. The order is weighted-degree
// reverse-lexicographic; with elim_block = k > 0 the first k variables form the
// leading block of an elimination order (block-wise wdegrevlex).
class RingSpec {
public:
    struct Var {
        std::string name;
        int weight;
    };

    RingSpec(std::vector<Var> vars, int elim_block = 0)
        : vars_(std::move(vars)), elim_block_(elim_block) {
        if (vars_.empty() || vars_.size() > kMaxVars)
            throw spec_error("ring spec needs 1.." + std::to_string(kMaxVars) + " variables");
        if (elim_block_ < 0 || elim_block_ > (int)vars_.size())
            throw spec_error("bad elimination block size");
        for (size_t i = 0; i < vars_.size(); i++) {
            if (vars_[i].weight < 1) throw spec_error("variable weight must be >= 1: " + vars_[i].name);
            for (size_t j = i + 1; j < vars_.size(); j++)
                if (vars_[i].name == vars_[j].name)
                    throw spec_error("duplicate variable name: " + vars_[i].name);
        }
    }

    int nvars() const { return (int)vars_.size(); }
    int elim_block() const { return elim_block_; }
    const std::vector<Var>& vars() const { return vars_; }
    const std::string& name(int i) const { return vars_[i].name; }
    int weight(int i) const { return vars_[i].weight; }

    int index_of(const std::string& n) const {
        for (size_t i = 0; i < vars_.size(); i++)
            if (vars_[i].name == n) return (int)i;
        return -1;
    }

    bool same_as(const RingSpec& o) const {
        if (this == &o) return true;
        if (elim_block_ != o.elim_block_ || vars_.size() != o.vars_.size()) return false;
        for (size_t i = 0; i < vars_.size(); i++)
            if (vars_[i].name != o.vars_[i].name || vars_[i].weight != o.vars_[i].weight) return false;
        return true;
    }

    Monomial one() const { return Monomial{}; }

    Monomial monomial(const std::vector<int>& exps) const {
        if ((int)exps.size() != nvars()) throw spec_error("exponent vector length mismatch");
        Monomial m;
        for (int i = 0; i < nvars(); i++) {
            if (exps[i] < 0 || exps[i] >= kMaxExponent) throw spec_error("exponent out of range");
            m.e[i] = (uint16_t)exps[i];
            m.wdeg += exps[i] * weight(i);
        }
        return m;
    }

    Monomial var_monomial(int i, int exp = 1) const {
        Monomial m;
        if (exp < 0 || exp >= kMaxExponent) throw spec_error("exponent out of range");
        m.e[i] = (uint16_t)exp;
        m.wdeg = exp * weight(i);
        return m;
    }

    Monomial mul(const Monomial& a, const Monomial& b) const {
        Monomial m;
        for (int i = 0; i < nvars(); i++) {
            int s = a.e[i] + b.e[i];
            if (s >= kMaxExponent) throw spec_error("exponent cap exceeded");
            m.e[i] = (uint16_t)s;
        }
        m.wdeg = a.wdeg + b.wdeg;
        return m;
    }

    bool divides(const Monomial& a, const Monomial& b) const {  // a | b
        for (int i = 0; i < nvars(); i++)
            if (a.e[i] > b.e[i]) return false;
        return true;
    }

    Monomial div(const Monomial& a, const Monomial& b) const {  // a / b, caller ensures b | a
        Monomial m;
        for (int i = 0; i < nvars(); i++) m.e[i] = (uint16_t)(a.e[i] - b.e[i]);
        m.wdeg = a.wdeg - b.wdeg;
        return m;
    }

    Monomial lcm(const Monomial& a, const Monomial& b) const {
        Monomial m;
        for (int i = 0; i < nvars(); i++) {
            m.e[i] = std::max(a.e[i], b.e[i]);
            m.wdeg += m.e[i] * weight(i);
        }
        return m;
    }

    bool coprime(const Monomial& a, const Monomial& b) const {
        for (int i = 0; i < nvars(); i++)
            if (a.e[i] && b.e[i]) return false;
        return true;
    }

    // strict order comparison: a > b
    bool greater(const Monomial& a, const Monomial& b) const {
        if (elim_block_ == 0) return cmp_block(a, b, 0, nvars()) > 0;
        int c = cmp_block(a, b, 0, elim_block_);
        if (c) return c > 0;
        return cmp_block(a, b, elim_block_, nvars()) > 0;
    }

    int compare(const Monomial& a, const Monomial& b) const {
        if (greater(a, b)) return 1;
        if (greater(b, a)) return -1;
        return 0;
    }

private:
    // wdegrevlex restricted to variable positions [lo, hi)
    int cmp_block(const Monomial& a, const Monomial& b, int lo, int hi) const {
        long da = 0, db = 0;
        for (int i = lo; i < hi; i++) {
            da += (long)a.e[i] * weight(i);
            db += (long)b.e[i] * weight(i);
        }
        if (da != db) return da < db ? -1 : 1;
        for (int i = hi - 1; i >= lo; i--) {
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;  // revlex
        }
        return 0;
    }

    std::vector<Var> vars_;
    int elim_block_;
};

using SpecPtr = std::shared_ptr<const RingSpec>;

inline SpecPtr make_ring_spec(std::vector<RingSpec::Var> vars, int elim_block = 0) {
    return std::make_shared<const RingSpec>(std::move(vars), elim_block);
}

}  // namespace chow
