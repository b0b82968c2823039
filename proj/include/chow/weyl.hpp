#pragma once
#include <vector>

#include "chow/groebner.hpp"
#include "chow/linalg.hpp"

namespace chow {

// Signed permutation action of S3 x S2 on the five weight-1 variables
// (three of the first kind, two of the second), with the antisymmetrizing
// Vandermonde-type product and the rewrite into elementary symmetric
// polynomials.
class WeylData {
public:
    WeylData()
        : roots_(make_ring_spec({{"B1", 1}, {"B2", 1}, {"B3", 1}, {"D1", 1}, {"D2", 1}})),
          target_(make_ring_spec({{"b1", 1}, {"b2", 2}, {"b3", 3}, {"d1", 1}, {"d2", 2}})) {
        build_group();
        Poly b1 = v(0), b2 = v(1), b3 = v(2), d1 = v(3), d2 = v(4);
        delta_ = (b1 - b2) * (b1 - b3) * (b2 - b3) * (d1 - d2);
        elementary_ = {b1 + b2 + b3, b1 * b2 + b1 * b3 + b2 * b3, b1 * b2 * b3, d1 + d2, d1 * d2};
    }

    const SpecPtr& root_spec() const { return roots_; }
    const SpecPtr& symmetric_spec() const { return target_; }
    const Poly& delta() const { return delta_; }
    Poly root_var(int i) const { return v(i); }

    // Δ is anti-invariant of sign 1: w(Δ) = sign(w)·Δ
    bool delta_is_antiinvariant() const {
        for (size_t w = 0; w < perms_.size(); w++)
            if (act(delta_, (int)w) != delta_.scaled(Rat(signs_[w]))) return false;
        return true;
    }

    // φ(r) = (Δ^{-1} Σ_w sign(w)·w(r)) / |W|, rewritten in the elementary
    // symmetric polynomials of the two variable groups.  Normalized so that
    // φ(Δ·s) = s for symmetric s.
    Poly antisymmetrize(const Poly& r) const {
        if (!r.spec()->same_as(*roots_)) throw spec_error("antisymmetrize: wrong spec");
        Poly sum = Poly::zero(roots_);
        for (size_t w = 0; w < perms_.size(); w++)
            sum += act(r, (int)w).scaled(Rat(signs_[w]));
        if (sum.is_zero()) return Poly::zero(target_);
        auto q = Poly::divide_exact(sum, delta_);
        if (!q) throw algebra_error("antisymmetrize: signed sum not divisible by the product");
        return rewrite_symmetric(q->scaled(Rat(1, 12)));
    }

    // express a W-invariant polynomial in b1,b2,b3,d1,d2; errors if the
    // degreewise linear systems are inconsistent (input not bi-symmetric)
    Poly rewrite_symmetric(const Poly& p) const {
        Poly out = Poly::zero(target_);
        for (auto& [d, comp] : p.graded_components()) {
            auto monos = monomials_of_degree(*target_, d);
            // column j: expansion of the j-th elementary-symmetric monomial
            auto root_monos = monomials_of_degree(*roots_, d);
            RatMat a(root_monos.size(), RatVec(monos.size(), Rat(0)));
            for (size_t j = 0; j < monos.size(); j++) {
                Poly val = Poly::constant(roots_, 1);
                for (int i = 0; i < target_->nvars(); i++)
                    if (monos[j].e[i]) val = val * elementary_[i].pow(monos[j].e[i]);
                for (const auto& t : val.terms())
                    a[find_index(root_monos, t.m)][j] = t.c;
            }
            RatVec rhs(root_monos.size(), Rat(0));
            for (const auto& t : comp.terms()) rhs[find_index(root_monos, t.m)] = t.c;
            auto x = solve(a, rhs);
            if (!x) throw algebra_error("rewrite_symmetric: nonzero residual, input not symmetric");
            for (size_t j = 0; j < monos.size(); j++)
                out += Poly::monomial(target_, monos[j], (*x)[j]);
        }
        return out;
    }

private:
    Poly v(int i) const { return Poly::variable(roots_, i); }

    static size_t find_index(const std::vector<Monomial>& monos, const Monomial& m) {
        for (size_t i = 0; i < monos.size(); i++)
            if (monos[i] == m) return i;
        throw algebra_error("internal: monomial not enumerated");
    }

    Poly act(const Poly& p, int w) const {
        std::vector<Poly::Term> raw;
        for (const auto& t : p.terms()) {
            std::vector<int> e(5, 0);
            for (int i = 0; i < 5; i++) e[perms_[w][i]] = t.m.e[i];
            raw.push_back({roots_->monomial(e), t.c});
        }
        return Poly::from_terms(roots_, std::move(raw));
    }

    void build_group() {
        const int p3[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        const int s3[6] = {1, -1, -1, 1, 1, -1};
        for (int a = 0; a < 6; a++)
            for (int b = 0; b < 2; b++) {
                std::array<int, 5> perm{};
                for (int i = 0; i < 3; i++) perm[i] = p3[a][i];
                perm[3] = b ? 4 : 3;
                perm[4] = b ? 3 : 4;
                perms_.push_back(perm);
                signs_.push_back(s3[a] * (b ? -1 : 1));
            }
    }

    SpecPtr roots_;
    SpecPtr target_;
    Poly delta_;
    std::vector<Poly> elementary_;  // b1,b2,b3,d1,d2 expanded in the roots
    std::vector<std::array<int, 5>> perms_;
    std::vector<int> signs_;
};

}  // namespace chow
