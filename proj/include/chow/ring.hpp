#pragma once
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "chow/groebner.hpp"
#include "chow/linalg.hpp"
#include "chow/parse.hpp"

namespace chow {

class ChowRing;
using RingPtr = std::shared_ptr<const ChowRing>;

// Graded quotient ring modelling the Chow ring of a smooth projective variety:
// relations with a cached reduced basis, the dimension as top degree, graded
// bases of standard monomials, and an optional point class normalizing the
// degree map.
class ChowRing {
public:
    ChowRing(std::string name, SpecPtr spec, Ideal relations, int top_degree,
             std::optional<Poly> point, std::vector<std::vector<Monomial>> graded)
        : name_(std::move(name)),
          spec_(std::move(spec)),
          relations_(std::move(relations)),
          top_degree_(top_degree),
          point_(std::move(point)),
          graded_(std::move(graded)) {}

    const std::string& name() const { return name_; }
    const SpecPtr& spec() const { return spec_; }
    const Ideal& relations() const { return relations_; }
    int top_degree() const { return top_degree_; }
    const std::optional<Poly>& point_class_poly() const { return point_; }

    Poly nf(const Poly& p) const { return normal_form(p, relations_); }

    const std::vector<Monomial>& basis(int d) const {
        if (d < 0 || d > top_degree_)
            throw algebra_error("graded basis: degree out of range");
        return graded_[d];
    }
    long dim(int d) const { return (long)basis(d).size(); }

    SeriesVector series() const {
        SeriesVector s;
        for (int d = 0; d <= top_degree_; d++) s.push_back(dim(d));
        return s;
    }

    // coordinates of the degree-d part of a normal form over basis(d)
    RatVec coords(const Poly& normal, int d) const {
        const auto& b = basis(d);
        RatVec v(b.size(), Rat(0));
        std::map<int, int> index;  // not needed; linear scan is fine at these sizes
        for (const auto& t : normal.terms()) {
            if (t.m.wdeg != d) continue;
            bool found = false;
            for (size_t i = 0; i < b.size(); i++)
                if (b[i] == t.m) {
                    v[i] = t.c;
                    found = true;
                    break;
                }
            if (!found) throw algebra_error("internal: normal form term outside standard basis");
        }
        return v;
    }

private:
    std::string name_;
    SpecPtr spec_;
    Ideal relations_;
    int top_degree_;
    std::optional<Poly> point_;
    std::vector<std::vector<Monomial>> graded_;
};

// Element of a ChowRing, always held in normal form.
class ChowClass {
public:
    ChowClass() = default;
    ChowClass(RingPtr ring, const Poly& value) : ring_(std::move(ring)), v_(ring_->nf(value)) {}

    static ChowClass raw_normal(RingPtr ring, Poly normal) {
        ChowClass c;
        c.ring_ = std::move(ring);
        c.v_ = std::move(normal);
        return c;
    }

    const RingPtr& ring() const { return ring_; }
    const Poly& value() const { return v_; }
    bool is_zero() const { return v_.is_zero(); }

    bool operator==(const ChowClass& o) const {
        check_ring(o);
        return v_ == o.v_;
    }
    bool operator!=(const ChowClass& o) const { return !(*this == o); }

    ChowClass operator+(const ChowClass& o) const {
        check_ring(o);
        return raw_normal(ring_, v_ + o.v_);
    }
    ChowClass operator-(const ChowClass& o) const {
        check_ring(o);
        return raw_normal(ring_, v_ - o.v_);
    }
    ChowClass operator-() const { return raw_normal(ring_, -v_); }
    ChowClass operator*(const ChowClass& o) const {
        check_ring(o);
        return ChowClass(ring_, (v_ * o.v_).truncated(ring_->top_degree()));
    }
    ChowClass scaled(const Rat& c) const { return raw_normal(ring_, v_.scaled(c)); }
    friend ChowClass operator*(const Rat& c, const ChowClass& x) { return x.scaled(c); }

    ChowClass pow(int n) const {
        ChowClass r = constant(ring_, 1);
        ChowClass b = *this;
        while (n) {
            if (n & 1) r = r * b;
            n >>= 1;
            if (n) b = b * b;
        }
        return r;
    }

    ChowClass graded_part(int d) const { return raw_normal(ring_, v_.graded_part(d)); }

    static ChowClass constant(const RingPtr& ring, Rat c) {
        return raw_normal(ring, Poly::constant(ring->spec(), std::move(c)));
    }
    static ChowClass variable(const RingPtr& ring, const std::string& name) {
        return ChowClass(ring, Poly::variable(ring->spec(), name));
    }

    void check_ring(const ChowClass& o) const {
        if (ring_.get() != o.ring_.get() && !(ring_ && o.ring_ && ring_->spec()->same_as(*o.ring_->spec()) &&
                                              ring_->name() == o.ring_->name()))
            throw spec_error("classes from different Chow rings");
    }

private:
    RingPtr ring_;
    Poly v_;
};

inline ChowClass parse_class(const RingPtr& ring, const std::string& text) {
    return ChowClass(ring, parse_poly(text, ring->spec()));
}

inline RingPtr build_quotient(const std::string& name, const SpecPtr& spec,
                              std::vector<Poly> relations, int top_degree,
                              std::optional<Poly> point_class = std::nullopt,
                              const GroebnerOptions& opt = {}) {
    for (const auto& r : relations)
        if (!r.is_zero() && !r.homogeneous_degree())
            throw algebra_error("build_quotient: non-homogeneous relation " + render_poly(r));
    Ideal rel = groebner_basis(make_ideal(spec, std::move(relations)), opt);
    // graded pieces beyond the top degree must vanish (checked over a full
    // weight window, which bounds all higher degrees)
    hilbert_series(rel, top_degree, true);
    std::vector<std::vector<Monomial>> graded;
    for (int d = 0; d <= top_degree; d++) graded.push_back(standard_monomials(rel, d));
    std::optional<Poly> pt;
    if (point_class) {
        if (graded[top_degree].size() != 1)
            throw algebra_error("build_quotient: top graded piece is not 1-dimensional");
        Poly p = normal_form(*point_class, rel);
        if (p.is_zero()) throw algebra_error("build_quotient: point class reduces to zero");
        pt = std::move(p);
    }
    return std::make_shared<const ChowRing>(name, spec, std::move(rel), top_degree, std::move(pt),
                                            std::move(graded));
}

// rings are immutable once shared; installing a point class yields a new handle
inline RingPtr with_point_class(const RingPtr& ring, const Poly& point) {
    if (ring->dim(ring->top_degree()) != 1)
        throw algebra_error("point class: top graded piece is not 1-dimensional");
    Poly p = ring->nf(point);
    if (p.is_zero()) throw algebra_error("point class reduces to zero");
    std::vector<std::vector<Monomial>> graded;
    for (int d = 0; d <= ring->top_degree(); d++) graded.push_back(ring->basis(d));
    return std::make_shared<const ChowRing>(ring->name(), ring->spec(), ring->relations(),
                                            ring->top_degree(), std::move(p), std::move(graded));
}

// degree of the top-dimensional component against the point class
inline Rat integrate(const ChowClass& c) {
    const auto& ring = *c.ring();
    if (!ring.point_class_poly()) throw algebra_error("integrate: point class not set");
    int top = ring.top_degree();
    RatVec a = ring.coords(c.value(), top);
    RatVec b = ring.coords(*ring.point_class_poly(), top);
    return a[0] / b[0];  // top piece is 1-dimensional by construction
}

// point class from the Gauss-Bonnet normalization  ∫ c_top(T) = χ_top
inline std::pair<RingPtr, ChowClass> gauss_bonnet_point(const RingPtr& ring, const ChowClass& c_top,
                                                        const Int& euler_number) {
    if (euler_number == 0) throw algebra_error("gauss_bonnet_point: zero Euler number");
    Poly top_part = c_top.value().graded_part(ring->top_degree());
    if (top_part.is_zero()) throw algebra_error("gauss_bonnet_point: top Chern class vanishes");
    Poly pt = top_part.scaled(Rat(1, euler_number));
    RingPtr out = with_point_class(ring, pt);
    return {out, ChowClass::raw_normal(out, out->nf(pt))};
}

// graded ring homomorphism between Chow rings, checked at construction
class RingMorphism {
public:
    RingMorphism(RingPtr source, RingPtr target, std::vector<Poly> images)
        : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
        const auto& sspec = *source_->spec();
        if ((int)images_.size() != sspec.nvars())
            throw spec_error("morphism: one image per source variable required");
        for (int i = 0; i < sspec.nvars(); i++) {
            images_[i] = target_->nf(images_[i]);
            if (images_[i].is_zero()) continue;
            auto d = images_[i].homogeneous_degree();
            if (!d || *d != sspec.weight(i))
                throw algebra_error("morphism: image of " + sspec.name(i) +
                                    " does not have its declared degree");
        }
        for (const auto& rel : source_->relations().generators) {
            Poly img = rel.substitute(images_, target_->spec());
            if (!target_->nf(img).is_zero())
                throw algebra_error("morphism: relation " + render_poly(rel) +
                                    " does not map to zero");
        }
    }

    const RingPtr& source() const { return source_; }
    const RingPtr& target() const { return target_; }
    const std::vector<Poly>& images() const { return images_; }

    ChowClass apply(const ChowClass& c) const {
        if (c.ring().get() != source_.get())
            throw spec_error("pullback: class not in the morphism source");
        return ChowClass(target_, c.value().substitute(images_, target_->spec()));
    }
    Poly apply_poly(const Poly& p) const {
        return target_->nf(p.substitute(images_, target_->spec()));
    }

private:
    RingPtr source_;
    RingPtr target_;
    std::vector<Poly> images_;
};

inline ChowClass pullback(const RingMorphism& m, const ChowClass& c) { return m.apply(c); }

// matrix of a morphism on the degree-d graded pieces (columns: source basis)
inline RatMat morphism_matrix(const RingMorphism& m, int d) {
    const auto& src = *m.source();
    const auto& tgt = *m.target();
    RatMat a(tgt.dim(d), RatVec(src.dim(d), Rat(0)));
    for (long j = 0; j < src.dim(d); j++) {
        Poly img = m.apply_poly(Poly::monomial(src.spec(), src.basis(d)[j]));
        RatVec col = tgt.coords(img, d);
        for (size_t i = 0; i < col.size(); i++) a[i][j] = col[i];
    }
    return a;
}

struct PreimageResult {
    ChowClass value;
    long kernel_dim;
};

// solve m(x) = c degreewise; error when some component has no preimage
inline PreimageResult morphism_preimage(const RingMorphism& m, const ChowClass& c) {
    const auto& src = *m.source();
    const auto& tgt = *m.target();
    if (c.ring().get() != m.target().get()) throw spec_error("preimage: class not in target");
    Poly acc = Poly::zero(src.spec());
    long kdim = 0;
    for (auto& [d, comp] : c.value().graded_components()) {
        if (d > src.top_degree()) throw algebra_error("preimage: degree exceeds source dimension");
        RatMat a = morphism_matrix(m, d);
        auto x = solve(a, tgt.coords(comp, d));
        if (!x) throw algebra_error("preimage: class not in the image at degree " + std::to_string(d));
        kdim += (long)nullspace(a).size();
        for (size_t j = 0; j < x->size(); j++)
            acc += Poly::monomial(src.spec(), src.basis(d)[j], (*x)[j]);
    }
    return {ChowClass(m.source(), acc), kdim};
}

// pushforward along the inclusion of a divisor: push(δ) = γ·[E] for any γ with
// i*(γ) = δ; well-definedness (ker i* · [E] = 0) is asserted per degree
class DivisorPush {
public:
    DivisorPush(RingMorphism restriction, ChowClass exceptional)
        : restrict_(std::move(restriction)), exceptional_(std::move(exceptional)) {
        if (exceptional_.ring().get() != restrict_.source().get())
            throw spec_error("divisor push: exceptional class not in the ambient ring");
    }

    const RingMorphism& restriction() const { return restrict_; }
    const ChowClass& exceptional_class() const { return exceptional_; }

    ChowClass apply(const ChowClass& delta) const {
        const auto& amb = *restrict_.source();
        const auto& div = *restrict_.target();
        if (delta.ring().get() != restrict_.target().get())
            throw spec_error("divisor push: class not in the divisor ring");
        ChowClass out = ChowClass::constant(restrict_.source(), 0);
        for (auto& [d, comp] : delta.value().graded_components()) {
            if (d > amb.top_degree()) continue;
            RatMat a = morphism_matrix(restrict_, d);
            auto x = solve(a, div.coords(comp, d));
            if (!x) throw algebra_error("divisor push: no preimage in degree " + std::to_string(d));
            ensure_independent(d, a);
            Poly gamma = Poly::zero(amb.spec());
            for (size_t j = 0; j < x->size(); j++)
                gamma += Poly::monomial(amb.spec(), amb.basis(d)[j], (*x)[j]);
            out = out + ChowClass(restrict_.source(), gamma) * exceptional_;
        }
        return out;
    }

private:
    void ensure_independent(int d, const RatMat& a) const {
        for (int seen : checked_)
            if (seen == d) return;
        const auto& amb = *restrict_.source();
        for (const auto& v : nullspace(a)) {
            Poly kappa = Poly::zero(amb.spec());
            for (size_t j = 0; j < v.size(); j++)
                kappa += Poly::monomial(amb.spec(), amb.basis(d)[j], v[j]);
            if (!(ChowClass(restrict_.source(), kappa) * exceptional_).is_zero())
                throw algebra_error("divisor push: result depends on the preimage choice");
        }
        checked_.push_back(d);
    }

    RingMorphism restrict_;
    ChowClass exceptional_;
    mutable std::vector<int> checked_;
};

inline ChowClass pushforward_divisor(const DivisorPush& p, const ChowClass& delta) {
    return p.apply(delta);
}

// ---- expression of a class in a named generating set ----

// one polynomial P with P(gens) = c; the solution is a coset representative
// modulo the relation ideal, chosen deterministically
inline Poly express_in_subring(const ChowClass& c,
                               const std::vector<std::pair<std::string, ChowClass>>& gens) {
    const auto& ring = *c.ring();
    std::vector<RingSpec::Var> vars;
    std::vector<ChowClass> vals;
    for (const auto& [n, g] : gens) {
        auto d = g.value().homogeneous_degree();
        if (!d) throw algebra_error("express_in_subring: generator " + n + " not homogeneous");
        vars.push_back({n, *d});
        vals.push_back(g);
    }
    SpecPtr abstract = make_ring_spec(vars);
    Poly out = Poly::zero(abstract);
    for (auto& [d, comp] : c.value().graded_components()) {
        auto monos = monomials_of_degree(*abstract, d);
        RatMat a(ring.dim(d), RatVec(monos.size(), Rat(0)));
        for (size_t j = 0; j < monos.size(); j++) {
            ChowClass val = ChowClass::constant(c.ring(), 1);
            for (int i = 0; i < abstract->nvars(); i++)
                if (monos[j].e[i]) val = val * vals[i].pow(monos[j].e[i]);
            RatVec col = ring.coords(val.value(), d);
            for (size_t i = 0; i < col.size(); i++) a[i][j] = col[i];
        }
        auto x = solve(a, ring.coords(comp, d));
        if (!x)
            throw algebra_error("express_in_subring: class not in the subring at degree " +
                                std::to_string(d));
        for (size_t j = 0; j < x->size(); j++)
            out += Poly::monomial(abstract, monos[j], (*x)[j]);
    }
    return out;
}

// ---- perpendicular descent through a blow-down ----

// Affine solution set γ + Σ tᵢ·dᵢ of classes perpendicular to the pushed
// kernel, together with the exact linear system that produced it.
struct DescentResult {
    ChowClass base;
    std::vector<ChowClass> directions;
    RatMat system;  // rows: one per kernel generator, columns per correction
    RatVec rhs;

    bool unique() const { return directions.empty(); }

    bool contains(const ChowClass& candidate) const {
        ChowClass diff = candidate - base;
        if (diff.is_zero()) return true;
        if (directions.empty()) return false;
        // solve diff = Σ t_i d_i on the graded pieces
        auto comps = diff.value().graded_components();
        RatMat rows;
        RatVec target;
        const auto& ring = *base.ring();
        for (auto& [d, comp] : comps) {
            RatVec t = ring.coords(comp, d);
            for (size_t r = 0; r < t.size(); r++) {
                RatVec row;
                for (const auto& dir : directions) row.push_back(ring.coords(dir.value(), d)[r]);
                rows.push_back(row);
                target.push_back(t[r]);
            }
        }
        return solve(rows, target).has_value();
    }
};

// Criterion: γ+correction descends iff ∫_E i*(γ+correction)·δ = 0 for every
// kernel generator δ of complementary degree.
inline DescentResult perpendicular_descent(const ChowClass& gamma,
                                           const std::vector<ChowClass>& kernel_gens,
                                           const RingMorphism& to_divisor,
                                           const std::vector<ChowClass>& correction_basis) {
    RatMat rows;
    RatVec rhs;
    for (const auto& delta : kernel_gens) {
        RatVec row;
        for (const auto& corr : correction_basis)
            row.push_back(integrate(to_divisor.apply(corr) * delta));
        rows.push_back(std::move(row));
        rhs.push_back(-integrate(to_divisor.apply(gamma) * delta));
    }
    auto x = solve(rows, rhs);
    if (!x) throw algebra_error("perpendicular_descent: class does not descend");
    ChowClass base = gamma;
    for (size_t j = 0; j < x->size(); j++) base = base + correction_basis[j].scaled((*x)[j]);
    std::vector<ChowClass> dirs;
    for (const auto& v : nullspace(rows)) {
        ChowClass dir = ChowClass::constant(gamma.ring(), 0);
        for (size_t j = 0; j < v.size(); j++) dir = dir + correction_basis[j].scaled(v[j]);
        dirs.push_back(dir);
    }
    return {std::move(base), std::move(dirs), std::move(rows), std::move(rhs)};
}

}  // namespace chow
