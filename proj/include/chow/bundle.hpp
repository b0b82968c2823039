#pragma once
#include <utility>
#include <vector>

#include "chow/ring.hpp"

namespace chow {

// rank plus truncated total Chern class; virtual ranks (quotients) allowed
struct BundleClass {
    long rank = 0;
    ChowClass total;  // degree-0 part is 1

    ChowClass chern(int i) const { return total.graded_part(i); }
};

inline BundleClass make_bundle(long rank, const ChowClass& total) {
    if (total.value().graded_part(0) != Poly::constant(total.ring()->spec(), 1))
        throw algebra_error("bundle class: degree-0 part of the total Chern class must be 1");
    return {rank, total};
}

inline BundleClass trivial_bundle(const RingPtr& ring, long rank) {
    return {rank, ChowClass::constant(ring, 1)};
}

// multiplicative inverse of a total class with unit constant term
inline ChowClass invert_unit_class(const ChowClass& c) {
    const auto& ring = *c.ring();
    ChowClass n = c - ChowClass::constant(c.ring(), 1);
    ChowClass acc = ChowClass::constant(c.ring(), 1);
    ChowClass t = ChowClass::constant(c.ring(), 1);
    for (int k = 1; k <= ring.top_degree(); k++) {
        t = -(t * n);
        if (t.is_zero()) break;
        acc = acc + t;
    }
    return acc;
}

// Π c(numerator)^p / Π c(denominator)^p for Whitney-formula quotients
inline BundleClass whitney_quotient(const std::vector<std::pair<BundleClass, int>>& numerators,
                                    const std::vector<std::pair<BundleClass, int>>& denominators,
                                    const RingPtr& ring) {
    ChowClass acc = ChowClass::constant(ring, 1);
    long rank = 0;
    for (const auto& [b, p] : numerators) {
        acc = acc * b.total.pow(p);
        rank += b.rank * p;
    }
    for (const auto& [b, p] : denominators) {
        acc = acc * invert_unit_class(b.total).pow(p);
        rank -= b.rank * p;
    }
    return {rank, acc};
}

// c_i(E⊗L) = Σ_j C(rank-j, i-j) c_j(E) t^(i-j) for a line bundle with c1 = t
inline BundleClass twist_by_line(const BundleClass& b, const ChowClass& t) {
    const auto& ring = *b.total.ring();
    if (!t.is_zero()) {
        auto d = t.value().homogeneous_degree();
        if (!d || *d != 1) throw algebra_error("twist_by_line: twisting class must have degree 1");
    }
    ChowClass acc = ChowClass::constant(b.total.ring(), 0);
    for (int i = 0; i <= ring.top_degree(); i++) {
        ChowClass ci = ChowClass::constant(b.total.ring(), 0);
        for (int j = 0; j <= i; j++) {
            ChowClass cj = b.chern(j);
            if (cj.is_zero()) continue;
            Int coef = binomial(Int(b.rank - j), (unsigned)(i - j));
            if (coef == 0) continue;
            ci = ci + (cj * t.pow(i - j)).scaled(Rat(coef));
        }
        acc = acc + ci;
    }
    return {b.rank, acc};
}

// ---- Chern character and Todd class ----

struct CharSeries {
    enum class Kind { chern_character, todd };
    Kind kind;
    ChowClass value;

    ChowClass part(int d) const { return value.graded_part(d); }
};

namespace detail {

// Chern-root power sums p_1..p_top from the elementary symmetric functions
inline std::vector<ChowClass> power_sums(const BundleClass& b) {
    const auto& ring = *b.total.ring();
    int top = ring.top_degree();
    std::vector<ChowClass> e, p;
    for (int i = 0; i <= top; i++) e.push_back(b.chern(i));
    p.resize(top + 1, ChowClass::constant(b.total.ring(), 0));
    for (int k = 1; k <= top; k++) {
        ChowClass s = ChowClass::constant(b.total.ring(), 0);
        for (int i = 1; i < k; i++) s = s + (e[i] * p[k - i]).scaled(i % 2 ? Rat(1) : Rat(-1));
        s = s + e[k].scaled(Rat(k % 2 ? 1 : -1) * k);
        p[k] = s;
    }
    return p;
}

// coefficients a_k of log(x / (1 - e^{-x})), exact, computed by series arithmetic
inline std::vector<Rat> todd_log_coefficients(int top) {
    auto mul = [&](const std::vector<Rat>& a, const std::vector<Rat>& b) {
        std::vector<Rat> r(top + 1, Rat(0));
        for (int i = 0; i <= top; i++)
            for (int j = 0; i + j <= top; j++) r[i + j] += a[i] * b[j];
        return r;
    };
    // s(x) = (1 - e^{-x})/x
    std::vector<Rat> s(top + 1);
    for (int i = 0; i <= top; i++)
        s[i] = Rat(i % 2 ? -1 : 1, factorial((unsigned)i + 1));
    // u = 1/s
    std::vector<Rat> u(top + 1, Rat(0));
    u[0] = 1;
    for (int i = 1; i <= top; i++) {
        Rat acc = 0;
        for (int j = 0; j < i; j++) acc += u[j] * s[i - j];
        u[i] = -acc;
    }
    // log(u) = Σ (-1)^{k+1} v^k / k with v = u - 1
    std::vector<Rat> v = u;
    v[0] = 0;
    std::vector<Rat> out(top + 1, Rat(0)), t = v;
    for (int k = 1; k <= top; k++) {
        for (int i = 0; i <= top; i++) out[i] += t[i] * Rat(k % 2 ? 1 : -1, k);
        if (k < top) t = mul(t, v);
    }
    return out;
}

}  // namespace detail

inline CharSeries chern_to_ch(const BundleClass& b) {
    const auto& ring = *b.total.ring();
    auto p = detail::power_sums(b);
    ChowClass acc = ChowClass::constant(b.total.ring(), Rat(b.rank));
    for (int k = 1; k <= ring.top_degree(); k++)
        acc = acc + p[k].scaled(Rat(1, factorial((unsigned)k)));
    return {CharSeries::Kind::chern_character, acc};
}

inline BundleClass ch_to_chern(const CharSeries& s, long rank) {
    if (s.kind != CharSeries::Kind::chern_character)
        throw algebra_error("ch_to_chern: input is not a Chern character");
    const auto& ring = *s.value.ring();
    int top = ring.top_degree();
    std::vector<ChowClass> p(top + 1, ChowClass::constant(s.value.ring(), 0));
    for (int k = 1; k <= top; k++) p[k] = s.part(k).scaled(Rat(factorial((unsigned)k)));
    std::vector<ChowClass> e(top + 1, ChowClass::constant(s.value.ring(), 0));
    e[0] = ChowClass::constant(s.value.ring(), 1);
    ChowClass total = e[0];
    for (int k = 1; k <= top; k++) {
        ChowClass acc = ChowClass::constant(s.value.ring(), 0);
        for (int i = 1; i <= k; i++) acc = acc + (e[k - i] * p[i]).scaled(i % 2 ? Rat(1) : Rat(-1));
        e[k] = acc.scaled(Rat(1, k));
        total = total + e[k];
    }
    return {rank, total};
}

inline CharSeries ch_dual(const CharSeries& s) {
    const auto& ring = *s.value.ring();
    ChowClass acc = ChowClass::constant(s.value.ring(), 0);
    for (int d = 0; d <= ring.top_degree(); d++)
        acc = acc + s.part(d).scaled(Rat(d % 2 ? -1 : 1));
    return {s.kind, acc};
}

inline CharSeries ch_mul(const CharSeries& a, const CharSeries& b) {
    return {CharSeries::Kind::chern_character, a.value * b.value};
}

inline CharSeries ch_add(const CharSeries& a, const CharSeries& b, const Rat& sb = 1) {
    return {CharSeries::Kind::chern_character, a.value + b.value.scaled(sb)};
}

// e^c for a class with no degree-0 part, truncated at the ring dimension
inline ChowClass exp_class(const ChowClass& c) {
    const auto& ring = *c.ring();
    if (!c.value().graded_part(0).is_zero())
        throw algebra_error("exp_class: class must have no degree-0 part");
    ChowClass acc = ChowClass::constant(c.ring(), 1);
    ChowClass t = ChowClass::constant(c.ring(), 1);
    for (int n = 1; n <= ring.top_degree(); n++) {
        t = (t * c).scaled(Rat(1, n));
        if (t.is_zero()) break;
        acc = acc + t;
    }
    return acc;
}

inline CharSeries ch_line(const ChowClass& c1) {
    return {CharSeries::Kind::chern_character, exp_class(c1)};
}

inline CharSeries todd(const BundleClass& b) {
    const auto& ring = *b.total.ring();
    int top = ring.top_degree();
    auto a = detail::todd_log_coefficients(top);
    auto p = detail::power_sums(b);
    ChowClass arg = ChowClass::constant(b.total.ring(), 0);
    for (int k = 1; k <= top; k++)
        if (a[k] != 0) arg = arg + p[k].scaled(a[k]);
    return {CharSeries::Kind::todd, exp_class(arg)};
}

// χ(X, O(D)) = ∫ e^D · td(T_X)
inline Rat hrr_euler(const BundleClass& tangent, const ChowClass& divisor) {
    return integrate(exp_class(divisor) * todd(tangent).value);
}

inline Rat hrr_euler_with_todd(const CharSeries& td, const ChowClass& divisor) {
    if (td.kind != CharSeries::Kind::todd) throw algebra_error("hrr: second factor must be a Todd class");
    return integrate(exp_class(divisor) * td.value);
}

// ---- projective bundles and blow-ups ----

// A*(P(U)) = A*(X)[v] / ⟨Σ v^i c_{r-i}(U)⟩ with v of weight 1; the point class
// propagates as point(X)·v^{r-1}
inline std::pair<RingPtr, ChowClass> projective_bundle(const RingPtr& base, const BundleClass& u,
                                                       const std::string& fiber_var,
                                                       const std::string& name,
                                                       const GroebnerOptions& opt = {}) {
    if (u.rank < 1) throw algebra_error("projective_bundle: rank must be >= 1");
    std::vector<RingSpec::Var> vars = base->spec()->vars();
    vars.push_back({fiber_var, 1});
    SpecPtr spec = make_ring_spec(vars);
    std::vector<int> emb(base->spec()->nvars());
    for (size_t i = 0; i < emb.size(); i++) emb[i] = (int)i;

    std::vector<Poly> rels;
    for (const auto& r : base->relations().generators) rels.push_back(r.reindexed(spec, emb));
    Poly v = Poly::variable(spec, fiber_var);
    Poly tauto = Poly::zero(spec);
    for (int i = 0; i <= (int)u.rank; i++) {
        Poly ci = u.chern((int)u.rank - i).value().reindexed(spec, emb);
        if (!ci.is_zero()) tauto += ci * v.pow(i);
    }
    rels.push_back(tauto);

    int top = base->top_degree() + (int)u.rank - 1;
    std::optional<Poly> pt;
    if (base->point_class_poly())
        pt = base->point_class_poly()->reindexed(spec, emb) * v.pow((int)u.rank - 1);
    RingPtr ring = build_quotient(name, spec, std::move(rels), top, std::move(pt), opt);
    return {ring, ChowClass::variable(ring, fiber_var)};
}

// A*(Bl_Z X) = A*(X)[t] / ⟨ t·ker(restriction), t^d + c_1(N)t^{d-1} + ... + c_{d-1}(N)t + [Z] ⟩
// kernel generators are certified against the center's Hilbert series first
inline RingPtr blowup_ring(const RingPtr& ambient, const std::vector<ChowClass>& kernel_gens,
                           const BundleClass& normal_lifted, const ChowClass& center_class,
                           const std::string& exc_var, const SeriesVector& center_series,
                           const std::string& name, const GroebnerOptions& opt = {}) {
    int codim = (int)normal_lifted.rank;
    if (codim < 1) throw algebra_error("blowup_ring: normal bundle rank must be >= 1");

    // wrong kernels change the quotient's graded dimensions
    std::vector<Poly> probe = ambient->relations().generators;
    for (const auto& g : kernel_gens) probe.push_back(g.value());
    Ideal center_check = groebner_basis(make_ideal(ambient->spec(), probe), opt);
    SeriesVector got = hilbert_series(center_check, (int)center_series.size() - 1, false);
    for (int d = (int)center_series.size(); d <= ambient->top_degree(); d++)
        got.push_back((long)standard_monomials(center_check, d).size());
    SeriesVector want = center_series;
    want.resize(got.size(), 0);
    if (got != want)
        throw algebra_error("blowup_ring: kernel generators do not cut out the center (series mismatch)");

    std::vector<RingSpec::Var> vars = ambient->spec()->vars();
    vars.push_back({exc_var, 1});
    SpecPtr spec = make_ring_spec(vars);
    std::vector<int> emb(ambient->spec()->nvars());
    for (size_t i = 0; i < emb.size(); i++) emb[i] = (int)i;

    std::vector<Poly> rels;
    for (const auto& r : ambient->relations().generators) rels.push_back(r.reindexed(spec, emb));
    Poly t = Poly::variable(spec, exc_var);
    for (const auto& g : kernel_gens) rels.push_back(t * g.value().reindexed(spec, emb));
    Poly keel = t.pow(codim);
    for (int i = 1; i < codim; i++) {
        Poly ci = normal_lifted.chern(i).value().reindexed(spec, emb);
        if (!ci.is_zero()) keel += ci * t.pow(codim - i);
    }
    keel += center_class.value().reindexed(spec, emb);
    rels.push_back(keel);

    std::optional<Poly> pt;
    if (ambient->point_class_poly()) pt = ambient->point_class_poly()->reindexed(spec, emb);
    return build_quotient(name, spec, std::move(rels), ambient->top_degree(), std::move(pt), opt);
}

// correction class of the blow-up tangent formula:
//   c(T_blowup) = f*c(T_ambient) + push( g*c(T_center) · α ),
//   α = Σ_{j,k} (C(d-j,k) - C(d-j,k+1)) ζ^k g*c_j(N)
inline ChowClass blowup_tangent_correction(const DivisorPush& push, const ChowClass& center_tangent_on_e,
                                           const BundleClass& normal_on_e, const ChowClass& zeta,
                                           int codim) {
    const RingPtr& ering = center_tangent_on_e.ring();
    ChowClass alpha = ChowClass::constant(ering, 0);
    for (int j = 0; j <= codim; j++) {
        ChowClass cj = normal_on_e.chern(j);
        if (cj.is_zero()) continue;
        for (int k = 0; k + j <= codim; k++) {
            Int coef = binomial(Int(codim - j), (unsigned)k) - binomial(Int(codim - j), (unsigned)(k + 1));
            if (coef == 0) continue;
            alpha = alpha + (zeta.pow(k) * cj).scaled(Rat(coef));
        }
    }
    return push.apply(center_tangent_on_e * alpha);
}

inline BundleClass blowup_chern(const BundleClass& ambient_tangent_pulled, const DivisorPush& push,
                                const ChowClass& center_tangent_on_e, const BundleClass& normal_on_e,
                                const ChowClass& zeta, int codim) {
    ChowClass corr = blowup_tangent_correction(push, center_tangent_on_e, normal_on_e, zeta, codim);
    return {ambient_tangent_pulled.rank, ambient_tangent_pulled.total + corr};
}

}  // namespace chow
