#pragma once
#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "chow/poly.hpp"

namespace chow {

using SeriesVector = std::vector<long>;

struct GroebnerOptions {
    // each leading-term cancellation during a reduction counts as one step
    uint64_t step_budget = 200'000'000;
    bool verify_spairs = true;  // assert Buchberger criterion on the finished basis
};

struct Ideal {
    SpecPtr spec;
    std::vector<Poly> generators;
    std::vector<Poly> basis;  // reduced Groebner basis, monic, descending leading monomials
    bool has_basis = false;
};

inline Ideal make_ideal(SpecPtr spec, std::vector<Poly> gens) {
    for (auto& g : gens)
        if (!g.spec()->same_as(*spec)) throw spec_error("ideal generator in wrong spec");
    return Ideal{std::move(spec), std::move(gens), {}, false};
}

namespace detail {

struct Budget {
    uint64_t left;
    void charge(uint64_t n = 1) {
        if (left < n) throw resource_error("step budget exhausted in basis computation");
        left -= n;
    }
};

// full reduction (head and tails) against a list of monic reducers
inline Poly reduce_full(const Poly& p, const std::vector<Poly>& gs, const RingSpec& spec,
                        Budget& budget) {
    Poly rem = p;
    std::vector<Poly::Term> done;
    while (!rem.is_zero()) {
        const auto& lt = rem.leading();
        bool hit = false;
        for (const auto& g : gs) {
            if (g.is_zero()) continue;
            const auto& lg = g.leading();
            if (spec.divides(lg.m, lt.m)) {
                budget.charge();
                rem = rem.add_scaled(g, -lt.c / lg.c, spec.div(lt.m, lg.m));
                hit = true;
                break;
            }
        }
        if (!hit) {
            done.push_back(lt);
            rem = rem.add_scaled(Poly::constant(rem.spec(), 1), -lt.c, lt.m);
        }
    }
    Poly out = Poly::zero(p.spec());
    for (auto& t : done) out += Poly::monomial(p.spec(), t.m, t.c);
    return out;
}

struct Pair {
    int i, j;       // indices into basis, i < j
    Monomial lcm;
};

}  // namespace detail

// Buchberger with the Gebauer-Moller pair update and normal pair selection
// (smallest lcm first).  Output is the unique reduced basis for the spec's
// order; ties broken deterministically so runs are byte-for-byte reproducible.
inline Ideal groebner_basis(const Ideal& ideal, const GroebnerOptions& opt = {}) {
    if (ideal.has_basis) return ideal;
    const RingSpec& spec = *ideal.spec;
    detail::Budget budget{opt.step_budget};

    std::vector<Poly> g;          // current basis
    std::vector<bool> redundant;  // lm divisible by a later member's lm
    std::vector<detail::Pair> pairs;

    auto pair_less = [&](const detail::Pair& a, const detail::Pair& b) {
        int c = spec.compare(a.lcm, b.lcm);
        if (c) return c < 0;  // smaller lcm first
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };

    auto update = [&](const Poly& h) {
        // Gebauer-Moller UPDATE: prune new pairs by divisibility, drop coprime
        // pairs, prune old pairs whose lcm the new leading monomial refines.
        int t = (int)g.size();
        const Monomial& mh = h.leading().m;
        std::vector<detail::Pair> cand;
        for (int i = 0; i < t; i++) {
            if (redundant[i]) continue;
            cand.push_back({i, t, spec.lcm(g[i].leading().m, mh)});
        }
        std::vector<bool> keep(cand.size(), true);
        for (size_t a = 0; a < cand.size(); a++) {
            if (!keep[a]) continue;
            for (size_t b = 0; b < cand.size(); b++) {
                if (a == b || !keep[b]) continue;
                if (spec.divides(cand[b].lcm, cand[a].lcm) && !(cand[b].lcm == cand[a].lcm)) {
                    keep[a] = false;
                    break;
                }
            }
        }
        // among equal lcms keep the first
        for (size_t a = 0; a < cand.size(); a++) {
            if (!keep[a]) continue;
            for (size_t b = a + 1; b < cand.size(); b++)
                if (keep[b] && cand[a].lcm == cand[b].lcm) keep[b] = false;
        }
        std::vector<detail::Pair> fresh;
        for (size_t a = 0; a < cand.size(); a++)
            if (keep[a] && !spec.coprime(g[cand[a].i].leading().m, mh)) fresh.push_back(cand[a]);

        std::vector<detail::Pair> old;
        for (const auto& p : pairs) {
            Monomial lij = p.lcm;
            if (spec.divides(mh, lij) && !(spec.lcm(g[p.i].leading().m, mh) == lij) &&
                !(spec.lcm(g[p.j].leading().m, mh) == lij))
                continue;  // superseded by pairs through h
            old.push_back(p);
        }
        pairs = std::move(old);
        pairs.insert(pairs.end(), fresh.begin(), fresh.end());
        std::sort(pairs.begin(), pairs.end(), pair_less);

        for (int i = 0; i < t; i++)
            if (!redundant[i] && spec.divides(mh, g[i].leading().m)) redundant[i] = true;
        g.push_back(h);
        redundant.push_back(false);
    };

    // deterministic seeding: generators sorted by leading monomial ascending
    std::vector<Poly> seed;
    for (const auto& p : ideal.generators)
        if (!p.is_zero()) seed.push_back(p);
    std::sort(seed.begin(), seed.end(), [&](const Poly& a, const Poly& b) {
        int c = spec.compare(a.leading().m, b.leading().m);
        if (c) return c < 0;
        return a.size() < b.size();
    });
    for (const auto& p : seed) {
        Poly r = detail::reduce_full(p, g, spec, budget);
        if (!r.is_zero()) update(r.scaled(1 / r.leading().c));
    }

    while (!pairs.empty()) {
        detail::Pair p = pairs.front();
        pairs.erase(pairs.begin());
        const Poly &f1 = g[p.i], &f2 = g[p.j];
        const auto &l1 = f1.leading(), &l2 = f2.leading();
        Poly s = Poly::zero(ideal.spec)
                     .add_scaled(f1, 1 / l1.c, spec.div(p.lcm, l1.m))
                     .add_scaled(f2, Rat(-1) / l2.c, spec.div(p.lcm, l2.m));
        budget.charge();
        Poly r = detail::reduce_full(s, g, spec, budget);
        if (!r.is_zero()) update(r.scaled(1 / r.leading().c));
    }

    // minimal basis, then interreduce tails
    std::vector<Poly> minimal;
    for (size_t i = 0; i < g.size(); i++) {
        bool keep = true;
        for (size_t j = 0; j < g.size(); j++) {
            if (i == j) continue;
            if (spec.divides(g[j].leading().m, g[i].leading().m)) {
                if (!(g[j].leading().m == g[i].leading().m) || j < i) {
                    keep = false;
                    break;
                }
            }
        }
        if (keep) minimal.push_back(g[i]);
    }
    std::vector<Poly> reduced;
    for (size_t i = 0; i < minimal.size(); i++) {
        std::vector<Poly> others;
        for (size_t j = 0; j < minimal.size(); j++)
            if (j != i) others.push_back(minimal[j]);
        Poly r = detail::reduce_full(minimal[i], others, spec, budget);
        if (!r.is_zero()) reduced.push_back(r.scaled(1 / r.leading().c));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
        return spec.greater(a.leading().m, b.leading().m);
    });

    Ideal out = ideal;
    out.basis = std::move(reduced);
    out.has_basis = true;

    if (opt.verify_spairs) {
        detail::Budget vb{opt.step_budget};
        for (size_t i = 0; i < out.basis.size(); i++)
            for (size_t j = i + 1; j < out.basis.size(); j++) {
                const auto &li = out.basis[i].leading(), &lj = out.basis[j].leading();
                if (spec.coprime(li.m, lj.m)) continue;
                Monomial l = spec.lcm(li.m, lj.m);
                Poly s = Poly::zero(out.spec)
                             .add_scaled(out.basis[i], 1 / li.c, spec.div(l, li.m))
                             .add_scaled(out.basis[j], Rat(-1) / lj.c, spec.div(l, lj.m));
                if (!detail::reduce_full(s, out.basis, spec, vb).is_zero())
                    throw algebra_error("internal: S-polynomial does not reduce to zero");
            }
    }
    return out;
}

inline const std::vector<Poly>& require_basis(const Ideal& ideal) {
    if (!ideal.has_basis) throw algebra_error("ideal has no cached basis");
    return ideal.basis;
}

inline Poly normal_form(const Poly& p, const Ideal& ideal,
                        uint64_t step_budget = 200'000'000) {
    require_basis(ideal);
    if (!p.spec()->same_as(*ideal.spec)) throw spec_error("normal_form: wrong spec");
    detail::Budget budget{step_budget};
    return detail::reduce_full(p, ideal.basis, *ideal.spec, budget);
}

inline bool ideal_contains(const Ideal& ideal, const Poly& p) {
    return normal_form(p, ideal).is_zero();
}

inline bool ideal_equal(const Ideal& a, const Ideal& b) {
    if (!a.spec->same_as(*b.spec)) throw spec_error("ideal_equal: different specs");
    for (const auto& g : a.generators)
        if (!ideal_contains(b, g)) return false;
    for (const auto& g : b.generators)
        if (!ideal_contains(a, g)) return false;
    return true;
}

// all monomials of exact weighted degree d, descending in the spec order
inline std::vector<Monomial> monomials_of_degree(const RingSpec& spec, int d) {
    std::vector<Monomial> out;
    std::vector<int> exps(spec.nvars(), 0);
    auto rec = [&](auto&& self, int i, int rem) -> void {
        if (i == spec.nvars() - 1) {
            if (rem % spec.weight(i) == 0) {
                exps[i] = rem / spec.weight(i);
                if (exps[i] < kMaxExponent) out.push_back(spec.monomial(exps));
                exps[i] = 0;
            }
            return;
        }
        for (int e = 0; e * spec.weight(i) <= rem; e++) {
            exps[i] = e;
            self(self, i + 1, rem - e * spec.weight(i));
        }
        exps[i] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return spec.greater(a, b); });
    return out;
}

// standard monomials (not divisible by any basis leading monomial) of degree d
inline std::vector<Monomial> standard_monomials(const Ideal& ideal, int d) {
    const auto& basis = require_basis(ideal);
    std::vector<Monomial> lms;
    for (const auto& g : basis) lms.push_back(g.leading().m);
    std::vector<Monomial> out;
    for (const auto& m : monomials_of_degree(*ideal.spec, d)) {
        bool divisible = false;
        for (const auto& l : lms)
            if (ideal.spec->divides(l, m)) {
                divisible = true;
                break;
            }
        if (!divisible) out.push_back(m);
    }
    return out;
}

// graded dimensions of the quotient for degrees 0..top_degree.  With
// assert_finite the quotient must vanish in the degree window just above
// top_degree (which forces it to vanish in all higher degrees).
inline SeriesVector hilbert_series(const Ideal& ideal, int top_degree,
                                   bool assert_finite = true) {
    SeriesVector s;
    for (int d = 0; d <= top_degree; d++) s.push_back((long)standard_monomials(ideal, d).size());
    if (assert_finite) {
        int maxw = 0;
        for (const auto& v : ideal.spec->vars()) maxw = std::max(maxw, v.weight);
        for (int d = top_degree + 1; d <= top_degree + maxw; d++)
            if (!standard_monomials(ideal, d).empty())
                throw algebra_error("hilbert_series: quotient does not vanish beyond degree " +
                                    std::to_string(top_degree));
    }
    return s;
}

// generators of ideal ∩ Q[kept variables]; drop_vars may appear in any order
inline Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& drop_vars,
                       const GroebnerOptions& opt = {}) {
    const RingSpec& spec = *ideal.spec;
    std::vector<int> drop;
    for (const auto& n : drop_vars) {
        int i = spec.index_of(n);
        if (i < 0) throw spec_error("eliminate: unknown variable " + n);
        drop.push_back(i);
    }
    std::vector<RingSpec::Var> vars;
    std::vector<int> to_index(spec.nvars(), -1);
    for (int i : drop) {
        to_index[i] = (int)vars.size();
        vars.push_back(spec.vars()[i]);
    }
    std::vector<RingSpec::Var> kept;
    std::vector<int> kept_src;
    for (int i = 0; i < spec.nvars(); i++) {
        if (to_index[i] >= 0) continue;
        to_index[i] = (int)vars.size() + (int)kept.size();
        kept.push_back(spec.vars()[i]);
        kept_src.push_back(i);
    }
    vars.insert(vars.end(), kept.begin(), kept.end());
    SpecPtr elim_spec = make_ring_spec(vars, (int)drop.size());

    std::vector<Poly> gens;
    for (const auto& g : ideal.generators) gens.push_back(g.reindexed(elim_spec, to_index));
    Ideal big = groebner_basis(make_ideal(elim_spec, std::move(gens)), opt);

    SpecPtr reduced_spec = make_ring_spec(kept);
    std::vector<int> back(elim_spec->nvars(), -1);
    for (size_t i = 0; i < kept_src.size(); i++) back[drop.size() + i] = (int)i;
    std::vector<Poly> out_gens;
    for (const auto& g : big.basis) {
        bool pure = true;
        for (size_t i = 0; i < drop.size() && pure; i++)
            if (g.uses_var((int)i)) pure = false;
        if (pure) out_gens.push_back(g.reindexed(reduced_spec, back));
    }
    // elements of an elimination-order basis free of the block variables form a
    // basis for the intersection under the induced (wdegrevlex) order
    Ideal out = make_ideal(reduced_spec, out_gens);
    out.basis = std::move(out_gens);
    out.has_basis = true;
    return out;
}

// kernel of the graded map  Q[source] -> target-quotient,  source var i -> images[i];
// computed from the graph ideal by eliminating the target variables
inline Ideal morphism_kernel(const SpecPtr& source, const std::vector<Poly>& images,
                             const Ideal& target, const GroebnerOptions& opt = {}) {
    const RingSpec& tspec = *target.spec;
    if ((int)images.size() != source->nvars())
        throw spec_error("morphism_kernel: one image per source variable required");
    for (int i = 0; i < source->nvars(); i++) {
        if (!images[i].spec()->same_as(tspec)) throw spec_error("morphism_kernel: image in wrong spec");
        auto d = images[i].homogeneous_degree();
        if (images[i].is_zero()) continue;
        if (!d || *d != source->weight(i))
            throw algebra_error("morphism_kernel: image of " + source->name(i) +
                                " is not homogeneous of its declared weight");
    }
    std::vector<RingSpec::Var> vars = tspec.vars();
    for (const auto& v : source->vars()) vars.push_back(v);
    SpecPtr graph_spec = make_ring_spec(vars, tspec.nvars());

    std::vector<int> tmap(tspec.nvars());
    for (int i = 0; i < tspec.nvars(); i++) tmap[i] = i;
    std::vector<Poly> gens;
    for (const auto& g : target.generators) gens.push_back(g.reindexed(graph_spec, tmap));
    for (int i = 0; i < source->nvars(); i++) {
        Poly si = Poly::variable(graph_spec, tspec.nvars() + i);
        gens.push_back(si - images[i].reindexed(graph_spec, tmap));
    }
    Ideal graph = make_ideal(graph_spec, std::move(gens));

    std::vector<std::string> drop;
    for (const auto& v : tspec.vars()) drop.push_back(v.name);
    Ideal kernel_mixed = eliminate(graph, drop, opt);
    // eliminate() keeps variables in their original relative order, which here
    // is exactly the source spec
    std::vector<int> id(source->nvars());
    for (int i = 0; i < source->nvars(); i++) id[i] = i;
    std::vector<Poly> out_gens;
    for (const auto& g : kernel_mixed.basis) out_gens.push_back(g.reindexed(source, id));
    Ideal out = make_ideal(source, out_gens);
    out.basis = std::move(out_gens);
    out.has_basis = true;
    return out;
}

}  // namespace chow
