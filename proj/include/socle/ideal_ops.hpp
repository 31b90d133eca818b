#pragma once

#include <string>
#include <utility>
#include <vector>

#include "socle/ring.hpp"

namespace socle {

namespace detail {

/// Re-homes p into a ring with `extra` fresh variables prepended.
inline Polynomial prepend_variables(const Polynomial& p, std::size_t extra,
                                    const MonomialOrder& new_order) {
    std::vector<Term> terms;
    terms.reserve(p.terms().size());
    for (const Term& t : p.terms()) {
        std::vector<Exponent> e(p.arity() + extra, 0);
        for (std::size_t i = 0; i < p.arity(); ++i) e[extra + i] = t.mono[i];
        terms.push_back({t.coeff, ExponentVector(std::move(e))});
    }
    return Polynomial::from_terms(p.arity() + extra, new_order, std::move(terms));
}

/// Inverse of prepend_variables; requires the first `count` exponents zero.
inline Polynomial drop_leading_variables(const Polynomial& p, std::size_t count,
                                         const MonomialOrder& new_order) {
    std::vector<Term> terms;
    terms.reserve(p.terms().size());
    for (const Term& t : p.terms()) {
        std::vector<Exponent> e(p.arity() - count, 0);
        for (std::size_t i = 0; i < count; ++i)
            if (t.mono[i] != 0) throw Error("eliminate: residual block variable");
        for (std::size_t i = count; i < p.arity(); ++i) e[i - count] = t.mono[i];
        terms.push_back({t.coeff, ExponentVector(std::move(e))});
    }
    return Polynomial::from_terms(p.arity() - count, new_order, std::move(terms));
}

inline bool involves_leading_block(const Polynomial& p, std::size_t block) {
    for (const Term& t : p.terms())
        for (std::size_t i = 0; i < block; ++i)
            if (t.mono[i] != 0) return true;
    return false;
}

/// Contraction of the ideal generated by `gens` (arity includes a leading
/// block of `block` variables) to the subring without the block.
inline std::vector<Polynomial> eliminate_block(const std::vector<Polynomial>& gens,
                                               std::size_t arity, std::size_t block,
                                               const MonomialOrder& target_order) {
    GroebnerBasis gb = buchberger(gens, MonomialOrder::elimination(block), arity);
    std::vector<Polynomial> out;
    for (const Polynomial& g : gb.elements)
        if (!involves_leading_block(g, block))
            out.push_back(drop_leading_variables(g, block, target_order));
    return out;
}

/// Intersection of two ideals of the ambient polynomial ring (no defining
/// ideal implied): eliminate w from w*I + (1-w)*J.
inline std::vector<Polynomial> intersect_raw(const std::vector<Polynomial>& a,
                                             const std::vector<Polynomial>& b, std::size_t arity,
                                             const MonomialOrder& target_order) {
    MonomialOrder elim = MonomialOrder::elimination(1);
    Polynomial w = Polynomial::variable(arity + 1, 0, elim);
    Polynomial one_minus_w =
        poly_sub(Polynomial::constant(arity + 1, elim, 1), w);
    std::vector<Polynomial> lifted;
    for (const Polynomial& f : a) lifted.push_back(poly_mul(w, prepend_variables(f, 1, elim)));
    for (const Polynomial& f : b)
        lifted.push_back(poly_mul(one_minus_w, prepend_variables(f, 1, elim)));
    return eliminate_block(lifted, arity + 1, 1, target_order);
}

/// Exact division g / f in the ambient polynomial ring; error if f does not
/// divide g.
inline Polynomial divide_exact(const Polynomial& g, const Polynomial& f) {
    if (f.is_zero()) throw Error("divide_exact: zero divisor");
    GroebnerBasis single{f.order(), f.arity(), {f.monic()}};
    Polynomial rest = g;
    Polynomial quotient(g.arity(), g.order());
    Rational lead_coeff = f.leading_term().coeff;
    while (!rest.is_zero()) {
        const Term& lt = rest.leading_term();
        if (!f.leading_monomial().divides(lt.mono))
            throw Error("divide_exact: not divisible");
        Rational c = lt.coeff / lead_coeff;
        ExponentVector shift = lt.mono.minus(f.leading_monomial());
        quotient = poly_add(quotient, Polynomial::monomial(shift, g.order(), c));
        rest = poly_sub(rest, f.term_multiple(c, shift));
    }
    return quotient;
}

inline std::vector<Polynomial> with_defining(const Ideal& I) {
    std::vector<Polynomial> all = I.generators();
    const auto& def = I.ring()->defining_generators();
    all.insert(all.end(), def.begin(), def.end());
    return all;
}

inline void require_same_ring(const Ideal& I, const Ideal& J, const char* op) {
    if (!same_ring(I.ring(), J.ring())) throw Error(std::string(op) + ": ring mismatch");
}

/// Canonical generator list for a derived ideal: the reduced basis of
/// (gens + defining), with each element normalized modulo the defining
/// ideal. Keeps generators small and output deterministic.
inline Ideal canonical_presentation(const RingPtr& ring, std::vector<Polynomial> raw) {
    const auto& defining = ring->defining_generators();
    raw.insert(raw.end(), defining.begin(), defining.end());
    GroebnerBasis full = buchberger(std::move(raw), ring->active_order(), ring->arity());
    auto def = ring->defining_basis();
    std::vector<Polynomial> gens;
    for (const Polynomial& g : full.elements) {
        Polynomial r = normal_form(g, *def);
        if (r.is_zero()) continue;
        r = r.monic();
        if (std::find(gens.begin(), gens.end(), r) == gens.end()) gens.push_back(std::move(r));
    }
    return Ideal(ring, std::move(gens));
}

}  // namespace detail

/// Mutual generator membership against reduced bases; never a generator-list
/// comparison.
inline bool ideal_equal(const Ideal& I, const Ideal& J) {
    detail::require_same_ring(I, J, "ideal_equal");
    for (const Polynomial& g : I.generators())
        if (!J.contains(g)) return false;
    for (const Polynomial& g : J.generators())
        if (!I.contains(g)) return false;
    return true;
}

inline bool ideal_contained_in(const Ideal& I, const Ideal& J) {
    detail::require_same_ring(I, J, "ideal_contained_in");
    for (const Polynomial& g : I.generators())
        if (!J.contains(g)) return false;
    return true;
}

inline Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    detail::require_same_ring(I, J, "ideal_sum");
    std::vector<Polynomial> gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return Ideal(I.ring(), std::move(gens));
}

inline Ideal ideal_product(const Ideal& I, const Ideal& J) {
    detail::require_same_ring(I, J, "ideal_product");
    std::vector<Polynomial> gens;
    for (const Polynomial& f : I.generators())
        for (const Polynomial& g : J.generators()) gens.push_back(poly_mul(f, g));
    return Ideal(I.ring(), std::move(gens));
}

inline Ideal ideal_power(const Ideal& I, unsigned k) {
    Ideal acc(I.ring(), {Polynomial::constant(I.ring()->arity(), I.ring()->active_order(), 1)});
    for (unsigned i = 0; i < k; ++i) acc = ideal_product(acc, I);
    return acc;
}

/// I ∩ J via one auxiliary variable and elimination.
inline Ideal intersect(const Ideal& I, const Ideal& J) {
    detail::require_same_ring(I, J, "intersect");
    std::vector<Polynomial> gens = detail::intersect_raw(
        detail::with_defining(I), detail::with_defining(J), I.ring()->arity(),
        I.ring()->active_order());
    return detail::canonical_presentation(I.ring(), std::move(gens));
}

/// (I : f) = { g : g·f ∈ I }, computed in the ambient ring as
/// (1/f)·(Ĩ ∩ (f)) on the preimage Ĩ of I.
inline Ideal colon_element(const Ideal& I, const Polynomial& f) {
    if (f.is_zero()) throw Error("colon_element: zero divisor polynomial");
    Polynomial g = f.order() == I.ring()->active_order() ? f : f.with_order(I.ring()->active_order());
    std::vector<Polynomial> meet = detail::intersect_raw(
        detail::with_defining(I), {g}, I.ring()->arity(), I.ring()->active_order());
    std::vector<Polynomial> gens;
    for (const Polynomial& h : meet) gens.push_back(detail::divide_exact(h, g));
    return detail::canonical_presentation(I.ring(), std::move(gens));
}

/// (I : J) = ∩ over generators of J.
inline Ideal colon_ideal(const Ideal& I, const Ideal& J) {
    detail::require_same_ring(I, J, "colon_ideal");
    std::vector<Polynomial> nonzero;
    for (const Polynomial& f : J.generators())
        if (!f.is_zero()) nonzero.push_back(f);
    if (nonzero.empty()) throw Error("colon_ideal: zero ideal divisor");
    Ideal acc = colon_element(I, nonzero.front());
    for (std::size_t i = 1; i < nonzero.size(); ++i)
        acc = intersect(acc, colon_element(I, nonzero[i]));
    return acc;
}

/// Ascending colon chain (I : J) ⊆ (I : J²) ⊆ … until two consecutive terms
/// agree; returns the stable ideal and the exponent at stabilization.
inline std::pair<Ideal, unsigned> saturate(const Ideal& I, const Ideal& J,
                                           unsigned max_steps = 256) {
    Ideal current = I;
    for (unsigned e = 0; e < max_steps; ++e) {
        Ideal next = colon_ideal(current, J);
        if (ideal_equal(next, current)) return {current, e};
        current = next;
    }
    throw CeilingError("saturate: no stabilization within " + std::to_string(max_steps) +
                       " steps");
}

/// Contraction of I (with its defining ideal) to the subring without the
/// given prefix of variables. The result lives in a plain polynomial ring on
/// the remaining variables.
inline Ideal eliminate(const Ideal& I, std::size_t block) {
    const auto& vars = I.ring()->variables();
    if (block > vars.size()) throw Error("eliminate: block exceeds arity");
    std::vector<std::string> rest(vars.begin() + block, vars.end());
    RingPtr subring = make_polynomial_ring(rest, I.ring()->active_order());
    std::vector<Polynomial> gens = detail::eliminate_block(
        detail::with_defining(I), I.ring()->arity(), block, I.ring()->active_order());
    return Ideal(subring, std::move(gens));
}

/// Minimal generator list: no member lies in the ideal of the others.
inline Ideal minimalize(const Ideal& I) {
    auto def = I.ring()->defining_basis();
    std::vector<Polynomial> gens;
    for (const Polynomial& g : I.generators()) {
        Polynomial r = normal_form(g, *def);
        if (!r.is_zero()) gens.push_back(std::move(r));
    }
    detail::sort_canonically(gens, I.ring()->active_order());
    // Iteratively drop generators contained in the ideal of the rest.
    for (std::size_t i = gens.size(); i-- > 0;) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (j != i) others.push_back(gens[j]);
        Ideal rest_ideal(I.ring(), others);
        if (rest_ideal.contains(gens[i])) gens.erase(gens.begin() + std::ptrdiff_t(i));
    }
    return Ideal(I.ring(), std::move(gens));
}

}  // namespace socle
