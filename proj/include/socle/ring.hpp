#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "socle/groebner.hpp"
#include "socle/polynomial.hpp"

namespace socle {

namespace detail {

/// Krull dimension of P/L for a monomial ideal L, as the largest set S of
/// variables such that no generator of L has its support inside S.
inline std::size_t dimension_of_monomial_quotient(const std::vector<ExponentVector>& lt_gens,
                                                  std::size_t arity) {
    if (arity > 24) throw Error("krull dimension: too many variables for subset search");
    for (const ExponentVector& m : lt_gens)
        if (m.is_one()) throw Error("krull dimension: unit ideal");

    std::size_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << arity); ++mask) {
        std::size_t size = std::size_t(__builtin_popcountll(mask));
        if (size <= best) continue;
        bool independent = true;
        for (const ExponentVector& m : lt_gens) {
            bool support_inside = true;
            for (std::size_t i = 0; i < arity && support_inside; ++i)
                if (m[i] > 0 && !(mask >> i & 1)) support_inside = false;
            if (support_inside) {
                independent = false;
                break;
            }
        }
        if (independent) best = size;
    }
    return best;
}

struct GbCache {
    std::mutex mu;
    std::map<MonomialOrder, std::shared_ptr<const GroebnerBasis>> entries;

    std::shared_ptr<const GroebnerBasis> get_or_compute(
        const MonomialOrder& ord, const std::vector<Polynomial>& gens, std::size_t arity) {
        {
            std::lock_guard<std::mutex> lock(mu);
            auto it = entries.find(ord);
            if (it != entries.end()) return it->second;
        }
        auto gb = std::make_shared<const GroebnerBasis>(buchberger(gens, ord, arity));
        std::lock_guard<std::mutex> lock(mu);
        auto [it, inserted] = entries.emplace(ord, gb);
        return it->second;
    }
};

}  // namespace detail

/// Graded model of a local ring: ambient polynomial ring Q[variables] modulo
/// a defining ideal, with the ideal of all variables playing the maximal
/// ideal. Immutable after construction; caches are populate-once.
class RingPresentation {
public:
    RingPresentation(std::vector<std::string> variables, std::vector<Polynomial> defining,
                     MonomialOrder order = MonomialOrder::grevlex())
        : variables_(std::move(variables)), order_(order) {
        for (Polynomial& f : defining) {
            if (f.arity() != variables_.size())
                throw Error("ring: defining generator arity mismatch");
            Polynomial g = f.order() == order_ ? std::move(f) : f.with_order(order_);
            if (!g.is_zero()) defining_.push_back(std::move(g));
        }
    }

    std::size_t arity() const { return variables_.size(); }
    const std::vector<std::string>& variables() const { return variables_; }
    const MonomialOrder& active_order() const { return order_; }
    const std::vector<Polynomial>& defining_generators() const { return defining_; }
    bool is_polynomial_ring() const { return defining_.empty(); }

    std::shared_ptr<const GroebnerBasis> defining_basis(const MonomialOrder& ord) const {
        auto gb = cache_->get_or_compute(ord, defining_, arity());
        if (gb->contains_unit()) throw Error("ring: defining ideal is the unit ideal");
        return gb;
    }
    std::shared_ptr<const GroebnerBasis> defining_basis() const { return defining_basis(order_); }

    /// Krull dimension of the quotient, via the leading-term ideal.
    std::size_t krull_dimension() const {
        {
            std::lock_guard<std::mutex> lock(dim_mu_);
            if (dim_) return *dim_;
        }
        auto gb = defining_basis();
        std::vector<ExponentVector> lts;
        lts.reserve(gb->elements.size());
        for (const Polynomial& g : gb->elements) lts.push_back(g.leading_monomial());
        std::size_t d = detail::dimension_of_monomial_quotient(lts, arity());
        std::lock_guard<std::mutex> lock(dim_mu_);
        if (!dim_) dim_ = d;
        return *dim_;
    }

    Polynomial parse(const std::string& text) const {
        return parse_polynomial(text, variables_, order_);
    }

    std::string print(const Polynomial& p) const {
        return to_string(p.order() == order_ ? p : p.with_order(order_), variables_);
    }

private:
    std::vector<std::string> variables_;
    std::vector<Polynomial> defining_;
    MonomialOrder order_;
    std::shared_ptr<detail::GbCache> cache_ = std::make_shared<detail::GbCache>();
    mutable std::mutex dim_mu_;
    mutable std::optional<std::size_t> dim_;
};

using RingPtr = std::shared_ptr<const RingPresentation>;

inline RingPtr make_ring(std::vector<std::string> variables, std::vector<Polynomial> defining,
                         MonomialOrder order = MonomialOrder::grevlex()) {
    return std::make_shared<const RingPresentation>(std::move(variables), std::move(defining),
                                                    order);
}

inline RingPtr make_polynomial_ring(std::vector<std::string> variables,
                                    MonomialOrder order = MonomialOrder::grevlex()) {
    return make_ring(std::move(variables), {}, order);
}

/// Same presented ring: shared object, or equal variables and defining data.
inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    return a->variables() == b->variables() &&
           a->defining_generators() == b->defining_generators();
}

/// An ideal of the presented quotient ring, held as ambient generators. The
/// defining ideal is implicit in every basis computation, so membership and
/// equality questions are answered in the quotient.
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
        for (Polynomial& f : generators) {
            if (f.arity() != ring_->arity()) throw Error("ideal: generator arity mismatch");
            Polynomial g =
                f.order() == ring_->active_order() ? std::move(f) : f.with_order(ring_->active_order());
            gens_.push_back(std::move(g));
        }
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

    bool is_zero_object() const {
        for (const Polynomial& g : gens_)
            if (!g.is_zero()) return false;
        return true;
    }

    /// Reduced basis of (generators) + (defining ideal) in the ambient ring.
    std::shared_ptr<const GroebnerBasis> basis(const MonomialOrder& ord) const {
        std::vector<Polynomial> all = gens_;
        const auto& def = ring_->defining_generators();
        all.insert(all.end(), def.begin(), def.end());
        return cache_->get_or_compute(ord, all, ring_->arity());
    }
    std::shared_ptr<const GroebnerBasis> basis() const { return basis(ring_->active_order()); }

    bool contains(const Polynomial& f) const {
        Polynomial g = f.order() == ring_->active_order() ? f : f.with_order(ring_->active_order());
        return ideal_membership(g, *basis());
    }

    Polynomial reduce(const Polynomial& f) const {
        Polynomial g = f.order() == ring_->active_order() ? f : f.with_order(ring_->active_order());
        return normal_form(g, *basis());
    }

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<detail::GbCache> cache_ = std::make_shared<detail::GbCache>();
};

/// The irrelevant maximal ideal (all variables).
inline Ideal irrelevant_ideal(const RingPtr& ring) {
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < ring->arity(); ++i)
        vars.push_back(Polynomial::variable(ring->arity(), i, ring->active_order()));
    return Ideal(ring, std::move(vars));
}

inline Ideal zero_ideal(const RingPtr& ring) { return Ideal(ring, {}); }

}  // namespace socle
