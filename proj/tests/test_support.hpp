#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "socle/polynomial.hpp"

namespace socle::testing {

// Fixed default seed so every property run is reproducible.
inline constexpr std::uint64_t kDefaultSeed = 20260810;

inline ExponentVector ev(std::vector<Exponent> entries) {
    return ExponentVector{std::move(entries)};
}

inline ExponentVector ev2(Exponent a, Exponent b) { return ev({a, b}); }

class RandomPolynomials {
public:
    explicit RandomPolynomials(std::uint64_t seed = kDefaultSeed) : rng_(seed) {}

    ExponentVector monomial(std::size_t arity, Exponent max_exp = 6) {
        std::vector<Exponent> e(arity);
        std::uniform_int_distribution<Exponent> dist(0, max_exp);
        for (auto& x : e) x = dist(rng_);
        return ExponentVector{std::move(e)};
    }

    Rational coefficient() {
        std::uniform_int_distribution<long> num(-9, 9);
        std::uniform_int_distribution<long> den(1, 4);
        return make_rational(num(rng_), den(rng_));
    }

    Polynomial polynomial(std::size_t arity, MonomialOrder order = MonomialOrder::grevlex(),
                          std::size_t max_terms = 6, Exponent max_exp = 6) {
        std::uniform_int_distribution<std::size_t> count(0, max_terms);
        std::vector<Term> terms;
        std::size_t n = count(rng_);
        for (std::size_t i = 0; i < n; ++i) terms.push_back({coefficient(), monomial(arity, max_exp)});
        return Polynomial::from_terms(arity, order, std::move(terms));
    }

    std::size_t pick(std::size_t bound) {
        std::uniform_int_distribution<std::size_t> dist(0, bound - 1);
        return dist(rng_);
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace socle::testing
