#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "socle/error.hpp"

namespace socle {

using Exponent = std::int32_t;

/// Monomial exponents, one non-negative entry per ambient variable.
/// Exponents are capped at the machine-integer width; overflow on
/// arithmetic is a hard error, never a wraparound.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::size_t arity) : entries_(arity, 0) {}
    explicit ExponentVector(std::vector<Exponent> entries) : entries_(std::move(entries)) {
        for (Exponent e : entries_)
            if (e < 0) throw Error("exponent vector: negative entry");
    }

    std::size_t arity() const { return entries_.size(); }
    Exponent operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<Exponent>& entries() const { return entries_; }

    void set(std::size_t i, Exponent value) {
        if (value < 0) throw Error("exponent vector: negative entry");
        entries_[i] = value;
    }

    std::int64_t total_degree() const {
        std::int64_t d = 0;
        for (Exponent e : entries_) d += e;
        return d;
    }

    bool is_one() const {
        for (Exponent e : entries_)
            if (e != 0) return false;
        return true;
    }

    ExponentVector plus(const ExponentVector& other) const {
        require_same_arity(other);
        ExponentVector r(arity());
        for (std::size_t i = 0; i < arity(); ++i) {
            std::int64_t sum = std::int64_t(entries_[i]) + other.entries_[i];
            if (sum > std::numeric_limits<Exponent>::max())
                throw Error("exponent vector: overflow");
            r.entries_[i] = Exponent(sum);
        }
        return r;
    }

    /// Componentwise difference; requires other to divide *this.
    ExponentVector minus(const ExponentVector& other) const {
        require_same_arity(other);
        ExponentVector r(arity());
        for (std::size_t i = 0; i < arity(); ++i) {
            if (entries_[i] < other.entries_[i])
                throw Error("exponent vector: subtraction below zero");
            r.entries_[i] = entries_[i] - other.entries_[i];
        }
        return r;
    }

    bool divides(const ExponentVector& other) const {
        require_same_arity(other);
        for (std::size_t i = 0; i < arity(); ++i)
            if (entries_[i] > other.entries_[i]) return false;
        return true;
    }

    ExponentVector lcm(const ExponentVector& other) const {
        require_same_arity(other);
        ExponentVector r(arity());
        for (std::size_t i = 0; i < arity(); ++i)
            r.entries_[i] = std::max(entries_[i], other.entries_[i]);
        return r;
    }

    /// Container ordering (plain lexicographic on entries); unrelated to
    /// any monomial order, used only for deterministic keying.
    friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

private:
    void require_same_arity(const ExponentVector& other) const {
        if (arity() != other.arity()) throw Error("exponent vector: arity mismatch");
    }

    std::vector<Exponent> entries_;
};

enum class OrderKind { Lex, GrevLex, Elimination };

/// A monomial order: total, multiplicative, well-founded on non-negative
/// exponents. Elimination(k) makes the first k variables strictly dominate
/// the rest (graded reverse-lexicographic within each block).
struct MonomialOrder {
    OrderKind kind = OrderKind::GrevLex;
    std::size_t block = 0;  // size of the leading block, Elimination only

    static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
    static MonomialOrder grevlex() { return {OrderKind::GrevLex, 0}; }
    static MonomialOrder elimination(std::size_t block_size) {
        return {OrderKind::Elimination, block_size};
    }

    friend auto operator<=>(const MonomialOrder&, const MonomialOrder&) = default;
    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

inline std::string to_string(const MonomialOrder& ord) {
    switch (ord.kind) {
        case OrderKind::Lex: return "lex";
        case OrderKind::GrevLex: return "grevlex";
        case OrderKind::Elimination: return "elim(" + std::to_string(ord.block) + ")";
    }
    return "?";
}

namespace detail {

inline std::strong_ordering compare_lex_range(const ExponentVector& u, const ExponentVector& v,
                                              std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
        if (u[i] != v[i]) return u[i] <=> v[i];
    }
    return std::strong_ordering::equal;
}

inline std::strong_ordering compare_grevlex_range(const ExponentVector& u,
                                                  const ExponentVector& v, std::size_t lo,
                                                  std::size_t hi) {
    std::int64_t du = 0, dv = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        du += u[i];
        dv += v[i];
    }
    if (du != dv) return du <=> dv;
    // Degree tie: the last differing exponent decides, reversed.
    for (std::size_t i = hi; i-- > lo;) {
        if (u[i] != v[i]) return v[i] <=> u[i];
    }
    return std::strong_ordering::equal;
}

}  // namespace detail

inline std::strong_ordering compare(const ExponentVector& u, const ExponentVector& v,
                                    const MonomialOrder& ord) {
    if (u.arity() != v.arity()) throw Error("compare: arity mismatch");
    switch (ord.kind) {
        case OrderKind::Lex:
            return detail::compare_lex_range(u, v, 0, u.arity());
        case OrderKind::GrevLex:
            return detail::compare_grevlex_range(u, v, 0, u.arity());
        case OrderKind::Elimination: {
            if (ord.block > u.arity()) throw Error("compare: elimination block exceeds arity");
            auto head = detail::compare_grevlex_range(u, v, 0, ord.block);
            if (head != std::strong_ordering::equal) return head;
            return detail::compare_grevlex_range(u, v, ord.block, u.arity());
        }
    }
    throw Error("compare: unknown order kind");
}

}  // namespace socle
