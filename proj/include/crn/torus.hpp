#ifndef CRN_TORUS_HPP
#define CRN_TORUS_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "crn/weighted_graph.hpp"

namespace crn::torus {

using Coord = std::int64_t;
using Count = std::uint64_t;

/**
 * Unoriented isotopy class of an essential simple closed curve on the torus,
 * stored as a coprime pair (a, b) with a > 0, or a == 0 and b > 0.
 */
class PrimitiveClass {
public:
    /// Normalizes the sign; throws std::invalid_argument for (0,0) or non-coprime input.
    static PrimitiveClass make(Coord a, Coord b);

    Coord a() const { return a_; }
    Coord b() const { return b_; }

    /// |a| + |b|, i.e. the intersection with (1,0) plus the intersection with (0,1).
    Count norm() const;

    friend bool operator==(const PrimitiveClass&, const PrimitiveClass&) = default;
    friend auto operator<=>(const PrimitiveClass&, const PrimitiveClass&) = default;

private:
    PrimitiveClass(Coord a, Coord b) : a_(a), b_(b) {}
    Coord a_;
    Coord b_;
};

/// |a d - b c|. Exact for coordinates up to 2^31 in magnitude.
Count intersection_number(const PrimitiveClass& u, const PrimitiveClass& v);

/// Integer matrix [[p, q], [r, s]] with p s - q r = 1.
class SL2Matrix {
public:
    static SL2Matrix make(Coord p, Coord q, Coord r, Coord s);
    static SL2Matrix identity() { return SL2Matrix(1, 0, 0, 1); }

    Coord p() const { return p_; }
    Coord q() const { return q_; }
    Coord r() const { return r_; }
    Coord s() const { return s_; }

    SL2Matrix inverse() const { return SL2Matrix(s_, -q_, -r_, p_); }
    friend SL2Matrix operator*(const SL2Matrix& x, const SL2Matrix& y);
    friend bool operator==(const SL2Matrix&, const SL2Matrix&) = default;

private:
    SL2Matrix(Coord p, Coord q, Coord r, Coord s) : p_(p), q_(q), r_(r), s_(s) {}
    Coord p_, q_, r_, s_;
};

PrimitiveClass apply(const SL2Matrix& m, const PrimitiveClass& v);

/**
 * Finite set of distinct curve classes in a fixed order, with the crossing
 * number cached on construction.
 */
class TorusSystem {
public:
    TorusSystem() = default;
    /// Throws std::invalid_argument if two entries are the same class.
    static TorusSystem make(std::vector<PrimitiveClass> curves);

    const std::vector<PrimitiveClass>& curves() const { return curves_; }
    std::size_t size() const { return curves_.size(); }
    Count crossing_number() const { return crossing_; }

    /// Same classes, sorted lexicographically by (a, b).
    TorusSystem sorted() const;

    friend bool operator==(const TorusSystem& x, const TorusSystem& y) { return x.curves_ == y.curves_; }
    friend auto operator<=>(const TorusSystem& x, const TorusSystem& y) { return x.curves_ <=> y.curves_; }

private:
    std::vector<PrimitiveClass> curves_;
    Count crossing_ = 0;
};

Count crossing_number(const TorusSystem& s);
TorusSystem apply(const SL2Matrix& m, const TorusSystem& s);

/// Raised by canonical_system when no pair of curves meets exactly once.
class NoUnimodularPair : public std::domain_error {
public:
    NoUnimodularPair() : std::domain_error("no unimodular pair") {}
};

/**
 * Canonical representative of the SL2(Z)-orbit of a system containing a
 * once-intersecting pair: the lexicographically least sorted image over every
 * ordered once-intersecting pair (u, v), sent to (1,0) and (0,1).
 */
TorusSystem canonical_system(const TorusSystem& s);
std::optional<TorusSystem> try_canonical_system(const TorusSystem& s);

/**
 * Fallback for systems without a once-intersecting pair: least sorted image
 * over all SL2 matrices with entries in [-entry_bound, entry_bound]. Not a
 * complete orbit invariant; two equivalent systems related only by larger
 * matrices may receive different forms.
 */
TorusSystem canonical_system_bounded(const TorusSystem& s, Coord entry_bound);

graph::WeightedIntersectionGraph intersection_graph(const TorusSystem& s);

/// The curves w1..w6 = (1,0), (0,1), (1,1), (-1,1), (2,1), (1,2).
const std::array<PrimitiveClass, 6>& reference_curves();

/// {w1, ..., wk} for 0 <= k <= 6.
TorusSystem reference_system(std::size_t k);

}  // namespace crn::torus

#endif
