#include "crn/torus.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace crn::torus {

namespace {

using Wide = __int128;

Coord narrow(Wide x) {
    if (x > std::numeric_limits<Coord>::max() || x < std::numeric_limits<Coord>::min()) {
        throw std::overflow_error("torus: coordinate overflow");
    }
    return static_cast<Coord>(x);
}

Count magnitude(Wide x) { return static_cast<Count>(x < 0 ? -x : x); }

}  // namespace

PrimitiveClass PrimitiveClass::make(Coord a, Coord b) {
    if (a == 0 && b == 0) throw std::invalid_argument("primitive class: (0,0) is not a curve");
    if (a == std::numeric_limits<Coord>::min() || b == std::numeric_limits<Coord>::min()) {
        throw std::overflow_error("primitive class: coordinate out of range");
    }
    if (std::gcd(a, b) != 1) {
        throw std::invalid_argument("primitive class: (" + std::to_string(a) + "," + std::to_string(b) +
                                    ") is not primitive");
    }
    if (a < 0 || (a == 0 && b < 0)) return PrimitiveClass(-a, -b);
    return PrimitiveClass(a, b);
}

Count PrimitiveClass::norm() const { return magnitude(a_) + magnitude(b_); }

Count intersection_number(const PrimitiveClass& u, const PrimitiveClass& v) {
    return magnitude(Wide(u.a()) * v.b() - Wide(u.b()) * v.a());
}

SL2Matrix SL2Matrix::make(Coord p, Coord q, Coord r, Coord s) {
    if (Wide(p) * s - Wide(q) * r != 1) throw std::invalid_argument("SL2 matrix: determinant is not 1");
    return SL2Matrix(p, q, r, s);
}

SL2Matrix operator*(const SL2Matrix& x, const SL2Matrix& y) {
    return SL2Matrix(narrow(Wide(x.p_) * y.p_ + Wide(x.q_) * y.r_), narrow(Wide(x.p_) * y.q_ + Wide(x.q_) * y.s_),
                     narrow(Wide(x.r_) * y.p_ + Wide(x.s_) * y.r_), narrow(Wide(x.r_) * y.q_ + Wide(x.s_) * y.s_));
}

PrimitiveClass apply(const SL2Matrix& m, const PrimitiveClass& v) {
    // SL2 maps primitive vectors to primitive vectors, so make() cannot reject.
    return PrimitiveClass::make(narrow(Wide(m.p()) * v.a() + Wide(m.q()) * v.b()),
                                narrow(Wide(m.r()) * v.a() + Wide(m.s()) * v.b()));
}

TorusSystem TorusSystem::make(std::vector<PrimitiveClass> curves) {
    TorusSystem s;
    for (std::size_t i = 0; i < curves.size(); ++i) {
        for (std::size_t j = i + 1; j < curves.size(); ++j) {
            if (curves[i] == curves[j]) {
                throw std::invalid_argument("torus system: curves " + std::to_string(i) + " and " +
                                            std::to_string(j) + " are the same class");
            }
            s.crossing_ += intersection_number(curves[i], curves[j]);
        }
    }
    s.curves_ = std::move(curves);
    return s;
}

TorusSystem TorusSystem::sorted() const {
    TorusSystem out = *this;
    std::sort(out.curves_.begin(), out.curves_.end());
    return out;
}

Count crossing_number(const TorusSystem& s) { return s.crossing_number(); }

TorusSystem apply(const SL2Matrix& m, const TorusSystem& s) {
    std::vector<PrimitiveClass> image;
    image.reserve(s.size());
    for (const auto& c : s.curves()) image.push_back(apply(m, c));
    return TorusSystem::make(std::move(image));
}

std::optional<TorusSystem> try_canonical_system(const TorusSystem& s) {
    const auto& cs = s.curves();
    std::optional<TorusSystem> best;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        for (std::size_t j = 0; j < cs.size(); ++j) {
            if (i == j || intersection_number(cs[i], cs[j]) != 1) continue;
            for (int su : {1, -1}) {
                for (int sv : {1, -1}) {
                    const Coord ua = su * cs[i].a(), ub = su * cs[i].b();
                    const Coord va = sv * cs[j].a(), vb = sv * cs[j].b();
                    if (Wide(ua) * vb - Wide(ub) * va != 1) continue;
                    // Inverse of the matrix with columns (ua,ub), (va,vb).
                    const auto m = SL2Matrix::make(vb, -va, -ub, ua);
                    auto image = apply(m, s).sorted();
                    if (!best || image < *best) best = std::move(image);
                }
            }
        }
    }
    return best;
}

TorusSystem canonical_system(const TorusSystem& s) {
    auto c = try_canonical_system(s);
    if (!c) throw NoUnimodularPair();
    return *c;
}

TorusSystem canonical_system_bounded(const TorusSystem& s, Coord entry_bound) {
    if (entry_bound < 1) throw std::invalid_argument("canonical_system_bounded: entry bound must be positive");
    TorusSystem best = s.sorted();
    for (Coord p = -entry_bound; p <= entry_bound; ++p)
        for (Coord q = -entry_bound; q <= entry_bound; ++q)
            for (Coord r = -entry_bound; r <= entry_bound; ++r)
                for (Coord t = -entry_bound; t <= entry_bound; ++t) {
                    if (Wide(p) * t - Wide(q) * r != 1) continue;
                    auto image = apply(SL2Matrix::make(p, q, r, t), s).sorted();
                    if (image < best) best = std::move(image);
                }
    return best;
}

graph::WeightedIntersectionGraph intersection_graph(const TorusSystem& s) {
    const auto& cs = s.curves();
    graph::WeightedIntersectionGraph g(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j) g.set_weight(i, j, intersection_number(cs[i], cs[j]));
    return g;
}

const std::array<PrimitiveClass, 6>& reference_curves() {
    static const std::array<PrimitiveClass, 6> w{
        PrimitiveClass::make(1, 0), PrimitiveClass::make(0, 1), PrimitiveClass::make(1, 1),
        PrimitiveClass::make(-1, 1), PrimitiveClass::make(2, 1), PrimitiveClass::make(1, 2)};
    return w;
}

TorusSystem reference_system(std::size_t k) {
    if (k > 6) throw std::out_of_range("reference_system: only w1..w6 are defined");
    const auto& w = reference_curves();
    return TorusSystem::make(std::vector<PrimitiveClass>(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k)));
}

}  // namespace crn::torus
