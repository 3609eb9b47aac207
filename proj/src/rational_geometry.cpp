#include "fareyidx/rational_geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace fareyidx {

namespace {

// Cross product (b - a) x (c - a); > 0 means c lies left of a->b.
Rational cross(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

}  // namespace

Rational ConvexPolygon::area() const {
    if (v.size() < 3) return Rational(0);
    Rational twice(0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& p = v[i];
        const auto& q = v[(i + 1) % v.size()];
        twice += p.x * q.y - q.x * p.y;
    }
    twice /= 2;
    twice.canonicalize();
    return twice;
}

void ConvexPolygon::normalize() {
    // Drop consecutive repeats.
    std::vector<RationalPoint> pts;
    for (const auto& p : v) {
        if (pts.empty() || !(pts.back() == p)) pts.push_back(p);
    }
    while (pts.size() > 1 && pts.front() == pts.back()) pts.pop_back();
    // Drop collinear middle vertices.
    std::vector<RationalPoint> out;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = pts[(i + n - 1) % n];
        const auto& b = pts[i];
        const auto& c = pts[(i + 1) % n];
        if (n >= 3 && cross(a, b, c) == 0) continue;
        out.push_back(b);
    }
    v = std::move(out);
    if (v.size() < 3 || area() == 0) v.clear();
}

ConvexPolygon make_polygon(std::vector<RationalPoint> pts) {
    ConvexPolygon p{std::move(pts)};
    if (p.v.size() >= 3) {
        // Enforce CCW orientation before cleanup.
        Rational twice(0);
        for (std::size_t i = 0; i < p.v.size(); ++i) {
            const auto& a = p.v[i];
            const auto& b = p.v[(i + 1) % p.v.size()];
            twice += a.x * b.y - b.x * a.y;
        }
        if (twice < 0) std::reverse(p.v.begin(), p.v.end());
    }
    p.normalize();
    return p;
}

ConvexPolygon clip_halfplane(const ConvexPolygon& poly, const Rational& a, const Rational& b,
                             const Rational& c) {
    if (poly.empty()) return {};
    std::vector<RationalPoint> out;
    const std::size_t n = poly.v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const RationalPoint& p = poly.v[i];
        const RationalPoint& q = poly.v[(i + 1) % n];
        const Rational fp = a * p.x + b * p.y + c;
        const Rational fq = a * q.x + b * q.y + c;
        if (fp >= 0) out.push_back(p);
        if ((fp > 0 && fq < 0) || (fp < 0 && fq > 0)) {
            const Rational t = fp / (fp - fq);
            out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
        }
    }
    ConvexPolygon res{std::move(out)};
    res.normalize();
    return res;
}

ConvexPolygon poly_intersect(const ConvexPolygon& p, const ConvexPolygon& q) {
    if (p.empty() || q.empty()) return {};
    ConvexPolygon acc = p;
    const std::size_t n = q.v.size();
    for (std::size_t i = 0; i < n && !acc.empty(); ++i) {
        const RationalPoint& s = q.v[i];
        const RationalPoint& e = q.v[(i + 1) % n];
        // Inside of a CCW edge s->e is the left half-plane.
        const Rational a = -(e.y - s.y);
        const Rational b = e.x - s.x;
        const Rational c = -(a * s.x + b * s.y);
        acc = clip_halfplane(acc, a, b, c);
    }
    return acc;
}

ConvexPolygon apply_linear(const ConvexPolygon& p, std::int64_t a, std::int64_t b, std::int64_t c,
                           std::int64_t d) {
    ConvexPolygon out;
    out.v.reserve(p.v.size());
    for (const auto& pt : p.v)
        out.v.push_back({a * pt.x + b * pt.y, c * pt.x + d * pt.y});
    out.normalize();
    return out;
}

Rational Region::area() const {
    Rational acc(0);
    for (const auto& p : polys) acc += p.area();
    acc.canonicalize();
    return acc;
}

void Region::add(ConvexPolygon p) {
    if (!p.empty()) polys.push_back(std::move(p));
}

Rational Region::min_x() const {
    if (empty()) throw std::logic_error("Region::min_x: empty region");
    Rational m = polys.front().v.front().x;
    for (const auto& p : polys)
        for (const auto& pt : p.v)
            if (pt.x < m) m = pt.x;
    return m;
}

Rational Region::min_y() const {
    if (empty()) throw std::logic_error("Region::min_y: empty region");
    Rational m = polys.front().v.front().y;
    for (const auto& p : polys)
        for (const auto& pt : p.v)
            if (pt.y < m) m = pt.y;
    return m;
}

Region region_intersect(const Region& a, const Region& b) {
    Region out;
    for (const auto& pa : a.polys)
        for (const auto& pb : b.polys) out.add(poly_intersect(pa, pb));
    return out;
}

Region region_intersect(const Region& a, const ConvexPolygon& b) {
    Region out;
    for (const auto& pa : a.polys) out.add(poly_intersect(pa, b));
    return out;
}

Rational region_area(const Region& r) { return r.area(); }

bool region_contains_closed(const Region& r, const RationalPoint& p) {
    for (const auto& poly : r.polys) {
        bool inside = true;
        const std::size_t n = poly.v.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (cross(poly.v[i], poly.v[(i + 1) % n], p) < 0) {
                inside = false;
                break;
            }
        }
        if (inside) return true;
    }
    return false;
}

}  // namespace fareyidx
