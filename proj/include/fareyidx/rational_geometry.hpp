#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace fareyidx {

using Rational = mpq_class;

struct RationalPoint {
    Rational x, y;

    friend bool operator==(const RationalPoint& a, const RationalPoint& b) {
        return a.x == b.x && a.y == b.y;
    }
};

// Convex polygon with exact rational vertices in counterclockwise order.
// Degenerate polygons (fewer than 3 vertices or zero area) are represented
// as empty and dropped by the region layer.
struct ConvexPolygon {
    std::vector<RationalPoint> v;

    bool empty() const { return v.size() < 3; }
    Rational area() const;  // shoelace; nonnegative for CCW input

    // Orders the vertices CCW and removes repeats and collinear runs.
    void normalize();
};

ConvexPolygon make_polygon(std::vector<RationalPoint> pts);

// Keeps the part of the polygon with a*x + b*y + c >= 0 (closed half-plane).
ConvexPolygon clip_halfplane(const ConvexPolygon& poly, const Rational& a, const Rational& b,
                             const Rational& c);

ConvexPolygon poly_intersect(const ConvexPolygon& p, const ConvexPolygon& q);

// Image under the linear map (x,y) -> (a x + b y, c x + d y); ad - bc = 1
// keeps the orientation, so the result is still CCW.
ConvexPolygon apply_linear(const ConvexPolygon& p, std::int64_t a, std::int64_t b, std::int64_t c,
                           std::int64_t d);

// Finite union of convex polygons with pairwise disjoint interiors.
struct Region {
    std::vector<ConvexPolygon> polys;

    bool empty() const { return polys.empty(); }
    Rational area() const;
    void add(ConvexPolygon p);

    // Minimum vertex coordinate over all pieces; region must be nonempty.
    Rational min_x() const;
    Rational min_y() const;
};

Region region_intersect(const Region& a, const Region& b);
Region region_intersect(const Region& a, const ConvexPolygon& b);
Rational region_area(const Region& r);

// Membership against the closure of the region; boundary points count as
// inside. Callers with half-open conventions filter afterwards.
bool region_contains_closed(const Region& r, const RationalPoint& p);

}  // namespace fareyidx
