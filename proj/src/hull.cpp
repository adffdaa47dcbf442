#include "semcom/hull.hpp"

#include <algorithm>
#include <stdexcept>

namespace semcom {

Rational cross(const Point2& o, const Point2& a, const Point2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

namespace {

std::vector<Point2> sorted_unique(std::vector<Point2> pts) {
    std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// keep_sign = -1 builds the lower chain, +1 the upper chain.
std::vector<Point2> half_hull(std::vector<Point2> pts, int keep_sign) {
    pts = sorted_unique(pts);
    if (pts.empty()) return pts;
    if (pts.front().x == pts.back().x) {
        // Degenerate vertical set: the chain is a single extreme point.
        return {keep_sign < 0 ? pts.front() : pts.back()};
    }
    std::vector<Point2> h;
    for (const Point2& p : pts) {
        while (h.size() >= 2) {
            Rational c = cross(h[h.size() - 2], h[h.size() - 1], p);
            bool pop = (keep_sign < 0) ? !(c > Rational(0)) : !(c < Rational(0));
            if (!pop) break;
            h.pop_back();
        }
        h.push_back(p);
    }
    // Sorting by (x, y asc) can leave a co-vertical extreme at either end of
    // the chain; trim it so every x appears once.
    auto dedupe_x = [&](std::vector<Point2>& c) {
        std::vector<Point2> out;
        for (const Point2& p : c) {
            if (!out.empty() && out.back().x == p.x) {
                bool replace = (keep_sign < 0) ? (p.y < out.back().y)
                                               : (p.y > out.back().y);
                if (replace) out.back() = p;
            } else {
                out.push_back(p);
            }
        }
        return out;
    };
    return dedupe_x(h);
}

}  // namespace

std::vector<Point2> lower_hull(std::vector<Point2> pts) {
    return half_hull(std::move(pts), -1);
}

std::vector<Point2> upper_hull(std::vector<Point2> pts) {
    return half_hull(std::move(pts), +1);
}

PiecewiseLinear::PiecewiseLinear(std::vector<Point2> vertices)
    : v_(std::move(vertices)) {
    if (v_.empty())
        throw std::invalid_argument("piecewise-linear: no vertices");
    for (std::size_t i = 1; i < v_.size(); ++i)
        if (!(v_[i - 1].x < v_[i].x))
            throw std::invalid_argument("piecewise-linear: x not increasing");
}

bool PiecewiseLinear::in_domain(const Rational& x) const {
    return x >= min_x() && x <= max_x();
}

Rational PiecewiseLinear::at(const Rational& x) const {
    if (!in_domain(x))
        throw std::domain_error("piecewise-linear: query outside domain");
    auto it = std::lower_bound(
        v_.begin(), v_.end(), x,
        [](const Point2& p, const Rational& q) { return p.x < q; });
    if (it != v_.end() && it->x == x) return it->y;
    const Point2& b = *it;
    const Point2& a = *(it - 1);
    return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
}

std::vector<Point2> normalize_chain(const std::vector<Point2>& chain) {
    std::vector<Point2> nodup;
    for (const Point2& p : chain)
        if (nodup.empty() || !(nodup.back() == p)) nodup.push_back(p);
    if (nodup.size() <= 2) return nodup;
    std::vector<Point2> out;
    out.push_back(nodup.front());
    for (std::size_t i = 1; i + 1 < nodup.size(); ++i) {
        if (cross(out.back(), nodup[i], nodup[i + 1]) != Rational(0))
            out.push_back(nodup[i]);
    }
    out.push_back(nodup.back());
    return out;
}

}  // namespace semcom
