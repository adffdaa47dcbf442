#pragma once
// Exact convex-hull chains and piecewise-linear envelopes over rational
// points. No epsilons anywhere; collinear interior vertices are dropped.

#include <vector>

#include "semcom/rational.hpp"

namespace semcom {

struct Point2 {
    Rational x;
    Rational y;
    bool operator==(const Point2& o) const = default;
};

// Signed area test: > 0 when o->a->b turns counterclockwise.
Rational cross(const Point2& o, const Point2& a, const Point2& b);

// Convex chains left to right. Duplicates and collinear interior points are
// removed. A vertical input collapses to its extreme point; a single point
// yields a one-element chain.
std::vector<Point2> lower_hull(std::vector<Point2> pts);
std::vector<Point2> upper_hull(std::vector<Point2> pts);

// Piecewise-linear function given by vertices with strictly increasing x
// (a single vertex is allowed). Evaluation is exact linear interpolation.
class PiecewiseLinear {
public:
    PiecewiseLinear() = default;
    explicit PiecewiseLinear(std::vector<Point2> vertices);

    const std::vector<Point2>& vertices() const { return v_; }
    Rational min_x() const { return v_.front().x; }
    Rational max_x() const { return v_.back().x; }
    bool in_domain(const Rational& x) const;
    // Throws std::domain_error outside [min_x, max_x].
    Rational at(const Rational& x) const;

private:
    std::vector<Point2> v_;
};

// Drops consecutive duplicates, then interior vertices collinear with their
// neighbours. Used to put greedy chains and hull chains in the same
// canonical form before comparing.
std::vector<Point2> normalize_chain(const std::vector<Point2>& chain);

}  // namespace semcom
