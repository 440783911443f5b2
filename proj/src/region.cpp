#include "ircb/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ircb {

namespace {
constexpr double kTol = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

int family_index(BoundFamily fam) {
    for (int i = 0; i < static_cast<int>(kFamilies.size()); ++i)
        if (kFamilies[i] == fam) return i;
    return -1;
}

RateRegion::RateRegion(std::vector<HalfPlane> planes)
    : planes_(std::move(planes)) {
    for (const auto& p : planes_)
        if (family_index(p.fam) < 0 || !std::isfinite(p.b))
            throw std::invalid_argument("RateRegion: bad half-plane");
}

void RateRegion::add(BoundFamily fam, double b) {
    if (family_index(fam) < 0 || !std::isfinite(b))
        throw std::invalid_argument("RateRegion: bad half-plane");
    planes_.push_back({fam, b});
}

std::array<double, 5> RateRegion::canonical_bounds() const {
    std::array<double, 5> c;
    c.fill(kInf);
    for (const auto& p : planes_) {
        int i = family_index(p.fam);
        c[i] = std::min(c[i], p.b);
    }
    return c;
}

RateRegion RateRegion::canonical() const {
    auto c = canonical_bounds();
    RateRegion r;
    for (int i = 0; i < 5; ++i)
        if (c[i] < kInf) r.add(kFamilies[i], c[i]);
    return r;
}

bool RateRegion::empty() const {
    for (double b : canonical_bounds())
        if (b < 0.0) return true;
    return false;
}

bool RateRegion::bounded() const {
    auto c = canonical_bounds();
    return c[0] < kInf && c[1] < kInf;
}

bool RateRegion::contains(RatePoint p, double tol) const {
    if (p.r1 < -tol || p.r2 < -tol) return false;
    for (const auto& h : planes_)
        if (h.fam.a1 * p.r1 + h.fam.a2 * p.r2 > h.b + tol) return false;
    return true;
}

std::vector<RatePoint> RateRegion::vertices() const {
    if (empty()) throw std::domain_error("vertices: empty region");
    if (!bounded()) throw std::domain_error("vertices: unbounded region");

    // Constraint lines a1*r1 + a2*r2 = b, including the two axes.
    struct Line {
        double a1, a2, b;
    };
    std::vector<Line> lines{{1, 0, 0}, {0, 1, 0}};
    for (const auto& h : planes_)
        lines.push_back({double(h.fam.a1), double(h.fam.a2), h.b});

    std::vector<RatePoint> pts;
    for (size_t i = 0; i < lines.size(); ++i) {
        for (size_t j = i + 1; j < lines.size(); ++j) {
            double det = lines[i].a1 * lines[j].a2 - lines[j].a1 * lines[i].a2;
            if (std::fabs(det) < 1e-12) continue;
            RatePoint p;
            p.r1 = (lines[i].b * lines[j].a2 - lines[j].b * lines[i].a2) / det;
            p.r2 = (lines[i].a1 * lines[j].b - lines[j].a1 * lines[i].b) / det;
            if (contains(p, kTol)) pts.push_back(p);
        }
    }

    // Deduplicate.
    std::vector<RatePoint> uniq;
    for (const auto& p : pts) {
        bool dup = false;
        for (const auto& q : uniq)
            if (std::fabs(p.r1 - q.r1) <= kTol && std::fabs(p.r2 - q.r2) <= kTol)
                dup = true;
        if (!dup) uniq.push_back(p);
    }

    // Counterclockwise from the origin: along the r1 axis first, then up the
    // frontier. Horizontal edges lie only on the axis (left to right) and at
    // the top (right to left).
    std::sort(uniq.begin(), uniq.end(), [](RatePoint a, RatePoint b) {
        if (std::fabs(a.r2 - b.r2) > kTol) return a.r2 < b.r2;
        if (a.r2 <= kTol) return a.r1 < b.r1;
        return a.r1 > b.r1;
    });
    return uniq;
}

double RateRegion::max_weighted(double w1, double w2) const {
    if (w1 < 0 || w2 < 0 || (w1 == 0 && w2 == 0))
        throw std::invalid_argument("max_weighted: bad weights");
    double best = -kInf;
    for (const auto& p : vertices())
        best = std::max(best, w1 * p.r1 + w2 * p.r2);
    return best;
}

double RateRegion::support(BoundFamily fam) const {
    return max_weighted(fam.a1, fam.a2);
}

RateRegion hull_union(const std::vector<RateRegion>& regions) {
    if (regions.empty())
        throw std::invalid_argument("hull_union: no regions");
    RateRegion out;
    for (const auto& fam : kFamilies) {
        double b = -kInf;
        for (const auto& r : regions) b = std::max(b, r.support(fam));
        out.add(fam, b);
    }
    return out;
}

namespace {

// Minimal g >= 0 with a1*max(p1-g,0) + a2*max(p2-g,0) <= b. The left side is
// continuous, piecewise linear and nonincreasing in g, and reaches -b <= 0 at
// g = max(p1,p2), so a root exists whenever b >= 0.
double min_shift(double a1, double a2, double b, double p1, double p2) {
    if (a1 * p1 + a2 * p2 <= b) return 0.0;
    double lo = std::min(p1, p2), hi = std::max(p1, p2);
    double g = (a1 * p1 + a2 * p2 - b) / (a1 + a2);
    if (g <= lo) return g;
    // One coordinate is exhausted; only the larger one still contributes.
    double a = (p1 <= p2) ? a2 : a1;
    double p = (p1 <= p2) ? p2 : p1;
    // a > 0 here: with a == 0 the constraint is already met at g = lo.
    return std::min(p - b / a, hi);
}

}  // namespace

double gap_per_dim(const RateRegion& outer, const RateRegion& inner) {
    if (outer.empty() || inner.empty())
        throw std::domain_error("gap_per_dim: empty region");
    auto planes = inner.canonical().planes();
    double gap = 0.0;
    for (const auto& v : outer.vertices()) {
        double g = 0.0;
        for (const auto& h : planes)
            g = std::max(g, min_shift(h.fam.a1, h.fam.a2, h.b,
                                      std::max(v.r1, 0.0),
                                      std::max(v.r2, 0.0)));
        gap = std::max(gap, g);
    }
    return gap;
}

double family_gap_per_dim(const RateRegion& outer, const RateRegion& inner) {
    auto co = outer.canonical_bounds();
    auto ci = inner.canonical_bounds();
    double gap = 0.0;
    for (int i = 0; i < 5; ++i) {
        if (co[i] == kInf || ci[i] == kInf) continue;
        double denom = kFamilies[i].a1 + kFamilies[i].a2;
        gap = std::max(gap, (co[i] - ci[i]) / denom);
    }
    return std::max(gap, 0.0);
}

}  // namespace ircb
