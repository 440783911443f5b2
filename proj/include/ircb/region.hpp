#pragma once

#include <array>
#include <vector>

namespace ircb {

// Coefficient pair (a1, a2) of a half-plane a1*R1 + a2*R2 <= b. Every bound
// produced by this library uses one of the five families in kFamilies.
struct BoundFamily {
    int a1 = 0;
    int a2 = 0;
    friend bool operator==(const BoundFamily&, const BoundFamily&) = default;
};

inline constexpr std::array<BoundFamily, 5> kFamilies{
    BoundFamily{1, 0}, BoundFamily{0, 1}, BoundFamily{1, 1},
    BoundFamily{2, 1}, BoundFamily{1, 2}};

// Index of fam in kFamilies, -1 if not in the vocabulary.
int family_index(BoundFamily fam);

struct HalfPlane {
    BoundFamily fam;
    double b = 0;
};

struct RatePoint {
    double r1 = 0;
    double r2 = 0;
};

// Intersection of half-planes over nonnegative rate pairs (R1, R2). Planes
// are kept in insertion order; several planes may share a family. Vertex
// enumeration requires both single-rate families so the region is bounded.
class RateRegion {
  public:
    RateRegion() = default;
    explicit RateRegion(std::vector<HalfPlane> planes);

    void add(BoundFamily fam, double b);
    void add(const HalfPlane& p) { add(p.fam, p.b); }
    const std::vector<HalfPlane>& planes() const { return planes_; }

    // Tightest bound per family, +infinity for absent families, indexed as
    // kFamilies.
    std::array<double, 5> canonical_bounds() const;
    // Region with at most one plane per family (the tightest).
    RateRegion canonical() const;

    // True iff some tightest bound is negative (the origin is cut off).
    bool empty() const;
    // True iff both single-rate families are present.
    bool bounded() const;

    // Counterclockwise vertex list starting at the origin, axis intercepts
    // included, deduplicated at 1e-9. Throws std::domain_error when the
    // region is empty or unbounded.
    std::vector<RatePoint> vertices() const;

    bool contains(RatePoint p, double tol) const;

    // Max of w1*R1 + w2*R2 over the region (attained at a vertex).
    double max_weighted(double w1, double w2) const;

    // Max of a1*R1 + a2*R2 over the region.
    double support(BoundFamily fam) const;

  private:
    std::vector<HalfPlane> planes_;
};

// Tightest five-family region containing every input region: per family the
// bound is the largest support value among the inputs.
RateRegion hull_union(const std::vector<RateRegion>& regions);

// Smallest g >= 0 such that every vertex of outer, shifted by (-g, -g) and
// clipped at the axes, lies in inner.
double gap_per_dim(const RateRegion& outer, const RateRegion& inner);

// Largest per-family deficit between the tightest planes of outer and inner,
// normalized by a1 + a2; families absent from either side are skipped.
// This compares the stated bounds plane by plane, not the region shapes.
double family_gap_per_dim(const RateRegion& outer, const RateRegion& inner);

}  // namespace ircb
