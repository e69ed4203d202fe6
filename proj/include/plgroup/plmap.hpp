#pragma once

#include "plgroup/rational.hpp"

#include <vector>

namespace plgroup {

struct Node {
    Rat x;
    Rat y;
};

inline bool operator==(const Node& a, const Node& b) { return a.x == b.x && a.y == b.y; }
inline bool operator!=(const Node& a, const Node& b) { return !(a == b); }

struct FixedSets {
    std::vector<Rat> isolated;
    std::vector<Interval> fixed_intervals;
};

enum class RescaleMode { Isometry, Affine };

// Orientation-preserving piecewise-linear homeomorphism of a closed rational
// interval, stored as its canonical node sequence (no interior node where the
// slope does not change). Two maps are equal as functions iff their node
// sequences are identical.
class PLMap {
public:
    explicit PLMap(std::vector<Node> nodes);

    static PLMap identity(const Interval& domain);
    // Unique affine orientation-preserving bijection domain -> range.
    static PLMap affine_map(const Interval& domain, const Interval& range);

    const std::vector<Node>& nodes() const { return nodes_; }
    Interval domain() const { return Interval(nodes_.front().x, nodes_.back().x); }
    Interval range() const { return Interval(nodes_.front().y, nodes_.back().y); }

    bool is_identity() const;
    bool fixes_endpoints() const {
        return nodes_.front().y == nodes_.front().x && nodes_.back().y == nodes_.back().x;
    }

    Rat eval(const Rat& x) const;
    Rat eval_inverse(const Rat& y) const;

    // Slope of the segment immediately right/left of x.
    Rat slope_right_at(const Rat& x) const;
    Rat slope_left_at(const Rat& x) const;

    // Interior nodes (slope changes).
    std::vector<Rat> breakpoints() const;

    friend bool operator==(const PLMap& a, const PLMap& b) { return a.nodes_ == b.nodes_; }
    friend bool operator!=(const PLMap& a, const PLMap& b) { return !(a == b); }

private:
    std::vector<Node> nodes_;
};

// Apply f, then g (right action). Requires range(f) == domain(g).
PLMap pl_compose(const PLMap& f, const PLMap& g);
PLMap pl_invert(const PLMap& f);
PLMap pl_pow(const PLMap& f, long k);

// Maximal open intervals where f(x) != x. Requires f to fix its endpoints.
// The returned Intervals carry the endpoints of open intervals.
std::vector<Interval> pl_support(const PLMap& f);

// Hull [u,v] of the support, or nothing when f is the identity.
bool pl_support_hull(const PLMap& f, Rat& u, Rat& v);

FixedSets pl_fixed_points(const PLMap& f);

// iota(t) = 1-t on [0,1]; returns iota . f . iota. Requires domain [0,1].
PLMap pl_iota_conjugate(const PLMap& f);

// Conjugate of f by the orientation-preserving affine bijection domain -> target.
// Isometry mode requires |target| == |domain|.
PLMap pl_rescale(const PLMap& f, const Interval& target,
                 RescaleMode mode = RescaleMode::Isometry);

// Restriction to [a,b] inside the domain.
PLMap pl_restrict(const PLMap& f, const Interval& sub);

// Extends f (which must fix its endpoints) by the identity to the larger interval.
PLMap pl_extend_identity(const PLMap& f, const Interval& big);

// Glue contiguous pieces: dom_i.hi == dom_{i+1}.lo and matching values there.
PLMap pl_glue(const std::vector<PLMap>& pieces);

// Translate graph by delta in both coordinates.
PLMap pl_translate(const PLMap& f, const Rat& delta);

}  // namespace plgroup
