#include "plgroup/plmap.hpp"

#include <algorithm>
#include <stdexcept>

namespace plgroup {

namespace {

bool collinear(const Node& a, const Node& b, const Node& c) {
    return (b.y - a.y) * (c.x - b.x) == (c.y - b.y) * (b.x - a.x);
}

std::vector<Node> canonicalize(std::vector<Node> nodes) {
    if (nodes.size() < 2) throw std::invalid_argument("PLMap: needs at least two nodes");
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        if (!(nodes[i].x < nodes[i + 1].x))
            throw std::invalid_argument("PLMap: x-coordinates not strictly increasing");
        if (!(nodes[i].y < nodes[i + 1].y))
            throw std::invalid_argument("PLMap: y-coordinates not strictly increasing");
    }
    std::vector<Node> out;
    out.reserve(nodes.size());
    out.push_back(nodes.front());
    for (std::size_t i = 1; i + 1 < nodes.size(); ++i) {
        if (!collinear(out.back(), nodes[i], nodes[i + 1])) out.push_back(nodes[i]);
    }
    out.push_back(nodes.back());
    return out;
}

}  // namespace

PLMap::PLMap(std::vector<Node> nodes) : nodes_(canonicalize(std::move(nodes))) {}

PLMap PLMap::identity(const Interval& domain) {
    return PLMap({{domain.lo, domain.lo}, {domain.hi, domain.hi}});
}

PLMap PLMap::affine_map(const Interval& domain, const Interval& range) {
    return PLMap({{domain.lo, range.lo}, {domain.hi, range.hi}});
}

bool PLMap::is_identity() const {
    return nodes_.size() == 2 && nodes_.front().y == nodes_.front().x &&
           nodes_.back().y == nodes_.back().x;
}

Rat PLMap::eval(const Rat& x) const {
    if (x < nodes_.front().x || x > nodes_.back().x)
        throw std::domain_error("PLMap::eval: point outside domain");
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x,
                               [](const Rat& v, const Node& n) { return v < n.x; });
    std::size_t hi = static_cast<std::size_t>(it - nodes_.begin());
    if (hi == nodes_.size()) return nodes_.back().y;
    if (hi == 0) return nodes_.front().y;
    const Node& a = nodes_[hi - 1];
    const Node& b = nodes_[hi];
    return a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x);
}

Rat PLMap::eval_inverse(const Rat& y) const {
    if (y < nodes_.front().y || y > nodes_.back().y)
        throw std::domain_error("PLMap::eval_inverse: point outside range");
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), y,
                               [](const Rat& v, const Node& n) { return v < n.y; });
    std::size_t hi = static_cast<std::size_t>(it - nodes_.begin());
    if (hi == nodes_.size()) return nodes_.back().x;
    if (hi == 0) return nodes_.front().x;
    const Node& a = nodes_[hi - 1];
    const Node& b = nodes_[hi];
    return a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y);
}

Rat PLMap::slope_right_at(const Rat& x) const {
    if (x < nodes_.front().x || x >= nodes_.back().x)
        throw std::domain_error("PLMap::slope_right_at: no segment to the right");
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x,
                               [](const Rat& v, const Node& n) { return v < n.x; });
    std::size_t hi = static_cast<std::size_t>(it - nodes_.begin());
    const Node& a = nodes_[hi - 1];
    const Node& b = nodes_[hi];
    return (b.y - a.y) / (b.x - a.x);
}

Rat PLMap::slope_left_at(const Rat& x) const {
    if (x <= nodes_.front().x || x > nodes_.back().x)
        throw std::domain_error("PLMap::slope_left_at: no segment to the left");
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), x,
                               [](const Node& n, const Rat& v) { return n.x < v; });
    std::size_t hi = static_cast<std::size_t>(it - nodes_.begin());
    const Node& a = nodes_[hi - 1];
    const Node& b = nodes_[hi];
    return (b.y - a.y) / (b.x - a.x);
}

std::vector<Rat> PLMap::breakpoints() const {
    std::vector<Rat> out;
    for (std::size_t i = 1; i + 1 < nodes_.size(); ++i) out.push_back(nodes_[i].x);
    return out;
}

PLMap pl_compose(const PLMap& f, const PLMap& g) {
    if (f.range() != g.domain())
        throw std::domain_error("pl_compose: range of first map must equal domain of second");
    std::vector<Rat> xs;
    for (const Node& n : f.nodes()) xs.push_back(n.x);
    for (const Node& n : g.nodes()) xs.push_back(f.eval_inverse(n.x));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<Node> nodes;
    nodes.reserve(xs.size());
    for (const Rat& x : xs) nodes.push_back({x, g.eval(f.eval(x))});
    return PLMap(std::move(nodes));
}

PLMap pl_invert(const PLMap& f) {
    std::vector<Node> nodes;
    nodes.reserve(f.nodes().size());
    for (const Node& n : f.nodes()) nodes.push_back({n.y, n.x});
    return PLMap(std::move(nodes));
}

PLMap pl_pow(const PLMap& f, long k) {
    if (k == 0) return PLMap::identity(f.domain());
    if (f.domain() != f.range())
        throw std::domain_error("pl_pow: requires domain == range");
    PLMap base = k > 0 ? f : pl_invert(f);
    long n = k > 0 ? k : -k;
    PLMap acc = base;
    for (long i = 1; i < n; ++i) acc = pl_compose(acc, base);
    return acc;
}

FixedSets pl_fixed_points(const PLMap& f) {
    FixedSets out;
    const auto& ns = f.nodes();
    // Collect fixed pieces segment by segment, then merge.
    std::vector<std::pair<Rat, Rat>> pieces;  // [a,b] with a<=b; a==b is a point
    for (std::size_t i = 0; i + 1 < ns.size(); ++i) {
        const Node& a = ns[i];
        const Node& b = ns[i + 1];
        Rat sx = b.x - a.x;
        Rat sy = b.y - a.y;
        if (sx == sy) {
            if (a.y == a.x) pieces.emplace_back(a.x, b.x);  // identity segment
            // parallel to diagonal, off it: nothing
        } else {
            // solve a.y + s(x - a.x) = x with s = sy/sx
            Rat xstar = (a.y * sx - a.x * sy) / (sx - sy);
            if (a.x <= xstar && xstar <= b.x) pieces.emplace_back(xstar, xstar);
        }
    }
    std::sort(pieces.begin(), pieces.end(),
              [](const auto& p, const auto& q) { return p.first < q.first; });
    std::vector<std::pair<Rat, Rat>> merged;
    for (auto& p : pieces) {
        if (!merged.empty() && p.first <= merged.back().second) {
            if (p.second > merged.back().second) merged.back().second = p.second;
        } else {
            merged.push_back(p);
        }
    }
    for (auto& p : merged) {
        if (p.first == p.second)
            out.isolated.push_back(p.first);
        else
            out.fixed_intervals.emplace_back(p.first, p.second);
    }
    return out;
}

std::vector<Interval> pl_support(const PLMap& f) {
    if (!f.fixes_endpoints())
        throw std::domain_error("pl_support: map must fix its domain endpoints");
    FixedSets fs = pl_fixed_points(f);
    // complement of the fixed set inside the domain
    std::vector<std::pair<Rat, Rat>> fixed;
    for (const Rat& p : fs.isolated) fixed.emplace_back(p, p);
    for (const Interval& iv : fs.fixed_intervals) fixed.emplace_back(iv.lo, iv.hi);
    std::sort(fixed.begin(), fixed.end(),
              [](const auto& p, const auto& q) { return p.first < q.first; });
    std::vector<Interval> out;
    Rat cur = f.domain().lo;
    for (auto& p : fixed) {
        if (p.first > cur) out.emplace_back(cur, p.first);
        if (p.second > cur) cur = p.second;
    }
    if (cur < f.domain().hi) out.emplace_back(cur, f.domain().hi);
    return out;
}

bool pl_support_hull(const PLMap& f, Rat& u, Rat& v) {
    auto sup = pl_support(f);
    if (sup.empty()) return false;
    u = sup.front().lo;
    v = sup.back().hi;
    return true;
}

PLMap pl_iota_conjugate(const PLMap& f) {
    if (f.domain() != unit_interval() || f.range() != unit_interval())
        throw std::domain_error("pl_iota_conjugate: requires a self-map of [0,1]");
    std::vector<Node> nodes;
    nodes.reserve(f.nodes().size());
    for (auto it = f.nodes().rbegin(); it != f.nodes().rend(); ++it)
        nodes.push_back({Rat(1) - it->x, Rat(1) - it->y});
    return PLMap(std::move(nodes));
}

PLMap pl_rescale(const PLMap& f, const Interval& target, RescaleMode mode) {
    if (mode == RescaleMode::Isometry && target.length() != f.domain().length())
        throw std::domain_error("pl_rescale: isometry mode requires equal lengths");
    if (f.domain() != f.range())
        throw std::domain_error("pl_rescale: requires domain == range");
    Rat scale = target.length() / f.domain().length();
    std::vector<Node> nodes;
    nodes.reserve(f.nodes().size());
    const Rat& lo = f.domain().lo;
    for (const Node& n : f.nodes())
        nodes.push_back({target.lo + (n.x - lo) * scale, target.lo + (n.y - lo) * scale});
    return PLMap(std::move(nodes));
}

PLMap pl_restrict(const PLMap& f, const Interval& sub) {
    if (!f.domain().contains(sub)) throw std::domain_error("pl_restrict: not a subinterval");
    std::vector<Node> nodes;
    nodes.push_back({sub.lo, f.eval(sub.lo)});
    for (const Node& n : f.nodes())
        if (sub.lo < n.x && n.x < sub.hi) nodes.push_back({n.x, n.y});
    nodes.push_back({sub.hi, f.eval(sub.hi)});
    return PLMap(std::move(nodes));
}

PLMap pl_extend_identity(const PLMap& f, const Interval& big) {
    if (!big.contains(f.domain()))
        throw std::domain_error("pl_extend_identity: target does not contain domain");
    if (!f.fixes_endpoints())
        throw std::domain_error("pl_extend_identity: map must fix its endpoints");
    std::vector<Node> nodes;
    if (big.lo < f.domain().lo) nodes.push_back({big.lo, big.lo});
    for (const Node& n : f.nodes()) nodes.push_back(n);
    if (big.hi > f.domain().hi) nodes.push_back({big.hi, big.hi});
    return PLMap(std::move(nodes));
}

PLMap pl_glue(const std::vector<PLMap>& pieces) {
    if (pieces.empty()) throw std::invalid_argument("pl_glue: no pieces");
    std::vector<Node> nodes;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const auto& ns = pieces[i].nodes();
        if (i == 0) {
            nodes.insert(nodes.end(), ns.begin(), ns.end());
        } else {
            if (nodes.back().x != ns.front().x || nodes.back().y != ns.front().y)
                throw std::invalid_argument("pl_glue: pieces do not meet");
            nodes.insert(nodes.end(), ns.begin() + 1, ns.end());
        }
    }
    return PLMap(std::move(nodes));
}

PLMap pl_translate(const PLMap& f, const Rat& delta) {
    std::vector<Node> nodes;
    nodes.reserve(f.nodes().size());
    for (const Node& n : f.nodes()) nodes.push_back({n.x + delta, n.y + delta});
    return PLMap(std::move(nodes));
}

}  // namespace plgroup
