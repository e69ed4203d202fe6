#include "plgroup/thompson.hpp"

#include <algorithm>
#include <stdexcept>

namespace plgroup {

namespace {

PLMap make_A() {
    return PLMap({{Rat(0), Rat(0)}, {Rat(1, 4), Rat(1, 2)}, {Rat(1, 2), Rat(3, 4)}, {Rat(1), Rat(1)}});
}

PLMap make_B() {
    PLMap a = make_A();
    PLMap scaled = pl_rescale(a, Interval(Rat(1, 2), Rat(1)), RescaleMode::Affine);
    return pl_extend_identity(scaled, unit_interval());
}

PLMap make_c0() {
    return PLMap({{Rat(0), Rat(0)},
                  {Rat(1, 16), Rat(1, 8)},
                  {Rat(1, 8), Rat(3, 16)},
                  {Rat(1, 4), Rat(1, 4)},
                  {Rat(1), Rat(1)}});
}

PLMap make_phi() {
    return PLMap({{Rat(0), Rat(1, 16)}, {Rat(3, 4), Rat(13, 16)}, {Rat(1), Rat(15, 16)}});
}

// phi f phi^-1 extended by the identity to [0,1].
PLMap conj_into_collar(const PLMap& f, const PLMap& phi) {
    PLMap inv_phi = pl_invert(phi);
    PLMap inner = pl_compose(pl_compose(inv_phi, f), phi);
    return pl_extend_identity(inner, unit_interval());
}

// Inverse direction: f supported in [1/16,15/16] pulled back through phi.
PLMap conj_outof_collar(const PLMap& f, const PLMap& phi) {
    PLMap r = pl_restrict(f, phi.range());
    return pl_compose(pl_compose(phi, r), pl_invert(phi));
}

}  // namespace

const FStandardSet& standard_elements() {
    static const FStandardSet set = [] {
        PLMap A = make_A();
        PLMap B = make_B();
        PLMap c0 = make_c0();
        PLMap c1 = pl_iota_conjugate(c0);
        PLMap nu1 = pl_compose(c0, c1);
        PLMap phi = make_phi();
        PLMap nu2 = conj_into_collar(A, phi);
        PLMap nu3 = conj_into_collar(B, phi);
        return FStandardSet{A, B, c0, c1, nu1, nu2, nu3, phi};
    }();
    return set;
}

bool is_in_F(const PLMap& f) {
    if (f.domain() != unit_interval())
        throw std::domain_error("is_in_F: map must have domain [0,1]");
    if (!f.fixes_endpoints()) return false;
    const auto& ns = f.nodes();
    for (const Node& n : ns)
        if (!n.x.is_dyadic() || !n.y.is_dyadic()) return false;
    for (std::size_t i = 0; i + 1 < ns.size(); ++i) {
        Rat slope = (ns[i + 1].y - ns[i].y) / (ns[i + 1].x - ns[i].x);
        if (!slope.is_power_of_two()) return false;
    }
    return true;
}

bool is_in_F_prime(const PLMap& f) {
    if (!is_in_F(f)) return false;
    if (f.is_identity()) return true;
    const auto& ns = f.nodes();
    bool first_id = ns[0].y == ns[0].x && ns[1].y == ns[1].x;
    std::size_t k = ns.size();
    bool last_id = ns[k - 1].y == ns[k - 1].x && ns[k - 2].y == ns[k - 2].x;
    return first_id && last_id;
}

bool is_in_H(const PLMap& f) {
    if (!is_in_F(f)) return false;
    return f.slope_right_at(Rat(0)) == f.slope_left_at(Rat(1));
}

bool f_relators_hold(const PLMap& a, const PLMap& b) {
    PLMap ia = pl_invert(a);
    PLMap ib = pl_invert(b);
    PLMap u = pl_compose(a, ib);  // a b^-1
    PLMap v1 = pl_compose(pl_compose(ia, b), a);
    PLMap v2 = pl_compose(pl_compose(pl_compose(pl_compose(ia, ia), b), a), a);
    auto commutes = [&](const PLMap& x, const PLMap& y) {
        return pl_compose(x, y) == pl_compose(y, x);
    };
    return commutes(u, v1) && commutes(u, v2);
}

TreePair tree_pair_from_pl(const PLMap& f) {
    if (!is_in_F(f)) throw std::domain_error("tree_pair_from_pl: map not in F");
    TreePair tp;
    std::vector<Rat> breaks = f.breakpoints();
    auto linear_on = [&](const Interval& I) {
        for (const Rat& b : breaks)
            if (I.lo < b && b < I.hi) return false;
        return true;
    };
    // Coarsest standard dyadic partition on which f is linear with standard
    // dyadic images.
    struct Rec {
        const PLMap& f;
        TreePair& tp;
        decltype(linear_on)& lin;
        void go(const Interval& I, int depth) {
            if (depth > 64) throw std::logic_error("tree_pair_from_pl: depth overflow");
            Interval img(f.eval(I.lo), f.eval(I.hi));
            if (lin(I) && img.is_standard_dyadic()) {
                tp.domain_leaves.push_back(I);
                tp.range_leaves.push_back(img);
                return;
            }
            Rat mid = (I.lo + I.hi) / Rat(2);
            go(Interval(I.lo, mid), depth + 1);
            go(Interval(mid, I.hi), depth + 1);
        }
    } rec{f, tp, linear_on};
    rec.go(unit_interval(), 0);
    return tp;
}

PLMap pl_from_tree_pair(const TreePair& tp) {
    if (tp.domain_leaves.size() != tp.range_leaves.size() || tp.domain_leaves.empty())
        throw std::invalid_argument("pl_from_tree_pair: leaf counts differ");
    std::vector<Node> nodes;
    nodes.push_back({tp.domain_leaves.front().lo, tp.range_leaves.front().lo});
    for (std::size_t i = 0; i < tp.domain_leaves.size(); ++i) {
        if (i > 0 && (tp.domain_leaves[i].lo != tp.domain_leaves[i - 1].hi ||
                      tp.range_leaves[i].lo != tp.range_leaves[i - 1].hi))
            throw std::invalid_argument("pl_from_tree_pair: leaves not contiguous");
        nodes.push_back({tp.domain_leaves[i].hi, tp.range_leaves[i].hi});
    }
    return PLMap(std::move(nodes));
}

namespace {

struct XRun {
    long level;
    long exp;
};

// Word moving the partition onto the right-vine comb, expressed in the
// right-end copies x_level of A. Level j acts on [1 - 2^-j, 1].
std::vector<XRun> comb_word(std::vector<Interval> part) {
    const PLMap& A = standard_elements().A;
    std::vector<XRun> out;
    long level = 0;
    while (part.size() > 1) {
        long a = -part.front().length().log2_exact();
        if (a < 1) throw std::logic_error("comb_word: malformed partition");
        if (a > 1) out.push_back({level, a - 1});
        for (long step = 0; step < a - 1; ++step) {
            for (Interval& piece : part) {
                piece = Interval(A.eval(piece.lo), A.eval(piece.hi));
                if (!piece.is_standard_dyadic())
                    throw std::logic_error("comb_word: image left the dyadic grid");
            }
        }
        if (part.front() != Interval(Rat(0), Rat(1, 2)))
            throw std::logic_error("comb_word: head normalization failed");
        std::vector<Interval> rest;
        rest.reserve(part.size() - 1);
        for (std::size_t i = 1; i < part.size(); ++i)
            rest.emplace_back(part[i].lo * Rat(2) - Rat(1), part[i].hi * Rat(2) - Rat(1));
        part = std::move(rest);
        ++level;
    }
    return out;
}

void push_frun(FWord& w, char letter, long exp) {
    if (exp == 0) return;
    if (!w.empty() && w.back().letter == letter) {
        w.back().exp += exp;
        if (w.back().exp == 0) w.pop_back();
        return;
    }
    w.push_back({letter, exp});
}

// x_0 = A, x_j = A^-(j-1) B A^(j-1) for j >= 1 (words read left to right).
void append_xrun(FWord& w, const XRun& r) {
    if (r.exp == 0) return;
    if (r.level == 0) {
        push_frun(w, 'A', r.exp);
        return;
    }
    push_frun(w, 'A', -(r.level - 1));
    push_frun(w, 'B', r.exp);
    push_frun(w, 'A', r.level - 1);
}

}  // namespace

PLMap f_word_eval(const FWord& w) {
    const FStandardSet& s = standard_elements();
    PLMap acc = PLMap::identity(unit_interval());
    for (const FRun& r : w) {
        const PLMap& base = r.letter == 'A' ? s.A : s.B;
        acc = pl_compose(acc, pl_pow(base, r.exp));
    }
    return acc;
}

PLMap nu_word_eval(const NuWord& w) {
    const FStandardSet& s = standard_elements();
    PLMap acc = PLMap::identity(unit_interval());
    for (const NuRun& r : w) {
        const PLMap& base = r.gen == 1 ? s.nu1 : (r.gen == 2 ? s.nu2 : s.nu3);
        acc = pl_compose(acc, pl_pow(base, r.exp));
    }
    return acc;
}

FWord f_word_inverse(const FWord& w) {
    FWord out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) push_frun(out, it->letter, -it->exp);
    return out;
}

NuWord nu_word_inverse(const NuWord& w) {
    NuWord out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (!out.empty() && out.back().gen == it->gen) {
            out.back().exp -= it->exp;
            if (out.back().exp == 0) out.pop_back();
        } else if (it->exp != 0) {
            out.push_back({it->gen, -it->exp});
        }
    }
    return out;
}

FWord f_factorize(const PLMap& f) {
    TreePair tp = tree_pair_from_pl(f);
    std::vector<XRun> ed = comb_word(tp.domain_leaves);
    std::vector<XRun> er = comb_word(tp.range_leaves);
    FWord word;
    for (const XRun& r : ed) append_xrun(word, r);
    for (auto it = er.rbegin(); it != er.rend(); ++it) append_xrun(word, {it->level, -it->exp});
    if (f_word_eval(word) != f) throw std::logic_error("f_factorize: round trip failed");
    return word;
}

std::vector<Interval> sdi_partition(const Rat& u, const Rat& v) {
    if (!(u < v) || !u.is_dyadic() || !v.is_dyadic())
        throw std::invalid_argument("sdi_partition: needs a dyadic interval");
    std::vector<Interval> out;
    Rat cur = u;
    while (cur < v) {
        Rat len;
        if (cur.is_zero()) {
            len = Rat(1);
        } else {
            // largest 2-power aligned with cur
            len = Rat::pow2(-static_cast<long>(mpz_scan1(cur.den().get_mpz_t(), 0)));
        }
        while (cur + len > v) len = len / Rat(2);
        out.emplace_back(cur, cur + len);
        cur = cur + len;
    }
    return out;
}

Interval sdi_inside(const Rat& lo, const Rat& hi) {
    if (!(lo < hi)) throw std::invalid_argument("sdi_inside: empty interval");
    Rat len = hi - lo;
    long n = 2;
    while (Rat::pow2(-n) * Rat(4) > len) ++n;
    Rat step = Rat::pow2(-n);
    mpz_class k = (lo / step).floor_z() + 1;
    Rat a = Rat(k) * step;
    Rat b = a + step;
    Interval out(a, b);
    if (!(lo < a && b < hi)) throw std::logic_error("sdi_inside: selection failed");
    return out;
}

namespace {

// Matching standard dyadic partitions of two gaps, padded to equal counts.
void pad_to_match(std::vector<Interval>& a, std::vector<Interval>& b) {
    auto split_last = [](std::vector<Interval>& p) {
        Interval last = p.back();
        p.pop_back();
        Rat mid = (last.lo + last.hi) / Rat(2);
        p.emplace_back(last.lo, mid);
        p.emplace_back(mid, last.hi);
    };
    while (a.size() < b.size()) split_last(a);
    while (b.size() < a.size()) split_last(b);
}

PLMap transporter_direct(const std::vector<Interval>& marked_dom,
                         const std::vector<Interval>& marked_ran) {
    // Shared collar [a, 1-a] strictly containing all marked intervals.
    Rat margin(1, 2);
    for (const auto& iv : marked_dom) {
        if (iv.lo < margin) margin = iv.lo;
        if (Rat(1) - iv.hi < margin) margin = Rat(1) - iv.hi;
    }
    for (const auto& iv : marked_ran) {
        if (iv.lo < margin) margin = iv.lo;
        if (Rat(1) - iv.hi < margin) margin = Rat(1) - iv.hi;
    }
    long n = 1;
    while (Rat::pow2(-n) >= margin) ++n;
    Rat a = Rat::pow2(-n);

    std::vector<Interval> dom_parts{Interval(Rat(0), a)};
    std::vector<Interval> ran_parts{Interval(Rat(0), a)};
    Rat dcur = a;
    Rat rcur = a;
    for (std::size_t i = 0; i < marked_dom.size(); ++i) {
        auto gap_d = sdi_partition(dcur, marked_dom[i].lo);
        auto gap_r = sdi_partition(rcur, marked_ran[i].lo);
        pad_to_match(gap_d, gap_r);
        dom_parts.insert(dom_parts.end(), gap_d.begin(), gap_d.end());
        ran_parts.insert(ran_parts.end(), gap_r.begin(), gap_r.end());
        dom_parts.push_back(marked_dom[i]);
        ran_parts.push_back(marked_ran[i]);
        dcur = marked_dom[i].hi;
        rcur = marked_ran[i].hi;
    }
    auto gap_d = sdi_partition(dcur, Rat(1) - a);
    auto gap_r = sdi_partition(rcur, Rat(1) - a);
    pad_to_match(gap_d, gap_r);
    dom_parts.insert(dom_parts.end(), gap_d.begin(), gap_d.end());
    ran_parts.insert(ran_parts.end(), gap_r.begin(), gap_r.end());
    dom_parts.emplace_back(Rat(1) - a, Rat(1));
    ran_parts.emplace_back(Rat(1) - a, Rat(1));

    std::vector<Node> nodes;
    nodes.push_back({Rat(0), Rat(0)});
    for (std::size_t i = 0; i < dom_parts.size(); ++i)
        nodes.push_back({dom_parts[i].hi, ran_parts[i].hi});
    return PLMap(std::move(nodes));
}

void check_marked(const Interval& iv, const char* who) {
    if (!iv.is_standard_dyadic() || iv.lo <= Rat(0) || iv.hi >= Rat(1))
        throw std::domain_error(std::string(who) +
                                ": needs standard dyadic intervals with closure in (0,1)");
}

}  // namespace

PLMap interval_transporter(const Interval& I, const Interval& J) {
    check_marked(I, "interval_transporter");
    check_marked(J, "interval_transporter");
    if (I == J) return PLMap::identity(unit_interval());
    // Fixed family convention: the map for the lexicographically larger pair is
    // the inverse of the map for the swapped pair.
    if (std::make_pair(J.lo, J.hi) < std::make_pair(I.lo, I.hi))
        return pl_invert(interval_transporter(J, I));
    return transporter_direct({I}, {J});
}

PLMap interval_pair_transporter(const Interval& I1, const Interval& I2,
                                const Interval& J1, const Interval& J2) {
    check_marked(I1, "interval_pair_transporter");
    check_marked(I2, "interval_pair_transporter");
    check_marked(J1, "interval_pair_transporter");
    check_marked(J2, "interval_pair_transporter");
    if (!(I1.hi < I2.lo) || !(J1.hi < J2.lo))
        throw std::domain_error("interval_pair_transporter: interval pairs must be ordered");
    return transporter_direct({I1, I2}, {J1, J2});
}

PLMap bump(const Interval& I) {
    Interval K = sdi_inside(I.lo, I.hi);
    PLMap hump = pl_rescale(standard_elements().A, K, RescaleMode::Affine);
    return pl_extend_identity(hump, unit_interval());
}

PLMap symmetric_bump(const std::vector<Interval>& region) {
    if (region.empty()) throw std::invalid_argument("symmetric_bump: empty region");
    for (const Interval& piece : region) {
        Interval mirror(Rat(1) - piece.hi, Rat(1) - piece.lo);
        if (std::find(region.begin(), region.end(), mirror) == region.end())
            throw std::invalid_argument("symmetric_bump: region is not symmetric");
    }
    for (const Interval& piece : region) {
        if (piece.lo >= Rat(1, 2)) continue;
        Rat hi = piece.hi < Rat(1, 2) ? piece.hi : Rat(1, 2);
        if (!(piece.lo < hi)) continue;
        Interval K = sdi_inside(piece.lo, hi);
        PLMap g = pl_extend_identity(pl_rescale(standard_elements().A, K, RescaleMode::Affine),
                                     unit_interval());
        return pl_compose(g, pl_iota_conjugate(g));
    }
    throw std::invalid_argument("symmetric_bump: no usable piece left of 1/2");
}

namespace {

long depth_iterate(const PLMap& f, bool strict) {
    Rat u(0), v(0);
    if (!pl_support_hull(f, u, v)) return 0;
    const PLMap& nu1 = standard_elements().nu1;
    const Rat lo(1, 16), hi(15, 16);
    for (long m = 0; m <= 100000; ++m) {
        bool ok = strict ? (u > lo && v < hi) : (u >= lo && v <= hi);
        if (ok) return m;
        u = nu1.eval(u);
        v = nu1.eval(v);
    }
    throw std::logic_error("conjugation_depth: iteration budget exceeded");
}

}  // namespace

long conjugation_depth(const PLMap& f) {
    if (!is_in_F_prime(f)) throw std::domain_error("conjugation_depth: map not in F'");
    return depth_iterate(f, false);
}

long conjugation_depth_strict(const PLMap& f) {
    if (!is_in_F_prime(f)) throw std::domain_error("conjugation_depth_strict: map not in F'");
    return depth_iterate(f, true);
}

PLMap nu1_conjugate(const PLMap& f, long m) {
    PLMap c = pl_pow(standard_elements().nu1, m);
    return pl_compose(pl_compose(pl_invert(c), f), c);
}

AlternatingFactorization alternating_factorization(const PLMap& f) {
    if (!is_in_F(f)) throw std::domain_error("alternating_factorization: map not in F");
    Rat u(0), v(0);
    AlternatingFactorization out;
    if (pl_support_hull(f, u, v)) {
        if (u < Rat(1, 16) || v > Rat(15, 16))
            throw std::domain_error("alternating_factorization: support outside [1/16,15/16]");
        PLMap g = conj_outof_collar(f, standard_elements().phi);
        FWord w = f_factorize(g);
        for (const FRun& r : w) {
            out.word.push_back({r.letter == 'A' ? 2 : 3, r.exp});
            (r.letter == 'A' ? out.sum_nu2 : out.sum_nu3) += r.exp;
        }
    }
    if (nu_word_eval(out.word) != f)
        throw std::logic_error("alternating_factorization: round trip failed");
    return out;
}

}  // namespace plgroup
