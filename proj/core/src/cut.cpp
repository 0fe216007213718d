#include "hahnfield/cut.hpp"

#include "hahnfield/errors.hpp"

#include <algorithm>
#include <sstream>

namespace hahnfield {

namespace {

bool prefix_less(const GroupElement& a, const GroupElement& b, std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return false;
}

bool prefix_eq(const GroupElement& a, const GroupElement& b, std::size_t k) {
    for (std::size_t i = 0; i < k; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

GroupElement zero_tail(GroupElement pos, std::size_t level) {
    for (std::size_t i = level; i < pos.rank(); ++i) pos[i] = 0;
    return pos;
}

// Unit of the prefix space Z^level, embedded as a full vector.
GroupElement prefix_unit(const Group& g, std::size_t level) {
    GroupElement u(std::vector<Rat>(g.rank(), Rat(0)));
    u[level - 1] = 1;
    return u;
}

// q in the divisible hull of the denoted group?
bool in_denoted_group(const Group& g, const Rat& q) {
    switch (g.descriptor().kind) {
        case GroupKind::Integers:
            return is_integer(q);
        case GroupKind::PDivisibleHullOfZ: {
            // the denoted group is Z[1/p^inf], unbounded depth
            Int d = rat_den(q);
            unsigned p = g.descriptor().p;
            while (d > 1) {
                if (d % p != 0) return false;
                d /= p;
            }
            return true;
        }
        case GroupKind::RationalSubgroup:
            return is_integer(q / g.cyclic_unit());
        case GroupKind::LexPower:
            return false;
    }
    return false;
}

// Cut sitting at rational position q, approached from below (left set {x < q}).
Cut from_below(const Group& g, const Rat& q) {
    if (in_denoted_group(g, q)) return principal_cut(g, GroupElement(q), /*plus=*/false);
    return gap_cut(g, q);
}

// Cut sitting at rational position q, approached from above (left set {x <= q}).
Cut from_above(const Group& g, const Rat& q) {
    if (in_denoted_group(g, q)) return principal_cut(g, GroupElement(q), /*plus=*/true);
    return gap_cut(g, q);
}

GroupElement add_pos(const GroupElement& a, const GroupElement& b) {
    GroupElement out = a;
    for (std::size_t i = 0; i < out.rank(); ++i) out[i] += b[i];
    return out;
}

GroupElement sub_pos(const GroupElement& a, const GroupElement& b) {
    GroupElement out = a;
    for (std::size_t i = 0; i < out.rank(); ++i) out[i] -= b[i];
    return out;
}

struct NormalForm {
    GroupElement pos;
    std::size_t level; // == rank for principal cuts
};

// Over a discrete group every cut has a plus name: gamma^- == (gamma - u)^+
// and (gamma + H_k)^- == (gamma - e_k + H_k)^+.
NormalForm plus_normal(const Group& g, const Cut& c) {
    switch (c.kind) {
        case CutKind::PrincipalPlus:
            return {c.pos, g.rank()};
        case CutKind::PrincipalMinus:
            return {g.sub(c.pos, g.min_positive()), g.rank()};
        case CutKind::SubgroupPlus:
            return {c.pos, c.level};
        case CutKind::SubgroupMinus:
            return {sub_pos(c.pos, prefix_unit(g, c.level)), c.level};
        default:
            raise(ErrorCode::InvalidArgument, "plus_normal on infinite or gap cut");
    }
}

NormalForm minus_normal(const Group& g, const Cut& c) {
    switch (c.kind) {
        case CutKind::PrincipalMinus:
            return {c.pos, g.rank()};
        case CutKind::PrincipalPlus:
            return {g.add(c.pos, g.min_positive()), g.rank()};
        case CutKind::SubgroupMinus:
            return {c.pos, c.level};
        case CutKind::SubgroupPlus:
            return {add_pos(c.pos, prefix_unit(g, c.level)), c.level};
        default:
            raise(ErrorCode::InvalidArgument, "minus_normal on infinite or gap cut");
    }
}

Cut make_plus_form(const Group& g, const GroupElement& pos, std::size_t level) {
    if (level == g.rank()) return principal_cut(g, pos, /*plus=*/true);
    return subgroup_cut(g, pos, level, /*plus=*/true);
}

Cut make_minus_form(const Group& g, const GroupElement& pos, std::size_t level) {
    if (level == g.rank()) return principal_cut(g, pos, /*plus=*/false);
    return subgroup_cut(g, pos, level, /*plus=*/false);
}

// Comparison key: extended coordinates (-inf < rational < +inf) plus a final
// tie-break. Discrete groups identify the two principal names of a cut.
struct ExtCoord {
    int inf = 0; // -1, 0, +1
    Rat value;
};

struct CutKey {
    std::vector<ExtCoord> coords;
    int eps = 0;
};

int cmp_ext(const ExtCoord& a, const ExtCoord& b) {
    if (a.inf != b.inf) return a.inf < b.inf ? -1 : 1;
    if (a.inf != 0) return 0;
    if (a.value < b.value) return -1;
    if (a.value > b.value) return 1;
    return 0;
}

CutKey comparison_key(const Group& g, const Cut& c) {
    std::size_t n = g.rank();
    CutKey key;
    key.coords.resize(n);
    auto fill_from = [&](const GroupElement& pos, std::size_t level, int tail_inf) {
        for (std::size_t i = 0; i < n; ++i) {
            if (i < level) key.coords[i] = ExtCoord{0, pos[i]};
            else key.coords[i] = ExtCoord{tail_inf, Rat(0)};
        }
    };
    switch (c.kind) {
        case CutKind::NegInf:
            for (auto& e : key.coords) e = ExtCoord{-1, Rat(0)};
            key.eps = -1;
            return key;
        case CutKind::PosInf:
            for (auto& e : key.coords) e = ExtCoord{+1, Rat(0)};
            key.eps = +1;
            return key;
        case CutKind::Gap:
            fill_from(c.pos, n, 0);
            key.eps = 0;
            return key;
        case CutKind::PrincipalPlus:
            fill_from(c.pos, n, 0);
            key.eps = +1;
            return key;
        case CutKind::PrincipalMinus:
            if (g.dense()) {
                fill_from(c.pos, n, 0);
                key.eps = -1;
            } else {
                fill_from(g.sub(c.pos, g.min_positive()), n, 0);
                key.eps = +1;
            }
            return key;
        case CutKind::SubgroupPlus:
            fill_from(c.pos, c.level, +1);
            key.eps = +1;
            return key;
        case CutKind::SubgroupMinus:
            fill_from(sub_pos(c.pos, prefix_unit(g, c.level)), c.level, +1);
            key.eps = +1;
            return key;
    }
    raise(ErrorCode::InvalidArgument, "unreachable");
}

} // namespace

Cut principal_cut(const Group& g, const GroupElement& pos, bool plus) {
    if (!g.contains(pos))
        raise(ErrorCode::BoundExceeded, "principal cut position not representable in the group");
    return Cut{plus ? CutKind::PrincipalPlus : CutKind::PrincipalMinus, pos, 0};
}

Cut subgroup_cut(const Group& g, const GroupElement& pos, std::size_t level, bool plus) {
    if (g.descriptor().kind != GroupKind::LexPower)
        raise(ErrorCode::InvalidArgument, "subgroup cuts exist only over lexicographic powers");
    if (level == 0 || level > g.rank())
        raise(ErrorCode::InvalidArgument, "subgroup cut level out of range");
    if (level == g.rank()) return principal_cut(g, pos, plus);
    GroupElement canon = zero_tail(pos, level);
    if (!g.contains(canon))
        raise(ErrorCode::InvalidArgument, "subgroup cut position not in the group");
    return Cut{plus ? CutKind::SubgroupPlus : CutKind::SubgroupMinus, canon, level};
}

Cut gap_cut(const Group& g, const Rat& q) {
    switch (g.descriptor().kind) {
        case GroupKind::LexPower:
            raise(ErrorCode::InvalidArgument, "gap cuts need a rank-1 group");
        case GroupKind::Integers:
            raise(ErrorCode::InvalidArgument, "gap cuts are only valid over dense descriptors");
        case GroupKind::RationalSubgroup: {
            // finitely generated subgroups of Q are cyclic, hence discrete:
            // the would-be gap collapses to a principal cut
            Rat ratio = q / g.cyclic_unit();
            if (is_integer(ratio))
                raise(ErrorCode::InvalidArgument, "gap position is a group member");
            Rat below = g.cyclic_unit() * Rat(rat_floor(ratio));
            return principal_cut(g, GroupElement(below), /*plus=*/true);
        }
        case GroupKind::PDivisibleHullOfZ: {
            if (in_denoted_group(g, q)) {
                if (g.contains(GroupElement(q)))
                    raise(ErrorCode::InvalidArgument, "gap position is a group member");
                raise(ErrorCode::UnrepresentableCut,
                      "cut at " + rat_to_string(q) + " sits at a group member beyond max_depth");
            }
            return Cut{CutKind::Gap, GroupElement(q), 0};
        }
    }
    raise(ErrorCode::InvalidArgument, "unreachable");
}

bool elem_below_cut(const Group& g, const GroupElement& gamma, const Cut& cut) {
    switch (cut.kind) {
        case CutKind::NegInf: return false;
        case CutKind::PosInf: return true;
        case CutKind::PrincipalMinus: return g.cmp(gamma, cut.pos) == Ordering::LT;
        case CutKind::PrincipalPlus: return g.cmp(gamma, cut.pos) != Ordering::GT;
        case CutKind::SubgroupMinus: return prefix_less(gamma, cut.pos, cut.level);
        case CutKind::SubgroupPlus:
            return prefix_less(gamma, cut.pos, cut.level) || prefix_eq(gamma, cut.pos, cut.level);
        case CutKind::Gap: return gamma[0] < cut.pos[0];
    }
    return false;
}

Ordering cmp_cut_elem(const Group& g, const Cut& cut, const GroupElement& gamma) {
    return elem_below_cut(g, gamma, cut) ? Ordering::GT : Ordering::LT;
}

Ordering cmp_cut(const Group& g, const Cut& a, const Cut& b) {
    CutKey ka = comparison_key(g, a);
    CutKey kb = comparison_key(g, b);
    for (std::size_t i = 0; i < ka.coords.size(); ++i) {
        int c = cmp_ext(ka.coords[i], kb.coords[i]);
        if (c < 0) return Ordering::LT;
        if (c > 0) return Ordering::GT;
    }
    if (ka.eps < kb.eps) return Ordering::LT;
    if (ka.eps > kb.eps) return Ordering::GT;
    return Ordering::EQ;
}

bool cut_eq(const Group& g, const Cut& a, const Cut& b) { return cmp_cut(g, a, b) == Ordering::EQ; }
bool cut_leq(const Group& g, const Cut& a, const Cut& b) { return cmp_cut(g, a, b) != Ordering::GT; }

Cut left_sum(const Group& g, const Cut& a, const Cut& b) {
    // -inf absorbs (one empty left set empties the sum set), then +inf
    if (a.kind == CutKind::NegInf || b.kind == CutKind::NegInf) return Cut::neg_inf();
    if (a.kind == CutKind::PosInf || b.kind == CutKind::PosInf) return Cut::pos_inf();
    if (g.dense()) {
        Rat pos = a.pos[0] + b.pos[0];
        if (a.kind == CutKind::PrincipalPlus && b.kind == CutKind::PrincipalPlus)
            return principal_cut(g, GroupElement(pos), /*plus=*/true);
        return from_below(g, pos);
    }
    NormalForm na = plus_normal(g, a);
    NormalForm nb = plus_normal(g, b);
    std::size_t level = std::min(na.level, nb.level);
    return make_plus_form(g, add_pos(na.pos, nb.pos), level);
}

Cut right_sum(const Group& g, const Cut& a, const Cut& b) {
    if (a.kind == CutKind::PosInf || b.kind == CutKind::PosInf) return Cut::pos_inf();
    if (a.kind == CutKind::NegInf || b.kind == CutKind::NegInf) return Cut::neg_inf();
    if (g.dense()) {
        Rat pos = a.pos[0] + b.pos[0];
        if (a.kind == CutKind::PrincipalMinus && b.kind == CutKind::PrincipalMinus)
            return principal_cut(g, GroupElement(pos), /*plus=*/false);
        return from_above(g, pos);
    }
    NormalForm na = minus_normal(g, a);
    NormalForm nb = minus_normal(g, b);
    std::size_t level = std::min(na.level, nb.level);
    return make_minus_form(g, add_pos(na.pos, nb.pos), level);
}

Cut cut_diff(const Group& g, const Cut& a, const Cut& b) {
    // {lambda - gamma : lambda > A, gamma < B}^-
    if (a.kind == CutKind::PosInf || b.kind == CutKind::NegInf) return Cut::pos_inf(); // empty set
    if (a.kind == CutKind::NegInf || b.kind == CutKind::PosInf) return Cut::neg_inf(); // unbounded below
    if (g.dense()) {
        Rat pos = a.pos[0] - b.pos[0];
        if (a.kind == CutKind::PrincipalMinus && b.kind == CutKind::PrincipalPlus)
            return principal_cut(g, GroupElement(pos), /*plus=*/false); // min attained
        return from_above(g, pos);
    }
    NormalForm na = minus_normal(g, a);
    NormalForm nb = plus_normal(g, b);
    std::size_t level = std::min(na.level, nb.level);
    return make_minus_form(g, sub_pos(na.pos, nb.pos), level);
}

Cut neg_cut(const Group& g, const Cut& a) {
    switch (a.kind) {
        case CutKind::NegInf: return Cut::pos_inf();
        case CutKind::PosInf: return Cut::neg_inf();
        case CutKind::PrincipalMinus: return principal_cut(g, g.neg(a.pos), /*plus=*/true);
        case CutKind::PrincipalPlus: return principal_cut(g, g.neg(a.pos), /*plus=*/false);
        case CutKind::SubgroupMinus: return subgroup_cut(g, g.neg(a.pos), a.level, /*plus=*/true);
        case CutKind::SubgroupPlus: return subgroup_cut(g, g.neg(a.pos), a.level, /*plus=*/false);
        case CutKind::Gap: return gap_cut(g, -a.pos[0]);
    }
    raise(ErrorCode::InvalidArgument, "unreachable");
}

Cut shift_cut(const Group& g, const GroupElement& gamma, const Cut& a) {
    if (!g.contains(gamma)) raise(ErrorCode::InvalidArgument, "shift element not in group");
    switch (a.kind) {
        case CutKind::NegInf:
        case CutKind::PosInf:
            return a;
        case CutKind::PrincipalMinus:
            return principal_cut(g, g.add(gamma, a.pos), /*plus=*/false);
        case CutKind::PrincipalPlus:
            return principal_cut(g, g.add(gamma, a.pos), /*plus=*/true);
        case CutKind::SubgroupMinus:
            return subgroup_cut(g, add_pos(gamma, a.pos), a.level, /*plus=*/false);
        case CutKind::SubgroupPlus:
            return subgroup_cut(g, add_pos(gamma, a.pos), a.level, /*plus=*/true);
        case CutKind::Gap:
            return gap_cut(g, gamma[0] + a.pos[0]);
    }
    raise(ErrorCode::InvalidArgument, "unreachable");
}

Cut n_fold(const Group& g, const Cut& a, const Cut& b, unsigned n, bool plus) {
    Cut acc = a;
    for (unsigned i = 0; i < n; ++i) acc = plus ? left_sum(g, acc, b) : cut_diff(g, acc, b);
    return acc;
}

Cut iterated_sum(const Group& g, const Cut& a, unsigned n) {
    if (n == 0) raise(ErrorCode::InvalidArgument, "iterated sum needs n >= 1");
    Cut acc = a;
    for (unsigned i = 1; i < n; ++i) acc = left_sum(g, acc, a);
    return acc;
}

Cut z_mul(const Group& g, const Cut& a, unsigned cap) {
    Cut zero_minus = principal_cut(g, g.zero(), /*plus=*/false);
    if (cmp_cut(g, a, zero_minus) != Ordering::GT)
        raise(ErrorCode::NonPositiveCut, "z_mul requires a cut > 0^-");
    Cut cur = a;
    for (unsigned i = 0; i < cap; ++i) {
        Cut next = left_sum(g, cur, a);
        if (cut_eq(g, next, cur)) return cur;
        if (g.archimedean()) return Cut::pos_inf();
        // lexicographic power: the position grows by the same delta each step,
        // at its first nonzero coordinate; compare plus-normal positions so the
        // two names of a principal cut cannot fake a delta
        GroupElement delta = sub_pos(plus_normal(g, next).pos, plus_normal(g, cur).pos);
        std::size_t j = 0;
        while (j < delta.rank() && delta[j] == 0) ++j;
        if (j == 0) return Cut::pos_inf();
        if (j >= delta.rank()) { // no growth recorded; keep iterating
            cur = next;
            continue;
        }
        return subgroup_cut(g, g.zero(), j, /*plus=*/true);
    }
    raise(ErrorCode::BoundExceeded, "z_mul did not stabilize within the iteration cap");
}

Cut hat_cut(const Group& g, const Cut& a) { return cut_diff(g, a, a); }

Cut set_cut_finite(const Group& g, const std::vector<GroupElement>& elems, bool plus) {
    if (elems.empty()) return plus ? Cut::neg_inf() : Cut::pos_inf();
    GroupElement best = elems[0];
    for (const auto& e : elems) {
        bool better = plus ? g.less(best, e) : g.less(e, best);
        if (better) best = e;
    }
    return principal_cut(g, best, plus);
}

SupResult detect_sup_increasing(const Group& g, const std::vector<GroupElement>& values) {
    if (values.size() < 2)
        raise(ErrorCode::BoundExceeded, "sup detection needs at least 2 materialized elements");
    for (std::size_t i = 1; i < values.size(); ++i)
        if (g.cmp(values[i - 1], values[i]) != Ordering::LT)
            raise(ErrorCode::InvalidArgument, "enumerated sequence is not strictly increasing");

    const std::size_t n = values.size();
    if (!g.dense() && g.archimedean()) {
        // strictly increasing in a discrete archimedean group: each step >= u
        return SupResult{Cut::pos_inf(), SupCertificate::DiscreteUnbounded,
                         "strictly increasing in a discrete archimedean group"};
    }

    if (g.descriptor().kind == GroupKind::LexPower) {
        std::size_t window = std::min<std::size_t>(n, 8);
        std::size_t start = n - window;
        std::size_t rank = g.rank();
        // longest coordinate prefix constant across the window
        std::size_t level = 0;
        while (level < rank) {
            bool constant = true;
            for (std::size_t i = start + 1; i < n; ++i)
                if (values[i][level] != values[start][level]) { constant = false; break; }
            if (!constant) break;
            ++level;
        }
        std::size_t moving = level; // first moving coordinate index
        if (moving >= rank)
            raise(ErrorCode::BoundExceeded, "no moving coordinate in an increasing sequence");
        for (std::size_t i = start + 1; i < n; ++i)
            if (values[i][moving] <= values[i - 1][moving])
                raise(ErrorCode::BoundExceeded,
                      "coordinate " + std::to_string(moving) + " not strictly increasing over the window");
        if (level == 0)
            return SupResult{Cut::pos_inf(), SupCertificate::LexPrefix,
                             "leading coordinate unbounded over the window"};
        GroupElement prefix = zero_tail(values[n - 1], level);
        return SupResult{subgroup_cut(g, prefix, level, /*plus=*/true), SupCertificate::LexPrefix,
                         "prefix of length " + std::to_string(level) + " constant, next coordinate unbounded"};
    }

    // dense rank-1 group: inspect increments
    if (n < 4)
        raise(ErrorCode::BoundExceeded, "sup detection over a dense group needs >= 4 elements");
    std::vector<Rat> diffs;
    diffs.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) diffs.push_back(values[i][0] - values[i - 1][0]);

    bool geometric = true;
    Rat ratio = diffs[1] / diffs[0];
    for (std::size_t i = 1; i + 1 < diffs.size(); ++i)
        if (diffs[i + 1] / diffs[i] != ratio) { geometric = false; break; }
    if (geometric && ratio < 1) {
        Rat limit = values[n - 1][0] + diffs.back() * ratio / (1 - ratio);
        return SupResult{from_below(g, limit), SupCertificate::GeometricTail,
                         "constant increment ratio " + rat_to_string(ratio) + ", limit " + rat_to_string(limit)};
    }

    bool non_shrinking = true;
    for (std::size_t i = 0; i + 1 < diffs.size(); ++i)
        if (diffs[i + 1] < diffs[i]) { non_shrinking = false; break; }
    if (non_shrinking)
        return SupResult{Cut::pos_inf(), SupCertificate::IncrementsGrow,
                         "increments bounded below by " + rat_to_string(diffs[0])};

    raise(ErrorCode::BoundExceeded, "no canonical sup certified within the materialized window");
}

SupResult set_cut_enumerated(const Group& g, const std::function<GroupElement(std::size_t)>& elems,
                             bool plus, std::size_t cap) {
    std::vector<GroupElement> values;
    values.reserve(cap);
    for (std::size_t i = 0; i < cap; ++i) values.push_back(elems(i));
    if (!plus) {
        // inf of a decreasing sequence is the negated sup of the negated one
        for (auto& v : values) v = g.neg(v);
    }
    SupResult res = detect_sup_increasing(g, values);
    if (!plus) res.cut = neg_cut(g, res.cut);
    return res;
}

} // namespace hahnfield
