#ifndef HAHNFIELD_CUT_HPP
#define HAHNFIELD_CUT_HPP

#include "hahnfield/group.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hahnfield {

enum class CutKind {
    NegInf,
    PosInf,
    PrincipalMinus, // position^-  : left set (-inf, pos)
    PrincipalPlus,  // position^+  : left set (-inf, pos]
    SubgroupMinus,  // (pos + H_k)^- over Z^n lex: left set {x : prefix_k(x) < prefix_k(pos)}
    SubgroupPlus,   // (pos + H_k)^+            : left set {x : prefix_k(x) <= prefix_k(pos)}
    Gap,            // dense groups: left set {x : x < pos}, pos in divisible hull \ G
};

// A canonical-form element of the Dedekind completion of an ordered abelian
// group. Over discrete groups the two principal names gamma^+ and
// (gamma+u)^- denote the same cut; comparison identifies them.
struct Cut {
    CutKind kind = CutKind::NegInf;
    GroupElement pos;     // principal/subgroup position, or the gap rational
    std::size_t level = 0; // subgroup cuts: number of leading coordinates fixed, 0 < level < n

    static Cut neg_inf() { return Cut{CutKind::NegInf, {}, 0}; }
    static Cut pos_inf() { return Cut{CutKind::PosInf, {}, 0}; }

    bool is_infinite() const { return kind == CutKind::NegInf || kind == CutKind::PosInf; }
    bool principal() const { return kind == CutKind::PrincipalMinus || kind == CutKind::PrincipalPlus; }
    bool subgroup() const { return kind == CutKind::SubgroupMinus || kind == CutKind::SubgroupPlus; }
};

// Validated constructors (canonicalize subgroup positions, collapse level == n,
// reject gaps at group members and canonicalize gaps over discrete groups).
Cut principal_cut(const Group& g, const GroupElement& pos, bool plus);
Cut subgroup_cut(const Group& g, const GroupElement& pos, std::size_t level, bool plus);
Cut gap_cut(const Group& g, const Rat& pos);

// gamma in the left set of the cut ("gamma < Lambda" in cut order).
bool elem_below_cut(const Group& g, const GroupElement& gamma, const Cut& cut);
// LT when the cut is below the element, GT when above; never EQ.
Ordering cmp_cut_elem(const Group& g, const Cut& cut, const GroupElement& gamma);

Ordering cmp_cut(const Group& g, const Cut& a, const Cut& b);
bool cut_eq(const Group& g, const Cut& a, const Cut& b);
bool cut_leq(const Group& g, const Cut& a, const Cut& b);

// {lambda + gamma : lambda < A, gamma < B}^+
Cut left_sum(const Group& g, const Cut& a, const Cut& b);
// {lambda + gamma : lambda > A, gamma > B}^-
Cut right_sum(const Group& g, const Cut& a, const Cut& b);
// {lambda - gamma : lambda > A, gamma < B}^-
Cut cut_diff(const Group& g, const Cut& a, const Cut& b);

Cut neg_cut(const Group& g, const Cut& a);
Cut shift_cut(const Group& g, const GroupElement& gamma, const Cut& a);

// A - nG (sign minus) or A + nG (sign plus), left-associated; n == 0 returns A.
Cut n_fold(const Group& g, const Cut& a, const Cut& b, unsigned n, bool plus);

// n-fold left sum of a cut with itself, n >= 1.
Cut iterated_sum(const Group& g, const Cut& a, unsigned n);

// sup{ n*A : n >= 1 } for A > 0^-; stabilizes, reaches a subgroup cut, or +inf.
Cut z_mul(const Group& g, const Cut& a, unsigned cap = 128);

// A - A.
Cut hat_cut(const Group& g, const Cut& a);

// S^+ (smallest cut with S in its left set) or S^- for a finite S.
Cut set_cut_finite(const Group& g, const std::vector<GroupElement>& elems, bool plus);

// What certified the sup of an infinite increasing enumeration.
enum class SupCertificate {
    FiniteMax,         // finite input, max/min attained
    DiscreteUnbounded, // strictly increasing in a discrete archimedean group
    GeometricTail,     // constant-ratio shrinking increments converging to a point
    IncrementsGrow,    // non-shrinking increments in an archimedean group
    LexPrefix,         // fixed coordinate prefix, next coordinate unbounded
};

struct SupResult {
    Cut cut;
    SupCertificate certificate;
    std::string note;
};

// Sup (side plus) or inf (side minus) of a strictly monotone enumerated
// sequence, materialized up to `cap` elements. The enumeration is promised to
// continue strictly monotone; detection inspects a trailing window and raises
// BoundExceeded when no canonical form is certified.
SupResult set_cut_enumerated(const Group& g, const std::function<GroupElement(std::size_t)>& elems,
                             bool plus, std::size_t cap = 24);

// Detection core on an already-materialized strictly increasing list.
SupResult detect_sup_increasing(const Group& g, const std::vector<GroupElement>& values);

} // namespace hahnfield

#endif
