#ifndef HAHNFIELD_GROUP_HPP
#define HAHNFIELD_GROUP_HPP

#include "hahnfield/rational.hpp"

#include <cstddef>
#include <vector>

namespace hahnfield {

enum class Ordering { LT = -1, EQ = 0, GT = 1 };

// An element of an ordered abelian group embedded in Q^n with exact
// rational coordinates (length 1 except for lexicographic powers).
struct GroupElement {
    std::vector<Rat> coords;

    GroupElement() = default;
    explicit GroupElement(Rat value) : coords{std::move(value)} {}
    explicit GroupElement(std::vector<Rat> cs) : coords(std::move(cs)) {}

    std::size_t rank() const { return coords.size(); }
    const Rat& operator[](std::size_t i) const { return coords[i]; }
    Rat& operator[](std::size_t i) { return coords[i]; }

    bool operator==(const GroupElement& other) const { return coords == other.coords; }
    bool operator!=(const GroupElement& other) const { return coords != other.coords; }
    // Container ordering only (coordinatewise lexicographic on raw rationals);
    // semantic comparison goes through Group::cmp.
    bool operator<(const GroupElement& other) const { return coords < other.coords; }
};

enum class GroupKind {
    Integers,          // Z
    LexPower,          // Z^n with lexicographic order, n >= 1
    PDivisibleHullOfZ, // Z[1/p^inf], elements restricted to denominators p^max_depth
    RationalSubgroup,  // finitely generated subgroup of Q (always cyclic)
};

struct GroupDescriptor {
    GroupKind kind = GroupKind::Integers;
    std::size_t lex_rank = 1;          // LexPower
    unsigned p = 2;                    // PDivisibleHullOfZ
    unsigned max_depth = 0;            // PDivisibleHullOfZ
    std::vector<Rat> generators;       // RationalSubgroup, pairwise distinct positive

    static GroupDescriptor integers();
    static GroupDescriptor lex_power(std::size_t n);
    static GroupDescriptor p_divisible(unsigned p, unsigned max_depth);
    static GroupDescriptor rational_subgroup(std::vector<Rat> gens);

    bool operator==(const GroupDescriptor& other) const;
};

// A computable ordered abelian group: exact element arithmetic, total order,
// and enumeration of the positive monoid generated by a finite set.
class Group {
public:
    Group() : desc_(GroupDescriptor::integers()) {}
    explicit Group(GroupDescriptor desc);

    const GroupDescriptor& descriptor() const { return desc_; }
    std::size_t rank() const;

    bool operator==(const Group& other) const { return desc_ == other.desc_; }
    bool operator!=(const Group& other) const { return !(desc_ == other.desc_); }

    GroupElement zero() const;
    GroupElement make(std::vector<Rat> coords) const; // validates membership
    bool contains(const GroupElement& g) const;

    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement sub(const GroupElement& a, const GroupElement& b) const;
    GroupElement neg(const GroupElement& a) const;
    GroupElement scale(const Int& n, const GroupElement& a) const;

    Ordering cmp(const GroupElement& a, const GroupElement& b) const;
    bool less(const GroupElement& a, const GroupElement& b) const { return cmp(a, b) == Ordering::LT; }
    bool leq(const GroupElement& a, const GroupElement& b) const { return cmp(a, b) != Ordering::GT; }
    bool is_positive(const GroupElement& a) const { return cmp(a, zero()) == Ordering::GT; }
    bool is_zero(const GroupElement& a) const;

    // Discrete groups have a minimal positive element; Z[1/p^inf] is dense.
    bool dense() const { return desc_.kind == GroupKind::PDivisibleHullOfZ; }
    bool archimedean() const { return desc_.kind != GroupKind::LexPower || desc_.lex_rank == 1; }
    // Minimal positive element of a discrete group; error when dense.
    GroupElement min_positive() const;

    // Cyclic generator of a RationalSubgroup (gcd of the generators).
    const Rat& cyclic_unit() const { return cyclic_unit_; }

private:
    void validate(const GroupElement& g) const;

    GroupDescriptor desc_;
    Rat cyclic_unit_; // RationalSubgroup only
};

// First `count` elements of offset + <gens> (non-negative integer combinations),
// strictly increasing. Raises BoundExceeded past `cap` expansion steps.
std::vector<GroupElement> monoid_enumerate(const Group& g, const std::vector<GroupElement>& gens,
                                           const GroupElement& offset, std::size_t count,
                                           std::size_t cap = 1 << 20);

// All exponent vectors e with sum_i e[i]*gens[i] == target, aligned with the
// input generator order. Complete; raises BoundExceeded when an exponent
// would have to exceed `exponent_cap`.
std::vector<std::vector<unsigned>> monoid_decompose(const Group& g,
                                                    const std::vector<GroupElement>& gens,
                                                    const GroupElement& target,
                                                    unsigned exponent_cap = 64);

} // namespace hahnfield

#endif
