#include "hahnfield/group.hpp"

#include "hahnfield/errors.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace hahnfield {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::BoundExceeded: return "BoundExceeded";
        case ErrorCode::NonPositiveCut: return "NonPositiveCut";
        case ErrorCode::UnrepresentableCut: return "UnrepresentableCut";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::ZeroDivisor: return "ZeroDivisor";
        case ErrorCode::RootDepthExceeded: return "RootDepthExceeded";
        case ErrorCode::HorizonExceeded: return "HorizonExceeded";
        case ErrorCode::NotSimpleRoot: return "NotSimpleRoot";
        case ErrorCode::NotPseudoCauchy: return "NotPseudoCauchy";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IncompatibleContext: return "IncompatibleContext";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "UnknownError";
}

std::string rat_to_string(const Rat& q) {
    std::ostringstream os;
    os << rat_num(q);
    if (rat_den(q) != 1) os << '/' << rat_den(q);
    return os.str();
}

Int rat_floor(const Rat& q) {
    Int n = rat_num(q), d = rat_den(q);
    Int quot = n / d;
    if (n < 0 && quot * d != n) --quot;
    return quot;
}

Rat rat_gcd(const Rat& a, const Rat& b) {
    if (a == 0) return b;
    if (b == 0) return a;
    Int l = boost::multiprecision::lcm(rat_den(a), rat_den(b));
    Int na = rat_num(a) * (l / rat_den(a));
    Int nb = rat_num(b) * (l / rat_den(b));
    return Rat(boost::multiprecision::gcd(na, nb), l);
}

bool denominator_is_p_power(const Rat& q, unsigned p, unsigned max_depth) {
    Int d = rat_den(q);
    unsigned depth = 0;
    while (d > 1) {
        if (depth >= max_depth || d % p != 0) return false;
        d /= p;
        ++depth;
    }
    return true;
}

GroupDescriptor GroupDescriptor::integers() { return GroupDescriptor{}; }

GroupDescriptor GroupDescriptor::lex_power(std::size_t n) {
    if (n < 1) raise(ErrorCode::InvalidArgument, "lexicographic power needs rank >= 1");
    GroupDescriptor d;
    d.kind = GroupKind::LexPower;
    d.lex_rank = n;
    return d;
}

GroupDescriptor GroupDescriptor::p_divisible(unsigned p, unsigned max_depth) {
    if (p < 2) raise(ErrorCode::InvalidArgument, "p must be a prime >= 2");
    GroupDescriptor d;
    d.kind = GroupKind::PDivisibleHullOfZ;
    d.p = p;
    d.max_depth = max_depth;
    return d;
}

GroupDescriptor GroupDescriptor::rational_subgroup(std::vector<Rat> gens) {
    if (gens.empty()) raise(ErrorCode::InvalidArgument, "rational subgroup needs generators");
    std::sort(gens.begin(), gens.end());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i] <= 0) raise(ErrorCode::InvalidArgument, "subgroup generators must be positive");
        if (i > 0 && gens[i] == gens[i - 1])
            raise(ErrorCode::InvalidArgument, "subgroup generators must be pairwise distinct");
    }
    GroupDescriptor d;
    d.kind = GroupKind::RationalSubgroup;
    d.generators = std::move(gens);
    return d;
}

bool GroupDescriptor::operator==(const GroupDescriptor& other) const {
    if (kind != other.kind) return false;
    switch (kind) {
        case GroupKind::Integers: return true;
        case GroupKind::LexPower: return lex_rank == other.lex_rank;
        case GroupKind::PDivisibleHullOfZ: return p == other.p && max_depth == other.max_depth;
        case GroupKind::RationalSubgroup: return generators == other.generators;
    }
    return false;
}

Group::Group(GroupDescriptor desc) : desc_(std::move(desc)) {
    if (desc_.kind == GroupKind::RationalSubgroup) {
        cyclic_unit_ = 0;
        for (const Rat& g : desc_.generators) cyclic_unit_ = rat_gcd(cyclic_unit_, g);
    }
}

std::size_t Group::rank() const {
    return desc_.kind == GroupKind::LexPower ? desc_.lex_rank : 1;
}

GroupElement Group::zero() const {
    return GroupElement(std::vector<Rat>(rank(), Rat(0)));
}

bool Group::contains(const GroupElement& g) const {
    if (g.rank() != rank()) return false;
    switch (desc_.kind) {
        case GroupKind::Integers:
            return is_integer(g[0]);
        case GroupKind::LexPower:
            for (const Rat& c : g.coords)
                if (!is_integer(c)) return false;
            return true;
        case GroupKind::PDivisibleHullOfZ:
            return denominator_is_p_power(g[0], desc_.p, desc_.max_depth);
        case GroupKind::RationalSubgroup: {
            Rat q = g[0] / cyclic_unit_;
            return is_integer(q);
        }
    }
    return false;
}

GroupElement Group::make(std::vector<Rat> coords) const {
    GroupElement g(std::move(coords));
    validate(g);
    return g;
}

void Group::validate(const GroupElement& g) const {
    if (g.rank() != rank())
        raise(ErrorCode::InvalidArgument, "element rank does not match group");
    if (!contains(g)) {
        if (desc_.kind == GroupKind::PDivisibleHullOfZ)
            raise(ErrorCode::BoundExceeded, "denominator exceeds p^max_depth for " + rat_to_string(g[0]));
        raise(ErrorCode::InvalidArgument, "element does not belong to the group");
    }
}

GroupElement Group::add(const GroupElement& a, const GroupElement& b) const {
    validate(a);
    validate(b);
    GroupElement out = a;
    for (std::size_t i = 0; i < out.rank(); ++i) out[i] += b[i];
    validate(out);
    return out;
}

GroupElement Group::sub(const GroupElement& a, const GroupElement& b) const {
    return add(a, neg(b));
}

GroupElement Group::neg(const GroupElement& a) const {
    GroupElement out = a;
    for (Rat& c : out.coords) c = -c;
    return out;
}

GroupElement Group::scale(const Int& n, const GroupElement& a) const {
    GroupElement out = a;
    for (Rat& c : out.coords) c *= Rat(n);
    validate(out);
    return out;
}

Ordering Group::cmp(const GroupElement& a, const GroupElement& b) const {
    for (std::size_t i = 0; i < rank(); ++i) {
        if (a[i] < b[i]) return Ordering::LT;
        if (a[i] > b[i]) return Ordering::GT;
    }
    return Ordering::EQ;
}

bool Group::is_zero(const GroupElement& a) const {
    for (const Rat& c : a.coords)
        if (c != 0) return false;
    return true;
}

GroupElement Group::min_positive() const {
    switch (desc_.kind) {
        case GroupKind::Integers:
            return GroupElement(Rat(1));
        case GroupKind::RationalSubgroup:
            return GroupElement(cyclic_unit_);
        case GroupKind::LexPower: {
            std::vector<Rat> c(desc_.lex_rank, Rat(0));
            c.back() = 1;
            return GroupElement(std::move(c));
        }
        case GroupKind::PDivisibleHullOfZ:
            raise(ErrorCode::InvalidArgument, "dense group has no minimal positive element");
    }
    raise(ErrorCode::InvalidArgument, "unreachable");
}

std::vector<GroupElement> monoid_enumerate(const Group& g, const std::vector<GroupElement>& gens,
                                           const GroupElement& offset, std::size_t count,
                                           std::size_t cap) {
    for (const auto& b : gens)
        if (!g.is_positive(b))
            raise(ErrorCode::InvalidArgument, "monoid generators must be strictly positive");

    auto order = [&g](const GroupElement& a, const GroupElement& b) {
        return g.cmp(a, b) == Ordering::GT; // min-heap
    };
    std::priority_queue<GroupElement, std::vector<GroupElement>, decltype(order)> frontier(order);
    std::set<GroupElement> seen; // container order; dedup only
    frontier.push(offset);
    seen.insert(offset);

    std::vector<GroupElement> out;
    std::size_t steps = 0;
    while (out.size() < count && !frontier.empty()) {
        GroupElement cur = frontier.top();
        frontier.pop();
        out.push_back(cur);
        for (const auto& b : gens) {
            if (++steps > cap) raise(ErrorCode::BoundExceeded, "monoid enumeration exceeded cap");
            GroupElement next = g.add(cur, b);
            if (seen.insert(next).second) frontier.push(next);
        }
    }
    return out;
}

namespace {

// Largest e <= cap with rest - e*gen >= 0; the condition is downward closed
// because gen > 0. Returns cap+1 when even e = cap+1 stays >= 0.
unsigned max_multiplicity(const Group& g, const GroupElement& rest, const GroupElement& gen,
                          unsigned cap) {
    unsigned lo = 0, hi = cap + 1;
    // Early reject: e = 0 always valid only if rest >= 0 is not required here;
    // caller ensures rest >= 0.
    auto fits = [&](unsigned e) {
        GroupElement r = g.sub(rest, g.scale(Int(e), gen));
        return g.cmp(r, g.zero()) != Ordering::LT;
    };
    if (fits(hi)) return hi;
    while (lo < hi - 1) {
        unsigned mid = lo + (hi - lo) / 2;
        if (fits(mid)) lo = mid;
        else hi = mid;
    }
    return lo;
}

// Generators are visited in descending group order so that generators with a
// positive leading coordinate bound the search before the ones that are free
// in that coordinate (lex orders do not bound exponents by magnitude alone).
void decompose_rec(const Group& g, const std::vector<GroupElement>& gens,
                   const std::vector<std::size_t>& order, std::size_t i, const GroupElement& rest,
                   unsigned cap, std::vector<unsigned>& acc,
                   std::vector<std::vector<unsigned>>& out) {
    const GroupElement& gen = gens[order[i]];
    if (i + 1 == order.size()) {
        // Exact solve for the last generator: e * gen == rest.
        std::size_t pivot = 0;
        while (pivot < gen.rank() && gen[pivot] == 0) ++pivot;
        if (pivot == gen.rank()) return; // zero generator excluded by precondition
        Rat e = rest[pivot] / gen[pivot];
        if (!is_integer(e) || e < 0) return;
        if (e > cap) raise(ErrorCode::BoundExceeded, "decomposition exponent exceeds cap");
        Int ei = rat_num(e);
        if (g.scale(ei, gen) != rest) return;
        acc[order[i]] = static_cast<unsigned>(ei);
        out.push_back(acc);
        acc[order[i]] = 0;
        return;
    }
    unsigned hi = max_multiplicity(g, rest, gen, cap);
    if (hi > cap) raise(ErrorCode::BoundExceeded, "decomposition exponent exceeds cap");
    for (unsigned e = 0; e <= hi; ++e) {
        acc[order[i]] = e;
        decompose_rec(g, gens, order, i + 1, g.sub(rest, g.scale(Int(e), gen)), cap, acc, out);
    }
    acc[order[i]] = 0;
}

} // namespace

std::vector<std::vector<unsigned>> monoid_decompose(const Group& g,
                                                    const std::vector<GroupElement>& gens,
                                                    const GroupElement& target,
                                                    unsigned exponent_cap) {
    for (const auto& b : gens)
        if (!g.is_positive(b))
            raise(ErrorCode::InvalidArgument, "monoid generators must be strictly positive");
    std::vector<std::vector<unsigned>> out;
    if (gens.empty()) {
        if (g.is_zero(target)) out.push_back({});
        return out;
    }
    if (g.cmp(target, g.zero()) == Ordering::LT) return out;
    std::vector<std::size_t> order(gens.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return g.cmp(gens[a], gens[b]) == Ordering::GT;
    });
    std::vector<unsigned> acc(gens.size(), 0);
    decompose_rec(g, gens, order, 0, target, exponent_cap, acc, out);
    return out;
}

} // namespace hahnfield
