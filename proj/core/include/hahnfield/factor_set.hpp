#ifndef HAHNFIELD_FACTOR_SET_HPP
#define HAHNFIELD_FACTOR_SET_HPP

#include "hahnfield/coeff.hpp"
#include "hahnfield/group.hpp"

#include <map>
#include <string>
#include <vector>

namespace hahnfield {

// A value group section given by designated representatives. Homomorphic
// sections have trivial factor set; a ScaledRoot section designates
// t^(k/r) := s^k * c^(-trunc(k/r)) for a base symbol s with s^r = c*t,
// which keeps t^(-gamma) = 1/t^gamma.
struct Section {
    enum class Kind { Homomorphic, ScaledRoot };
    Kind kind = Kind::Homomorphic;
    Int root = 2;   // r
    Coeff scale;    // c in k^*

    static Section homomorphic() { return Section{}; }
    static Section scaled_root(Int r, Coeff c) {
        return Section{Kind::ScaledRoot, std::move(r), std::move(c)};
    }
};

enum class FactorSetKind { Trivial, Derived, Table };

// Total symmetric normalized 2-cocycle G x G -> k^*.
struct FactorSet {
    FactorSetKind kind = FactorSetKind::Trivial;
    Int root = 1;  // Derived
    Coeff scale;   // Derived
    std::map<std::pair<GroupElement, GroupElement>, Coeff> table; // Table; default 1 outside

    static FactorSet trivial() { return FactorSet{}; }
    static FactorSet derived(Int root, Coeff scale);
    static FactorSet from_table(std::map<std::pair<GroupElement, GroupElement>, Coeff> entries);

    bool operator==(const FactorSet& other) const;
};

// Evaluate f[alpha, beta].
Coeff factor(const FactorSet& fs, const Group& g, const Field& k, const GroupElement& alpha,
             const GroupElement& beta);

// The coboundary of a section; Trivial when the section is a homomorphism.
FactorSet derive_factor_set(const Group& g, const Field& k, const Section& section);

struct CocycleViolation {
    int axiom = 0; // 1..4
    GroupElement alpha, beta, gamma;
    std::string detail;
};

struct CocycleReport {
    std::size_t checked = 0;
    std::vector<CocycleViolation> violations;
    bool pass() const { return violations.empty(); }
};

// Check symmetry, normalization, the cocycle identity and f[-a,a] = 1 on the
// sampled triples; violations are collected, not thrown.
CocycleReport cocycle_verify(const FactorSet& fs, const Group& g, const Field& k,
                             const std::vector<std::array<GroupElement, 3>>& samples);

} // namespace hahnfield

#endif
