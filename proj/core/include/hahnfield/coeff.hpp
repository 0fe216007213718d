#ifndef HAHNFIELD_COEFF_HPP
#define HAHNFIELD_COEFF_HPP

#include "hahnfield/rational.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace hahnfield {

enum class FieldKind {
    Rationals,         // Q
    PrimeField,        // F_p
    RationalFunctions, // F_p(y)
    PerfectHull,       // perfect hull of F_p(y), roots up to depth p^max_root_depth
};

struct FieldDescriptor {
    FieldKind kind = FieldKind::Rationals;
    unsigned p = 0;
    std::string variable; // RationalFunctions / PerfectHull
    unsigned max_root_depth = 0;

    static FieldDescriptor rationals();
    static FieldDescriptor prime_field(unsigned p);
    static FieldDescriptor rational_functions(unsigned p, std::string variable);
    static FieldDescriptor perfect_hull(unsigned p, std::string variable, unsigned max_root_depth);

    unsigned characteristic() const { return kind == FieldKind::Rationals ? 0 : p; }
    bool operator==(const FieldDescriptor& other) const;
};

// Dense polynomial over F_p, coefficients in [0, p), ascending degree, trimmed.
struct FpPoly {
    std::vector<std::int64_t> c;

    bool zero() const { return c.empty(); }
    std::size_t degree() const { return c.empty() ? 0 : c.size() - 1; }
    bool operator==(const FpPoly& other) const { return c == other.c; }
};

// Reduced fraction of polynomials over F_p; denominator monic and nonzero.
struct FpRatFunc {
    FpPoly num;
    FpPoly den; // monic

    bool operator==(const FpRatFunc& other) const { return num == other.num && den == other.den; }
};

// f^(1/p^depth), normalized so that depth is minimal.
struct PerfectElem {
    FpRatFunc f;
    unsigned depth = 0;

    bool operator==(const PerfectElem& other) const { return depth == other.depth && f == other.f; }
};

class Field;

class Coeff {
public:
    Coeff() : value_(Rat(0)) {}
    explicit Coeff(Rat q) : value_(std::move(q)) {}
    explicit Coeff(std::int64_t residue) : value_(residue) {}
    explicit Coeff(FpRatFunc f) : value_(std::move(f)) {}
    explicit Coeff(PerfectElem e) : value_(std::move(e)) {}

    const Rat& rat() const { return std::get<Rat>(value_); }
    std::int64_t residue() const { return std::get<std::int64_t>(value_); }
    const FpRatFunc& rat_func() const { return std::get<FpRatFunc>(value_); }
    const PerfectElem& perfect() const { return std::get<PerfectElem>(value_); }

    bool operator==(const Coeff& other) const { return value_ == other.value_; }
    bool operator!=(const Coeff& other) const { return !(value_ == other.value_); }

private:
    std::variant<Rat, std::int64_t, FpRatFunc, PerfectElem> value_;
};

// Exact arithmetic in one of the supported coefficient fields. Values are
// kept in canonical form so equality is structural.
class Field {
public:
    Field() : desc_(FieldDescriptor::rationals()) {}
    explicit Field(FieldDescriptor desc);

    const FieldDescriptor& descriptor() const { return desc_; }
    unsigned characteristic() const { return desc_.characteristic(); }
    bool operator==(const Field& other) const { return desc_ == other.desc_; }
    bool operator!=(const Field& other) const { return !(desc_ == other.desc_); }

    Coeff zero() const;
    Coeff one() const;
    Coeff from_integer(const Int& n) const;
    Coeff from_rational(const Rat& q) const; // Rationals only
    bool is_zero(const Coeff& a) const;
    bool is_one(const Coeff& a) const;

    Coeff add(const Coeff& a, const Coeff& b) const;
    Coeff sub(const Coeff& a, const Coeff& b) const;
    Coeff neg(const Coeff& a) const;
    Coeff mul(const Coeff& a, const Coeff& b) const;
    Coeff inv(const Coeff& a) const; // DivisionByZero on 0
    Coeff div(const Coeff& a, const Coeff& b) const;
    Coeff pow(const Coeff& a, const Int& n) const;

    Coeff frobenius(const Coeff& a) const; // x -> x^p
    // Unique b with b^p == a (PrimeField and PerfectHull); RootDepthExceeded
    // when normalization cannot keep depth within the descriptor bound.
    Coeff p_th_root(const Coeff& a) const;

    // The variable y as an element of F_p(y) or its perfect hull.
    Coeff variable() const;

    std::string to_string(const Coeff& a) const;

private:
    void check_kind(const Coeff& a) const;

    FieldDescriptor desc_;
};

} // namespace hahnfield

#endif
