#include "hahnfield/coeff.hpp"

#include "hahnfield/errors.hpp"

#include <algorithm>
#include <sstream>

namespace hahnfield {

namespace {

std::int64_t mod_p(std::int64_t v, std::int64_t p) {
    std::int64_t r = v % p;
    return r < 0 ? r + p : r;
}

std::int64_t inv_mod_p(std::int64_t v, std::int64_t p) {
    if (v % p == 0) raise(ErrorCode::DivisionByZero, "inverse of 0 mod p");
    // extended Euclid
    std::int64_t a = mod_p(v, p), b = p, x0 = 1, x1 = 0;
    while (b != 0) {
        std::int64_t q = a / b;
        std::int64_t t = a - q * b; a = b; b = t;
        t = x0 - q * x1; x0 = x1; x1 = t;
    }
    return mod_p(x0, p);
}

FpPoly trim(FpPoly f) {
    while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
    return f;
}

FpPoly poly_const(std::int64_t v, std::int64_t p) {
    FpPoly f;
    std::int64_t r = mod_p(v, p);
    if (r != 0) f.c = {r};
    return f;
}

FpPoly poly_add(const FpPoly& a, const FpPoly& b, std::int64_t p) {
    FpPoly out;
    out.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < out.c.size(); ++i) {
        std::int64_t v = 0;
        if (i < a.c.size()) v += a.c[i];
        if (i < b.c.size()) v += b.c[i];
        out.c[i] = mod_p(v, p);
    }
    return trim(out);
}

FpPoly poly_neg(const FpPoly& a, std::int64_t p) {
    FpPoly out = a;
    for (auto& v : out.c) v = mod_p(-v, p);
    return out;
}

FpPoly poly_mul(const FpPoly& a, const FpPoly& b, std::int64_t p) {
    if (a.zero() || b.zero()) return {};
    FpPoly out;
    out.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j)
            out.c[i + j] = mod_p(out.c[i + j] + a.c[i] * b.c[j], p);
    return trim(out);
}

FpPoly poly_scale(const FpPoly& a, std::int64_t s, std::int64_t p) {
    FpPoly out = a;
    for (auto& v : out.c) v = mod_p(v * s, p);
    return trim(out);
}

// division with remainder; b nonzero
void poly_divmod(const FpPoly& a, const FpPoly& b, std::int64_t p, FpPoly& quot, FpPoly& rem) {
    quot = {};
    rem = a;
    if (b.zero()) raise(ErrorCode::DivisionByZero, "polynomial division by zero");
    std::int64_t lead_inv = inv_mod_p(b.c.back(), p);
    while (!rem.zero() && rem.c.size() >= b.c.size()) {
        std::size_t shift = rem.c.size() - b.c.size();
        std::int64_t factor = mod_p(rem.c.back() * lead_inv, p);
        if (quot.c.size() < shift + 1) quot.c.resize(shift + 1, 0);
        quot.c[shift] = mod_p(quot.c[shift] + factor, p);
        for (std::size_t i = 0; i < b.c.size(); ++i)
            rem.c[shift + i] = mod_p(rem.c[shift + i] - factor * b.c[i], p);
        rem = trim(rem);
    }
    quot = trim(quot);
}

FpPoly poly_gcd(FpPoly a, FpPoly b, std::int64_t p) {
    while (!b.zero()) {
        FpPoly q, r;
        poly_divmod(a, b, p, q, r);
        a = b;
        b = r;
    }
    if (!a.zero()) a = poly_scale(a, inv_mod_p(a.c.back(), p), p); // monic
    return a;
}

// h is a p-th power iff every exponent is divisible by p (coefficients are
// fixed by Frobenius in F_p); root has the exponents divided by p.
bool poly_p_root(const FpPoly& a, std::int64_t p, FpPoly& root) {
    root = {};
    if (a.zero()) return true;
    for (std::size_t i = 0; i < a.c.size(); ++i)
        if (a.c[i] != 0 && i % p != 0) return false;
    root.c.assign((a.c.size() - 1) / p + 1, 0);
    for (std::size_t i = 0; i < a.c.size(); i += p) root.c[i / p] = a.c[i];
    return true;
}

FpPoly poly_frobenius(const FpPoly& a, std::int64_t p) {
    if (a.zero()) return {};
    FpPoly out;
    out.c.assign((a.c.size() - 1) * p + 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) out.c[i * p] = a.c[i]; // c^p == c in F_p
    return out;
}

FpRatFunc rf_normalize(FpPoly num, FpPoly den, std::int64_t p) {
    if (den.zero()) raise(ErrorCode::DivisionByZero, "rational function with zero denominator");
    if (num.zero()) return FpRatFunc{{}, poly_const(1, p)};
    FpPoly g = poly_gcd(num, den, p);
    FpPoly q, r;
    poly_divmod(num, g, p, q, r);
    num = q;
    poly_divmod(den, g, p, q, r);
    den = q;
    std::int64_t lead_inv = inv_mod_p(den.c.back(), p);
    num = poly_scale(num, lead_inv, p);
    den = poly_scale(den, lead_inv, p);
    return FpRatFunc{num, den};
}

FpRatFunc rf_add(const FpRatFunc& a, const FpRatFunc& b, std::int64_t p) {
    FpPoly num = poly_add(poly_mul(a.num, b.den, p), poly_mul(b.num, a.den, p), p);
    return rf_normalize(num, poly_mul(a.den, b.den, p), p);
}

FpRatFunc rf_mul(const FpRatFunc& a, const FpRatFunc& b, std::int64_t p) {
    return rf_normalize(poly_mul(a.num, b.num, p), poly_mul(a.den, b.den, p), p);
}

FpRatFunc rf_neg(const FpRatFunc& a, std::int64_t p) {
    return FpRatFunc{poly_neg(a.num, p), a.den};
}

FpRatFunc rf_inv(const FpRatFunc& a, std::int64_t p) {
    if (a.num.zero()) raise(ErrorCode::DivisionByZero, "inverse of zero rational function");
    return rf_normalize(a.den, a.num, p);
}

FpRatFunc rf_frobenius(const FpRatFunc& a, std::int64_t p) {
    return FpRatFunc{poly_frobenius(a.num, p), poly_frobenius(a.den, p)};
}

bool rf_p_root(const FpRatFunc& a, std::int64_t p, FpRatFunc& root) {
    FpPoly rn, rd;
    if (!poly_p_root(a.num, p, rn) || !poly_p_root(a.den, p, rd)) return false;
    root = FpRatFunc{rn, rd}; // reduced fraction stays reduced, den stays monic
    return true;
}

// minimal-depth form: extract p-th roots while both parts are p-th powers
PerfectElem pe_normalize(PerfectElem e, std::int64_t p) {
    while (e.depth > 0) {
        FpRatFunc root;
        if (!rf_p_root(e.f, p, root)) break;
        e.f = root;
        --e.depth;
    }
    return e;
}

std::string poly_to_string(const FpPoly& f, const std::string& var) {
    if (f.zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = f.c.size(); i-- > 0;) {
        if (f.c[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0 || f.c[i] != 1) os << f.c[i];
        if (i > 0) {
            if (f.c[i] != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::string rf_to_string(const FpRatFunc& f, const std::string& var) {
    bool num_poly = f.num.c.size() > 1;
    std::string num = poly_to_string(f.num, var);
    if (f.den.c.size() == 1 && f.den.c[0] == 1) return num;
    std::ostringstream os;
    if (num_poly) os << "(" << num << ")";
    else os << num;
    os << "/";
    if (f.den.c.size() > 1) os << "(" << poly_to_string(f.den, var) << ")";
    else os << poly_to_string(f.den, var);
    return os.str();
}

} // namespace

FieldDescriptor FieldDescriptor::rationals() { return FieldDescriptor{}; }

FieldDescriptor FieldDescriptor::prime_field(unsigned p) {
    FieldDescriptor d;
    d.kind = FieldKind::PrimeField;
    d.p = p;
    return d;
}

FieldDescriptor FieldDescriptor::rational_functions(unsigned p, std::string variable) {
    FieldDescriptor d;
    d.kind = FieldKind::RationalFunctions;
    d.p = p;
    d.variable = std::move(variable);
    return d;
}

FieldDescriptor FieldDescriptor::perfect_hull(unsigned p, std::string variable,
                                              unsigned max_root_depth) {
    FieldDescriptor d;
    d.kind = FieldKind::PerfectHull;
    d.p = p;
    d.variable = std::move(variable);
    d.max_root_depth = max_root_depth;
    return d;
}

bool FieldDescriptor::operator==(const FieldDescriptor& other) const {
    return kind == other.kind && p == other.p && variable == other.variable &&
           max_root_depth == other.max_root_depth;
}

namespace {

bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace

Field::Field(FieldDescriptor desc) : desc_(std::move(desc)) {
    if (desc_.kind != FieldKind::Rationals && !is_prime(desc_.p))
        raise(ErrorCode::InvalidArgument, "field characteristic must be prime");
}

Coeff Field::zero() const {
    switch (desc_.kind) {
        case FieldKind::Rationals: return Coeff(Rat(0));
        case FieldKind::PrimeField: return Coeff(std::int64_t(0));
        case FieldKind::RationalFunctions: return Coeff(FpRatFunc{{}, poly_const(1, desc_.p)});
        case FieldKind::PerfectHull: return Coeff(PerfectElem{FpRatFunc{{}, poly_const(1, desc_.p)}, 0});
    }
    raise(ErrorCode::InvalidArgument, "unreachable");
}

Coeff Field::one() const { return from_integer(1); }

Coeff Field::from_integer(const Int& n) const {
    switch (desc_.kind) {
        case FieldKind::Rationals: return Coeff(Rat(n));
        case FieldKind::PrimeField: {
            Int r = n % desc_.p;
            if (r < 0) r += desc_.p;
            return Coeff(static_cast<std::int64_t>(r));
        }
        case FieldKind::RationalFunctions: {
            Int r = n % desc_.p;
            if (r < 0) r += desc_.p;
            return Coeff(FpRatFunc{poly_const(static_cast<std::int64_t>(r), desc_.p), poly_const(1, desc_.p)});
        }
        case FieldKind::PerfectHull: {
            Int r = n % desc_.p;
            if (r < 0) r += desc_.p;
            return Coeff(PerfectElem{
                FpRatFunc{poly_const(static_cast<std::int64_t>(r), desc_.p), poly_const(1, desc_.p)}, 0});
        }
    }
    raise(ErrorCode::InvalidArgument, "unreachable");
}

Coeff Field::from_rational(const Rat& q) const {
    if (desc_.kind == FieldKind::Rationals) return Coeff(q);
    // n/d with gcd(d, p) = 1 embeds in any field of characteristic p
    Coeff num = from_integer(rat_num(q));
    Coeff den = from_integer(rat_den(q));
    return div(num, den);
}

Coeff Field::variable() const {
    FpPoly y;
    y.c = {0, 1};
    switch (desc_.kind) {
        case FieldKind::RationalFunctions:
            return Coeff(FpRatFunc{y, poly_const(1, desc_.p)});
        case FieldKind::PerfectHull:
            return Coeff(PerfectElem{FpRatFunc{y, poly_const(1, desc_.p)}, 0});
        default:
            raise(ErrorCode::InvalidArgument, "field has no variable");
    }
}

bool Field::is_zero(const Coeff& a) const {
    switch (desc_.kind) {
        case FieldKind::Rationals: return a.rat() == 0;
        case FieldKind::PrimeField: return a.residue() == 0;
        case FieldKind::RationalFunctions: return a.rat_func().num.zero();
        case FieldKind::PerfectHull: return a.perfect().f.num.zero();
    }
    return false;
}

bool Field::is_one(const Coeff& a) const { return a == one(); }

void Field::check_kind(const Coeff&) const {}

Coeff Field::add(const Coeff& a, const Coeff& b) const {
    std::int64_t p = desc_.p;
    switch (desc_.kind) {
        case FieldKind::Rationals: return Coeff(a.rat() + b.rat());
        case FieldKind::PrimeField: return Coeff(mod_p(a.residue() + b.residue(), p));
        case FieldKind::RationalFunctions: return Coeff(rf_add(a.rat_func(), b.rat_func(), p));
        case FieldKind::PerfectHull: {
            // lift both to the common depth with Frobenius, then add
            const PerfectElem& x = a.perfect();
            const PerfectElem& y = b.perfect();
            unsigned depth = std::max(x.depth, y.depth);
            FpRatFunc fx = x.f, fy = y.f;
            for (unsigned i = x.depth; i < depth; ++i) fx = rf_frobenius(fx, p);
            for (unsigned i = y.depth; i < depth; ++i) fy = rf_frobenius(fy, p);
            return Coeff(pe_normalize(PerfectElem{rf_add(fx, fy, p), depth}, p));
        }
    }
    raise(ErrorCode::InvalidArgument, "unreachable");
}

Coeff Field::neg(const Coeff& a) const {
    std::int64_t p = desc_.p;
    switch (desc_.kind) {
        case FieldKind::Rationals: return Coeff(-a.rat());
        case FieldKind::PrimeField: return Coeff(mod_p(-a.residue(), p));
        case FieldKind::RationalFunctions: return Coeff(rf_neg(a.rat_func(), p));
        case FieldKind::PerfectHull:
            return Coeff(PerfectElem{rf_neg(a.perfect().f, p), a.perfect().depth});
    }
    raise(ErrorCode::InvalidArgument, "unreachable");
}

Coeff Field::sub(const Coeff& a, const Coeff& b) const { return add(a, neg(b)); }

Coeff Field::mul(const Coeff& a, const Coeff& b) const {
    std::int64_t p = desc_.p;
    switch (desc_.kind) {
        case FieldKind::Rationals: return Coeff(a.rat() * b.rat());
        case FieldKind::PrimeField: return Coeff(mod_p(a.residue() * b.residue(), p));
        case FieldKind::RationalFunctions: return Coeff(rf_mul(a.rat_func(), b.rat_func(), p));
        case FieldKind::PerfectHull: {
            const PerfectElem& x = a.perfect();
            const PerfectElem& y = b.perfect();
            unsigned depth = std::max(x.depth, y.depth);
            FpRatFunc fx = x.f, fy = y.f;
            for (unsigned i = x.depth; i < depth; ++i) fx = rf_frobenius(fx, p);
            for (unsigned i = y.depth; i < depth; ++i) fy = rf_frobenius(fy, p);
            return Coeff(pe_normalize(PerfectElem{rf_mul(fx, fy, p), depth}, p));
        }
    }
    raise(ErrorCode::InvalidArgument, "unreachable");
}

Coeff Field::inv(const Coeff& a) const {
    if (is_zero(a)) raise(ErrorCode::DivisionByZero, "inverse of zero");
    std::int64_t p = desc_.p;
    switch (desc_.kind) {
        case FieldKind::Rationals: return Coeff(Rat(1) / a.rat());
        case FieldKind::PrimeField: return Coeff(inv_mod_p(a.residue(), p));
        case FieldKind::RationalFunctions: return Coeff(rf_inv(a.rat_func(), p));
        case FieldKind::PerfectHull:
            return Coeff(PerfectElem{rf_inv(a.perfect().f, p), a.perfect().depth});
    }
    raise(ErrorCode::InvalidArgument, "unreachable");
}

Coeff Field::div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

Coeff Field::pow(const Coeff& a, const Int& n) const {
    if (n < 0) return pow(inv(a), -n);
    Coeff acc = one();
    Coeff base = a;
    Int e = n;
    while (e > 0) {
        if (e % 2 == 1) acc = mul(acc, base);
        base = mul(base, base);
        e /= 2;
    }
    return acc;
}

Coeff Field::frobenius(const Coeff& a) const {
    if (desc_.kind == FieldKind::Rationals)
        raise(ErrorCode::InvalidArgument, "frobenius needs positive characteristic");
    return pow(a, Int(desc_.p));
}

Coeff Field::p_th_root(const Coeff& a) const {
    std::int64_t p = desc_.p;
    switch (desc_.kind) {
        case FieldKind::PrimeField:
            // Frobenius is the identity on F_p, so the root is the element itself
            return a;
        case FieldKind::PerfectHull: {
            PerfectElem e = a.perfect();
            ++e.depth;
            e = pe_normalize(e, p);
            if (e.depth > desc_.max_root_depth)
                raise(ErrorCode::RootDepthExceeded,
                      "p-th root exceeds max_root_depth " + std::to_string(desc_.max_root_depth));
            return Coeff(e);
        }
        case FieldKind::RationalFunctions: {
            FpRatFunc root;
            if (rf_p_root(a.rat_func(), p, root)) return Coeff(root);
            raise(ErrorCode::RootDepthExceeded, "element has no p-th root in F_p(var)");
        }
        case FieldKind::Rationals:
            raise(ErrorCode::InvalidArgument, "p_th_root needs positive characteristic");
    }
    raise(ErrorCode::InvalidArgument, "unreachable");
}

std::string Field::to_string(const Coeff& a) const {
    switch (desc_.kind) {
        case FieldKind::Rationals: return rat_to_string(a.rat());
        case FieldKind::PrimeField: return std::to_string(a.residue());
        case FieldKind::RationalFunctions: return rf_to_string(a.rat_func(), desc_.variable);
        case FieldKind::PerfectHull: {
            const PerfectElem& e = a.perfect();
            std::string inner = rf_to_string(e.f, desc_.variable);
            for (unsigned i = 0; i < e.depth; ++i)
                inner = "root" + std::to_string(desc_.p) + "(" + inner + ")";
            return inner;
        }
    }
    return "?";
}

} // namespace hahnfield
