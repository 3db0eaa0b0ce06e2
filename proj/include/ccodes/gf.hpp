#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace ccodes {

// Element of GF(p^m), encoded as an integer in [0, q): the base-p digits of
// the encoding are the polynomial coefficients in ascending degree.
using Fel = std::uint32_t;

// GF(p^m) with a canonical, reproducible modulus.
//
// The modulus is the monic irreducible polynomial of degree m over GF(p)
// whose coefficient vector (c_0 least significant) has the smallest integer
// encoding sum(c_i * p^i).  Prime fields (m = 1) use direct mod-p arithmetic
// and the placeholder modulus x (coefficients [0, 1]).
//
// Immutable after construction; all operations are pure and safe for
// unrestricted concurrent use.
class FieldSpec {
public:
    // Builds GF(p^m).  Throws std::invalid_argument for non-prime p, m < 1,
    // or p^m > 2^20.
    static FieldSpec make(std::uint32_t p, std::uint32_t m);

    // Builds GF(q) for a prime power q, factoring q as p^m.
    // Throws std::invalid_argument if q is not a prime power in range.
    static FieldSpec make_q(std::uint32_t q);

    std::uint32_t p() const { return p_; }
    std::uint32_t m() const { return m_; }
    std::uint32_t q() const { return q_; }
    // Modulus coefficients c_0..c_m, ascending degree.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Fel add(Fel a, Fel b) const;
    Fel sub(Fel a, Fel b) const;
    Fel neg(Fel a) const;
    Fel mul(Fel a, Fel b) const;
    Fel inv(Fel a) const;  // throws std::domain_error on inv(0)
    Fel pow(Fel a, std::uint64_t e) const;

    // All q elements in index order 0..q-1.
    std::vector<Fel> elements() const;

    // A fixed generator of the multiplicative group (the one used to build
    // the discrete-log tables).
    Fel generator() const { return gen_; }

    bool operator==(const FieldSpec& o) const { return p_ == o.p_ && m_ == o.m_; }

    std::string describe() const;  // "GF(8) = GF(2^3), modulus x^3+x+1"

private:
    FieldSpec() = default;
    void check(Fel a) const;  // throws std::out_of_range if a >= q

    std::uint32_t p_ = 0, m_ = 0, q_ = 0;
    std::vector<std::uint32_t> modulus_;
    Fel gen_ = 0;
    // exp_[i] = gen^i for i in [0, q-1); log_[a] defined for a != 0.
    std::shared_ptr<const std::vector<Fel>> exp_, log_;
};

// Dense univariate polynomial over a FieldSpec, coefficients ascending.
// Used for gcd-based primeness tests; not a hot path.
struct GfPoly {
    std::vector<Fel> c;  // normalized: empty means the zero polynomial

    static GfPoly zero() { return {}; }
    static GfPoly constant(Fel a);
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    void normalize();
};

GfPoly poly_add(const FieldSpec& F, const GfPoly& a, const GfPoly& b);
GfPoly poly_sub(const FieldSpec& F, const GfPoly& a, const GfPoly& b);
GfPoly poly_mul(const FieldSpec& F, const GfPoly& a, const GfPoly& b);
// Remainder of a modulo b (b != 0).
GfPoly poly_mod(const FieldSpec& F, const GfPoly& a, const GfPoly& b);
// Monic gcd (zero polynomial if both inputs are zero).
GfPoly poly_gcd(const FieldSpec& F, GfPoly a, GfPoly b);

// True if the monic polynomial with the given ascending coefficient vector is
// irreducible over GF(p).  Trial division by all monic polynomials of degree
// at most deg/2; desk scale only.
bool poly_irreducible_mod_p(std::uint32_t p, const std::vector<std::uint32_t>& coeffs);

bool is_prime_u32(std::uint32_t x);
// Decomposes q = p^m with p prime; returns false if q is not a prime power.
bool prime_power_decompose(std::uint32_t q, std::uint32_t& p, std::uint32_t& m);

}  // namespace ccodes
