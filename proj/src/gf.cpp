#include "ccodes/gf.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ccodes {

namespace {

constexpr std::uint32_t kMaxQ = 1u << 20;

// Digits of x in base p, least significant first, padded to len.
std::vector<std::uint32_t> digits(std::uint32_t x, std::uint32_t p, std::size_t len) {
    std::vector<std::uint32_t> d(len, 0);
    for (std::size_t i = 0; i < len && x; ++i) {
        d[i] = x % p;
        x /= p;
    }
    return d;
}

std::uint32_t encode(const std::vector<std::uint32_t>& d, std::uint32_t p) {
    std::uint32_t x = 0;
    for (std::size_t i = d.size(); i-- > 0;) x = x * p + d[i];
    return x;
}

// Multiplies two elements of GF(p^m) given as digit vectors, reducing by the
// monic modulus (ascending coefficients, degree m).
std::vector<std::uint32_t> poly_mulmod(const std::vector<std::uint32_t>& a,
                                       const std::vector<std::uint32_t>& b,
                                       const std::vector<std::uint32_t>& mod, std::uint32_t p) {
    std::size_t m = mod.size() - 1;
    std::vector<std::uint64_t> prod(2 * m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < m; ++j) prod[i + j] += std::uint64_t(a[i]) * b[j];
    }
    for (auto& v : prod) v %= p;
    // Reduce top coefficients: x^m = -(mod_0 + ... + mod_{m-1} x^{m-1}).
    for (std::size_t d = 2 * m - 1; d >= m; --d) {
        std::uint64_t c = prod[d] % p;
        if (!c) continue;
        prod[d] = 0;
        for (std::size_t j = 0; j < m; ++j) {
            std::uint64_t sub = c * mod[j] % p;
            prod[d - m + j] = (prod[d - m + j] + p - sub) % p;
        }
    }
    std::vector<std::uint32_t> out(m);
    for (std::size_t i = 0; i < m; ++i) out[i] = static_cast<std::uint32_t>(prod[i] % p);
    return out;
}

}  // namespace

bool is_prime_u32(std::uint32_t x) {
    if (x < 2) return false;
    for (std::uint64_t d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

bool prime_power_decompose(std::uint32_t q, std::uint32_t& p, std::uint32_t& m) {
    if (q < 2) return false;
    std::uint32_t base = q;
    for (std::uint32_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            base = d;
            break;
        }
    }
    std::uint32_t mm = 0;
    std::uint64_t acc = 1;
    while (acc < q) {
        acc *= base;
        ++mm;
    }
    if (acc != q) return false;
    p = base;
    m = mm;
    return true;
}

bool poly_irreducible_mod_p(std::uint32_t p, const std::vector<std::uint32_t>& coeffs) {
    // coeffs ascending, monic, degree >= 1.
    const std::size_t deg = coeffs.size() - 1;
    if (deg == 1) return true;
    if (coeffs[0] == 0) return false;  // divisible by x
    // Divide by every monic polynomial of degree 1..deg/2.
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            std::vector<std::uint32_t> div = digits(static_cast<std::uint32_t>(code), p, d + 1);
            div[d] = 1;
            // Long division remainder of coeffs by div.
            std::vector<std::uint32_t> rem(coeffs);
            for (std::size_t top = deg; top + 1 >= d + 1 && top >= d; --top) {
                std::uint32_t c = rem[top];
                if (c) {
                    rem[top] = 0;
                    for (std::size_t j = 0; j < d; ++j) {
                        std::uint64_t sub = std::uint64_t(c) * div[j] % p;
                        rem[top - d + j] =
                            static_cast<std::uint32_t>((rem[top - d + j] + p - sub) % p);
                    }
                }
                if (top == d) break;
            }
            bool zero = std::all_of(rem.begin(), rem.end(), [](std::uint32_t v) { return !v; });
            if (zero) return false;
        }
    }
    return true;
}

FieldSpec FieldSpec::make(std::uint32_t p, std::uint32_t m) {
    if (!is_prime_u32(p)) throw std::invalid_argument("field characteristic must be prime");
    if (m < 1) throw std::invalid_argument("field extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxQ) throw std::invalid_argument("field size exceeds 2^20");
    }

    FieldSpec f;
    f.p_ = p;
    f.m_ = m;
    f.q_ = static_cast<std::uint32_t>(q);

    if (m == 1) {
        f.modulus_ = {0, 1};  // placeholder: arithmetic is plain mod p
    } else {
        // Smallest monic irreducible of degree m by integer encoding.
        for (std::uint32_t code = f.q_; code < 2 * f.q_; ++code) {
            std::vector<std::uint32_t> cand = digits(code, p, m + 1);
            if (poly_irreducible_mod_p(p, cand)) {
                f.modulus_ = std::move(cand);
                break;
            }
        }
        if (f.modulus_.empty()) throw std::logic_error("no irreducible modulus found");
    }

    // Discrete-log tables from the smallest generator.
    auto exp = std::make_shared<std::vector<Fel>>();
    auto log = std::make_shared<std::vector<Fel>>(f.q_, 0);
    const std::uint32_t group = f.q_ - 1;
    for (Fel cand = (f.q_ == 2 ? 1u : 2u); cand < f.q_; ++cand) {
        exp->clear();
        exp->reserve(group);
        std::fill(log->begin(), log->end(), 0);
        std::vector<std::uint32_t> cd = digits(cand, p, std::max<std::uint32_t>(m, 1));
        std::vector<std::uint32_t> cur = digits(1, p, std::max<std::uint32_t>(m, 1));
        bool ok = true;
        for (std::uint32_t i = 0; i < group; ++i) {
            Fel e = encode(cur, p);
            if (i > 0 && e == 1) {
                ok = false;  // order < q-1
                break;
            }
            exp->push_back(e);
            (*log)[e] = i;
            cur = (m == 1) ? digits(static_cast<std::uint32_t>(std::uint64_t(e) * cand % p), p, 1)
                           : poly_mulmod(cur, cd, f.modulus_, p);
        }
        if (ok) {
            f.gen_ = cand;
            break;
        }
    }
    if (exp->size() != group) throw std::logic_error("no multiplicative generator found");
    f.exp_ = std::move(exp);
    f.log_ = std::move(log);
    return f;
}

FieldSpec FieldSpec::make_q(std::uint32_t q) {
    std::uint32_t p = 0, m = 0;
    if (!prime_power_decompose(q, p, m))
        throw std::invalid_argument("field size must be a prime power");
    return make(p, m);
}

void FieldSpec::check(Fel a) const {
    if (a >= q_) throw std::out_of_range("element index outside the field");
}

Fel FieldSpec::add(Fel a, Fel b) const {
    check(a);
    check(b);
    if (m_ == 1) return (a + b) % p_;
    if (p_ == 2) return a ^ b;
    Fel out = 0, scale = 1;
    while (a || b) {
        out += (a % p_ + b % p_) % p_ * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return out;
}

Fel FieldSpec::neg(Fel a) const {
    check(a);
    if (m_ == 1) return a ? p_ - a : 0;
    if (p_ == 2) return a;
    Fel out = 0, scale = 1;
    while (a) {
        Fel d = a % p_;
        out += (d ? p_ - d : 0) * scale;
        a /= p_;
        scale *= p_;
    }
    return out;
}

Fel FieldSpec::sub(Fel a, Fel b) const { return add(a, neg(b)); }

Fel FieldSpec::mul(Fel a, Fel b) const {
    check(a);
    check(b);
    if (!a || !b) return 0;
    std::uint32_t s = (*log_)[a] + (*log_)[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return (*exp_)[s];
}

Fel FieldSpec::inv(Fel a) const {
    check(a);
    if (!a) throw std::domain_error("zero has no multiplicative inverse");
    std::uint32_t l = (*log_)[a];
    return (*exp_)[l ? q_ - 1 - l : 0];
}

Fel FieldSpec::pow(Fel a, std::uint64_t e) const {
    check(a);
    if (!e) return 1;
    if (!a) return 0;
    std::uint64_t l = std::uint64_t((*log_)[a]) * (e % (q_ - 1)) % (q_ - 1);
    return (*exp_)[l];
}

std::vector<Fel> FieldSpec::elements() const {
    std::vector<Fel> out(q_);
    for (std::uint32_t i = 0; i < q_; ++i) out[i] = i;
    return out;
}

std::string FieldSpec::describe() const {
    std::ostringstream os;
    os << "GF(" << q_ << ")";
    if (m_ > 1) {
        os << " = GF(" << p_ << "^" << m_ << "), modulus";
        for (std::size_t d = modulus_.size(); d-- > 0;) {
            if (!modulus_[d]) continue;
            os << (d + 1 == modulus_.size() ? " " : " + ");
            if (modulus_[d] > 1 || d == 0) os << modulus_[d];
            if (d >= 1) {
                if (modulus_[d] > 1) os << "*";
                os << "x";
                if (d > 1) os << "^" << d;
            }
        }
    }
    return os.str();
}

// --------------------------- polynomials ----------------------------------

GfPoly GfPoly::constant(Fel a) {
    GfPoly p;
    if (a) p.c = {a};
    return p;
}

void GfPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

GfPoly poly_add(const FieldSpec& F, const GfPoly& a, const GfPoly& b) {
    GfPoly out;
    out.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < out.c.size(); ++i) {
        Fel x = i < a.c.size() ? a.c[i] : 0;
        Fel y = i < b.c.size() ? b.c[i] : 0;
        out.c[i] = F.add(x, y);
    }
    out.normalize();
    return out;
}

GfPoly poly_sub(const FieldSpec& F, const GfPoly& a, const GfPoly& b) {
    GfPoly nb = b;
    for (auto& v : nb.c) v = F.neg(v);
    return poly_add(F, a, nb);
}

GfPoly poly_mul(const FieldSpec& F, const GfPoly& a, const GfPoly& b) {
    if (a.is_zero() || b.is_zero()) return GfPoly::zero();
    GfPoly out;
    out.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (!a.c[i]) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            out.c[i + j] = F.add(out.c[i + j], F.mul(a.c[i], b.c[j]));
    }
    out.normalize();
    return out;
}

GfPoly poly_mod(const FieldSpec& F, const GfPoly& a, const GfPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    GfPoly rem = a;
    Fel lead_inv = F.inv(b.c.back());
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        Fel f = F.mul(rem.c.back(), lead_inv);
        std::size_t shift = rem.c.size() - b.c.size();
        for (std::size_t i = 0; i < b.c.size(); ++i)
            rem.c[shift + i] = F.sub(rem.c[shift + i], F.mul(f, b.c[i]));
        rem.normalize();
    }
    return rem;
}

GfPoly poly_gcd(const FieldSpec& F, GfPoly a, GfPoly b) {
    while (!b.is_zero()) {
        GfPoly r = poly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && a.c.back() != 1) {
        Fel inv = F.inv(a.c.back());
        for (auto& v : a.c) v = F.mul(v, inv);
    }
    return a;
}

}  // namespace ccodes
