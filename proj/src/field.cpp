#include "rankcode/field.hpp"

#include "rankcode/rng.hpp"

#include <algorithm>
#include <stdexcept>

namespace rankcode {

thread_local std::uint64_t OpCount::mul = 0;
thread_local std::uint64_t OpCount::inv = 0;
thread_local std::uint64_t OpCount::frob = 0;

namespace fq {

Sym inv(Sym a, unsigned q) {
    if (a == 0) throw std::domain_error("fq::inv of zero");
    // extended Euclid on integers
    long long t = 0, new_t = 1, r = q, new_r = a % q;
    while (new_r != 0) {
        long long quot = r / new_r;
        std::swap(t -= quot * new_t, new_t);
        std::swap(r -= quot * new_r, new_r);
    }
    if (t < 0) t += q;
    return Sym(t);
}

bool is_prime(unsigned q) {
    if (q < 2) return false;
    for (unsigned p = 2; p * p <= q; ++p)
        if (q % p == 0) return false;
    return true;
}

}  // namespace fq

namespace {

using Poly = std::vector<Sym>;  // dense, c0..c_deg; not necessarily trimmed

int degree(const Poly& f) {
    for (int i = int(f.size()) - 1; i >= 0; --i)
        if (f[i]) return i;
    return -1;
}

void trim(Poly& f) { f.resize(size_t(degree(f) + 1)); }

Poly poly_mul(const Poly& a, const Poly& b, unsigned q) {
    if (a.empty() || b.empty()) return {};
    Poly p(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (!b[j]) continue;
            p[i + j] = Sym((p[i + j] + std::uint32_t(a[i]) * b[j]) % q);
        }
    }
    return p;
}

Poly poly_mod(Poly a, const Poly& f, unsigned q) {
    const int df = degree(f);
    const Sym lead_inv = fq::inv(f[size_t(df)], q);
    for (int i = degree(a); i >= df; --i) {
        Sym c = a[size_t(i)];
        if (!c) continue;
        const Sym factor = fq::mul(c, lead_inv, q);
        for (int j = 0; j <= df; ++j)
            a[size_t(i - df + j)] = fq::sub(a[size_t(i - df + j)], fq::mul(factor, f[size_t(j)], q), q);
    }
    trim(a);
    return a;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, unsigned q) {
    Poly result{1};
    base = poly_mod(std::move(base), f, q);
    while (e) {
        if (e & 1) result = poly_mod(poly_mul(result, base, q), f, q);
        base = poly_mod(poly_mul(base, base, q), f, q);
        e >>= 1;
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, unsigned q) {
    trim(a);
    trim(b);
    while (degree(b) >= 0) {
        a = poly_mod(std::move(a), b, q);
        std::swap(a, b);
    }
    return a;
}

// x^{q^j} mod f for j = 0..m, computed by iterated q-th powers
std::vector<Poly> frobenius_chain(const Poly& f, unsigned q, unsigned m) {
    std::vector<Poly> chain(m + 1);
    chain[0] = Poly{0, 1};  // x
    for (unsigned j = 1; j <= m; ++j) chain[j] = poly_powmod(chain[j - 1], q, f, q);
    return chain;
}

struct IrredEntry {
    unsigned q, m;
    Sym c[13];
};

// lexicographically smallest monic irreducible, little-endian digit order
const IrredEntry kIrredTable[] = {
    {2, 1, {0, 1}},
    {2, 2, {1, 1, 1}},
    {2, 3, {1, 1, 0, 1}},
    {2, 4, {1, 1, 0, 0, 1}},
    {2, 5, {1, 0, 1, 0, 0, 1}},
    {2, 6, {1, 1, 0, 0, 0, 0, 1}},
    {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
    {2, 8, {1, 1, 0, 1, 1, 0, 0, 0, 1}},
    {2, 9, {1, 1, 0, 0, 0, 0, 0, 0, 0, 1}},
    {2, 10, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
    {2, 11, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {2, 12, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {3, 1, {0, 1}},
    {3, 2, {1, 0, 1}},
    {3, 3, {1, 2, 0, 1}},
    {3, 4, {2, 1, 0, 0, 1}},
    {3, 5, {1, 2, 0, 0, 0, 1}},
    {3, 6, {2, 1, 0, 0, 0, 0, 1}},
    {3, 7, {2, 0, 1, 0, 0, 0, 0, 1}},
    {3, 8, {2, 0, 1, 0, 0, 0, 0, 0, 1}},
    {3, 9, {1, 0, 1, 2, 0, 0, 0, 0, 0, 1}},
    {3, 10, {1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 1}},
    {3, 11, {2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {3, 12, {2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {5, 1, {0, 1}},
    {5, 2, {2, 0, 1}},
    {5, 3, {1, 1, 0, 1}},
    {5, 4, {2, 0, 0, 0, 1}},
    {5, 5, {1, 4, 0, 0, 0, 1}},
    {5, 6, {2, 1, 0, 0, 0, 0, 1}},
    {5, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
    {5, 8, {2, 0, 0, 0, 0, 0, 0, 0, 1}},
    {5, 9, {3, 2, 1, 0, 0, 0, 0, 0, 0, 1}},
    {5, 10, {3, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1}},
    {5, 11, {1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {5, 12, {4, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
};

std::vector<Sym> default_modulus(unsigned q, unsigned m) {
    for (const auto& e : kIrredTable) {
        if (e.q == q && e.m == m) return std::vector<Sym>(e.c, e.c + m + 1);
    }
    // randomized search, seeded by (q, m) for reproducibility
    Rng rng(mix_seed(0x72616e6b636f6465ULL, (std::uint64_t(q) << 32) | m));
    for (int tries = 0; tries < 100000; ++tries) {
        std::vector<Sym> f(m + 1, 0);
        f[m] = 1;
        for (unsigned i = 0; i < m; ++i) f[i] = Sym(rng.below(q));
        if (f[0] == 0) continue;  // reducible unless m == 1; skip
        if (Field::is_irreducible(f, q)) return f;
    }
    throw std::runtime_error("irreducible modulus search failed");
}

}  // namespace

bool Field::is_irreducible(const std::vector<Sym>& f, unsigned q) {
    const int m = degree(f);
    if (m < 1) return false;
    if (f[size_t(m)] != 1) return false;
    if (m == 1) return true;
    auto chain = frobenius_chain(f, q, unsigned(m));
    // x^{q^m} == x mod f
    Poly t = chain[size_t(m)];
    // t - x
    if (t.size() < 2) t.resize(2, 0);
    t[1] = fq::sub(t[1], 1, q);
    if (degree(t) >= 0) return false;
    // gcd(x^{q^{m/p}} - x, f) == 1 for every prime p | m
    for (unsigned p = 2; p <= unsigned(m); ++p) {
        if (unsigned(m) % p != 0 || !fq::is_prime(p)) continue;
        Poly g = chain[size_t(m) / p];
        if (g.size() < 2) g.resize(2, 0);
        g[1] = fq::sub(g[1], 1, q);
        Poly d = poly_gcd(g, f, q);
        if (degree(d) != 0) return false;
    }
    return true;
}

Field::Field(unsigned q, unsigned m, std::vector<Sym> modulus)
    : q_(q), m_(m), modulus_(std::move(modulus)) {
    if (!fq::is_prime(q) || q >= (1u << 16)) throw std::invalid_argument("q must be prime, 2 <= q < 2^16");
    if (m < 1 || m > 64) throw std::invalid_argument("m must satisfy 1 <= m <= 64");
    if (modulus_.size() != m + 1 || modulus_[m] != 1)
        throw std::invalid_argument("modulus must be monic of degree m");
    for (Sym c : modulus_)
        if (c >= q) throw std::invalid_argument("modulus coefficient out of range");
    if (!is_irreducible(modulus_, q)) throw std::invalid_argument("modulus is not irreducible");

    // frob_[1] columns: (alpha^j)^q mod f; frob_[i] = frob_[i-1] * frob_[1]
    frob_.assign(m_, std::vector<Sym>(size_t(m_) * m_, 0));
    for (unsigned j = 0; j < m_; ++j) frob_[0][size_t(j) * m_ + j] = 1;
    if (m_ > 1) {
        for (unsigned j = 0; j < m_; ++j) {
            Poly xj(j + 1, 0);
            xj[j] = 1;
            Poly img = poly_powmod(xj, q_, modulus_, q_);
            for (size_t r = 0; r < img.size(); ++r) frob_[1][r * m_ + j] = img[r];
        }
        for (unsigned i = 2; i < m_; ++i) {
            for (unsigned r = 0; r < m_; ++r)
                for (unsigned c = 0; c < m_; ++c) {
                    std::uint64_t acc = 0;
                    for (unsigned k = 0; k < m_; ++k)
                        acc += std::uint64_t(frob_[i - 1][size_t(r) * m_ + k]) * frob_[1][size_t(k) * m_ + c];
                    frob_[i][size_t(r) * m_ + c] = Sym(acc % q_);
                }
        }
    }
}

Field::Ptr Field::make(unsigned q, unsigned m) {
    if (!fq::is_prime(q) || q >= (1u << 16)) throw std::invalid_argument("q must be prime, 2 <= q < 2^16");
    if (m < 1 || m > 64) throw std::invalid_argument("m must satisfy 1 <= m <= 64");
    return Ptr(new Field(q, m, default_modulus(q, m)));
}

Field::Ptr Field::make(unsigned q, unsigned m, std::vector<Sym> modulus) {
    return Ptr(new Field(q, m, std::move(modulus)));
}

Ext Field::one() const {
    Ext e = zero();
    e.c[0] = 1;
    return e;
}

Ext Field::alpha() const {
    if (m_ > 1) return basis_elem(1);
    // m == 1: alpha is the root of the degree-1 modulus x + c0
    return Ext{{fq::neg(modulus_[0], q_)}};
}

Ext Field::basis_elem(unsigned i) const {
    if (i >= m_) throw std::invalid_argument("basis index out of range");
    Ext e = zero();
    e.c[i] = 1;
    return e;
}

Ext Field::from_coeffs(std::vector<Sym> c) const {
    if (c.size() != m_) throw std::invalid_argument("coefficient vector must have length m");
    for (Sym v : c)
        if (v >= q_) throw std::invalid_argument("coefficient out of range");
    return Ext{std::move(c)};
}

void Field::check_elem(const Ext& a) const {
    if (a.c.size() != m_) throw std::invalid_argument("element from mismatched field");
}

Ext Field::add(const Ext& a, const Ext& b) const {
    check_elem(a);
    check_elem(b);
    Ext r = a;
    for (unsigned i = 0; i < m_; ++i) r.c[i] = fq::add(r.c[i], b.c[i], q_);
    return r;
}

Ext Field::sub(const Ext& a, const Ext& b) const {
    check_elem(a);
    check_elem(b);
    Ext r = a;
    for (unsigned i = 0; i < m_; ++i) r.c[i] = fq::sub(r.c[i], b.c[i], q_);
    return r;
}

Ext Field::neg(const Ext& a) const {
    check_elem(a);
    Ext r = a;
    for (unsigned i = 0; i < m_; ++i) r.c[i] = fq::neg(r.c[i], q_);
    return r;
}

Ext Field::scal(Sym s, const Ext& a) const {
    check_elem(a);
    Ext r = a;
    for (unsigned i = 0; i < m_; ++i) r.c[i] = fq::mul(s, r.c[i], q_);
    return r;
}

Ext Field::mul(const Ext& a, const Ext& b) const {
    check_elem(a);
    check_elem(b);
    ++OpCount::mul;
    if (m_ == 1) return Ext{{fq::mul(a.c[0], b.c[0], q_)}};
    Poly p(2 * m_ - 1, 0);
    for (unsigned i = 0; i < m_; ++i) {
        if (!a.c[i]) continue;
        for (unsigned j = 0; j < m_; ++j) {
            if (!b.c[j]) continue;
            p[i + j] = Sym((p[i + j] + std::uint32_t(a.c[i]) * b.c[j]) % q_);
        }
    }
    Poly r = poly_mod(std::move(p), modulus_, q_);
    r.resize(m_, 0);
    return Ext{std::move(r)};
}

Ext Field::inv(const Ext& a) const {
    check_elem(a);
    if (a.is_zero()) throw std::domain_error("inverse of zero");
    ++OpCount::inv;
    if (m_ == 1) return Ext{{fq::inv(a.c[0], q_)}};
    // extended Euclid in F_q[x]: s*a + t*modulus = gcd
    Poly r0 = modulus_, r1(a.c.begin(), a.c.end());
    trim(r1);
    Poly s0{}, s1{1};
    while (degree(r1) > 0) {
        // long division r0 = qt*r1 + rem
        Poly qt(size_t(degree(r0) - degree(r1) + 1), 0);
        Poly rem = r0;
        Sym lead_inv = fq::inv(r1[size_t(degree(r1))], q_);
        for (int i = degree(rem); i >= degree(r1); --i) {
            Sym c = rem[size_t(i)];
            if (!c) continue;
            Sym f = fq::mul(c, lead_inv, q_);
            qt[size_t(i - degree(r1))] = f;
            for (int j = 0; j <= degree(r1); ++j)
                rem[size_t(i - degree(r1) + j)] =
                    fq::sub(rem[size_t(i - degree(r1) + j)], fq::mul(f, r1[size_t(j)], q_), q_);
        }
        trim(rem);
        Poly s2 = s0;
        Poly qs = poly_mul(qt, s1, q_);
        s2.resize(std::max(s2.size(), qs.size()), 0);
        for (size_t i = 0; i < qs.size(); ++i) s2[i] = fq::sub(i < s2.size() ? s2[i] : 0, qs[i], q_);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (degree(r1) != 0) throw std::domain_error("inverse of zero");
    Sym c = fq::inv(r1[0], q_);
    Poly out = s1;
    for (auto& v : out) v = fq::mul(v, c, q_);
    out = poly_mod(std::move(out), modulus_, q_);
    out.resize(m_, 0);
    return Ext{std::move(out)};
}

Ext Field::frob_pow(const Ext& a, long i) const {
    check_elem(a);
    long r = i % long(m_);
    if (r < 0) r += m_;
    if (r == 0) return a;  // identity map, not counted as work
    ++OpCount::frob;
    const auto& M = frob_[size_t(r)];
    Ext out = zero();
    for (unsigned row = 0; row < m_; ++row) {
        std::uint64_t acc = 0;
        for (unsigned col = 0; col < m_; ++col) acc += std::uint64_t(M[size_t(row) * m_ + col]) * a.c[col];
        out.c[row] = Sym(acc % q_);
    }
    return out;
}

}  // namespace rankcode
