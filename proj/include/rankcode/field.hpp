#ifndef RANKCODE_FIELD_HPP
#define RANKCODE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace rankcode {

using Sym = std::uint16_t;  // value in [0, q)

// Prime field scalar arithmetic, q < 2^16 and prime.
namespace fq {

inline Sym add(Sym a, Sym b, unsigned q) { return Sym((unsigned(a) + b) % q); }
inline Sym sub(Sym a, Sym b, unsigned q) { return Sym((unsigned(a) + q - b) % q); }
inline Sym neg(Sym a, unsigned q) { return a ? Sym(q - a) : 0; }
inline Sym mul(Sym a, Sym b, unsigned q) { return Sym((std::uint32_t(a) * b) % q); }
Sym inv(Sym a, unsigned q);  // throws std::domain_error on zero
bool is_prime(unsigned q);

}  // namespace fq

// Element of F_{q^m}: coordinates in the polynomial basis 1, alpha, ..., alpha^{m-1}.
struct Ext {
    std::vector<Sym> c;

    bool operator==(const Ext& o) const { return c == o.c; }
    bool operator!=(const Ext& o) const { return c != o.c; }
    bool is_zero() const {
        for (Sym v : c)
            if (v) return false;
        return true;
    }
};

// Running tally of extension-field operations, used by the decoder cost checks.
struct OpCount {
    static thread_local std::uint64_t mul;
    static thread_local std::uint64_t inv;
    static thread_local std::uint64_t frob;
    static void reset() { mul = inv = frob = 0; }
    static std::uint64_t total() { return mul + inv + frob; }
};

// F_{q^m} with a fixed monic irreducible modulus of degree m over prime F_q.
// Immutable after construction; safe to share across threads.
class Field {
  public:
    using Ptr = std::shared_ptr<const Field>;

    // Modulus from the built-in table (q <= 5, m <= 12) or a seeded randomized
    // search with an irreducibility test for larger parameters.
    static Ptr make(unsigned q, unsigned m);
    // Explicit modulus c0..cm (monic); irreducibility is verified.
    static Ptr make(unsigned q, unsigned m, std::vector<Sym> modulus);

    unsigned q() const { return q_; }
    unsigned m() const { return m_; }
    const std::vector<Sym>& modulus() const { return modulus_; }

    Ext zero() const { return Ext{std::vector<Sym>(m_, 0)}; }
    Ext one() const;
    Ext alpha() const;                 // basis generator (== zero when m == 1)
    Ext basis_elem(unsigned i) const;  // alpha^i, i < m
    Ext from_coeffs(std::vector<Sym> c) const;  // length m, values < q

    bool same(const Field& o) const { return q_ == o.q_ && modulus_ == o.modulus_; }

    Ext add(const Ext& a, const Ext& b) const;
    Ext sub(const Ext& a, const Ext& b) const;
    Ext neg(const Ext& a) const;
    Ext mul(const Ext& a, const Ext& b) const;
    Ext inv(const Ext& a) const;                // throws std::domain_error on zero
    Ext scal(Sym s, const Ext& a) const;        // F_q scalar multiple
    Ext frob_pow(const Ext& a, long i) const;   // a^{q^i}, exponent reduced mod m

    // Irreducibility of a monic degree-deg polynomial c0..c_deg over F_q.
    static bool is_irreducible(const std::vector<Sym>& f, unsigned q);

  private:
    Field(unsigned q, unsigned m, std::vector<Sym> modulus);
    void check_elem(const Ext& a) const;

    unsigned q_ = 0;
    unsigned m_ = 0;
    std::vector<Sym> modulus_;               // c0..cm, monic
    std::vector<std::vector<Sym>> frob_;     // frob_[i]: m x m row-major matrix of a -> a^{q^i}
};

}  // namespace rankcode

#endif
