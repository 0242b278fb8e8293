#ifndef RANKCODE_GABIDULIN_HPP
#define RANKCODE_GABIDULIN_HPP

#include "rankcode/field.hpp"
#include "rankcode/linpoly.hpp"
#include "rankcode/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rankcode {

// Gabidulin code over F_{q^m}: length n <= m, dimension k, minimum rank
// distance d = n - k + 1. Defined by the Moore parity-check matrix built from
// F_q-linearly independent elements h_1..h_n; the generator is the RRE basis
// of the parity-check null space.
class GabidulinCode {
  public:
    static GabidulinCode make(Field::Ptr field, unsigned n, unsigned k);

    const Field& field() const { return *field_; }
    Field::Ptr field_ptr() const { return field_; }
    unsigned n() const { return n_; }
    unsigned k() const { return k_; }
    unsigned d() const { return d_; }

    const std::vector<Ext>& h() const { return h_; }
    const std::vector<std::vector<Ext>>& H() const { return H_; }  // (d-1) x n
    const std::vector<std::vector<Ext>>& G() const { return G_; }  // k x n
    const MatQ& Q() const { return Q_; }                           // m x n, hmat * Q = I

    BigInt cardinality() const;  // q^{mk}

    std::vector<Ext> encode(const std::vector<Ext>& u) const;  // u G, length n
    bool is_codeword(const std::vector<Ext>& x) const;

    // message with index in [0, q^{mk}) as base-q digits; deterministic enumeration order
    std::vector<Ext> message_from_index(std::uint64_t idx) const;

  private:
    Field::Ptr field_;
    unsigned n_ = 0, k_ = 0, d_ = 0;
    std::vector<Ext> h_;
    std::vector<std::vector<Ext>> H_, G_;
    MatQ Q_;
};

// Received tuple for generalized decoding: word r, erasure locations L_hat
// (n x mu over F_q, full column rank) and deviation values E_hat (delta
// elements of F_{q^m}, linearly independent over F_q).
struct ReceivedTuple {
    std::vector<Ext> r;
    MatQ L_hat;               // n x mu
    std::vector<Ext> E_hat;   // delta entries
};

// Intermediate decoder state, kept for inspection by tests and the CLI.
struct DecoderWorkspace {
    std::vector<Ext> syndromes;       // S_0..S_{d-2}
    std::vector<Ext> X_hat;           // erasure locators
    LinPoly lambda_U, sigma_D;
    LinPoly S_poly, S_rev;
    LinPoly S_DU, sigma_F, S_FD, sigma_U, sigma, omega;   // span-polynomial path
    LinPoly S_UD, lambda_F, S_FU, lambda_D, lambda, psi;  // locator-polynomial path
    std::vector<Ext> beta, gamma;
    std::vector<Ext> values;          // error values E_j
    std::vector<Ext> locators;        // error locators X_j
    MatQ locations;                   // n x tau over F_q
};

struct DecodeOutcome {
    bool ok = false;
    std::vector<Ext> codeword;
    std::vector<Ext> error;
    unsigned eps = 0, mu = 0, delta = 0;
    std::string reason;  // set on failure
    DecoderWorkspace ws;

    static DecodeOutcome failure(std::string why, unsigned mu, unsigned delta) {
        DecodeOutcome o;
        o.ok = false;
        o.reason = std::move(why);
        o.mu = mu;
        o.delta = delta;
        return o;
    }
};

// S = H r; S_l = sum_i h_i^{[l]} r_i
std::vector<Ext> syndromes(const GabidulinCode& code, const std::vector<Ext>& r);

// Unique solution X of B_l = sum_j A_j^{[l]} X_j for l = 0..B.size()-1, given
// linearly independent A_1..A_tau, tau <= B.size(). Returns nullopt when the
// (overdetermined) system is inconsistent.
std::optional<std::vector<Ext>> gabidulin_solve(const Field& f, std::vector<Ext> A, std::vector<Ext> B);

// Minimal connection polynomial sigma (sigma_0 = 1) with
// sum_i sigma_i S_{l-i}^{[i]} = 0 for l = deg sigma .. d_eff-2.
LinPoly berlekamp_massey(const Field& f, const std::vector<Ext>& S, unsigned d_eff);

DecodeOutcome conventional_decode(const GabidulinCode& code, const std::vector<Ext>& r);
DecodeOutcome generalized_decode(const GabidulinCode& code, const ReceivedTuple& t);
DecodeOutcome generalized_decode_locator(const GabidulinCode& code, const ReceivedTuple& t);

// Componentwise decoding of a Cartesian product of Gabidulin codes sharing
// (q, n, d); the tuples must share the same erasure locations.
std::vector<DecodeOutcome> product_code_decode(const std::vector<GabidulinCode>& codes,
                                               const std::vector<ReceivedTuple>& tuples);

// rank of the block matrix [L_hat, e; 0, E_hat] over F_q
std::size_t errata_objective(const Field& f, const MatQ& L_hat, const std::vector<Ext>& e,
                             const std::vector<Ext>& E_hat);

}  // namespace rankcode

#endif
