#ifndef RANKCODE_LIFTING_HPP
#define RANKCODE_LIFTING_HPP

#include "rankcode/gabidulin.hpp"
#include "rankcode/matrix.hpp"
#include "rankcode/rng.hpp"

#include <cstdint>
#include <vector>

namespace rankcode {

// lifting x -> row space of [I | x]
MatQ lift_matrix(const MatQ& x);
Subspace lift(const MatQ& x);

// Reduction of a received matrix Y with n leading coefficient columns:
// a tuple (r, L_hat, E_hat) plus the erasure index set U such that
// [I + L_hat I_U^T, r; 0, E_hat] spans the same row space as Y.
struct ReductionResult {
    MatQ r;                       // n x m
    MatQ L_hat;                   // n x mu
    MatQ E_hat;                   // delta x m
    std::vector<std::size_t> U;   // erasure row indices, |U| = mu
    std::size_t mu = 0, delta = 0;

    MatQ assembled() const;       // the block matrix above
};

ReductionResult reduce(const MatQ& Y, std::size_t n);

// 2 rank [L_hat, r - x; 0, E_hat] - (mu + delta) = d_S(<[I x]>, <Y>)
std::size_t reduction_distance(const ReductionResult& red, const MatQ& x);

// Random linear network coding channel Y = A X + B Z with rank-controlled A
// and row-sparse Z.
struct ChannelConfig {
    unsigned n = 0;        // source packets
    unsigned m = 0;        // payload length; packet length M = n + m
    unsigned N = 0;        // received packets
    unsigned rho_max = 0;  // max column-rank deficiency of A
    unsigned t_max = 0;    // max corrupt packets wt(Z)
    unsigned links = 0;    // error-injection rows of Z; 0 means t_max
    std::uint64_t seed = 1;
};

struct ChannelDraw {
    MatQ Y, A, B, Z;
};

class ChannelSim {
  public:
    explicit ChannelSim(const ChannelConfig& cfg);

    // one channel use; also returns the ground truth (A, B, Z) for assertions
    ChannelDraw transmit(const MatQ& X);

    // adversarial variant: searches `candidates` random Z draws for the one
    // maximizing the post-reduction errata rank against the true payload
    ChannelDraw transmit_adversarial(const MatQ& X, const MatQ& payload, unsigned candidates);

    const ChannelConfig& config() const { return cfg_; }

  private:
    MatQ random_rank_matrix(std::size_t rows, std::size_t cols, std::size_t target_rank);
    MatQ draw_Z();
    ChannelConfig cfg_;
    unsigned q_ = 2;
    Rng rng_;
};

// reduce then generalized-decode; the payload rows of Y are mapped onto the
// code's extension-field symbols
DecodeOutcome end_to_end_decode(const GabidulinCode& code, const MatQ& Y);

ReceivedTuple tuple_from_reduction(const GabidulinCode& code, const ReductionResult& red);

}  // namespace rankcode

#endif
