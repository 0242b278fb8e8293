#ifndef RANKCODE_ORACLE_HPP
#define RANKCODE_ORACLE_HPP

#include "rankcode/gabidulin.hpp"
#include "rankcode/matrix.hpp"

#include <cstdint>
#include <vector>

namespace rankcode {

// Exhaustive references for the decoders and distance claims. Deliberately
// naive; enumeration caps raise std::length_error instead of truncating.

inline constexpr std::uint64_t kOracleEnumCap = 1u << 20;

struct OracleResult {
    std::vector<Ext> codeword;
    std::size_t objective = 0;   // rank of [L_hat, r - x; 0, E_hat]
    bool ambiguous = false;      // more than one minimizer
    std::uint64_t index = 0;     // enumeration index of the reported minimizer
};

// exact minimizer of the generalized decoding objective over all codewords;
// parallel enumeration with deterministic tie reduction
OracleResult brute_generalized_decode(const GabidulinCode& code, const ReceivedTuple& t);
OracleResult brute_generalized_decode_serial(const GabidulinCode& code, const ReceivedTuple& t);

struct SubspaceOracleResult {
    std::size_t index = 0;        // position in the codebook
    std::size_t distance = 0;
    bool ambiguous = false;
};

SubspaceOracleResult brute_subspace_decode(const std::vector<Subspace>& codebook, const Subspace& received);

// exact min over E1 (mu x m) and L2 (n x delta) of rank(e - L_hat E1 - L2 E_hat)
std::size_t min_rank_erasure_deviation(const MatQ& e, const MatQ& L_hat, const MatQ& E_hat);

}  // namespace rankcode

#endif
