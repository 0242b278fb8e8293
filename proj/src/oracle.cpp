#include "rankcode/oracle.hpp"

#include <omp.h>

#include <stdexcept>

namespace rankcode {

namespace {

std::uint64_t enumerable_cardinality(const GabidulinCode& code) {
    const BigInt card = code.cardinality();
    if (card > kOracleEnumCap) throw std::length_error("code too large to enumerate");
    return card.convert_to<std::uint64_t>();
}

std::size_t objective_for(const GabidulinCode& code, const ReceivedTuple& t, const std::vector<Ext>& x) {
    const Field& f = code.field();
    std::vector<Ext> e(code.n());
    for (unsigned i = 0; i < code.n(); ++i) e[i] = f.sub(t.r[i], x[i]);
    return errata_objective(f, t.L_hat, e, t.E_hat);
}

}  // namespace

OracleResult brute_generalized_decode_serial(const GabidulinCode& code, const ReceivedTuple& t) {
    const std::uint64_t card = enumerable_cardinality(code);
    OracleResult best;
    std::uint64_t ties = 0;
    for (std::uint64_t idx = 0; idx < card; ++idx) {
        std::vector<Ext> x = code.encode(code.message_from_index(idx));
        const std::size_t obj = objective_for(code, t, x);
        if (idx == 0 || obj < best.objective) {
            best.objective = obj;
            best.codeword = std::move(x);
            best.index = idx;
            ties = 1;
        } else if (obj == best.objective) {
            ++ties;
        }
    }
    best.ambiguous = ties > 1;
    return best;
}

OracleResult brute_generalized_decode(const GabidulinCode& code, const ReceivedTuple& t) {
    const std::uint64_t card = enumerable_cardinality(code);
    const std::size_t worst = code.n() + t.E_hat.size() + 1;

    std::size_t global_obj = worst;
    std::uint64_t global_idx = 0, global_ties = 0;

#pragma omp parallel
    {
        std::size_t local_obj = worst;
        std::uint64_t local_idx = 0, local_ties = 0;
#pragma omp for schedule(static) nowait
        for (long long i = 0; i < (long long)card; ++i) {
            const std::uint64_t idx = std::uint64_t(i);
            std::vector<Ext> x = code.encode(code.message_from_index(idx));
            const std::size_t obj = objective_for(code, t, x);
            if (obj < local_obj) {
                local_obj = obj;
                local_idx = idx;
                local_ties = 1;
            } else if (obj == local_obj) {
                ++local_ties;
            }
        }
#pragma omp critical
        {
            if (local_obj < global_obj || (local_obj == global_obj && local_idx < global_idx)) {
                if (local_obj == global_obj)
                    global_ties += local_ties;
                else
                    global_ties = local_ties;
                global_obj = local_obj;
                global_idx = local_idx;
            } else if (local_obj == global_obj) {
                global_ties += local_ties;
            }
        }
    }

    OracleResult best;
    best.objective = global_obj;
    best.index = global_idx;
    best.ambiguous = global_ties > 1;
    best.codeword = code.encode(code.message_from_index(global_idx));
    return best;
}

SubspaceOracleResult brute_subspace_decode(const std::vector<Subspace>& codebook, const Subspace& received) {
    if (codebook.empty()) throw std::invalid_argument("empty codebook");
    if (codebook.size() > kOracleEnumCap) throw std::length_error("codebook too large to enumerate");
    SubspaceOracleResult best;
    std::size_t ties = 0;
    for (std::size_t i = 0; i < codebook.size(); ++i) {
        const std::size_t dist = subspace_distance(codebook[i], received);
        if (i == 0 || dist < best.distance) {
            best.distance = dist;
            best.index = i;
            ties = 1;
        } else if (dist == best.distance) {
            ++ties;
        }
    }
    best.ambiguous = ties > 1;
    return best;
}

std::size_t min_rank_erasure_deviation(const MatQ& e, const MatQ& L_hat, const MatQ& E_hat) {
    const unsigned q = e.q();
    const std::size_t n = e.rows(), m = e.cols();
    const std::size_t mu = L_hat.empty() ? 0 : L_hat.cols();
    const std::size_t delta = E_hat.empty() ? 0 : E_hat.rows();

    auto count_of = [&](std::size_t cells) {
        std::uint64_t c = 1;
        for (std::size_t i = 0; i < cells; ++i) {
            c *= q;
            if (c > kOracleEnumCap) throw std::length_error("search space too large");
        }
        return c;
    };
    const std::uint64_t n1 = count_of(mu * m), n2 = count_of(n * delta);
    if (n1 * n2 > kOracleEnumCap) throw std::length_error("search space too large");

    std::size_t best = std::min(n, m) + 1;
    for (std::uint64_t i1 = 0; i1 < n1; ++i1) {
        MatQ E1(q, mu, m);
        std::uint64_t v = i1;
        for (std::size_t c = 0; c < mu * m; ++c) {
            E1.at(c / m, c % m) = Sym(v % q);
            v /= q;
        }
        const MatQ le = mu ? mul(L_hat, E1) : MatQ(q, n, m);
        for (std::uint64_t i2 = 0; i2 < n2; ++i2) {
            MatQ L2(q, n, delta);
            std::uint64_t w = i2;
            for (std::size_t c = 0; c < n * delta; ++c) {
                L2.at(c / delta, c % delta) = Sym(w % q);
                w /= q;
            }
            MatQ rest = sub(e, le);
            if (delta) rest = sub(rest, mul(L2, E_hat));
            best = std::min(best, rank(rest));
            if (best == 0) return 0;
        }
    }
    return best;
}

}  // namespace rankcode
