#include "rankcode/lifting.hpp"

#include <stdexcept>

namespace rankcode {

MatQ lift_matrix(const MatQ& x) { return hcat(MatQ::identity(x.q(), x.rows()), x); }

Subspace lift(const MatQ& x) {
    // [I | x] is already a canonical RRE basis
    return Subspace::row_space(lift_matrix(x));
}

MatQ ReductionResult::assembled() const {
    const std::size_t n = r.rows();
    MatQ W = MatQ::identity(r.q(), n);
    for (std::size_t j = 0; j < mu; ++j)
        for (std::size_t i = 0; i < n; ++i)
            W.at(i, U[j]) = fq::add(W.at(i, U[j]), L_hat.at(i, j), r.q());
    MatQ top = hcat(W, r);
    if (delta == 0) return top;
    return vstack(top, hcat(MatQ(r.q(), delta, n), E_hat));
}

ReductionResult reduce(const MatQ& Y, std::size_t n) {
    if (Y.cols() < n) throw std::invalid_argument("received matrix narrower than n");
    const unsigned q = Y.q();
    const std::size_t m = Y.cols() - n;

    RreResult red = rre(Y);  // dependent rows become zero rows and are dropped
    const std::size_t rank_Y = red.pivots.size();
    std::size_t lead = 0;  // pivots among the first n columns
    while (lead < rank_Y && red.pivots[lead] < n) ++lead;

    ReductionResult out;
    out.mu = n - lead;
    out.delta = rank_Y - lead;

    std::vector<bool> in_Uc(n, false);
    for (std::size_t i = 0; i < lead; ++i) in_Uc[red.pivots[i]] = true;
    for (std::size_t c = 0; c < n; ++c)
        if (!in_Uc[c]) out.U.push_back(c);

    // RRE(Y) = [W rt; 0 E_hat]; scatter the top rows to pivot positions
    out.r = MatQ(q, n, m);
    out.L_hat = MatQ(q, n, out.mu);
    out.E_hat = MatQ(q, out.delta, m);
    for (std::size_t i = 0; i < lead; ++i) {
        const std::size_t dest = red.pivots[i];
        for (std::size_t j = 0; j < m; ++j) out.r.at(dest, j) = red.R.at(i, n + j);
        for (std::size_t j = 0; j < out.mu; ++j) out.L_hat.at(dest, j) = red.R.at(i, out.U[j]);
    }
    for (std::size_t j = 0; j < out.mu; ++j)
        out.L_hat.at(out.U[j], j) = fq::neg(1, q);
    for (std::size_t i = 0; i < out.delta; ++i)
        for (std::size_t j = 0; j < m; ++j) out.E_hat.at(i, j) = red.R.at(lead + i, n + j);
    return out;
}

std::size_t reduction_distance(const ReductionResult& red, const MatQ& x) {
    if (x.rows() != red.r.rows() || x.cols() != red.r.cols())
        throw std::invalid_argument("payload shape mismatch");
    MatQ top = hcat(red.L_hat, sub(red.r, x));
    MatQ bottom = hcat(MatQ(x.q(), red.delta, red.mu), red.E_hat);
    const std::size_t blk = rank(red.delta ? vstack(top, bottom) : top);
    return 2 * blk - (red.mu + red.delta);
}

ChannelSim::ChannelSim(const ChannelConfig& cfg)
    : cfg_(cfg), rng_(cfg.seed) {
    if (cfg_.links == 0) cfg_.links = cfg_.t_max;
    const unsigned min_rank = cfg_.n > cfg_.rho_max ? cfg_.n - cfg_.rho_max : 0;
    if (cfg_.N < min_rank) throw std::invalid_argument("rank target infeasible: N < n - rho_max");
    if (cfg_.links < cfg_.t_max) throw std::invalid_argument("links must be >= t_max");
}

MatQ ChannelSim::random_rank_matrix(std::size_t rows, std::size_t cols, std::size_t target_rank) {
    if (target_rank > std::min(rows, cols)) throw std::invalid_argument("rank target too large");
    if (target_rank == 0) return MatQ(q_, rows, cols);
    // product of full-rank factors drawn by rejection
    for (;;) {
        MatQ U(q_, rows, target_rank), V(q_, target_rank, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < target_rank; ++j) U.at(i, j) = Sym(rng_.below(q_));
        for (std::size_t i = 0; i < target_rank; ++i)
            for (std::size_t j = 0; j < cols; ++j) V.at(i, j) = Sym(rng_.below(q_));
        if (rank(U) == target_rank && rank(V) == target_rank) return mul(U, V);
    }
}

MatQ ChannelSim::draw_Z() {
    const std::size_t M = cfg_.n + cfg_.m;
    MatQ Z(q_, cfg_.links, M);
    if (cfg_.t_max == 0) return Z;
    // exactly t_max corrupt rows among the links
    std::vector<std::size_t> rows(cfg_.links);
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    for (std::size_t i = 0; i < rows.size(); ++i) std::swap(rows[i], rows[i + rng_.below(unsigned(rows.size() - i))]);
    for (unsigned t = 0; t < cfg_.t_max; ++t) {
        bool nonzero = false;
        while (!nonzero) {
            for (std::size_t j = 0; j < M; ++j) {
                Sym v = Sym(rng_.below(q_));
                Z.at(rows[t], j) = v;
                nonzero = nonzero || v;
            }
        }
    }
    return Z;
}

ChannelDraw ChannelSim::transmit(const MatQ& X) {
    if (X.rows() != cfg_.n || X.cols() != cfg_.n + cfg_.m)
        throw std::invalid_argument("transmit expects an n x (n+m) matrix");
    q_ = X.q();
    const std::size_t max_rank = std::min<std::size_t>(cfg_.N, cfg_.n);
    const std::size_t min_rank = cfg_.n > cfg_.rho_max ? cfg_.n - cfg_.rho_max : 0;
    if (min_rank > max_rank) throw std::invalid_argument("rank target infeasible");
    const std::size_t rank_A = min_rank + rng_.below(unsigned(max_rank - min_rank + 1));

    ChannelDraw d;
    d.A = random_rank_matrix(cfg_.N, cfg_.n, rank_A);
    d.Z = draw_Z();
    d.B = MatQ(q_, cfg_.N, cfg_.links);
    for (std::size_t i = 0; i < d.B.rows(); ++i)
        for (std::size_t j = 0; j < d.B.cols(); ++j) d.B.at(i, j) = Sym(rng_.below(q_));
    d.Y = d.Z.rows() ? add(mul(d.A, X), mul(d.B, d.Z)) : mul(d.A, X);
    return d;
}

ChannelDraw ChannelSim::transmit_adversarial(const MatQ& X, const MatQ& payload, unsigned candidates) {
    if (candidates == 0) candidates = 1;
    q_ = X.q();
    ChannelDraw best;
    std::size_t best_score = 0;
    for (unsigned c = 0; c < candidates; ++c) {
        ChannelDraw d = transmit(X);
        ReductionResult red = reduce(d.Y, cfg_.n);
        const std::size_t score = rank(hcat(red.L_hat, sub(red.r, payload))) + rank(red.E_hat);
        if (c == 0 || score > best_score) {
            best_score = score;
            best = std::move(d);
        }
    }
    return best;
}

ReceivedTuple tuple_from_reduction(const GabidulinCode& code, const ReductionResult& red) {
    const Field& f = code.field();
    ReceivedTuple t;
    t.r = mat_to_ext_vector(f, red.r);
    t.L_hat = red.L_hat;
    t.E_hat = mat_to_ext_vector(f, red.E_hat);
    return t;
}

DecodeOutcome end_to_end_decode(const GabidulinCode& code, const MatQ& Y) {
    const Field& f = code.field();
    if (Y.cols() != code.n() + f.m()) throw std::invalid_argument("packet length does not match the code");
    ReductionResult red = reduce(Y, code.n());
    return generalized_decode(code, tuple_from_reduction(code, red));
}

}  // namespace rankcode
