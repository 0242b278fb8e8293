#include "rankcode/gabidulin.hpp"

#include <algorithm>
#include <stdexcept>

namespace rankcode {

namespace {

// RRE over F_{q^m}; returns pivot columns, reduces rows in place
std::vector<std::size_t> ext_rre(const Field& f, std::vector<std::vector<Ext>>& M) {
    std::vector<std::size_t> pivots;
    if (M.empty()) return pivots;
    const std::size_t rows = M.size(), cols = M[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && M[pr][c].is_zero()) ++pr;
        if (pr == rows) continue;
        std::swap(M[pr], M[r]);
        const Ext piv_inv = f.inv(M[r][c]);
        for (std::size_t j = c; j < cols; ++j) M[r][j] = f.mul(M[r][j], piv_inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || M[i][c].is_zero()) continue;
            const Ext fac = M[i][c];
            for (std::size_t j = c; j < cols; ++j) M[i][j] = f.sub(M[i][j], f.mul(fac, M[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

GabidulinCode GabidulinCode::make(Field::Ptr field, unsigned n, unsigned k) {
    if (!field) throw std::invalid_argument("null field");
    const Field& f = *field;
    if (k < 1 || k > n || n > f.m()) throw std::invalid_argument("need 1 <= k <= n <= m");

    GabidulinCode code;
    code.field_ = field;
    code.n_ = n;
    code.k_ = k;
    code.d_ = n - k + 1;

    code.h_.reserve(n);
    for (unsigned i = 0; i < n; ++i) code.h_.push_back(f.basis_elem(i));
    MatQ hmat = ext_vector_to_mat(f, code.h_);
    if (rank(hmat) != n) throw std::invalid_argument("h elements not linearly independent");

    const unsigned rows = code.d_ - 1;
    code.H_.assign(rows, std::vector<Ext>(n, f.zero()));
    for (unsigned l = 0; l < rows; ++l)
        for (unsigned i = 0; i < n; ++i) code.H_[l][i] = f.frob_pow(code.h_[i], long(l));

    // generator: RRE basis of the null space of H over F_{q^m}
    if (rows == 0) {
        code.G_.assign(n, std::vector<Ext>(n, f.zero()));
        for (unsigned i = 0; i < n; ++i) code.G_[i][i] = f.one();
    } else {
        auto M = code.H_;
        std::vector<std::size_t> pivots = ext_rre(f, M);
        if (pivots.size() != rows) throw std::logic_error("Moore parity-check matrix is rank-deficient");
        std::vector<bool> is_pivot(n, false);
        for (std::size_t c : pivots) is_pivot[c] = true;
        for (unsigned freec = 0; freec < n; ++freec) {
            if (is_pivot[freec]) continue;
            std::vector<Ext> g(n, f.zero());
            g[freec] = f.one();
            for (std::size_t rrow = 0; rrow < pivots.size(); ++rrow)
                g[pivots[rrow]] = f.neg(M[rrow][freec]);
            code.G_.push_back(std::move(g));
        }
        std::vector<std::size_t> gp = ext_rre(f, code.G_);  // canonical RRE form
        if (gp.size() != k) throw std::logic_error("generator rank mismatch");
    }

    code.Q_ = right_inverse(hmat);
    return code;
}

BigInt GabidulinCode::cardinality() const {
    return boost::multiprecision::pow(BigInt(field_->q()), field_->m() * k_);
}

std::vector<Ext> GabidulinCode::encode(const std::vector<Ext>& u) const {
    const Field& f = *field_;
    if (u.size() != k_) throw std::invalid_argument("message length must equal k");
    std::vector<Ext> x(n_, f.zero());
    for (unsigned i = 0; i < k_; ++i) {
        if (u[i].is_zero()) continue;
        for (unsigned j = 0; j < n_; ++j) x[j] = f.add(x[j], f.mul(u[i], G_[i][j]));
    }
    return x;
}

bool GabidulinCode::is_codeword(const std::vector<Ext>& x) const {
    if (x.size() != n_) return false;
    for (const Ext& s : syndromes(*this, x))
        if (!s.is_zero()) return false;
    return true;
}

std::vector<Ext> GabidulinCode::message_from_index(std::uint64_t idx) const {
    const Field& f = *field_;
    std::vector<Ext> u(k_, f.zero());
    for (unsigned i = 0; i < k_; ++i)
        for (unsigned j = 0; j < f.m(); ++j) {
            u[i].c[j] = Sym(idx % f.q());
            idx /= f.q();
        }
    return u;
}

std::vector<Ext> syndromes(const GabidulinCode& code, const std::vector<Ext>& r) {
    const Field& f = code.field();
    if (r.size() != code.n()) throw std::invalid_argument("received word length must equal n");
    std::vector<Ext> S(code.d() - 1, f.zero());
    for (unsigned l = 0; l + 1 < code.d(); ++l)
        for (unsigned i = 0; i < code.n(); ++i)
            if (!r[i].is_zero()) S[l] = f.add(S[l], f.mul(code.H()[l][i], r[i]));
    return S;
}

std::optional<std::vector<Ext>> gabidulin_solve(const Field& f, std::vector<Ext> A, std::vector<Ext> B) {
    const std::size_t t = A.size();
    if (t > B.size()) throw std::invalid_argument("more unknowns than equations");
    if (t == 0) {
        for (const Ext& b : B)
            if (!b.is_zero()) return std::nullopt;
        return std::vector<Ext>{};
    }
    const std::vector<Ext> A_orig = A, B_orig = B;

    // forward elimination: repeatedly remove the last unknown, keeping the
    // Moore structure of the reduced system
    std::vector<std::vector<Ext>> A_levels, B_levels;
    for (std::size_t lvl = 0; lvl + 1 < t; ++lvl) {
        A_levels.push_back(A);
        B_levels.push_back(B);
        const Ext& last = A.back();
        if (last.is_zero()) return std::nullopt;
        const Ext c = f.mul(f.frob_pow(last, 1), f.inv(last));
        std::vector<Ext> A2(A.size() - 1), B2(B.size() - 1);
        for (std::size_t j = 0; j + 1 < A.size(); ++j)
            A2[j] = f.sub(f.frob_pow(A[j], 1), f.mul(c, A[j]));
        Ext cl = c;  // c^{[l]}
        for (std::size_t l = 0; l + 1 < B.size(); ++l) {
            if (l > 0) cl = f.frob_pow(cl, 1);
            B2[l] = f.sub(B[l + 1], f.mul(cl, B[l]));
        }
        A = std::move(A2);
        B = std::move(B2);
    }
    if (A[0].is_zero()) return std::nullopt;

    // back substitution, recovering X_1 first
    std::vector<Ext> X;
    X.push_back(f.mul(B[0], f.inv(A[0])));
    for (std::size_t lvl = A_levels.size(); lvl-- > 0;) {
        const auto& Al = A_levels[lvl];
        const auto& Bl = B_levels[lvl];
        Ext acc = Bl[0];
        for (std::size_t j = 0; j + 1 < Al.size(); ++j) acc = f.sub(acc, f.mul(Al[j], X[j]));
        if (Al.back().is_zero()) return std::nullopt;
        X.push_back(f.mul(acc, f.inv(Al.back())));
    }

    // the elimination ladder already enforces the first t equations exactly;
    // the remaining ones decide consistency of the overdetermined system
    if (B_orig.size() == t) return X;
    std::vector<Ext> pow(t);
    for (std::size_t j = 0; j < t; ++j) pow[j] = f.frob_pow(A_orig[j], long(t));
    for (std::size_t l = t; l < B_orig.size(); ++l) {
        Ext acc = f.zero();
        for (std::size_t j = 0; j < t; ++j) {
            if (l > t) pow[j] = f.frob_pow(pow[j], 1);
            acc = f.add(acc, f.mul(pow[j], X[j]));
        }
        if (!(acc == B_orig[l])) return std::nullopt;
    }
    return X;
}

LinPoly berlekamp_massey(const Field& f, const std::vector<Ext>& S, unsigned d_eff) {
    const std::size_t N = S.size();
    if (N + 1 != d_eff) throw std::invalid_argument("syndrome count must be d_eff - 1");
    LinPoly C = lp_identity(f);  // connection polynomial, C_0 = 1
    LinPoly B = lp_identity(f);
    unsigned L = 0, u = 1;
    Ext b = f.one();
    for (std::size_t r = 0; r < N; ++r) {
        // discrepancy S_r + sum_{i=1}^{L} C_i S_{r-i}^{[i]}; C_0 stays 1
        Ext delta = S[r];
        for (std::size_t i = 1; i <= L && i < C.coeffs.size(); ++i) {
            if (C.coeffs[i].is_zero() || i > r) continue;
            delta = f.add(delta, f.mul(C.coeffs[i], f.frob_pow(S[r - i], long(i))));
        }
        if (delta.is_zero()) {
            ++u;
            continue;
        }
        const Ext coef = f.mul(delta, f.inv(f.frob_pow(b, long(u))));
        LinPoly shifted = symbolic_product(f, lp_monomial(f, u, f.one()), B);
        LinPoly C_new = lp_sub(f, C, lp_scale(f, coef, shifted));
        if (2 * L <= r) {
            B = C;
            b = delta;
            L = unsigned(r + 1 - L);
            u = 1;
        } else {
            ++u;
        }
        C = std::move(C_new);
    }
    return C;
}

std::size_t errata_objective(const Field& f, const MatQ& L_hat, const std::vector<Ext>& e,
                             const std::vector<Ext>& E_hat) {
    const std::size_t n = e.size(), mu = L_hat.empty() ? 0 : L_hat.cols(), delta = E_hat.size();
    MatQ block(f.q(), n + delta, mu + f.m());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < mu; ++j) block.at(i, j) = L_hat.at(i, j);
        for (std::size_t j = 0; j < f.m(); ++j) block.at(i, mu + j) = e[i].c[j];
    }
    for (std::size_t i = 0; i < delta; ++i)
        for (std::size_t j = 0; j < f.m(); ++j) block.at(n + i, mu + j) = E_hat[i].c[j];
    return rank(block);
}

namespace {

struct PipelineCommon {
    unsigned mu = 0, delta = 0;
    std::vector<Ext> S;
    std::vector<Ext> X_hat;
    LinPoly lambda_U, sigma_D, S_poly;
};

// validates the tuple, computes syndromes, erasure locators and the two known
// minimal polynomials shared by both decoder formulations
PipelineCommon pipeline_start(const GabidulinCode& code, const ReceivedTuple& t) {
    const Field& f = code.field();
    const unsigned n = code.n();
    if (t.r.size() != n) throw std::invalid_argument("received word length must equal n");
    PipelineCommon c;
    c.mu = t.L_hat.empty() ? 0 : unsigned(t.L_hat.cols());
    c.delta = unsigned(t.E_hat.size());
    if (c.mu > 0) {
        if (t.L_hat.rows() != n || t.L_hat.q() != f.q())
            throw std::invalid_argument("erasure location matrix must be n x mu over F_q");
        if (rank(t.L_hat) != c.mu) throw std::invalid_argument("erasure locations must have full column rank");
    }
    if (c.delta > 0 && rank_of_ext_vector(f, t.E_hat) != c.delta)
        throw std::invalid_argument("deviation values must be linearly independent");

    c.S = syndromes(code, t.r);
    c.S_poly = lp_from_coeffs(f, c.S);

    c.X_hat.assign(c.mu, f.zero());
    for (unsigned j = 0; j < c.mu; ++j)
        for (unsigned i = 0; i < n; ++i)
            if (t.L_hat.at(i, j)) c.X_hat[j] = f.add(c.X_hat[j], f.scal(t.L_hat.at(i, j), code.h()[i]));

    c.lambda_U = min_poly(f, c.X_hat);
    c.sigma_D = min_poly(f, t.E_hat);
    return c;
}

// S-bar_l = S_{d-2-l}^{[l-d+2]}
std::vector<Ext> reversed_syndromes(const Field& f, const std::vector<Ext>& S) {
    const std::size_t len = S.size();
    std::vector<Ext> Sb(len, f.zero());
    for (std::size_t l = 0; l < len; ++l)
        Sb[l] = f.frob_pow(S[len - 1 - l], long(l) - long(len - 1));
    return Sb;
}

Ext lp_coeff(const Field& f, const LinPoly& p, std::size_t i) {
    return i < p.coeffs.size() ? p.coeffs[i] : f.zero();
}

// error word from locators: locations L = locator-coordinates * Q, e_i = sum_j L_ij E_j
void assemble_error(const GabidulinCode& code, const std::vector<Ext>& locators,
                    const std::vector<Ext>& values, MatQ& locations, std::vector<Ext>& e) {
    const Field& f = code.field();
    const unsigned n = code.n();
    const std::size_t tau = locators.size();
    locations = MatQ(f.q(), n, tau);
    for (std::size_t j = 0; j < tau; ++j)
        for (unsigned i = 0; i < n; ++i) {
            std::uint64_t acc = 0;
            for (unsigned kk = 0; kk < f.m(); ++kk)
                acc += std::uint64_t(locators[j].c[kk]) * code.Q().at(kk, i);
            locations.at(i, j) = Sym(acc % f.q());
        }
    e.assign(n, f.zero());
    for (unsigned i = 0; i < n; ++i)
        for (std::size_t j = 0; j < tau; ++j)
            if (locations.at(i, j)) e[i] = f.add(e[i], f.scal(locations.at(i, j), values[j]));
}

DecodeOutcome finish_decode(const GabidulinCode& code, const ReceivedTuple& t, unsigned mu,
                            unsigned delta, DecodeOutcome o) {
    const Field& f = code.field();
    std::vector<Ext> xhat(code.n(), f.zero());
    for (unsigned i = 0; i < code.n(); ++i) xhat[i] = f.sub(t.r[i], o.error[i]);
    if (!code.is_codeword(xhat))
        return DecodeOutcome::failure("residual word fails the parity check", mu, delta);
    const std::size_t obj = errata_objective(f, t.L_hat, o.error, t.E_hat);
    const unsigned budget = mu + delta + (code.d() - 1 - mu - delta) / 2;
    if (obj > budget)
        return DecodeOutcome::failure("errata rank exceeds the correction bound", mu, delta);
    o.ok = true;
    o.codeword = std::move(xhat);
    o.mu = mu;
    o.delta = delta;
    o.eps = unsigned(obj - mu - delta);
    return o;
}

}  // namespace

DecodeOutcome generalized_decode(const GabidulinCode& code, const ReceivedTuple& t) {
    const Field& f = code.field();
    const unsigned d = code.d();
    PipelineCommon c = pipeline_start(code, t);
    const unsigned mu = c.mu, delta = c.delta;

    if (mu + delta >= d) return DecodeOutcome::failure("erasures and deviations exceed capability", mu, delta);

    DecodeOutcome o;
    o.ws.syndromes = c.S;
    o.ws.X_hat = c.X_hat;
    o.ws.lambda_U = c.lambda_U;
    o.ws.sigma_D = c.sigma_D;
    o.ws.S_poly = c.S_poly;

    if (d == 1) {  // no redundancy: the received word itself must be the codeword
        o.error.assign(code.n(), f.zero());
        return finish_decode(code, t, mu, delta, std::move(o));
    }

    const LinPoly lambda_U_rev = q_reverse(f, c.lambda_U, mu);
    o.ws.S_DU = symbolic_product(f, c.sigma_D, symbolic_product(f, c.S_poly, lambda_U_rev));

    const unsigned d_eff = d - mu - delta;
    std::vector<Ext> S_shift(d_eff - 1, f.zero());
    for (unsigned l = 0; l + 1 < d_eff; ++l) S_shift[l] = lp_coeff(f, o.ws.S_DU, l + mu + delta);
    o.ws.sigma_F = berlekamp_massey(f, S_shift, d_eff);
    const unsigned eps_deg = unsigned(std::max<long>(o.ws.sigma_F.q_degree(), 0));
    if (2 * eps_deg > d_eff - 1)
        return DecodeOutcome::failure("key equation demands too many errors", mu, delta);

    // the modified key equation must hold: coefficients tau..d-2 of
    // sigma_F (x) S_DU vanish, leaving a remainder of q-degree <= tau-1
    const unsigned tau = mu + delta + eps_deg;
    LinPoly W = symbolic_product(f, o.ws.sigma_F, o.ws.S_DU);
    for (unsigned l = tau; l + 1 < d; ++l)
        if (!lp_coeff(f, W, l).is_zero())
            return DecodeOutcome::failure("modified key equation violated", mu, delta);
    W.coeffs.resize(std::min<std::size_t>(W.coeffs.size(), tau), f.zero());
    lp_trim(W);
    o.ws.omega = W;

    o.ws.S_FD = symbolic_product(f, o.ws.sigma_F, symbolic_product(f, c.sigma_D, c.S_poly));

    if (mu > 0) {
        std::vector<Ext> A(mu), B(d - 1 - eps_deg - delta, f.zero());
        for (unsigned j = 0; j < mu; ++j) A[j] = f.frob_pow(c.X_hat[j], long(eps_deg + delta));
        for (unsigned l = 0; l < B.size(); ++l) B[l] = lp_coeff(f, o.ws.S_FD, l + eps_deg + delta);
        auto beta = gabidulin_solve(f, A, B);
        if (!beta) return DecodeOutcome::failure("erasure value system is inconsistent", mu, delta);
        o.ws.beta = *beta;
        o.ws.sigma_U = min_poly(f, *beta);
    } else {
        o.ws.sigma_U = lp_identity(f);
    }

    o.ws.sigma = symbolic_product(f, o.ws.sigma_U, symbolic_product(f, o.ws.sigma_F, c.sigma_D));

    o.ws.values = root_space_basis(f, o.ws.sigma);
    if (o.ws.values.empty()) {
        o.error.assign(code.n(), f.zero());
        return finish_decode(code, t, mu, delta, std::move(o));
    }

    std::vector<Ext> A(o.ws.values.size());
    for (std::size_t j = 0; j < A.size(); ++j) A[j] = f.frob_pow(o.ws.values[j], 2 - long(d));
    auto X = gabidulin_solve(f, A, reversed_syndromes(f, c.S));
    if (!X) return DecodeOutcome::failure("locator system is inconsistent", mu, delta);
    o.ws.locators = *X;

    assemble_error(code, o.ws.locators, o.ws.values, o.ws.locations, o.error);
    return finish_decode(code, t, mu, delta, std::move(o));
}

DecodeOutcome generalized_decode_locator(const GabidulinCode& code, const ReceivedTuple& t) {
    const Field& f = code.field();
    const unsigned d = code.d();
    PipelineCommon c = pipeline_start(code, t);
    const unsigned mu = c.mu, delta = c.delta;

    if (mu + delta >= d) return DecodeOutcome::failure("erasures and deviations exceed capability", mu, delta);

    DecodeOutcome o;
    o.ws.syndromes = c.S;
    o.ws.X_hat = c.X_hat;
    o.ws.lambda_U = c.lambda_U;
    o.ws.sigma_D = c.sigma_D;
    o.ws.S_poly = c.S_poly;

    if (d == 1) {
        o.error.assign(code.n(), f.zero());
        return finish_decode(code, t, mu, delta, std::move(o));
    }

    o.ws.S_rev = q_reverse(f, c.S_poly, d - 2);
    // sigma_D reversed, with every coefficient twisted by [2-d]
    LinPoly twist = q_reverse(f, c.sigma_D, delta);
    for (Ext& v : twist.coeffs) v = f.frob_pow(v, 2 - long(d));
    o.ws.S_UD = symbolic_product(f, c.lambda_U, symbolic_product(f, o.ws.S_rev, twist));

    const unsigned d_eff = d - mu - delta;
    std::vector<Ext> S_shift(d_eff - 1, f.zero());
    for (unsigned l = 0; l + 1 < d_eff; ++l) S_shift[l] = lp_coeff(f, o.ws.S_UD, l + mu + delta);
    o.ws.lambda_F = berlekamp_massey(f, S_shift, d_eff);
    const unsigned eps_deg = unsigned(std::max<long>(o.ws.lambda_F.q_degree(), 0));
    if (2 * eps_deg > d_eff - 1)
        return DecodeOutcome::failure("key equation demands too many errors", mu, delta);

    const unsigned tau = mu + delta + eps_deg;
    LinPoly W = symbolic_product(f, o.ws.lambda_F, o.ws.S_UD);
    for (unsigned l = tau; l + 1 < d; ++l)
        if (!lp_coeff(f, W, l).is_zero())
            return DecodeOutcome::failure("modified key equation violated", mu, delta);
    W.coeffs.resize(std::min<std::size_t>(W.coeffs.size(), tau), f.zero());
    lp_trim(W);
    o.ws.psi = W;

    o.ws.S_FU = symbolic_product(f, o.ws.lambda_F, symbolic_product(f, c.lambda_U, o.ws.S_rev));

    if (delta > 0) {
        std::vector<Ext> A(delta), B(d - 1 - eps_deg - mu, f.zero());
        for (unsigned j = 0; j < delta; ++j)
            A[j] = f.frob_pow(t.E_hat[j], long(eps_deg + mu) + 2 - long(d));
        for (unsigned l = 0; l < B.size(); ++l) B[l] = lp_coeff(f, o.ws.S_FU, l + eps_deg + mu);
        auto gamma = gabidulin_solve(f, A, B);
        if (!gamma) return DecodeOutcome::failure("deviation locator system is inconsistent", mu, delta);
        o.ws.gamma = *gamma;
        o.ws.lambda_D = min_poly(f, *gamma);
    } else {
        o.ws.lambda_D = lp_identity(f);
    }

    o.ws.lambda = symbolic_product(f, o.ws.lambda_D, symbolic_product(f, o.ws.lambda_F, c.lambda_U));

    o.ws.locators = root_space_basis(f, o.ws.lambda);
    if (o.ws.locators.empty()) {
        o.error.assign(code.n(), f.zero());
        return finish_decode(code, t, mu, delta, std::move(o));
    }

    auto E = gabidulin_solve(f, o.ws.locators, c.S);
    if (!E) return DecodeOutcome::failure("value system is inconsistent", mu, delta);
    o.ws.values = *E;

    assemble_error(code, o.ws.locators, o.ws.values, o.ws.locations, o.error);
    return finish_decode(code, t, mu, delta, std::move(o));
}

DecodeOutcome conventional_decode(const GabidulinCode& code, const std::vector<Ext>& r) {
    const Field& f = code.field();
    const unsigned d = code.d();
    if (r.size() != code.n()) throw std::invalid_argument("received word length must equal n");

    DecodeOutcome o;
    ReceivedTuple t{r, MatQ(f.q(), code.n(), 0), {}};

    if (d == 1) {
        o.error.assign(code.n(), f.zero());
        return finish_decode(code, t, 0, 0, std::move(o));
    }

    o.ws.syndromes = syndromes(code, r);
    o.ws.S_poly = lp_from_coeffs(f, o.ws.syndromes);
    o.ws.sigma = berlekamp_massey(f, o.ws.syndromes, d);
    const unsigned tau = unsigned(std::max<long>(o.ws.sigma.q_degree(), 0));
    if (2 * tau > d - 1) return DecodeOutcome::failure("too many errors for unique decoding", 0, 0);

    o.ws.values = root_space_basis(f, o.ws.sigma);
    if (o.ws.values.empty()) {
        o.error.assign(code.n(), f.zero());
        return finish_decode(code, t, 0, 0, std::move(o));
    }

    std::vector<Ext> A(o.ws.values.size());
    for (std::size_t j = 0; j < A.size(); ++j) A[j] = f.frob_pow(o.ws.values[j], 2 - long(d));
    auto X = gabidulin_solve(f, A, reversed_syndromes(f, o.ws.syndromes));
    if (!X) return DecodeOutcome::failure("locator system is inconsistent", 0, 0);
    o.ws.locators = *X;

    assemble_error(code, o.ws.locators, o.ws.values, o.ws.locations, o.error);
    return finish_decode(code, t, 0, 0, std::move(o));
}

std::vector<DecodeOutcome> product_code_decode(const std::vector<GabidulinCode>& codes,
                                               const std::vector<ReceivedTuple>& tuples) {
    if (codes.empty() || codes.size() != tuples.size())
        throw std::invalid_argument("component count mismatch");
    const unsigned q = codes[0].field().q(), n = codes[0].n(), d = codes[0].d();
    for (const auto& c : codes)
        if (c.field().q() != q || c.n() != n || c.d() != d)
            throw std::invalid_argument("components must share q, n and d");
    for (const auto& t : tuples)
        if (!(t.L_hat == tuples[0].L_hat))
            throw std::invalid_argument("components must share erasure locations");
    std::vector<DecodeOutcome> out;
    out.reserve(codes.size());
    for (std::size_t i = 0; i < codes.size(); ++i)
        out.push_back(generalized_decode(codes[i], tuples[i]));
    return out;
}

}  // namespace rankcode
