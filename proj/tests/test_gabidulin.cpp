#include "doctest.h"

#include "rankcode/gabidulin.hpp"
#include "rankcode/oracle.hpp"
#include "test_util.hpp"

#include <stdexcept>

using namespace rankcode;
using namespace rankcode::testutil;

namespace {

GabidulinCode small_code() { return GabidulinCode::make(Field::make(2, 4), 4, 2); }  // d = 3

std::vector<Ext> all_zero_message(const GabidulinCode& c) {
    return std::vector<Ext>(c.k(), c.field().zero());
}

ReceivedTuple plain_tuple(const GabidulinCode& c, std::vector<Ext> r) {
    return ReceivedTuple{std::move(r), MatQ(c.field().q(), c.n(), 0), {}};
}

}  // namespace

TEST_CASE("code construction") {
    GabidulinCode c = small_code();
    const Field& f = c.field();
    CHECK(c.d() == 3);
    CHECK(c.cardinality() == 256);

    // H G^T = 0
    for (unsigned l = 0; l + 1 < c.d(); ++l)
        for (unsigned i = 0; i < c.k(); ++i) {
            Ext acc = f.zero();
            for (unsigned j = 0; j < c.n(); ++j) acc = f.add(acc, f.mul(c.H()[l][j], c.G()[i][j]));
            CHECK(acc.is_zero());
        }

    // h-matrix right inverse
    CHECK(mul(ext_vector_to_mat(f, c.h()), c.Q()) == MatQ::identity(f.q(), c.n()));

    // Moore structure
    for (unsigned l = 0; l + 1 < c.d(); ++l)
        for (unsigned i = 0; i < c.n(); ++i) CHECK(c.H()[l][i] == f.frob_pow(c.h()[i], long(l)));

    // Singleton bound met with equality: log_q |C| = m k = max(n,m)(min(n,m)-d+1)
    CHECK(c.cardinality() == singleton_bounds(2, c.n(), f.m(), c.d()).rank_metric_bound);

    GabidulinCode full = GabidulinCode::make(Field::make(2, 4), 4, 4);
    CHECK(full.d() == 1);
    CHECK(full.cardinality() == BigInt(1) << 16);

    CHECK_THROWS_AS(GabidulinCode::make(Field::make(2, 4), 5, 2), std::invalid_argument);
    CHECK_THROWS_AS(GabidulinCode::make(Field::make(2, 4), 4, 0), std::invalid_argument);
    CHECK_THROWS_AS(GabidulinCode::make(Field::make(2, 4), 4, 5), std::invalid_argument);
}

TEST_CASE("encoding") {
    GabidulinCode c = small_code();
    const Field& f = c.field();
    Rng rng(31);

    auto zero_cw = c.encode(all_zero_message(c));
    for (const Ext& s : zero_cw) CHECK(s.is_zero());

    for (int it = 0; it < 100; ++it) {
        auto x = c.encode(random_message(c, rng));
        CHECK(c.is_codeword(x));
        for (const Ext& s : syndromes(c, x)) CHECK(s.is_zero());
    }
    CHECK_THROWS_AS(c.encode(std::vector<Ext>(3, f.zero())), std::invalid_argument);
}

TEST_CASE("exhaustive distance of the (2,3,3,1) code and its transpose") {
    GabidulinCode c = GabidulinCode::make(Field::make(2, 3), 3, 1);
    const Field& f = c.field();
    std::size_t min_dist = 99, min_dist_T = 99;
    for (std::uint64_t i = 1; i < 8; ++i) {  // linear code: check nonzero codewords
        MatQ xm = ext_vector_to_mat(f, c.encode(c.message_from_index(i)));
        min_dist = std::min(min_dist, rank(xm));
        min_dist_T = std::min(min_dist_T, rank(transpose(xm)));
    }
    CHECK(min_dist == c.d());
    CHECK(min_dist_T == c.d());

    // all pairs, both orders
    for (std::uint64_t i = 0; i < 8; ++i)
        for (std::uint64_t j = 0; j < 8; ++j) {
            if (i == j) continue;
            MatQ a = ext_vector_to_mat(f, c.encode(c.message_from_index(i)));
            MatQ b = ext_vector_to_mat(f, c.encode(c.message_from_index(j)));
            CHECK(rank_distance(a, b) >= c.d());
        }
}

TEST_CASE("syndromes match the locator expansion") {
    GabidulinCode c = small_code();
    const Field& f = c.field();
    Rng rng(32);

    for (unsigned tau : {1u, 2u}) {
        for (int it = 0; it < 100; ++it) {
            auto x = c.encode(random_message(c, rng));
            ErrorPattern p = random_error(c, tau, rng);
            auto r = apply_error(c, x, p.L, p.E);
            auto S = syndromes(c, r);
            // X_j = sum_i L_ij h_i; S_l = sum_j X_j^{[l]} E_j
            std::vector<Ext> X(tau, f.zero());
            for (unsigned j = 0; j < tau; ++j)
                for (unsigned i = 0; i < c.n(); ++i)
                    if (p.L.at(i, j)) X[j] = f.add(X[j], f.scal(p.L.at(i, j), c.h()[i]));
            for (unsigned l = 0; l + 1 < c.d(); ++l) {
                Ext expect = f.zero();
                for (unsigned j = 0; j < tau; ++j)
                    expect = f.add(expect, f.mul(f.frob_pow(X[j], long(l)), p.E[j]));
                CHECK(S[l] == expect);
            }
        }
    }
}

TEST_CASE("gabidulin_solve recovers planted solutions") {
    auto fp = Field::make(2, 6);
    const Field& f = *fp;
    Rng rng(33);
    const unsigned d = 5;

    // single unknown
    {
        Ext a = random_nonzero(f, rng);
        Ext x = random_elem(f, rng);
        std::vector<Ext> B;
        Ext pw = a;
        for (unsigned l = 0; l + 1 < d; ++l) {
            if (l) pw = f.frob_pow(pw, 1);
            B.push_back(f.mul(pw, x));
        }
        auto sol = gabidulin_solve(f, {a}, B);
        REQUIRE(sol.has_value());
        CHECK((*sol)[0] == x);
    }

    // all-zero right-hand side
    {
        std::vector<Ext> A{f.one(), f.alpha()};
        std::vector<Ext> B(4, f.zero());
        auto sol = gabidulin_solve(f, A, B);
        REQUIRE(sol.has_value());
        CHECK((*sol)[0].is_zero());
        CHECK((*sol)[1].is_zero());
    }

    // 500 random instances, tau <= d-1
    for (int it = 0; it < 500; ++it) {
        unsigned tau = 1 + rng.below(d - 1);
        std::vector<Ext> A;
        do {
            A.clear();
            for (unsigned j = 0; j < tau; ++j) A.push_back(random_elem(f, rng));
        } while (rank_of_ext_vector(f, A) != tau);
        std::vector<Ext> X;
        for (unsigned j = 0; j < tau; ++j) X.push_back(random_elem(f, rng));
        std::vector<Ext> B(d - 1, f.zero());
        std::vector<Ext> pw = A;
        for (unsigned l = 0; l + 1 < d; ++l) {
            for (unsigned j = 0; j < tau; ++j) {
                if (l) pw[j] = f.frob_pow(pw[j], 1);
                B[l] = f.add(B[l], f.mul(pw[j], X[j]));
            }
        }
        auto sol = gabidulin_solve(f, A, B);
        REQUIRE(sol.has_value());
        CHECK(*sol == X);
    }

    // inconsistent system is reported
    {
        std::vector<Ext> A{f.one()};
        std::vector<Ext> B{f.one(), f.one(), f.alpha(), f.one()};
        auto sol = gabidulin_solve(f, A, B);
        CHECK(!sol.has_value());
    }
    CHECK_THROWS_AS(gabidulin_solve(f, std::vector<Ext>(3, f.one()), std::vector<Ext>(2, f.zero())),
                    std::invalid_argument);
}

TEST_CASE("berlekamp-massey") {
    GabidulinCode c = GabidulinCode::make(Field::make(2, 6), 6, 2);  // d = 5
    const Field& f = c.field();
    Rng rng(34);

    // all-zero syndromes give the identity polynomial
    LinPoly s0 = berlekamp_massey(f, std::vector<Ext>(c.d() - 1, f.zero()), c.d());
    CHECK(s0.q_degree() == 0);
    CHECK(s0.coeffs[0] == f.one());

    for (unsigned tau : {1u, 2u}) {
        for (int it = 0; it < 200; ++it) {
            auto x = c.encode(random_message(c, rng));
            ErrorPattern p = random_error(c, tau, rng);
            auto r = apply_error(c, x, p.L, p.E);
            auto S = syndromes(c, r);
            LinPoly sigma = berlekamp_massey(f, S, c.d());
            CHECK(sigma.q_degree() == long(tau));
            // the connection property: sum_i sigma_i S_{l-i}^{[i]} = 0 for l = tau..d-2
            for (unsigned l = tau; l + 1 < c.d(); ++l) {
                Ext acc = f.zero();
                for (unsigned i = 0; i <= tau; ++i)
                    acc = f.add(acc, f.mul(sigma.coeffs[i], f.frob_pow(S[l - i], long(i))));
                CHECK(acc.is_zero());
            }
            // sigma vanishes on the span of the error values
            for (const Ext& e : p.E) CHECK(eval(f, sigma, e).is_zero());
        }
    }
}

TEST_CASE("conventional decoding") {
    GabidulinCode c = small_code();
    const Field& f = c.field();
    Rng rng(35);

    // clean words decode to themselves
    for (int it = 0; it < 50; ++it) {
        auto x = c.encode(random_message(c, rng));
        DecodeOutcome out = conventional_decode(c, x);
        REQUIRE(out.ok);
        CHECK(out.codeword == x);
        CHECK(out.eps == 0);
    }

    // every rank-1 error on sampled codewords is corrected (d = 3)
    std::uint64_t checked = 0;
    for (std::uint64_t mi : {std::uint64_t(0), std::uint64_t(77), std::uint64_t(255)}) {
        auto x = c.encode(c.message_from_index(mi));
        for (std::uint32_t lbits = 1; lbits < 16; ++lbits) {
            MatQ L(2, 4, 1);
            for (unsigned i = 0; i < 4; ++i) L.at(i, 0) = Sym((lbits >> i) & 1);
            for (std::uint64_t ev = 1; ev < 16; ++ev) {
                Ext E = f.zero();
                for (unsigned i = 0; i < 4; ++i) E.c[i] = Sym((ev >> i) & 1);
                auto r = apply_error(c, x, L, {E});
                DecodeOutcome out = conventional_decode(c, r);
                REQUIRE(out.ok);
                CHECK(out.codeword == x);
                CHECK(out.eps == 1);
                ++checked;
            }
        }
    }
    CHECK(checked == 3 * 225);

    // rank-2 errors exceed the radius: outcome is either an explicit failure or
    // a legitimate minimizer, never a silently wrong in-radius answer
    for (int it = 0; it < 200; ++it) {
        auto x = c.encode(random_message(c, rng));
        ErrorPattern p = random_error(c, 2, rng);
        auto r = apply_error(c, x, p.L, p.E);
        DecodeOutcome out = conventional_decode(c, r);
        if (out.ok) {
            ReceivedTuple t = plain_tuple(c, r);
            OracleResult oracle = brute_generalized_decode_serial(c, t);
            std::vector<Ext> e(c.n());
            for (unsigned i = 0; i < c.n(); ++i) e[i] = f.sub(r[i], out.codeword[i]);
            CHECK(errata_objective(f, t.L_hat, e, t.E_hat) == oracle.objective);
        }
    }
}

TEST_CASE("generalized decode with mu = delta = 0 equals conventional") {
    GabidulinCode c = small_code();
    Rng rng(36);
    for (int it = 0; it < 200; ++it) {
        auto x = c.encode(random_message(c, rng));
        ErrorPattern p = random_error(c, rng.below(2), rng);
        auto r = apply_error(c, x, p.L, p.E);
        DecodeOutcome a = conventional_decode(c, r);
        DecodeOutcome b = generalized_decode(c, plain_tuple(c, r));
        REQUIRE(a.ok == b.ok);
        if (a.ok) {
            CHECK(a.codeword == b.codeword);
            CHECK(a.error == b.error);
        }
    }
}

TEST_CASE("generalized decoding corrects erasures and deviations") {
    GabidulinCode c = small_code();  // d = 3
    const Field& f = c.field();
    Rng rng(37);

    // patterns (eps, mu, delta) with 2 eps + mu + delta <= 2
    const std::vector<std::array<unsigned, 3>> patterns = {
        {0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
    for (const auto& pat : patterns) {
        const auto [eps, mu, delta] = pat;
        for (int it = 0; it < 100; ++it) {
            auto x = c.encode(random_message(c, rng));
            const unsigned tau = eps + mu + delta;
            ErrorPattern p = random_error(c, tau, rng);
            auto r = apply_error(c, x, p.L, p.E);
            ReceivedTuple t;
            t.r = r;
            t.L_hat = MatQ(f.q(), c.n(), mu);
            for (unsigned j = 0; j < mu; ++j)
                for (unsigned i = 0; i < c.n(); ++i) t.L_hat.at(i, j) = p.L.at(i, j);
            for (unsigned j = 0; j < delta; ++j) t.E_hat.push_back(p.E[mu + j]);
            DecodeOutcome out = generalized_decode(c, t);
            REQUIRE(out.ok);
            CHECK(out.codeword == x);
            CHECK(out.mu == mu);
            CHECK(out.delta == delta);
            CHECK(out.eps <= eps);
        }
    }
}

TEST_CASE("erasures and deviations beyond capability fail fast") {
    GabidulinCode c = small_code();  // d = 3
    const Field& f = c.field();
    Rng rng(38);
    auto x = c.encode(random_message(c, rng));
    ErrorPattern p = random_error(c, 3, rng);
    auto r = apply_error(c, x, p.L, p.E);
    ReceivedTuple t;
    t.r = r;
    t.L_hat = MatQ(f.q(), c.n(), 2);
    for (unsigned j = 0; j < 2; ++j)
        for (unsigned i = 0; i < c.n(); ++i) t.L_hat.at(i, j) = p.L.at(i, j);
    t.E_hat.push_back(p.E[2]);
    DecodeOutcome out = generalized_decode(c, t);
    CHECK(!out.ok);
    CHECK(out.reason == "erasures and deviations exceed capability");
}

TEST_CASE("received tuple preconditions") {
    GabidulinCode c = small_code();
    const Field& f = c.field();
    Rng rng(39);
    auto x = c.encode(random_message(c, rng));

    ReceivedTuple t;
    t.r = x;
    t.L_hat = MatQ(f.q(), c.n(), 2);  // rank 0 < 2
    CHECK_THROWS_AS(generalized_decode(c, t), std::invalid_argument);

    ReceivedTuple t2;
    t2.r = x;
    t2.L_hat = MatQ(f.q(), c.n(), 0);
    t2.E_hat = {f.one(), f.one()};  // dependent deviations
    CHECK_THROWS_AS(generalized_decode(c, t2), std::invalid_argument);
}

TEST_CASE("locator formulation agrees with the span formulation") {
    GabidulinCode c = GabidulinCode::make(Field::make(2, 6), 6, 2);  // d = 5
    const Field& f = c.field();
    Rng rng(40);
    int done = 0;
    while (done < 500) {
        auto x = c.encode(random_message(c, rng));
        unsigned mu = rng.below(3), delta = rng.below(3);
        if (mu + delta >= c.d()) continue;
        unsigned eps = rng.below((c.d() - 1 - mu - delta) / 2 + 1);
        unsigned tau = eps + mu + delta;
        if (tau == 0) continue;
        ErrorPattern p = random_error(c, tau, rng);
        auto r = apply_error(c, x, p.L, p.E);
        ReceivedTuple t;
        t.r = r;
        t.L_hat = MatQ(f.q(), c.n(), mu);
        for (unsigned j = 0; j < mu; ++j)
            for (unsigned i = 0; i < c.n(); ++i) t.L_hat.at(i, j) = p.L.at(i, j);
        for (unsigned j = 0; j < delta; ++j) t.E_hat.push_back(p.E[mu + j]);

        DecodeOutcome a = generalized_decode(c, t);
        DecodeOutcome b = generalized_decode_locator(c, t);
        REQUIRE(a.ok);
        REQUIRE(b.ok);
        CHECK(a.codeword == x);
        CHECK(b.codeword == x);
        CHECK(a.error == b.error);
        ++done;
    }
}

TEST_CASE("locator polynomial for a single full error") {
    GabidulinCode c = small_code();
    const Field& f = c.field();
    Rng rng(41);
    auto x = c.encode(random_message(c, rng));
    ErrorPattern p = random_error(c, 1, rng);
    auto r = apply_error(c, x, p.L, p.E);
    DecodeOutcome out = generalized_decode_locator(c, plain_tuple(c, r));
    REQUIRE(out.ok);
    CHECK(out.codeword == x);
    CHECK(out.ws.lambda.q_degree() == 1);
    // lambda vanishes on the true locator X_1 = sum_i L_i1 h_i
    Ext X1 = f.zero();
    for (unsigned i = 0; i < c.n(); ++i)
        if (p.L.at(i, 0)) X1 = f.add(X1, f.scal(p.L.at(i, 0), c.h()[i]));
    CHECK(eval(f, out.ws.lambda, X1).is_zero());
}

TEST_CASE("all-known errata solve the syndrome equation directly") {
    // eps = 0, delta = 0: only erasures; the locator path reduces to solving
    // the syndrome system with the known locators
    GabidulinCode c = GabidulinCode::make(Field::make(2, 6), 6, 2);
    const Field& f = c.field();
    Rng rng(42);
    for (int it = 0; it < 50; ++it) {
        auto x = c.encode(random_message(c, rng));
        unsigned mu = 1 + rng.below(4);
        ErrorPattern p = random_error(c, mu, rng);
        auto r = apply_error(c, x, p.L, p.E);
        ReceivedTuple t{r, p.L, {}};
        DecodeOutcome out = generalized_decode_locator(c, t);
        REQUIRE(out.ok);
        CHECK(out.codeword == x);
        CHECK(out.eps == 0);

        // direct route: values from the known locators via the syndrome system
        std::vector<Ext> X(mu, f.zero());
        for (unsigned j = 0; j < mu; ++j)
            for (unsigned i = 0; i < c.n(); ++i)
                if (p.L.at(i, j)) X[j] = f.add(X[j], f.scal(p.L.at(i, j), c.h()[i]));
        auto E = gabidulin_solve(f, X, syndromes(c, r));
        REQUIRE(E.has_value());
        std::vector<Ext> e(c.n(), f.zero());
        for (unsigned i = 0; i < c.n(); ++i)
            for (unsigned j = 0; j < mu; ++j)
                if (p.L.at(i, j)) e[i] = f.add(e[i], f.scal(p.L.at(i, j), (*E)[j]));
        CHECK(e == out.error);
    }
}

TEST_CASE("modified key equation holds on successful decodes") {
    GabidulinCode c = GabidulinCode::make(Field::make(2, 6), 6, 2);
    const Field& f = c.field();
    Rng rng(43);
    for (int it = 0; it < 100; ++it) {
        auto x = c.encode(random_message(c, rng));
        ErrorPattern p = random_error(c, 3, rng);
        auto r = apply_error(c, x, p.L, p.E);
        ReceivedTuple t;
        t.r = r;
        t.L_hat = MatQ(f.q(), c.n(), 1);
        for (unsigned i = 0; i < c.n(); ++i) t.L_hat.at(i, 0) = p.L.at(i, 0);
        t.E_hat.push_back(p.E[1]);
        DecodeOutcome out = generalized_decode(c, t);
        REQUIRE(out.ok);
        CHECK(out.codeword == x);
        // omega = sigma_F (x) S_DU mod x^{[d-1]} has q-degree <= tau - 1
        const long tau = long(out.eps + out.mu + out.delta);
        CHECK(out.ws.omega.q_degree() <= tau - 1);
        LinPoly W = symbolic_product(f, out.ws.sigma_F, out.ws.S_DU);
        for (unsigned l = unsigned(tau); l + 1 < c.d(); ++l)
            if (l < W.coeffs.size()) CHECK(W.coeffs[l].is_zero());
    }
}

TEST_CASE("cartesian product code") {
    auto f1 = Field::make(2, 4);
    auto f2 = Field::make(2, 5);
    GabidulinCode c1 = GabidulinCode::make(f1, 4, 2);
    GabidulinCode c2 = GabidulinCode::make(f2, 4, 2);
    std::vector<GabidulinCode> comps{c1, c2};
    Rng rng(44);

    // cartesian product of two (2,4,4,2) codes: q^{mk l} codewords, distance d
    GabidulinCode twin = GabidulinCode::make(f1, 4, 2);
    CHECK(c1.cardinality() * twin.cardinality() == BigInt(1) << 16);
    std::size_t min_d = 99;
    for (std::uint64_t i = 0; i < 256 * 256; ++i) {
        if (i == 0) continue;
        MatQ a = ext_vector_to_mat(*f1, c1.encode(c1.message_from_index(i % 256)));
        MatQ b = ext_vector_to_mat(*f1, twin.encode(twin.message_from_index(i / 256)));
        const std::size_t rk = rank(hcat(a, b));
        if (rk) min_d = std::min(min_d, rk);
    }
    CHECK(min_d == 3);

    // error confined to component 1; component 2 decodes trivially
    auto x1 = c1.encode(random_message(c1, rng));
    auto x2 = c2.encode(random_message(c2, rng));
    ErrorPattern p = random_error(c1, 1, rng);
    auto r1 = apply_error(c1, x1, p.L, p.E);
    std::vector<ReceivedTuple> tuples{
        {r1, MatQ(2, 4, 0), {}},
        {x2, MatQ(2, 4, 0), {}},
    };
    auto outs = product_code_decode(comps, tuples);
    REQUIRE(outs.size() == 2);
    CHECK(outs[0].ok);
    CHECK(outs[0].codeword == x1);
    CHECK(outs[1].ok);
    CHECK(outs[1].codeword == x2);
    CHECK(outs[1].eps == 0);

    // shared error location across components
    for (int it = 0; it < 20; ++it) {
        auto y1 = c1.encode(random_message(c1, rng));
        auto y2 = c2.encode(random_message(c2, rng));
        MatQ L = random_full_rank(2, 4, 1, rng);
        Ext E1 = random_nonzero(*f1, rng);
        Ext E2 = random_nonzero(*f2, rng);
        auto s1 = apply_error(c1, y1, L, {E1});
        auto s2 = apply_error(c2, y2, L, {E2});
        auto res = product_code_decode(comps, {{s1, MatQ(2, 4, 0), {}}, {s2, MatQ(2, 4, 0), {}}});
        CHECK(res[0].ok);
        CHECK(res[0].codeword == y1);
        CHECK(res[1].ok);
        CHECK(res[1].codeword == y2);
    }

    CHECK_THROWS_AS(product_code_decode({c1}, {}), std::invalid_argument);
}

TEST_CASE("full-rate code accepts every word") {
    GabidulinCode c = GabidulinCode::make(Field::make(2, 4), 4, 4);  // d = 1
    Rng rng(45);
    auto r = c.encode(random_message(c, rng));
    DecodeOutcome out = generalized_decode(c, plain_tuple(c, r));
    CHECK(out.ok);
    CHECK(out.codeword == r);
}
