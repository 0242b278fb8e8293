#include "doctest.h"

#include "rankcode/simulate.hpp"
#include "rankcode/textio.hpp"
#include "test_util.hpp"

using namespace rankcode;

TEST_CASE("simulation is deterministic and matches the serial reference") {
    GabidulinCode code = GabidulinCode::make(Field::make(2, 4), 4, 2);
    SimConfig cfg;
    cfg.chan.n = 4;
    cfg.chan.m = 4;
    cfg.chan.N = 4;
    cfg.chan.rho_max = 1;
    cfg.chan.t_max = 1;
    cfg.chan.seed = 77;
    cfg.trials = 200;

    SimReport par = run_simulation(code, cfg);
    SimReport ser = run_simulation_serial(code, cfg);
    CHECK(format_report(par) == format_report(ser));

    SimReport again = run_simulation(code, cfg);
    CHECK(format_report(par) == format_report(again));

    cfg.chan.seed = 78;
    SimReport other = run_simulation(code, cfg);
    CHECK(format_report(par) != format_report(other));
}

TEST_CASE("zero trials produce an empty report") {
    GabidulinCode code = GabidulinCode::make(Field::make(2, 4), 4, 2);
    SimConfig cfg;
    cfg.chan.n = 4;
    cfg.chan.m = 4;
    cfg.chan.N = 4;
    cfg.trials = 0;
    SimReport rep = run_simulation(code, cfg);
    CHECK(rep.trials == 0);
    CHECK(rep.successes == 0);
    CHECK(format_report(rep).find("trials=0") == 0);
}

TEST_CASE("in-guarantee channels always succeed") {
    GabidulinCode code = GabidulinCode::make(Field::make(2, 4), 4, 2);  // d = 3
    SimConfig cfg;
    cfg.chan.n = 4;
    cfg.chan.m = 4;
    cfg.chan.N = 4;
    cfg.chan.rho_max = 2;  // 2t + rho = 2 < 3
    cfg.chan.t_max = 0;
    cfg.chan.seed = 5;
    cfg.trials = 300;
    SimReport rep = run_simulation(code, cfg);
    CHECK(rep.success_rate() == 1.0);

    cfg.chan.rho_max = 0;
    cfg.chan.t_max = 1;
    rep = run_simulation(code, cfg);
    CHECK(rep.success_rate() == 1.0);
}

TEST_CASE("oracle cross-check mode reports no disagreements in-bound") {
    GabidulinCode code = GabidulinCode::make(Field::make(2, 4), 4, 2);
    SimConfig cfg;
    cfg.chan.n = 4;
    cfg.chan.m = 4;
    cfg.chan.N = 4;
    cfg.chan.rho_max = 1;
    cfg.chan.t_max = 1;
    cfg.chan.seed = 13;
    cfg.trials = 50;
    cfg.oracle_check = true;
    SimReport rep = run_simulation(code, cfg);
    CHECK(rep.oracle_disagreements == 0);
}

TEST_CASE("adversarial search degrades overloaded channels") {
    GabidulinCode code = GabidulinCode::make(Field::make(2, 4), 4, 2);  // d = 3
    SimConfig cfg;
    cfg.chan.n = 4;
    cfg.chan.m = 4;
    cfg.chan.N = 4;
    cfg.chan.rho_max = 0;
    cfg.chan.t_max = 2;  // 2t = 4 = d + 1
    cfg.chan.seed = 21;
    cfg.trials = 100;
    cfg.adversarial = true;
    SimReport rep = run_simulation(code, cfg);
    CHECK(rep.success_rate() < 1.0);
}

TEST_CASE("text round trips") {
    auto f = Field::make(2, 8);
    Rng rng(91);
    for (int it = 0; it < 50; ++it) {
        Ext a = testutil::random_elem(*f, rng);
        CHECK(ext_from_hex(*f, ext_to_hex(*f, a)) == a);
    }
    auto f5 = Field::make(5, 4);
    std::vector<Ext> v;
    for (int i = 0; i < 6; ++i) v.push_back(testutil::random_elem(*f5, rng));
    CHECK(parse_codeword_hex(*f5, format_codeword_hex(*f5, v)) == v);

    MatQ x = testutil::random_mat(5, 3, 7, rng);
    CHECK(parse_matq(format_matq(x)) == x);
    CHECK(parse_packets(format_packets(x), 5, 7) == x);

    MatQ big = testutil::random_mat(65521, 2, 3, rng);
    CHECK(parse_matq(format_matq(big)) == big);
}

TEST_CASE("spec string parsing") {
    auto f = parse_field_spec("q=2,m=8,poly=0x11D");
    CHECK(f->q() == 2);
    CHECK(f->m() == 8);
    CHECK(f->modulus() == std::vector<Sym>{1, 0, 1, 1, 1, 0, 0, 0, 1});

    GabidulinCode c = parse_code_spec("gab:q=2,m=8,n=8,k=4");
    CHECK(c.n() == 8);
    CHECK(c.k() == 4);
    CHECK(c.d() == 5);

    CHECK_THROWS(parse_code_spec("gab:q=2,m=8"));
    CHECK_THROWS(parse_code_spec("rs:q=2,m=8,n=8,k=4"));
    CHECK_THROWS(parse_field_spec("q=6,m=3"));
    CHECK_THROWS(parse_field_spec("q=2,m=8,poly=0x11C"));  // reducible
}
