#include "CLI11.hpp"

#include "rankcode/lifting.hpp"
#include "rankcode/oracle.hpp"
#include "rankcode/simulate.hpp"
#include "rankcode/textio.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitFormat = 3;
constexpr int kExitDecode = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
}

std::uint64_t seed_or_env(std::uint64_t seed, bool seed_set) {
    if (seed_set) return seed;
    if (const char* env = std::getenv("RANKCODE_SEED")) return std::strtoull(env, nullptr, 0);
    return 1;
}

int cmd_params(const std::string& spec) {
    rankcode::GabidulinCode code = rankcode::parse_code_spec(spec);
    const rankcode::Field& f = code.field();
    const unsigned n = code.n(), m = f.m(), d = code.d();
    auto bounds = rankcode::singleton_bounds(f.q(), n, m, d);
    std::cout << "q=" << f.q() << "\n"
              << "m=" << m << "\n"
              << "n=" << n << "\n"
              << "k=" << code.k() << "\n"
              << "d=" << d << "\n"
              << "cardinality=" << code.cardinality() << "\n"
              << "singleton_rank_bound=" << bounds.rank_metric_bound << "\n"
              << "mrd=" << (code.cardinality() == bounds.rank_metric_bound ? 1 : 0) << "\n"
              << "packet_length=" << n + m << "\n"
              << "lifted_subspace_bound=" << bounds.subspace_bound << "\n";
    std::cout.setf(std::ios::fixed);
    std::cout.precision(6);
    std::cout << "sub_optimality_bound=" << bounds.sub_optimality << "\n";
    return kExitOk;
}

int cmd_encode(const std::string& spec, const std::string& in_path, const std::string& out_path) {
    rankcode::GabidulinCode code = rankcode::parse_code_spec(spec);
    const rankcode::Field& f = code.field();
    rankcode::MatQ msg;
    try {
        msg = rankcode::parse_packets(read_file(in_path), f.q(), f.m());
    } catch (const std::exception& e) {
        std::cerr << "payload error: " << e.what() << "\n";
        return kExitFormat;
    }
    if (msg.rows() != code.k()) {
        std::cerr << "payload error: expected " << code.k() << " rows of " << f.m() << " digits\n";
        return kExitFormat;
    }
    auto x = code.encode(rankcode::mat_to_ext_vector(f, msg));
    rankcode::MatQ packets = rankcode::lift_matrix(rankcode::ext_vector_to_mat(f, x));
    write_file(out_path, rankcode::format_packets(packets));
    return kExitOk;
}

int cmd_decode(const std::string& spec, const std::string& in_path, const std::string& out_path,
               bool use_locator) {
    rankcode::GabidulinCode code = rankcode::parse_code_spec(spec);
    const rankcode::Field& f = code.field();
    rankcode::MatQ Y;
    try {
        Y = rankcode::parse_packets(read_file(in_path), f.q(), code.n() + f.m());
    } catch (const std::exception& e) {
        std::cerr << "packet error: " << e.what() << "\n";
        return kExitFormat;
    }
    rankcode::ReductionResult red = rankcode::reduce(Y, code.n());
    rankcode::ReceivedTuple tuple = rankcode::tuple_from_reduction(code, red);
    rankcode::DecodeOutcome out = use_locator ? rankcode::generalized_decode_locator(code, tuple)
                                              : rankcode::generalized_decode(code, tuple);
    std::cerr << "mu=" << red.mu << " delta=" << red.delta << "\n";
    if (!out.ok) {
        std::cerr << "decoding failed: " << out.reason << "\n";
        return kExitDecode;
    }
    std::cerr << "eps=" << out.eps << "\n";
    // G is in RRE form, so the codeword entries at G's pivot columns are the
    // message symbols themselves
    const auto& G = code.G();
    std::vector<std::size_t> pivots;
    for (unsigned i = 0; i < code.k(); ++i)
        for (unsigned j = 0; j < code.n(); ++j)
            if (!G[i][j].is_zero()) {
                pivots.push_back(j);
                break;
            }
    std::vector<rankcode::Ext> u(code.k(), f.zero());
    for (unsigned i = 0; i < code.k(); ++i) u[i] = out.codeword[pivots[i]];
    write_file(out_path, rankcode::format_packets(rankcode::ext_vector_to_mat(f, u)));
    return kExitOk;
}

int cmd_simulate(const std::string& spec, rankcode::SimConfig cfg, bool serial) {
    rankcode::GabidulinCode code = rankcode::parse_code_spec(spec);
    const rankcode::Field& f = code.field();
    cfg.chan.n = code.n();
    cfg.chan.m = f.m();
    if (cfg.chan.N == 0) cfg.chan.N = code.n();
    rankcode::SimReport rep =
        serial ? rankcode::run_simulation_serial(code, cfg) : rankcode::run_simulation(code, cfg);
    std::cout << rankcode::format_report(rep);
    if (cfg.oracle_check && rep.oracle_disagreements > 0) return kExitDecode;
    return kExitOk;
}

int cmd_oracle_check(const std::string& spec, std::uint64_t trials, std::uint64_t seed) {
    rankcode::GabidulinCode code = rankcode::parse_code_spec(spec);
    const rankcode::Field& f = code.field();
    const unsigned d = code.d();
    rankcode::Rng rng(seed);
    std::uint64_t agree = 0, ambiguous = 0, mismatch = 0;
    for (std::uint64_t it = 0; it < trials; ++it) {
        const unsigned mu = rng.below(d), delta = rng.below(d - mu);
        const unsigned eps = rng.below((d - 1 - mu - delta) / 2 + 1);
        const unsigned tau = eps + mu + delta;
        std::vector<rankcode::Ext> u(code.k(), f.zero());
        for (auto& e : u)
            for (unsigned j = 0; j < f.m(); ++j) e.c[j] = rankcode::Sym(rng.below(f.q()));
        auto x = code.encode(u);

        rankcode::MatQ L(f.q(), code.n(), tau);
        std::vector<rankcode::Ext> E(tau, f.zero());
        for (;;) {
            for (std::size_t i = 0; i < L.rows(); ++i)
                for (std::size_t j = 0; j < tau; ++j) L.at(i, j) = rankcode::Sym(rng.below(f.q()));
            for (auto& e : E)
                for (unsigned j = 0; j < f.m(); ++j) e.c[j] = rankcode::Sym(rng.below(f.q()));
            if (tau == 0) break;
            if (rankcode::rank(L) == tau && rankcode::rank_of_ext_vector(f, E) == tau) break;
        }
        auto r = x;
        for (unsigned i = 0; i < code.n(); ++i)
            for (unsigned j = 0; j < tau; ++j)
                if (L.at(i, j)) r[i] = f.add(r[i], f.scal(L.at(i, j), E[j]));

        rankcode::ReceivedTuple t;
        t.r = r;
        t.L_hat = rankcode::MatQ(f.q(), code.n(), mu);
        for (unsigned j = 0; j < mu; ++j)
            for (unsigned i = 0; i < code.n(); ++i) t.L_hat.at(i, j) = L.at(i, j);
        for (unsigned j = 0; j < delta; ++j) t.E_hat.push_back(E[mu + j]);

        rankcode::OracleResult oracle = rankcode::brute_generalized_decode(code, t);
        rankcode::DecodeOutcome a = rankcode::generalized_decode(code, t);
        rankcode::DecodeOutcome b = rankcode::generalized_decode_locator(code, t);
        if (oracle.ambiguous) {
            ++ambiguous;
            continue;
        }
        if (a.ok && b.ok && a.codeword == oracle.codeword && b.codeword == oracle.codeword)
            ++agree;
        else
            ++mismatch;
    }
    std::cout << "trials=" << trials << "\n"
              << "agreements=" << agree << "\n"
              << "ambiguous=" << ambiguous << "\n"
              << "mismatches=" << mismatch << "\n"
              << "seed=" << seed << "\n";
    return mismatch == 0 ? kExitOk : kExitDecode;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rank-metric error control toolkit"};
    app.require_subcommand(1);

    std::string spec, in_path, out_path;
    std::uint64_t trials = 1000, seed = 0;
    bool seed_set = false;
    unsigned N = 0, rho = 0, t = 0, links = 0;
    bool adversarial = false, oracle = false, serial = false, locator = false;

    auto add_code = [&](CLI::App* cmd) {
        cmd->add_option("--code", spec, "code spec, e.g. gab:q=2,m=8,n=8,k=4")->required();
    };

    CLI::App* params = app.add_subcommand("params", "print code parameters and bounds");
    add_code(params);

    CLI::App* encode = app.add_subcommand("encode", "encode a payload file into lifted packets");
    add_code(encode);
    encode->add_option("--in", in_path, "payload: k lines of m base-q digits")->required();
    encode->add_option("--out", out_path, "output packet file")->required();

    CLI::App* decode = app.add_subcommand("decode", "reduce and decode received packets");
    add_code(decode);
    decode->add_option("--in", in_path, "received packets: lines of n+m digits")->required();
    decode->add_option("--out", out_path, "recovered payload")->required();
    decode->add_flag("--locator", locator, "use the locator-polynomial formulation");

    unsigned n_flag = 0, m_flag = 0;
    CLI::App* simulate = app.add_subcommand("simulate", "run channel simulations");
    add_code(simulate);
    simulate->add_option("--trials", trials, "number of trials");
    simulate->add_option("--n", n_flag, "source packets; must match the code");
    simulate->add_option("--m", m_flag, "payload length; must match the code");
    simulate->add_option("--N", N, "received packet count (default n)");
    simulate->add_option("--rho", rho, "max column-rank deficiency of A");
    simulate->add_option("--t", t, "max corrupt packets");
    simulate->add_option("--links", links, "error injection rows (default t)");
    auto* seed_opt = simulate->add_option("--seed", seed, "master seed (default RANKCODE_SEED or 1)");
    simulate->add_flag("--adversarial", adversarial, "search for worst-case error packets");
    simulate->add_flag("--oracle", oracle, "cross-check decodes against the brute-force oracle");
    simulate->add_flag("--serial", serial, "single-threaded reference path");

    CLI::App* oc = app.add_subcommand("oracle-check", "compare both decoders against the oracle");
    add_code(oc);
    oc->add_option("--trials", trials, "number of random correctable tuples");
    auto* oc_seed = oc->add_option("--seed", seed, "seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (params->parsed()) return cmd_params(spec);
        if (encode->parsed()) return cmd_encode(spec, in_path, out_path);
        if (decode->parsed()) return cmd_decode(spec, in_path, out_path, locator);
        if (simulate->parsed()) {
            if (n_flag || m_flag) {
                rankcode::GabidulinCode probe = rankcode::parse_code_spec(spec);
                if ((n_flag && n_flag != probe.n()) || (m_flag && m_flag != probe.field().m()))
                    throw std::invalid_argument("--n/--m must match the code parameters");
            }
            seed_set = seed_opt->count() > 0;
            rankcode::SimConfig cfg;
            cfg.trials = trials;
            cfg.chan.N = N;
            cfg.chan.rho_max = rho;
            cfg.chan.t_max = t;
            cfg.chan.links = links;
            cfg.chan.seed = seed_or_env(seed, seed_set);
            cfg.adversarial = adversarial;
            cfg.oracle_check = oracle;
            return cmd_simulate(spec, cfg, serial);
        }
        if (oc->parsed()) return cmd_oracle_check(spec, trials, seed_or_env(seed, oc_seed->count() > 0));
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFormat;
    }
    return kExitUsage;
}
