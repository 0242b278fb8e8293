#include "rankcode/simulate.hpp"

#include "rankcode/oracle.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace rankcode {

namespace {

struct TrialResult {
    bool ok = false;
    bool right = false;
    std::string reason;
    unsigned eps = 0, mu = 0, delta = 0;
    std::size_t rank_Z = 0;
    std::uint64_t ops = 0;
    bool oracle_mismatch = false;
};

TrialResult run_trial(const GabidulinCode& code, const SimConfig& cfg, std::uint64_t trial) {
    const Field& f = code.field();
    TrialResult res;

    Rng msg_rng(mix_seed(cfg.chan.seed, 2 * trial + 1));
    std::vector<Ext> u(code.k(), f.zero());
    for (auto& ui : u)
        for (unsigned j = 0; j < f.m(); ++j) ui.c[j] = Sym(msg_rng.below(f.q()));
    const std::vector<Ext> x = code.encode(u);
    const MatQ payload = ext_vector_to_mat(f, x);
    const MatQ X = lift_matrix(payload);

    ChannelConfig chan = cfg.chan;
    chan.seed = mix_seed(cfg.chan.seed, 2 * trial);
    ChannelSim sim(chan);
    const ChannelDraw draw = cfg.adversarial
                                 ? sim.transmit_adversarial(X, payload, cfg.adversarial_candidates)
                                 : sim.transmit(X);
    res.rank_Z = draw.Z.rows() ? rank(draw.Z) : 0;

    const ReductionResult red = reduce(draw.Y, code.n());
    const ReceivedTuple tuple = tuple_from_reduction(code, red);

    OpCount::reset();
    const DecodeOutcome out = generalized_decode(code, tuple);
    res.ops = OpCount::total();

    res.ok = out.ok;
    res.eps = out.eps;
    res.mu = out.mu;
    res.delta = out.delta;
    res.reason = out.reason;
    res.right = out.ok && out.codeword == x;

    if (cfg.oracle_check) {
        const OracleResult oracle = brute_generalized_decode_serial(code, tuple);
        if (!oracle.ambiguous) {
            const bool oracle_matches = out.ok && out.codeword == oracle.codeword;
            const unsigned budget = out.mu + out.delta + (code.d() - 1 - out.mu - out.delta) / 2;
            const bool within = oracle.objective <= budget && out.mu + out.delta < code.d();
            if (within && !oracle_matches) res.oracle_mismatch = true;
        }
    }
    return res;
}

SimReport aggregate(const GabidulinCode& code, const SimConfig& cfg, const std::vector<TrialResult>& trials) {
    SimReport rep;
    rep.seed = cfg.chan.seed;
    rep.trials = trials.size();
    double sum_rank = 0, sum_ops = 0;
    for (const TrialResult& t : trials) {
        sum_rank += double(t.rank_Z);
        sum_ops += double(t.ops);
        if (t.right) {
            ++rep.successes;
            std::ostringstream key;
            key << t.eps << "_" << t.mu << "_" << t.delta;
            ++rep.errata_hist[key.str()];
        } else {
            ++rep.failures;
            if (t.ok) {
                ++rep.miscorrections;
                ++rep.failure_reasons["wrong_codeword"];
            } else {
                ++rep.failure_reasons[t.reason.empty() ? "decoding_failure" : t.reason];
            }
        }
        if (t.oracle_mismatch) ++rep.oracle_disagreements;
    }
    if (rep.trials) {
        rep.mean_rank_Z = sum_rank / double(rep.trials);
        rep.mean_ops = sum_ops / double(rep.trials);
    }
    (void)code;
    return rep;
}

}  // namespace

// configuration problems must surface before the parallel loop
static void validate_sim_config(const GabidulinCode& code, const SimConfig& cfg) {
    if (cfg.chan.n != code.n() || cfg.chan.m != code.field().m())
        throw std::invalid_argument("channel shape does not match the code");
    ChannelSim probe(cfg.chan);
    (void)probe;
}

SimReport run_simulation_serial(const GabidulinCode& code, const SimConfig& cfg) {
    validate_sim_config(code, cfg);
    std::vector<TrialResult> trials(cfg.trials);
    for (std::uint64_t i = 0; i < cfg.trials; ++i) trials[i] = run_trial(code, cfg, i);
    return aggregate(code, cfg, trials);
}

SimReport run_simulation(const GabidulinCode& code, const SimConfig& cfg) {
    validate_sim_config(code, cfg);
    std::vector<TrialResult> trials(cfg.trials);
#pragma omp parallel for schedule(dynamic, 8)
    for (long long i = 0; i < (long long)cfg.trials; ++i)
        trials[std::size_t(i)] = run_trial(code, cfg, std::uint64_t(i));
    return aggregate(code, cfg, trials);
}

std::string format_report(const SimReport& rep) {
    std::ostringstream os;
    os << "trials=" << rep.trials << "\n";
    os << "successes=" << rep.successes << "\n";
    os << "failures=" << rep.failures << "\n";
    os << "miscorrections=" << rep.miscorrections << "\n";
    os.setf(std::ios::fixed);
    os.precision(6);
    os << "success_rate=" << rep.success_rate() << "\n";
    os << "mean_rank_Z=" << rep.mean_rank_Z << "\n";
    os << "mean_ops=" << rep.mean_ops << "\n";
    os << "oracle_disagreements=" << rep.oracle_disagreements << "\n";
    os << "seed=" << rep.seed << "\n";
    for (const auto& [key, count] : rep.errata_hist) os << "errata_" << key << "=" << count << "\n";
    for (const auto& [key, count] : rep.failure_reasons) {
        std::string slug = key;
        for (char& c : slug)
            if (c == ' ') c = '_';
        os << "fail_" << slug << "=" << count << "\n";
    }
    return os.str();
}

}  // namespace rankcode
