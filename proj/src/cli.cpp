#include "setlim/cli.hpp"

#include "setlim/infratype.hpp"
#include "setlim/json_io.hpp"
#include "setlim/multifn.hpp"
#include "setlim/partition.hpp"
#include "setlim/radstrom.hpp"
#include "setlim/riemann.hpp"
#include "setlim/selftest.hpp"
#include "setlim/sets.hpp"
#include "setlim/space.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace setlim::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

Json load_json(const std::string& spec) {
    if (spec.empty()) throw std::invalid_argument("missing set/target argument");
    if (spec[0] == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) throw std::invalid_argument("cannot read file '" + spec.substr(1) + "'");
        return Json::parse(in);
    }
    return Json::parse(spec);
}

CompactSet load_set(const std::string& spec) { return set_from_json(load_json(spec)); }

ScheduleKind parse_schedule_kind(const std::string& s) {
    if (s == "uniform-doubling") return ScheduleKind::UniformDoubling;
    if (s == "primes") return ScheduleKind::Primes;
    if (s == "random") return ScheduleKind::Random;
    throw std::invalid_argument("unknown schedule kind '" + s + "'");
}

Multifunction make_multifunction(const ExperimentConfig& cfg, const Space& space) {
    const auto parts = split(cfg.fn, ':');
    if (parts.empty()) throw std::invalid_argument("missing --fn");
    const std::string& head = parts[0];
    if (head == "constant") {
        if (cfg.set_a.empty()) {
            if (!space.is_dense()) throw std::invalid_argument("constant: provide --set-a");
            return constant_set(space, CompactSet::cloud({Vector::zeros(space.dim),
                                                          Vector::unit(space.dim, 0)}));
        }
        return constant_set(space, load_set(cfg.set_a));
    }
    if (head == "singleton") {
        if (parts.size() < 2) throw std::invalid_argument("singleton:<linear|poly|ratind>");
        if (parts[1] == "linear") return singleton_linear(space);
        if (parts[1] == "ratind") return rational_indicator(space);
        if (parts[1] == "poly") {
            if (parts.size() < 3) throw std::invalid_argument("singleton:poly:<c0,c1,...>");
            std::vector<double> coeffs;
            for (const auto& c : split(parts[2], ',')) coeffs.push_back(std::stod(c));
            return singleton_poly(space, coeffs);
        }
        throw std::invalid_argument("unknown singleton rule '" + parts[1] + "'");
    }
    if (head == "step") {
        if (parts.size() >= 2 && parts[1] == "random") {
            const std::size_t pieces = parts.size() >= 3 ? std::stoul(parts[2]) : 2;
            const std::size_t pts = parts.size() >= 4 ? std::stoul(parts[3]) : 2;
            if (!space.is_dense()) throw std::invalid_argument("step:random needs a dense space");
            if (pieces < 1 || pts < 1) throw std::invalid_argument("step:random:<pieces>:<points>");
            std::mt19937_64 rng(cfg.seed);
            std::uniform_real_distribution<double> unif(-1.0, 1.0);
            std::vector<Rational> bps;
            for (std::size_t i = 0; i <= pieces; ++i) bps.emplace_back(BigInt(i), BigInt(pieces));
            std::vector<CompactSet> values;
            for (std::size_t i = 0; i < pieces; ++i) {
                std::vector<Vector> cloud;
                for (std::size_t k = 0; k < pts; ++k) {
                    std::vector<double> c(space.dim);
                    for (auto& x : c) x = unif(rng);
                    cloud.push_back(Vector::dense(std::move(c)));
                }
                values.push_back(CompactSet::cloud(std::move(cloud)));
            }
            return step_multifunction(space, std::move(bps), std::move(values));
        }
        if (cfg.set_a.empty() || cfg.set_b.empty())
            throw std::invalid_argument("step: provide --set-a and --set-b for a two-piece split at 1/2");
        return step_multifunction(space, {Rational(0), Rational(1, 2), Rational(1)},
                                  {load_set(cfg.set_a), load_set(cfg.set_b)});
    }
    if (head == "l1") return l1_example(L1Model(cfg.bins));
    if (head == "biorth") return biorthogonal_example();
    throw std::invalid_argument("unknown multifunction '" + cfg.fn + "'");
}

bool requires_seed(const ExperimentConfig& cfg) {
    if (cfg.command == "membership" || cfg.command == "convex-probe" ||
        cfg.command == "star-probe" || cfg.command == "infratype" || cfg.command == "embed")
        return true;
    if (cfg.fn.find(":random") != std::string::npos) return true;
    if (cfg.schedule_kind == "random") return true;
    if (cfg.partition_spec.rfind("random", 0) == 0) return true;
    if (cfg.n_partition.rfind("random", 0) == 0 || cfg.m_partition.rfind("random", 0) == 0)
        return true;
    return false;
}

Json config_to_json(const ExperimentConfig& c) {
    return Json{{"command", c.command},
                {"space", c.space_spec},
                {"fn", c.fn},
                {"set_a", c.set_a},
                {"set_b", c.set_b},
                {"target", c.target},
                {"schedule_kind", c.schedule_kind},
                {"schedule_len", c.schedule_len},
                {"partition", c.partition_spec},
                {"n_partition", c.n_partition},
                {"m_partition", c.m_partition},
                {"tolerance", c.tolerance},
                {"window", c.window},
                {"seed", c.seed},
                {"budget", c.budget},
                {"lambda", c.lambda},
                {"lambda_grid", c.lambda_grid},
                {"primes", c.primes},
                {"bins", c.bins},
                {"directions", c.directions},
                {"p_exponent", c.p_exponent},
                {"n_max", c.n_max},
                {"trials", c.trials},
                {"reach_factor", c.reach_factor}};
}

struct CommandOutput {
    Json result;
    std::string csv;
    bool assertion_failed = false;
};

CommandOutput cmd_hausdorff(const ExperimentConfig& cfg) {
    Space sp = parse_space(cfg.space_spec);
    auto a = load_set(cfg.set_a);
    auto b = load_set(cfg.set_b);
    return {Json{{"d_h", hausdorff_distance(sp, a, b)}}, "", false};
}

CommandOutput cmd_minkowski(const ExperimentConfig& cfg) {
    auto a = load_set(cfg.set_a);
    auto b = load_set(cfg.set_b);
    return {Json{{"sum", set_to_json(minkowski_sum(a, b))}}, "", false};
}

CommandOutput cmd_riemann_sum(const ExperimentConfig& cfg) {
    Space sp = parse_space(cfg.space_spec);
    auto f = make_multifunction(cfg, sp);
    auto part = parse_partition(cfg.partition_spec);
    auto sum = riemann_sum(f, part);
    return {Json{{"partition", partition_to_json(part)}, {"sum", set_to_json(sum)}}, "", false};
}

CommandOutput cmd_converge(const ExperimentConfig& cfg) {
    Space sp = parse_space(cfg.space_spec);
    auto f = make_multifunction(cfg, sp);
    auto sched = schedule(parse_schedule_kind(cfg.schedule_kind), cfg.schedule_len, TagRule::Mid,
                          cfg.seed);
    auto res = converge(f, sched, cfg.tolerance, cfg.window);
    Json out{{"estimate", estimate_to_json(res.estimate)}, {"trace", trace_to_json(res.trace)}};
    return {std::move(out), trace_to_csv(res.trace), false};
}

CommandOutput cmd_compare_conv(const ExperimentConfig& cfg) {
    Space sp = parse_space(cfg.space_spec);
    auto f = make_multifunction(cfg, sp);
    auto part = parse_partition(cfg.partition_spec);
    auto res = compare_conv(f, part);
    return {compare_to_json(res), "", res.lhs_ub > res.rhs};
}

CommandOutput cmd_membership(const ExperimentConfig& cfg) {
    Space sp = parse_space(cfg.space_spec);
    auto f = make_multifunction(cfg, sp);
    auto target = load_set(cfg.target);
    auto sched = schedule(parse_schedule_kind(cfg.schedule_kind), cfg.schedule_len, TagRule::Mid,
                          cfg.seed);
    auto rep = membership_probe(f, target, sched, cfg.budget, cfg.seed, cfg.reach_factor);
    return {probe_to_json(rep), "", false};
}

CommandOutput cmd_convex_probe(const ExperimentConfig& cfg) {
    Space sp = parse_space(cfg.space_spec);
    auto f = make_multifunction(cfg, sp);
    auto a = load_set(cfg.set_a);
    auto b = load_set(cfg.set_b);
    auto sched = schedule(parse_schedule_kind(cfg.schedule_kind), cfg.schedule_len, TagRule::Mid,
                          cfg.seed);
    auto rep = convex_combination_probe(f, a, b, cfg.lambda, sched, cfg.budget, cfg.seed,
                                        cfg.reach_factor);
    return {probe_to_json(rep), "", false};
}

CommandOutput cmd_star_probe(const ExperimentConfig& cfg) {
    Space sp = parse_space(cfg.space_spec);
    auto f = make_multifunction(cfg, sp);
    auto center = load_set(cfg.target);
    std::vector<CompactSet> candidates;
    if (!cfg.set_a.empty()) candidates.push_back(load_set(cfg.set_a));
    if (!cfg.set_b.empty()) candidates.push_back(load_set(cfg.set_b));
    std::vector<double> lambdas;
    for (const auto& l : split(cfg.lambda_grid, ',')) lambdas.push_back(std::stod(l));
    auto sched = schedule(parse_schedule_kind(cfg.schedule_kind), cfg.schedule_len, TagRule::Mid,
                          cfg.seed);
    auto rep = star_probe(f, candidates, center, lambdas, sched, cfg.budget, cfg.seed,
                          cfg.reach_factor);
    return {star_to_json(rep), "", false};
}

CommandOutput cmd_example_l1(const ExperimentConfig& cfg) {
    auto f = l1_example(L1Model(cfg.bins));
    auto full = CompactSet::esum_interval(Rational(1), Rational(0), Rational(1));
    Json rows = Json::array();
    bool all_ok = true;
    for (const auto& ps : split(cfg.primes, ',')) {
        std::uint64_t p = std::stoull(ps);
        auto part = prime_partition(p);
        auto sum = riemann_sum(f, part);
        bool equal = exact_equal(sum, full);
        auto conv = is_convex_within(Space::dense(1), sum, 0.4);
        bool witness_ok = conv.exact_distance && *conv.exact_distance == Rational(1, 2);
        all_ok = all_ok && equal && !conv.convex && witness_ok;
        rows.push_back(Json{{"p", p},
                            {"sum", set_to_json(sum)},
                            {"exact_equal", equal},
                            {"witness_distance", conv.exact_distance
                                                     ? rational_to_string(*conv.exact_distance)
                                                     : "n/a"}});
    }
    return {Json{{"bins", cfg.bins}, {"full_set", set_to_json(full)}, {"per_prime", rows},
                 {"ok", all_ok}},
            "", !all_ok};
}

CommandOutput cmd_example_empty(const ExperimentConfig& cfg) {
    auto f = biorthogonal_example();
    std::vector<TaggedPartition> sched{parse_partition(cfg.n_partition),
                                       parse_partition(cfg.m_partition)};
    auto cert = empty_example_verifier(f, sched, 0);
    return {certificate_to_json(cert), "", !cert.ok};
}

CommandOutput cmd_infratype(const ExperimentConfig& cfg) {
    Space sp = parse_space(cfg.space_spec);
    auto est = estimate_constant(sp, cfg.p_exponent, cfg.n_max, cfg.trials, cfg.seed);
    return {infratype_to_json(est), infratype_to_csv(est), false};
}

CommandOutput cmd_embed(const ExperimentConfig& cfg) {
    Space sp = parse_space(cfg.space_spec);
    auto a = load_set(cfg.set_a);
    auto dirs = sample_directions(sp, cfg.directions, cfg.seed);
    auto sample = embed(sp, a, dirs);
    std::string csv;
    if (sp.is_dense() && sp.dim == 2) csv = support_sample_to_csv(sample);
    return {support_sample_to_json(sample), std::move(csv), false};
}

ExperimentConfig canned(const std::string& command) {
    ExperimentConfig c;
    c.command = command;
    c.seed = 17;
    c.seed_set = true;
    return c;
}

CommandOutput cmd_selftest(const ExperimentConfig& cfg) {
    auto checks = run_property_suite(cfg.seed_set ? cfg.seed : 2024);
    Json rows = Json::array();
    bool all_pass = true;
    for (const auto& c : checks) {
        all_pass = all_pass && c.pass;
        Json row{{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) row["detail"] = c.detail;
        rows.push_back(std::move(row));
    }

    // Determinism: rerunning a command with an identical config must produce
    // byte-identical artifacts.
    std::vector<ExperimentConfig> reruns;
    {
        auto c = canned("converge");
        c.fn = "singleton:linear";
        c.schedule_len = 5;
        c.tolerance = 1e-3;
        reruns.push_back(c);
    }
    {
        auto c = canned("membership");
        c.fn = "singleton:ratind";
        c.target = R"({"repr":"cloud","points":[[0.5,0.0]]})";
        c.schedule_len = 4;
        reruns.push_back(c);
    }
    {
        auto c = canned("riemann-sum");
        c.fn = "step:random:2:2";
        c.partition_spec = "uniform:8:mid";
        reruns.push_back(c);
    }
    {
        auto c = canned("infratype");
        c.trials = 50;
        reruns.push_back(c);
    }
    {
        auto c = canned("example-l1");
        reruns.push_back(c);
    }
    {
        auto c = canned("example-empty");
        c.n_partition = "uniform:4:mid";
        c.m_partition = "uniform:16:mid";
        reruns.push_back(c);
    }
    {
        auto c = canned("embed");
        c.set_a = R"({"repr":"polytope","vertices":[[0,0],[1,0],[0,1],[1,1]]})";
        c.directions = 32;
        reruns.push_back(c);
    }
    {
        auto c = canned("compare-conv");
        c.fn = "step:random:2:2";
        c.partition_spec = "uniform:32:mid";
        reruns.push_back(c);
    }
    Json determinism = Json::array();
    for (const auto& rc : reruns) {
        RunResult r1 = run(rc);
        RunResult r2 = run(rc);
        std::uint64_t h1 = fnv1a(r1.json + "\x1f" + r1.csv);
        std::uint64_t h2 = fnv1a(r2.json + "\x1f" + r2.csv);
        bool same = h1 == h2 && r1.exit_code == r2.exit_code && r1.exit_code == 0;
        all_pass = all_pass && same;
        determinism.push_back(Json{{"command", rc.command},
                                   {"hash", h1},
                                   {"rerun_hash", h2},
                                   {"exit", r1.exit_code},
                                   {"identical", same}});
    }
    return {Json{{"properties", rows}, {"determinism", determinism}, {"ok", all_pass}}, "",
            !all_pass};
}

}  // namespace

std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

RunResult run(const ExperimentConfig& cfg) {
    RunResult out;
    Json doc;
    doc["command"] = cfg.command;
    doc["config"] = config_to_json(cfg);
    try {
        if (cfg.command != "selftest" && requires_seed(cfg) && !cfg.seed_set)
            throw std::invalid_argument("this command is randomized: --seed is mandatory");
        CommandOutput res;
        if (cfg.command == "hausdorff") res = cmd_hausdorff(cfg);
        else if (cfg.command == "minkowski") res = cmd_minkowski(cfg);
        else if (cfg.command == "riemann-sum") res = cmd_riemann_sum(cfg);
        else if (cfg.command == "converge") res = cmd_converge(cfg);
        else if (cfg.command == "compare-conv") res = cmd_compare_conv(cfg);
        else if (cfg.command == "membership") res = cmd_membership(cfg);
        else if (cfg.command == "convex-probe") res = cmd_convex_probe(cfg);
        else if (cfg.command == "star-probe") res = cmd_star_probe(cfg);
        else if (cfg.command == "example-l1") res = cmd_example_l1(cfg);
        else if (cfg.command == "example-empty") res = cmd_example_empty(cfg);
        else if (cfg.command == "infratype") res = cmd_infratype(cfg);
        else if (cfg.command == "embed") res = cmd_embed(cfg);
        else if (cfg.command == "selftest") res = cmd_selftest(cfg);
        else throw std::invalid_argument("unknown command '" + cfg.command + "'");
        doc["result"] = std::move(res.result);
        out.exit_code = res.assertion_failed ? 1 : 0;
        out.csv = std::move(res.csv);
    } catch (const std::invalid_argument& e) {
        doc["error"] = e.what();
        out.exit_code = 2;  // configuration / input error
    } catch (const std::length_error& e) {
        doc["error"] = e.what();
        out.exit_code = 2;
    } catch (const std::logic_error& e) {
        doc["error"] = e.what();
        out.exit_code = 1;  // internal assertion (declared bounds, certified chains)
    } catch (const std::exception& e) {
        doc["error"] = e.what();
        out.exit_code = 2;
    }
    doc["exit"] = out.exit_code;
    out.json = doc.dump(2) + "\n";
    return out;
}

}  // namespace setlim::cli
