// setlim: set-valued Riemann integration experiments.
//
// Subcommands cover the set calculus (hausdorff, minkowski, embed), integral
// sums and convergence (riemann-sum, converge, compare-conv), membership and
// structure probes, the two worked examples, infratype estimation, and a
// selftest battery. Output is machine-first: a JSON document per run, plus
// CSV plot columns where they make sense.

#include "setlim/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

int write_artifacts(const setlim::cli::RunResult& res, const std::string& out_path,
                    const std::string& csv_path) {
    namespace fs = std::filesystem;
    auto resolve = [](const std::string& p) {
        const char* dir = std::getenv("SETLIM_OUT_DIR");
        if (dir && !fs::path(p).is_absolute()) return fs::path(dir) / p;
        return fs::path(p);
    };
    if (out_path.empty()) {
        std::cout << res.json;
    } else {
        std::ofstream f(resolve(out_path));
        if (!f) {
            std::cerr << "cannot write " << out_path << "\n";
            return 2;
        }
        f << res.json;
    }
    if (!csv_path.empty()) {
        std::ofstream f(resolve(csv_path));
        if (!f) {
            std::cerr << "cannot write " << csv_path << "\n";
            return 2;
        }
        f << res.csv;
    }
    return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"set-valued Riemann integration toolkit"};
    app.require_subcommand(1);

    setlim::cli::ExperimentConfig cfg;
    std::string out_path, csv_path;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", out_path, "write the JSON artifact here (default: stdout)");
        sub->add_option("--csv", csv_path, "write CSV plot columns here");
        sub->add_option("--space", cfg.space_spec, "space spec: l2:<d>, l1:<d>, linf:<d>, lp:<p>:<d>, sparse");
    };
    auto add_seed = [&](CLI::App* sub) {
        sub->add_option("--seed", cfg.seed, "RNG seed")->each([&](const std::string&) {
            cfg.seed_set = true;
        });
    };
    auto add_fn = [&](CLI::App* sub) {
        sub->add_option("--fn", cfg.fn,
                        "multifunction: constant | singleton:linear | singleton:poly:<coeffs> | "
                        "singleton:ratind | step:random:<pieces>:<pts> | step | l1 | biorth");
        sub->add_option("--bins", cfg.bins, "L1 model bins (l1 multifunction)");
    };
    auto add_schedule = [&](CLI::App* sub) {
        sub->add_option("--schedule", cfg.schedule_kind, "uniform-doubling | primes | random");
        sub->add_option("--len", cfg.schedule_len, "schedule length");
    };

    auto* hausdorff = app.add_subcommand("hausdorff", "Hausdorff distance between two sets");
    hausdorff->add_option("--a", cfg.set_a, "set JSON (inline or @file)")->required();
    hausdorff->add_option("--b", cfg.set_b, "set JSON (inline or @file)")->required();
    add_common(hausdorff);

    auto* minkowski = app.add_subcommand("minkowski", "Minkowski sum of two sets");
    minkowski->add_option("--a", cfg.set_a)->required();
    minkowski->add_option("--b", cfg.set_b)->required();
    add_common(minkowski);

    auto* rsum = app.add_subcommand("riemann-sum", "one integral sum S(F, Gamma, T)");
    add_fn(rsum);
    rsum->add_option("--partition", cfg.partition_spec, "uniform:<n>[:rule] | prime:<p> | random:<d>:<seed>")
        ->required();
    add_common(rsum);
    add_seed(rsum);

    auto* conv = app.add_subcommand("converge", "Cauchy detection along a shrinking schedule");
    add_fn(conv);
    add_schedule(conv);
    conv->add_option("--tol", cfg.tolerance, "window tolerance");
    conv->add_option("--window", cfg.window, "trailing window size");
    add_common(conv);
    add_seed(conv);

    auto* cc = app.add_subcommand("compare-conv", "gap between S(F) and S(conv F) vs the infratype bound");
    add_fn(cc);
    cc->add_option("--partition", cfg.partition_spec)->required();
    add_common(cc);
    add_seed(cc);

    auto* mem = app.add_subcommand("membership", "greedy tag search toward a target set");
    add_fn(mem);
    mem->add_option("--target", cfg.target, "target set JSON")->required();
    add_schedule(mem);
    mem->add_option("--budget", cfg.budget, "descent cycles per partition");
    mem->add_option("--reach-factor", cfg.reach_factor, "reached iff final dist <= factor * diameter");
    add_common(mem);
    add_seed(mem);

    auto* cp = app.add_subcommand("convex-probe", "probe lambda A + (1-lambda) B for membership");
    add_fn(cp);
    cp->add_option("--a", cfg.set_a)->required();
    cp->add_option("--b", cfg.set_b)->required();
    cp->add_option("--lambda", cfg.lambda, "mixing weight");
    add_schedule(cp);
    cp->add_option("--budget", cfg.budget);
    add_common(cp);
    add_seed(cp);

    auto* sp = app.add_subcommand("star-probe", "probe segments from a center to candidate limits");
    add_fn(sp);
    sp->add_option("--center", cfg.target, "center set JSON")->required();
    sp->add_option("--a", cfg.set_a, "candidate set");
    sp->add_option("--b", cfg.set_b, "candidate set");
    sp->add_option("--lambda-grid", cfg.lambda_grid, "comma-separated mixing weights");
    add_schedule(sp);
    sp->add_option("--budget", cfg.budget);
    add_common(sp);
    add_seed(sp);

    auto* example = app.add_subcommand("example", "worked constructions");
    auto* exl1 = example->add_subcommand("l1", "tiling sums of scaled characteristic-function sets");
    exl1->add_option("--primes", cfg.primes, "comma-separated primes");
    exl1->add_option("--bins", cfg.bins, "L1 model bins");
    add_common(exl1);
    auto* exempty = example->add_subcommand("empty", "separating-functional divergence certificate");
    exempty->add_option("--n-partition", cfg.n_partition)->required();
    exempty->add_option("--m-partition", cfg.m_partition)->required();
    add_common(exempty);

    auto* inf = app.add_subcommand("infratype", "empirical sign-minimization constant");
    inf->add_option("--p", cfg.p_exponent, "exponent p > 1");
    inf->add_option("--n-max", cfg.n_max, "largest collection size");
    inf->add_option("--trials", cfg.trials);
    add_common(inf);
    add_seed(inf);

    auto* emb = app.add_subcommand("embed", "support-function sample of a set");
    emb->add_option("--set", cfg.set_a, "set JSON")->required();
    emb->add_option("--directions", cfg.directions, "direction count (>= 2 dim)");
    add_common(emb);
    add_seed(emb);

    auto* st = app.add_subcommand("selftest", "property suites + determinism hashes");
    add_common(st);
    add_seed(st);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (hausdorff->parsed()) cfg.command = "hausdorff";
    else if (minkowski->parsed()) cfg.command = "minkowski";
    else if (rsum->parsed()) cfg.command = "riemann-sum";
    else if (conv->parsed()) cfg.command = "converge";
    else if (cc->parsed()) cfg.command = "compare-conv";
    else if (mem->parsed()) cfg.command = "membership";
    else if (cp->parsed()) cfg.command = "convex-probe";
    else if (sp->parsed()) cfg.command = "star-probe";
    else if (example->parsed()) {
        if (exl1->parsed()) cfg.command = "example-l1";
        else if (exempty->parsed()) cfg.command = "example-empty";
        else {
            std::cerr << "example: expected 'l1' or 'empty'\n";
            return 2;
        }
    } else if (inf->parsed()) cfg.command = "infratype";
    else if (emb->parsed()) cfg.command = "embed";
    else if (st->parsed()) cfg.command = "selftest";

    auto res = setlim::cli::run(cfg);
    return write_artifacts(res, out_path, csv_path);
}
