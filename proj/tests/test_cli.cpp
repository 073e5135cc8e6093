#include "setlim/cli.hpp"
#include "setlim/json_io.hpp"

#include <doctest.h>

using namespace setlim;

namespace {

cli::ExperimentConfig base(const std::string& cmd) {
    cli::ExperimentConfig c;
    c.command = cmd;
    c.seed = 5;
    c.seed_set = true;
    return c;
}

Json result_of(const cli::RunResult& r) { return Json::parse(r.json); }

}  // namespace

TEST_CASE("hausdorff command") {
    auto c = base("hausdorff");
    c.set_a = R"({"repr":"cloud","points":[[0,0]]})";
    c.set_b = R"({"repr":"cloud","points":[[3,4]]})";
    auto r = cli::run(c);
    CHECK(r.exit_code == 0);
    CHECK(result_of(r)["result"]["d_h"].get<double>() == doctest::Approx(5.0));
}

TEST_CASE("minkowski command") {
    auto c = base("minkowski");
    c.set_a = R"({"repr":"esum","terms":[{"weight":"1","lo":"0","hi":"1/2"}]})";
    c.set_b = R"({"repr":"esum","terms":[{"weight":"1","lo":"1/2","hi":"1"}]})";
    auto r = cli::run(c);
    CHECK(r.exit_code == 0);
    auto terms = result_of(r)["result"]["sum"]["terms"];
    REQUIRE(terms.size() == 1);  // tiling union normalizes
    CHECK(terms[0]["lo"] == "0");
    CHECK(terms[0]["hi"] == "1");
}

TEST_CASE("converge command emits a trace and csv") {
    auto c = base("converge");
    c.fn = "singleton:linear";
    c.schedule_len = 5;
    c.tolerance = 1e-3;
    auto r = cli::run(c);
    CHECK(r.exit_code == 0);
    auto doc = result_of(r);
    CHECK(doc["result"]["estimate"]["verdict"] == "converged");
    CHECK(r.csv.rfind("diameter,d_h", 0) == 0);
}

TEST_CASE("example commands succeed") {
    auto l1 = base("example-l1");
    auto r1 = cli::run(l1);
    CHECK(r1.exit_code == 0);
    CHECK(result_of(r1)["result"]["ok"] == true);

    auto empty = base("example-empty");
    empty.n_partition = "uniform:4:mid";
    empty.m_partition = "uniform:16:mid";
    auto r2 = cli::run(empty);
    CHECK(r2.exit_code == 0);
    CHECK(result_of(r2)["result"]["ok"] == true);
}

TEST_CASE("config errors exit with 2") {
    auto unknown = base("frobnicate");
    CHECK(cli::run(unknown).exit_code == 2);

    auto bad_json = base("hausdorff");
    bad_json.set_a = "{not json";
    bad_json.set_b = R"({"repr":"cloud","points":[[0,0]]})";
    CHECK(cli::run(bad_json).exit_code == 2);

    auto mismatch = base("hausdorff");
    mismatch.set_a = R"({"repr":"cloud","points":[[0,0]]})";
    mismatch.set_b = R"({"repr":"cloud","points":[[0,0,0]]})";
    CHECK(cli::run(mismatch).exit_code == 2);

    auto unseeded = base("membership");
    unseeded.seed_set = false;
    unseeded.fn = "singleton:ratind";
    unseeded.target = R"({"repr":"cloud","points":[[0,0]]})";
    CHECK(cli::run(unseeded).exit_code == 2);

    auto bad_sched = base("example-empty");
    bad_sched.n_partition = "uniform:4:mid";
    bad_sched.m_partition = "uniform:6:mid";  // violates the diameter precondition
    CHECK(cli::run(bad_sched).exit_code == 2);
}

TEST_CASE("identical config and seed give byte-identical artifacts") {
    auto c = base("riemann-sum");
    c.fn = "step:random:2:2";
    c.partition_spec = "uniform:16:mid";
    auto r1 = cli::run(c);
    auto r2 = cli::run(c);
    CHECK(r1.exit_code == 0);
    CHECK(r1.json == r2.json);
    CHECK(cli::fnv1a(r1.json) == cli::fnv1a(r2.json));

    auto m = base("membership");
    m.fn = "singleton:ratind";
    m.target = R"({"repr":"cloud","points":[[0.5,0.0]]})";
    m.schedule_len = 4;
    auto m1 = cli::run(m);
    auto m2 = cli::run(m);
    CHECK(m1.exit_code == 0);
    CHECK(m1.json == m2.json);
}

TEST_CASE("probe commands run end to end") {
    auto cp = base("convex-probe");
    cp.fn = "singleton:ratind";
    cp.set_a = R"({"repr":"cloud","points":[[1,0]]})";
    cp.set_b = R"({"repr":"cloud","points":[[0,0]]})";
    cp.schedule_len = 4;
    auto r = cli::run(cp);
    CHECK(r.exit_code == 0);
    CHECK(result_of(r)["result"]["reached"] == true);

    auto sp = base("star-probe");
    sp.fn = "singleton:ratind";
    sp.target = R"({"repr":"cloud","points":[[0.5,0.0]]})";
    sp.set_a = R"({"repr":"cloud","points":[[0,0]]})";
    sp.set_b = R"({"repr":"cloud","points":[[1,0]]})";
    sp.schedule_len = 4;
    auto r2 = cli::run(sp);
    CHECK(r2.exit_code == 0);
    CHECK(result_of(r2)["result"]["all_reached"] == true);
}

TEST_CASE("infratype and embed emit csv artifacts") {
    auto inf = base("infratype");
    inf.trials = 20;
    auto r = cli::run(inf);
    CHECK(r.exit_code == 0);
    CHECK(r.csv.rfind("trial,n,ratio", 0) == 0);

    auto emb = base("embed");
    emb.set_a = R"({"repr":"polytope","vertices":[[0,0],[1,0],[0,1]]})";
    emb.directions = 16;
    auto r2 = cli::run(emb);
    CHECK(r2.exit_code == 0);
    CHECK(r2.csv.rfind("angle,value", 0) == 0);
    CHECK(result_of(r2)["result"]["values"].size() == 16);
}

TEST_CASE("set serialization round-trips") {
    auto sets = {
        R"({"repr":"cloud","points":[[0,0],[1,0.5]]})",
        R"({"repr":"polytope","vertices":[[0,0],[1,0],[0,1]]})",
        R"({"repr":"esum","terms":[{"weight":"2","lo":"1/4","hi":"3/4"}]})",
    };
    for (const auto* s : sets) {
        auto parsed = set_from_json(Json::parse(s));
        auto again = set_from_json(set_to_json(parsed));
        CHECK(exact_equal(parsed, again));
    }
    auto sparse = Vector::sparse({{BigInt(1) << 100, 2.0}});
    auto round = vector_from_json(vector_to_json(sparse));
    CHECK(vec_equal(sparse, round));
}
