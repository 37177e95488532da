#include <doctest.h>

#include "normcomp/json_io.hpp"
#include "normcomp/random.hpp"

using namespace normcomp;

TEST_SUITE_BEGIN("json-io");

TEST_CASE("matrix interchange round-trips exactly") {
    const PsdMatrix a = random_psd({3, 3, 1.0, 91});
    const std::string text = to_json(a.matrix());
    const ComplexMatrix back = matrix_from_json(text);
    CHECK(back.data() == a.matrix().data());  // 17 significant digits round-trip

    // serialization is deterministic
    CHECK(text == to_json(a.matrix()));
}

TEST_CASE("matrix json accepts a missing imaginary part") {
    const ComplexMatrix m = matrix_from_json(R"({"dim":2,"re":[[1,2],[2,4]]})");
    CHECK(m(0, 1).real() == 2.0);
    CHECK(m(0, 1).imag() == 0.0);
}

TEST_CASE("matrix json diagnostics") {
    CHECK_THROWS_AS(matrix_from_json("not json"), IoError);
    CHECK_THROWS_AS(matrix_from_json(R"({"re":[[1]]})"), IoError);
    CHECK_THROWS_AS(matrix_from_json(R"({"dim":2,"re":[[1,2]]})"), IoError);
    CHECK_THROWS_AS(matrix_from_json(R"({"dim":1,"re":[["x"]]})"), IoError);
}

TEST_CASE("block matrix json with embedded and overlaid partitions") {
    const BlockMatrix a = random_block_psd(PartitionSpec({2, 1}), 92);
    const std::string text = to_json(a);
    const BlockMatrix back = block_matrix_from_json(text);
    CHECK(back.partition().sizes() == std::vector<std::size_t>{2, 1});
    CHECK(back.matrix().matrix().data() == a.matrix().matrix().data());

    // plain matrix plus overlay
    const std::string plain = to_json(a.matrix().matrix());
    const BlockMatrix overlaid = block_matrix_from_json(plain, {1, 2});
    CHECK(overlaid.partition().sizes() == std::vector<std::size_t>{1, 2});
    CHECK_THROWS_AS(block_matrix_from_json(plain), IoError);
}

TEST_CASE("report and trace serialization carry the schema fields") {
    const BlockMatrix a = random_block_psd(PartitionSpec({2, 2}), 93);
    InequalityReport r = check_theorem1(a, 1.5);
    r.seed = 93;
    const std::string text = to_json(r);
    for (const char* key :
         {"\"name\"", "\"q\"", "\"lhs\"", "\"rhs\"", "\"slack\"", "\"satisfied\"",
          "\"tolerance\"", "\"seed\""})
        CHECK(text.find(key) != std::string::npos);

    IterationTrace t;
    t.converged = true;
    t.steps = 2;
    t.distances = {0.5, 0.25, 0.0};
    t.ratios = {0.5, 0.0};
    t.beta_certified = 0.6;
    const std::string trace_text = to_json(t);
    CHECK(trace_text ==
          R"({"converged":true,"steps":2,"distances":[0.5,0.25,0],"ratios":[0.5,0],)"
          R"("beta_certified":0.59999999999999998})");
}

TEST_CASE("harness config parsing and diagnostics") {
    const HarnessConfig config = harness_config_from_json(
        R"({"inequalities":["king"],"dims":[2],"q_grid":[1.5],"trials":3,"base_seed":7})");
    CHECK(config.inequalities == std::vector<std::string>{"king"});
    CHECK(config.trials == 3);

    CHECK_THROWS_WITH_AS(harness_config_from_json(R"({"inequalities":["nope"]})"),
                         doctest::Contains("nope"), ValidationError);
    CHECK_THROWS_WITH_AS(harness_config_from_json(R"({"wrong_field":1})"),
                         doctest::Contains("wrong_field"), IoError);
    CHECK_THROWS_AS(harness_config_from_json("{"), IoError);
}

TEST_CASE("harness summary serialization is runtime-free by default") {
    HarnessConfig config;
    config.inequalities = {"pinching"};
    config.dims = {2};
    config.q_grid = {1.5};
    config.trials = 2;
    const HarnessSummary s = run_harness(config);
    const std::string stable = to_json(s);
    CHECK(stable.find("runtime_ms") == std::string::npos);
    const std::string with_runtime = to_json(s, true);
    CHECK(with_runtime.find("runtime_ms") != std::string::npos);
    for (const char* key : {"\"inequality\"", "\"dim\"", "\"partition\"", "\"q\"",
                            "\"trials\"", "\"failures\"", "\"worst_slack\"", "\"worst_seed\""})
        CHECK(stable.find(key) != std::string::npos);
}

TEST_SUITE_END();
