#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "gpade/error.hpp"
#include "gpade/report.hpp"

using namespace gpade;

namespace {

std::string write_temp(const std::string& body)
{
    const auto path = std::filesystem::temp_directory_path() / "gpade_test_config.json";
    std::ofstream(path) << body;
    return path.string();
}

} // namespace

TEST_CASE("report records")
{
    Report r;
    r.command({"constants", "--system", "polylog2"});
    r.config(RunConfig{});
    r.value("c2", Integer(12));
    r.value("y", Rational(1, 12));
    r.value("x", IntervalReal(Rational(1, 3), Rational(1, 2)));
    r.check("hypothesis3", Status::hypothesis_unmet, {{"b", "10"}});
    r.note("done");
    CHECK_FALSE(r.any_violated());
    const std::string expected = "command constants --system polylog2\n"
                                 "config precision_digits=128 max_precision_digits=2048 h0=1 h1=1 h2=1 "
                                 "h_status=unverified source=defaults\n"
                                 "value c2 = 12\n"
                                 "value y = 1/12\n"
                                 "value x = " +
                                 IntervalReal(Rational(1, 3), Rational(1, 2)).to_exact_string() +
                                 "\n"
                                 "check hypothesis3 hypothesis-unmet b=10\n"
                                 "note done\n";
    CHECK(r.text() == expected);
    r.check("order", Status::violated);
    CHECK(r.any_violated());
}

TEST_CASE("status mapping")
{
    CHECK(status_of(Tri::yes) == Status::certified);
    CHECK(status_of(Tri::no) == Status::violated);
    CHECK(status_of(Tri::no, Status::hypothesis_unmet) == Status::hypothesis_unmet);
    CHECK(status_of(Tri::unknown) == Status::indeterminate);
    CHECK(status_of(false) == Status::violated);
    CHECK(to_string(Tri::unknown) == "unknown");
}

TEST_CASE("run configuration files")
{
    const RunConfig cfg = load_run_config(write_temp(R"({"precision": 64, "max_precision": 512, "h0": "7/2", "h2": 5})"));
    CHECK(cfg.precision_digits == 64);
    CHECK(cfg.max_precision_digits == 512);
    CHECK(cfg.effective.h0 == Rational(7, 2));
    CHECK(cfg.effective.h1 == 1);
    CHECK(cfg.effective.h2 == 5);

    CHECK_THROWS_AS(load_run_config(write_temp(R"({"precision": 64, "colour": 1})")), PreconditionError);
    CHECK_THROWS_AS(load_run_config(write_temp(R"({"precision": 600, "max_precision": 512})")), PreconditionError);
    CHECK_THROWS_AS(load_run_config(write_temp(R"({"precision": 0})")), PreconditionError);
    CHECK_THROWS_AS(load_run_config(write_temp("[1, 2]")), PreconditionError);
    CHECK_THROWS_AS(load_run_config("/nonexistent/gpade.json"), PreconditionError);
}
