#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "skewcode/capacity.hpp"

using namespace skewcode;

namespace {

BigInt big_binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// the weight-class decomposition, summed independently of the recurrence
BigInt binomial_sum(int w) {
    BigInt s = 0;
    for (int h = 0; h <= w; ++h) s += big_binom(h + (w - h) / 2, h);
    return s;
}

double as_double(const BigFloat& v) { return v.convert_to<double>(); }

}  // namespace

TEST_CASE("fibonacci values") {
    const long expected[] = {1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144};
    for (int w = 0; w <= 10; ++w) CHECK(fibonacci(w) == expected[w]);
    CHECK(fibonacci(30) == 2178309);
    CHECK_THROWS_AS(fibonacci(-1), std::invalid_argument);
}

TEST_CASE("recurrence equals the binomial sum") {
    for (int w = 0; w <= 60; ++w) CHECK(fibonacci(w) == binomial_sum(w));
}

TEST_CASE("capacity per block length") {
    CHECK(as_double(capacity_1w(1)) == 1.0);
    CHECK(as_double(capacity_1w(4)) == 0.75);
    CHECK(as_double(capacity_1w(2)) == doctest::Approx(std::log2(3.0) / 2).epsilon(1e-14));
    CHECK(as_double(capacity_1w(2)) == doctest::Approx(0.79248).epsilon(1e-5));
    CHECK_THROWS_AS(capacity_1w(0), std::invalid_argument);
}

TEST_CASE("constants") {
    CHECK(as_double(golden_ratio()) == doctest::Approx(1.61803398875).epsilon(1e-11));
    CHECK(as_double(log2_golden_ratio()) ==
          doctest::Approx(0.694241913631).epsilon(1e-12));
    CHECK(as_double(binet_alpha()) == doctest::Approx(1.17082039325).epsilon(1e-11));
    // phi^2 = phi + 1
    CHECK(as_double(golden_ratio() * golden_ratio() - golden_ratio() - 1) ==
          doctest::Approx(0.0).epsilon(1e-40));
}

TEST_CASE("closed form tracks the recurrence") {
    CHECK(as_double(binet(0)) == doctest::Approx(1.0).epsilon(1e-30));
    CHECK(as_double(binet(10)) == doctest::Approx(144.0).epsilon(1e-12));
    for (int w = 0; w <= 60; ++w)
        CHECK(as_double(abs(binet(w) - BigFloat(fibonacci(w)))) < 1e-6);
    CHECK_THROWS_AS(binet(-1), std::invalid_argument);
}

TEST_CASE("lower bound certificate") {
    for (int w = 1; w <= 200; ++w) {
        CHECK(fib_dominates_phi_exact(w));
        CHECK(fib_dominates_phi_floating(w));
    }
    CHECK(lower_bound_check(1000));
    CHECK_THROWS_AS(lower_bound_check(1), std::invalid_argument);

    // floating sanity mirror: phi^w never exceeds F_w
    for (int w = 2; w <= 60; ++w)
        CHECK(pow(golden_ratio(), w) <= BigFloat(fibonacci(w)));
}

TEST_CASE("capacity report fields") {
    const CapacityReport rep = capacity_report(4);
    CHECK(rep.w == 4);
    CHECK(rep.fib == 8);
    CHECK(as_double(rep.capacity) == 0.75);
    CHECK(as_double(rep.limit_gap) ==
          doctest::Approx(0.75 - 0.6942419136306174).epsilon(1e-12));
    CHECK(as_double(rep.binet_residual) < 1e-6);

    for (int w = 1; w <= 100; ++w) CHECK(capacity_report(w).limit_gap > 0);
    CHECK_THROWS_AS(capacity_report(0), std::invalid_argument);
}

TEST_CASE("aas sandwich") {
    const AASBounds b = aas_sandwich(100);
    CHECK(b.lower == log2_golden_ratio());
    CHECK(b.resolved == b.lower);
    CHECK(b.upper > b.lower);
    CHECK(b.upper_at_w == 100);
    CHECK(b.w_max == 100);
    CHECK(b.upper == capacity_1w(100));

    const std::string summary = aas_summary(b);
    CHECK(summary.find("log2(phi)") != std::string::npos);
    CHECK(summary.find("exactly") != std::string::npos);
    CHECK(summary.find("0.694241913631") != std::string::npos);

    CHECK_THROWS_AS(aas_sandwich(1), std::invalid_argument);
}

TEST_CASE("twelve significant digits") {
    CHECK(format_real12(0.75) == "0.75");
    CHECK(format_real12(144.0) == "144");
    CHECK(format_real12(BigFloat(log2_golden_ratio())) == "0.694241913631");
    CHECK(format_real12(0.0557580863693826) == "0.0557580863694");
}

TEST_CASE("csv emitter") {
    const std::string csv = capacity_csv(4);
    CHECK(csv.find("w,F_w,C_1w,gap_to_log2phi\n") == 0);
    CHECK(csv.find("\n1,2,1,0.305758086369\n") != std::string::npos);
    CHECK(csv.find("\n4,8,0.75,0.0557580863694\n") != std::string::npos);
    CHECK(csv.find("# AAS sandwich") != std::string::npos);
    CHECK_THROWS_AS(capacity_csv(0), std::invalid_argument);

    // no sandwich line for a single-row table
    CHECK(capacity_csv(1).find("#") == std::string::npos);
}

TEST_CASE("text emitter") {
    const std::string text = capacity_text(3);
    CHECK(text.find("w=1 F_w=2 C_1w=1 ") != std::string::npos);
    CHECK(text.find("w=3 F_w=5 ") != std::string::npos);
    CHECK(text.find("exactly") != std::string::npos);
}

TEST_CASE("json emitter") {
    const nlohmann::json j = nlohmann::json::parse(capacity_json(10));
    REQUIRE(j.at("rows").size() == 10);
    const auto& row = j.at("rows").at(3);
    CHECK(row.at("w") == 4);
    CHECK(row.at("fib") == "8");
    CHECK(row.at("capacity") == 0.75);
    CHECK(j.at("rows").at(9).at("fib") == "144");
    CHECK(j.at("aas").at("lower") == j.at("aas").at("resolved"));
    CHECK(j.at("aas").at("upper_at_w") == 10);
    const std::string conclusion = j.at("aas").at("conclusion");
    CHECK(conclusion.find("exactly") != std::string::npos);
}
