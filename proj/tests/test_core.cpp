#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "pulseaug/rng.hpp"
#include "pulseaug/validate.hpp"
#include "test_util.hpp"

using namespace pulseaug;

namespace {

std::vector<std::uint64_t> draw_words(SeededRng rng, int n) {
    std::vector<std::uint64_t> out(static_cast<std::size_t>(n));
    for (auto& w : out) w = rng.next_u64();
    return out;
}

bool has_code(const std::vector<Violation>& violations, const char* code) {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.code == code; });
}

}  // namespace

TEST_CASE("identical stream addresses replay identical draws") {
    const auto a = draw_words(SeededRng(42, "augment", 3, 7), 1024);
    const auto b = draw_words(SeededRng(42, "augment", 3, 7), 1024);
    CHECK(a == b);
}

TEST_CASE("streams differing in any address component diverge") {
    const auto base = draw_words(SeededRng(42, "augment", 3, 7), 1024);
    CHECK(base != draw_words(SeededRng(42, "augment", 3, 8), 1024));
    CHECK(base != draw_words(SeededRng(42, "augment", 4, 7), 1024));
    CHECK(base != draw_words(SeededRng(42, "synth", 3, 7), 1024));
    CHECK(base != draw_words(SeededRng(43, "augment", 3, 7), 1024));
}

TEST_CASE("uniform draws have the right first moment") {
    SeededRng rng(7, "moments", 0, 0);
    double sum = 0.0;
    const int n = 1'000'000;
    for (int i = 0; i < n; ++i) sum += rng.uniform();
    const double mean = sum / n;
    CHECK(std::abs(mean - 0.5) < 0.002);
}

TEST_CASE("uniform range and normal draws behave sanely") {
    SeededRng rng(9, "moments", 0, 1);
    double sum = 0.0, sq = 0.0;
    const int n = 200'000;
    for (int i = 0; i < n; ++i) {
        const double v = rng.normal(2.0, 3.0);
        sum += v;
        sq += v * v;
    }
    const double mean = sum / n;
    const double var = sq / n - mean * mean;
    CHECK(std::abs(mean - 2.0) < 0.05);
    CHECK(std::abs(var - 9.0) < 0.2);

    for (int i = 0; i < 1000; ++i) {
        const double u = rng.uniform(0.75, 1.25);
        CHECK(u >= 0.75);
        CHECK(u < 1.25);
    }
}

TEST_CASE("child streams are keyed by the stream address, not draw position") {
    SeededRng parent_a(1, "children", 0, 0);
    SeededRng parent_b(1, "children", 0, 0);
    (void)parent_b.uniform();  // advance one parent; children must not care
    (void)parent_b.uniform();
    CHECK(draw_words(parent_a.child(5), 64) == draw_words(parent_b.child(5), 64));
    CHECK(draw_words(parent_a.child(5), 64) != draw_words(parent_a.child(6), 64));
}

TEST_CASE("well-formed sample validates clean") {
    auto sample = testutil::paired_sample(180, 16, 30.0, 11);
    sample.reference_hr = 90.0;
    CHECK(validate_sample(sample).empty());
    CHECK(sample_valid(sample));
}

TEST_CASE("trace length mismatch is reported as length-mismatch") {
    auto sample = testutil::paired_sample(180, 16, 30.0, 12);
    sample.trace.values.resize(179);
    const auto violations = validate_sample(sample);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].code == "length-mismatch");
}

TEST_CASE("NaN pixel is reported as non-finite-pixel") {
    auto sample = testutil::paired_sample(180, 16, 30.0, 13);
    sample.clip.at(4, 2, 3, 1) = std::numeric_limits<float>::quiet_NaN();
    const auto violations = validate_sample(sample);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].code == "non-finite-pixel");
}

TEST_CASE("remaining invariants each carry a distinct code") {
    auto sample = testutil::paired_sample(180, 16, 30.0, 14);

    SUBCASE("pixel out of range") {
        sample.clip.at(0, 0, 0, 0) = 1.5f;
        CHECK(has_code(validate_sample(sample), "pixel-out-of-range"));
    }
    SUBCASE("bad channel count") {
        sample.clip = testutil::random_clip(180, 16, 16, 2, 30.0, 14);
        CHECK(has_code(validate_sample(sample), "bad-channels"));
    }
    SUBCASE("single frame clip") {
        sample.clip = testutil::random_clip(1, 16, 16, 3, 30.0, 14);
        sample.trace.values.resize(1);
        CHECK(has_code(validate_sample(sample), "too-few-frames"));
    }
    SUBCASE("non-positive fps") {
        sample.clip.fps = 0.0;
        sample.trace.fps = 0.0;
        CHECK(has_code(validate_sample(sample), "non-positive-fps"));
    }
    SUBCASE("trace fps disagrees with clip fps") {
        sample.trace.fps = 25.0;
        CHECK(has_code(validate_sample(sample), "fps-mismatch"));
    }
    SUBCASE("non-finite trace value") {
        sample.trace.values[10] = std::numeric_limits<double>::infinity();
        CHECK(has_code(validate_sample(sample), "non-finite-signal"));
    }
    SUBCASE("reference hr outside the passband") {
        sample.reference_hr = 200.0;
        CHECK(has_code(validate_sample(sample), "reference-hr-out-of-range"));
    }
}
