#include <doctest.h>

#include "hofq/harness.hpp"
#include "oracle.hpp"

using hofq::Integer;

TEST_CASE("verify_theorem") {
  const auto cubic = hofq::verify_theorem(3, 35);
  CHECK(cubic.match);
  CHECK_FALSE(cubic.first_mismatch.has_value());
  CHECK(cubic.range_checked == 35);
  CHECK(cubic.first_valid_index <= 12);

  for (long d : {1L, 10L}) {
    const auto report = hofq::verify_theorem(d, 10000);
    CHECK(report.match);
    CHECK(report.first_valid_index <= static_cast<std::size_t>(3 * d + 3));
  }
  CHECK_THROWS_AS(hofq::verify_theorem(3, 11), std::invalid_argument);
}

TEST_CASE("verify_theorem_sweep runs every d") {
  const auto reports = hofq::verify_theorem_sweep(1, 6, 3000);
  REQUIRE(reports.size() == 6);
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CHECK(reports[i].subject == "theorem d=" + std::to_string(i + 1));
    CHECK(reports[i].match);
  }
}

TEST_CASE("verify_golomb") {
  for (std::size_t n : {3u, 6u, 100000u}) {
    const auto report = hofq::verify_golomb(n);
    CHECK(report.match);
    CHECK(report.first_valid_index == 4);
  }
  CHECK_THROWS_AS(hofq::verify_golomb(2), std::invalid_argument);
}

TEST_CASE("mismatches carry index and both values") {
  const auto closed = hofq::closed_form_buffer(2, 60);
  std::vector<Integer> tampered = closed.terms();
  tampered[39] += 1;  // m = 40
  const hofq::SequenceBuffer actual(tampered, hofq::ExplicitProvenance{"tampered"});
  const auto report = hofq::compare_buffers("tampered", closed, actual);
  CHECK_FALSE(report.match);
  REQUIRE(report.first_mismatch.has_value());
  CHECK(report.first_mismatch->index == 40);
  CHECK(report.first_mismatch->expected == closed[40]);
  CHECK(report.first_mismatch->actual == closed[40] + 1);

  const auto q = hofq::NestedRecurrence::hofstadter_q();
  CHECK(hofq::first_valid_index(q, closed.terms()) <= 9);
  CHECK(hofq::first_valid_index(q, tampered) > 40);
}

TEST_CASE("weighted theorem verification") {
  const hofq::WeightSequence heavy(std::vector<Integer>{6, 20});
  CHECK(hofq::verify_theorem(3, 3000, heavy).match);
}

TEST_CASE("recurrence_holds_at") {
  const auto q = hofq::NestedRecurrence::hofstadter_q();
  const std::vector<Integer> golomb = {3, 2, 1, 3, 5, 4};
  CHECK_FALSE(hofq::recurrence_holds_at(q, golomb, 3));
  CHECK(hofq::recurrence_holds_at(q, golomb, 4));
  CHECK(hofq::recurrence_holds_at(q, golomb, 6));
  // a zero inner value would need a(m) itself
  CHECK_FALSE(hofq::recurrence_holds_at(q, std::vector<Integer>{1, 0, 1}, 3));
  CHECK_THROWS_AS(hofq::recurrence_holds_at(q, golomb, 7), std::out_of_range);
}

TEST_CASE("q_wellposed_scan") {
  CHECK_FALSE(hofq::q_wellposed_scan({1, 1}, 100000).has_value());
  CHECK(hofq::q_wellposed_scan({1, 4}, 10) == std::optional<std::size_t>(3));
  CHECK_FALSE(hofq::q_wellposed_scan({3, 2, 1}, 1000).has_value());
  CHECK_THROWS_AS(hofq::q_wellposed_scan({1}, 10), std::invalid_argument);

  // cross-check against the oracle sequence directly
  const auto q = oracle::q_sequence({1, 1}, 5000);
  for (std::size_t n = 1; n <= q.size(); ++n) {
    REQUIRE(q[n - 1] <= static_cast<std::int64_t>(n));
  }
}
