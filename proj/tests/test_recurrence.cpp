#include <doctest.h>

#include <algorithm>
#include <optional>
#include <random>

#include "hofq/recurrence.hpp"
#include "oracle.hpp"

using hofq::Integer;
using hofq::NestedRecurrence;
using hofq::UnderflowPolicy;

namespace {

std::vector<Integer> ints(const std::vector<long>& xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_CASE("NestedRecurrence validation") {
  CHECK_THROWS_AS(NestedRecurrence({}), std::invalid_argument);
  CHECK_THROWS_AS(NestedRecurrence({1, 0}), std::invalid_argument);
  CHECK(NestedRecurrence({3, 1, 2}).max_shift() == 3);
  CHECK(NestedRecurrence::hofstadter_q().shifts() == std::vector<long>{1, 2});
}

TEST_CASE("compute examples") {
  const auto q = NestedRecurrence::hofstadter_q();

  SUBCASE("Golomb") {
    CHECK(hofq::compute(q, ints({3, 2, 1}), 6).terms() == ints({3, 2, 1, 3, 5, 4}));
  }
  SUBCASE("Hofstadter Q") {
    CHECK(hofq::compute(q, ints({1, 1}), 10).terms() == ints({1, 1, 2, 3, 3, 4, 5, 5, 6, 6}));
  }
  SUBCASE("cubic example listing") {
    const std::vector<long> listing = {7, 0,  5, 9, 3,  8, 9, 2,  9, 9,  3, 14, 9, 3,  22, 9, 2, 18,
                                       9, 3, 32, 9, 3, 54, 9, 2, 27, 9, 3, 59, 9, 3, 113, 9, 2};
    REQUIRE(listing.size() == 35);
    const auto buf = hofq::compute(q, ints({7, 0, 5, 9, 3, 8, 9, 2, 9, 9, 3}), 35);
    CHECK(buf.terms() == ints(listing));
  }
  SUBCASE("strict underflow") {
    try {
      hofq::compute(q, ints({5, 5}), 3, UnderflowPolicy::strict);
      FAIL("expected underflow");
    } catch (const hofq::UnderflowError& e) {
      CHECK(e.index() == 3);
      CHECK(e.term() == 0);
      CHECK(e.shift() == 1);
      CHECK(e.lookup() == hofq::Lookup::outer);
      CHECK(e.referenced() == -2);
    }
  }
}

TEST_CASE("compute argument checks") {
  const auto q = NestedRecurrence::hofstadter_q();
  CHECK_THROWS_AS(hofq::compute(q, {}, 5), std::invalid_argument);
  CHECK_THROWS_AS(hofq::compute(q, ints({1, 1}), 0), std::invalid_argument);
  CHECK_THROWS_AS(hofq::compute(q, ints({1}), 2), std::invalid_argument);
  // short init is fine as long as nothing is computed
  CHECK(hofq::compute(q, ints({4}), 1).terms() == ints({4}));
  // n_max below the init length truncates; extend restores the init verbatim
  const auto head = hofq::compute(q, ints({3, 2, 1}), 2);
  CHECK(head.terms() == ints({3, 2}));
  CHECK(hofq::extend(head, 6).terms() == ints({3, 2, 1, 3, 5, 4}));
}

TEST_CASE("forward references are reported, not fabricated") {
  const auto q = NestedRecurrence::hofstadter_q();
  // a(3) = a(3 - a(2)) + ... with a(2) = 0 needs a(3) itself
  CHECK_THROWS_AS(hofq::compute(q, ints({1, 0}), 3), hofq::ForwardReferenceError);
  // a(2) = -1: outer index 3 - (-1) = 4
  try {
    hofq::compute(q, ints({1, -1}), 3, UnderflowPolicy::strict);
    FAIL("expected forward reference");
  } catch (const hofq::ForwardReferenceError& e) {
    CHECK(e.index() == 3);
    CHECK(e.referenced() == 4);
  }
}

TEST_CASE("extend examples") {
  const auto q = NestedRecurrence::hofstadter_q();
  const auto ten = hofq::compute(q, ints({1, 1}), 10);
  CHECK(hofq::extend(ten, 10).terms() == ten.terms());

  const auto golomb = hofq::compute(q, ints({3, 2, 1}), 6);
  const auto nine = hofq::extend(golomb, 9);
  CHECK(nine.at(7) == 3);
  CHECK(nine.at(8) == 8);
  CHECK(nine.at(9) == 7);

  const auto twelve = hofq::extend(ten, 12);
  CHECK(twelve.at(11) == 6);
  CHECK(twelve.at(12) == 8);

  CHECK_THROWS_AS(hofq::extend(ten, 9), std::invalid_argument);
  const hofq::SequenceBuffer closed(ints({1, 2, 3}), hofq::ExplicitProvenance{"test"});
  CHECK_FALSE(closed.extendable());
  CHECK_THROWS_AS(hofq::extend(closed, 5), std::invalid_argument);
}

TEST_CASE("SequenceBuffer is 1-indexed") {
  const hofq::SequenceBuffer buf(ints({4, 5, 6}), hofq::ExplicitProvenance{"t"});
  CHECK(buf[1] == 4);
  CHECK(buf.at(3) == 6);
  CHECK_THROWS_AS(buf.at(0), std::out_of_range);
  CHECK_THROWS_AS(buf.at(4), std::out_of_range);
}

TEST_CASE("property: engine agrees with the recursive oracle") {
  const auto q = NestedRecurrence::hofstadter_q();
  for (const auto& init : std::vector<std::vector<std::int64_t>>{{1, 1}, {3, 2, 1}, {2, 1}, {1, 2, 2}}) {
    const auto expected = oracle::q_sequence(init, 2000);
    const auto buf = hofq::compute(q, ints({init.begin(), init.end()}), 2000);
    for (std::size_t m = 1; m <= 2000; ++m) {
      REQUIRE(buf[m] == static_cast<long>(expected[m - 1]));
    }
  }
}

TEST_CASE("property: determinism, prefix stability, policy agreement, nonnegativity") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> len_dist(1, 5);
  std::uniform_int_distribution<long> shift_dist(1, 4);
  std::uniform_int_distribution<long> value_dist(1, 6);
  int strict_successes = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<long> shifts;
    for (int i = len_dist(rng) % 3 + 1; i > 0; --i) shifts.push_back(shift_dist(rng));
    const NestedRecurrence rec(shifts);
    std::vector<Integer> init;
    const long init_length = rec.max_shift() + len_dist(rng);
    for (long i = 0; i < init_length; ++i) init.emplace_back(value_dist(rng));

    std::optional<hofq::SequenceBuffer> zero;
    try {
      zero = hofq::compute(rec, init, 300);
    } catch (const hofq::ForwardReferenceError&) {
      continue;  // all-positive inits under the zero convention can still reach a 0 term
    }
    CHECK(hofq::compute(rec, init, 300).terms() == zero->terms());
    for (const auto& v : zero->terms()) CHECK(sgn(v) >= 0);

    const auto shorter = hofq::compute(rec, init, 120);
    CHECK(std::equal(shorter.terms().begin(), shorter.terms().end(), zero->terms().begin()));
    CHECK(hofq::extend(shorter, 300).terms() == zero->terms());

    try {
      const auto strict = hofq::compute(rec, init, 300, UnderflowPolicy::strict);
      CHECK(strict.terms() == zero->terms());
      ++strict_successes;
    } catch (const hofq::UnderflowError&) {
    }
  }
  CHECK(strict_successes > 0);
}
