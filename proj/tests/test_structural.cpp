#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "revmult/structural.hpp"
#include "revmult/verifier.hpp"
#include "revmult/younggraph.hpp"

using namespace revmult;

namespace {

std::vector<std::string> values_of(const std::vector<EnumerationRecord>& rs) {
  std::vector<std::string> v;
  v.reserve(rs.size());
  for (const EnumerationRecord& r : rs) v.push_back(to_string(r.value));
  return v;
}

// Valid random form with total length at most max_length: pick a block
// count, then spend the remaining digit budget on the free parameters.
BlockForm random_form(std::mt19937_64& rng, int k, std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> blocks_dist(1, max_length / 4);
  const std::size_t blocks = blocks_dist(rng);
  int slack = static_cast<int>(max_length - 4 * blocks);

  const std::size_t free_l = (blocks + 1) / 2;
  const std::size_t free_m = blocks / 2;
  std::vector<int> nine_half(free_l, 0);
  std::vector<int> zero_half(free_m, 0);
  for (std::size_t i = 0; i < free_l; ++i) {
    const int weight = (blocks % 2 == 1 && i == free_l - 1) ? 1 : 2;
    std::uniform_int_distribution<int> dist(0, slack / weight);
    nine_half[i] = dist(rng);
    slack -= nine_half[i] * weight;
  }
  for (std::size_t i = 0; i < free_m; ++i) {
    const int weight = (blocks % 2 == 0 && i == free_m - 1) ? 1 : 2;
    std::uniform_int_distribution<int> dist(0, slack / weight);
    zero_half[i] = dist(rng);
    slack -= zero_half[i] * weight;
  }

  BlockForm form;
  form.k = k;
  form.nine_runs.resize(blocks);
  for (std::size_t i = 0; i < blocks; ++i) {
    form.nine_runs[i] = nine_half[std::min(i, blocks - 1 - i)];
  }
  form.zero_runs.resize(blocks - 1);
  for (std::size_t i = 0; i + 1 < blocks; ++i) {
    form.zero_runs[i] = zero_half[std::min(i, blocks - 2 - i)];
  }
  return form;
}

}  // namespace

TEST_CASE("elementary blocks") {
  CHECK(to_string(block(4, 0)) == "2178");
  CHECK(to_string(block(4, 1)) == "21978");
  CHECK(to_string(block(9, 0)) == "1089");
  CHECK(to_string(block(9, 3)) == "1099989");
  CHECK_THROWS_AS(block(5, 0), std::invalid_argument);
  CHECK_THROWS_AS(block(4, -1), std::invalid_argument);
}

TEST_CASE("assemble concatenates blocks and zero runs") {
  CHECK(to_string(assemble({4, {0, 0}, {0}})) == "21782178");
  CHECK(to_string(assemble({4, {0, 1, 1, 0}, {0, 2, 0}})) ==
        "21782197800219782178");
  CHECK(to_string(assemble({9, {0, 3, 0}, {1, 1}})) == "10890109998901089");
}

TEST_CASE("assemble rejects invalid forms") {
  CHECK_THROWS_AS(assemble({4, {}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(assemble({4, {0, 1}, {0}}), std::invalid_argument);  // l not palindromic
  CHECK_THROWS_AS(assemble({4, {0, 0}, {}}), std::invalid_argument);   // missing gap
  CHECK_THROWS_AS(assemble({4, {1, 0, 1}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(assemble({4, {-1}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(assemble({2, {0}, {}}), std::invalid_argument);
}

TEST_CASE("recognize extracts block parameters") {
  const RecognitionResult one = recognize(parse("219978"), 4);
  REQUIRE(one.matched);
  CHECK(one.form->nine_runs == std::vector<int>{2});
  CHECK(one.form->zero_runs.empty());

  const RecognitionResult two = recognize(parse("10890109998901089"), 9);
  REQUIRE(two.matched);
  CHECK(two.form->nine_runs == std::vector<int>{0, 3, 0});
  CHECK(two.form->zero_runs == std::vector<int>{1, 1});
  CHECK(assemble(*two.form) == parse("10890109998901089"));
}

TEST_CASE("recognize reports where a parse fails") {
  const RecognitionResult bad = recognize(parse("2179"), 4);
  CHECK_FALSE(bad.matched);
  CHECK(bad.reject_position == 3);
  CHECK(bad.reject_reason.find("expected") != std::string::npos);
  CHECK(bad.reject_reason.find("'8'") != std::string::npos);

  CHECK_FALSE(recognize(parse("2178"), 9).matched);
  CHECK_FALSE(recognize(parse("21780"), 4).matched);      // trailing zeros
  CHECK_FALSE(recognize(parse("217821978"), 4).matched);  // l = [0,1] not palindromic

  CHECK_THROWS_AS(recognize(parse("11", 8), 4), std::invalid_argument);
  CHECK_THROWS_AS(recognize(parse("2178"), 3), std::invalid_argument);
}

TEST_CASE("generation in ascending order") {
  CHECK(values_of(generate_up_to(4, 7)) ==
        std::vector<std::string>{"2178", "21978", "219978", "2199978"});
  CHECK(values_of(generate_up_to(4, 9)) ==
        std::vector<std::string>{"2178", "21978", "219978", "2199978",
                                 "21782178", "21999978", "217802178",
                                 "219999978"});
  CHECK(values_of(generate_up_to(9, 4)) == std::vector<std::string>{"1089"});
}

TEST_CASE("structural counts") {
  CHECK(count_structural(4, 8) == 2);
  CHECK(count_structural(4, 4) == 1);
  CHECK(count_structural(4, 3) == 0);
  CHECK(count_structural(9, 17) == count_structural(4, 17));
}

TEST_CASE("palindrome counts") {
  CHECK(palindrome_count(1) == 9);
  CHECK(palindrome_count(2) == 9);
  CHECK(palindrome_count(3) == 90);
  // Independent check by filtering a full scan.
  std::size_t found = 0;
  for (const EnumerationRecord& r : brute_force_enumerate(10, 1, 3)) {
    CHECK(is_palindrome(r.value));
    ++found;
  }
  CHECK(palindrome_count(3) == found);
}

TEST_CASE("assembled forms always verify and round-trip") {
  std::mt19937_64 rng(777);
  for (int k : {4, 9}) {
    for (int iter = 0; iter < 300; ++iter) {
      const BlockForm form = random_form(rng, k, 60);
      const DigitSequence value = assemble(form);
      CHECK(value.size() == form.total_length());
      CHECK(value.size() <= 60);
      CHECK(is_reverse_multiple(value, k));
      const RecognitionResult rec = recognize(value, k);
      REQUIRE(rec.matched);
      CHECK(*rec.form == form);
    }
  }
}

TEST_CASE("structural generation equals the automaton") {
  for (int k : {4, 9}) {
    const CarryPairAutomaton a = build_automaton(10, k);
    const auto generated = generate_up_to(k, 25);
    const auto counts = count_by_length(a, 25);
    for (std::size_t n = 1; n <= 25; ++n) {
      std::vector<std::string> at_length;
      for (const EnumerationRecord& r : generated) {
        if (r.length == n) at_length.push_back(to_string(r.value));
      }
      CHECK(at_length == values_of(enumerate_length(a, n)));
      CHECK(count_structural(k, n) == counts.at(n));
    }
  }
}

TEST_CASE("every automaton record parses back to its block form") {
  for (int k : {4, 9}) {
    const CarryPairAutomaton a = build_automaton(10, k);
    for (std::size_t n = 1; n <= 25; ++n) {
      for (const EnumerationRecord& r : enumerate_length(a, n)) {
        const RecognitionResult rec = recognize(r.value, k);
        REQUIRE(rec.matched);
        CHECK(assemble(*rec.form) == r.value);
      }
    }
  }
}

TEST_CASE("oracle records parse against the block grammar") {
  for (int k : {4, 9}) {
    for (std::size_t n = 4; n <= 6; ++n) {
      for (const EnumerationRecord& r : brute_force_enumerate(10, k, n)) {
        const RecognitionResult rec = recognize(r.value, k);
        REQUIRE(rec.matched);
        CHECK(assemble(*rec.form) == r.value);
      }
    }
  }
}
