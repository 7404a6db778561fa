#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "revmult/verifier.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace revmult;

namespace {

std::vector<std::string> values_of(const std::vector<EnumerationRecord>& rs) {
  std::vector<std::string> v;
  v.reserve(rs.size());
  for (const EnumerationRecord& r : rs) v.push_back(to_string(r.value));
  return v;
}

}  // namespace

TEST_CASE("the defining predicate on the worked examples") {
  CHECK(is_reverse_multiple(parse("2178"), 4));
  CHECK(is_reverse_multiple(parse("1089"), 9));
  CHECK_FALSE(is_reverse_multiple(parse("1234"), 4));
  CHECK(is_reverse_multiple(parse("5"), 1));
  // Trailing zero: the reversal is not a canonical expansion.
  CHECK_FALSE(is_reverse_multiple(parse("120"), 1));
  CHECK_THROWS_AS(is_reverse_multiple(parse("2178"), 0), std::invalid_argument);
  CHECK_THROWS_AS(is_reverse_multiple(parse("2178"), 10), std::invalid_argument);
}

TEST_CASE("classify") {
  CHECK(classify(parse("1089")) == std::vector<int>{9});
  CHECK(classify(parse("2178")) == std::vector<int>{4});
  CHECK(classify(parse("33")) == std::vector<int>{1});
  CHECK(classify(parse("13")).empty());
}

TEST_CASE("classify contains 1 exactly for palindromes") {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<int> base_dist(kMinBase, 16);
  std::uniform_int_distribution<std::size_t> len_dist(1, 9);
  for (int iter = 0; iter < 300; ++iter) {
    const int base = base_dist(rng);
    const std::size_t len = len_dist(rng);
    std::vector<Digit> ds(len);
    std::uniform_int_distribution<int> digit_dist(0, base - 1);
    ds[0] = static_cast<Digit>(1 + digit_dist(rng) % (base - 1));
    for (std::size_t i = 1; i < len; ++i) {
      ds[i] = static_cast<Digit>(digit_dist(rng));
    }
    const DigitSequence d(base, std::move(ds));
    const std::vector<int> ks = classify(d);
    const bool has_one = std::find(ks.begin(), ks.end(), 1) != ks.end();
    CHECK(has_one == is_palindrome(d));
  }
}

TEST_CASE("four-digit scans find exactly the two classics") {
  CHECK(values_of(brute_force_enumerate(10, 4, 4)) ==
        std::vector<std::string>{"2178"});
  CHECK(values_of(brute_force_enumerate(10, 9, 4)) ==
        std::vector<std::string>{"1089"});
  for (int k = 2; k <= 9; ++k) {
    const std::size_t expected = (k == 4 || k == 9) ? 1 : 0;
    CHECK(brute_force_enumerate(10, k, 4).size() == expected);
  }
}

TEST_CASE("scan output is ascending, well-formed and verified") {
  for (int k : {1, 4, 9}) {
    const auto records = brute_force_enumerate(10, k, 5);
    CHECK(!records.empty());
    for (std::size_t i = 0; i < records.size(); ++i) {
      const EnumerationRecord& r = records[i];
      CHECK(r.k == k);
      CHECK(r.base == 10);
      CHECK(r.length == 5);
      CHECK(r.length == r.value.size());
      CHECK(r.source == Source::oracle);
      CHECK(is_reverse_multiple(r.value, k));
      if (i > 0) {
        CHECK(compare(records[i - 1].value, r.value) == std::strong_ordering::less);
      }
    }
  }
}

TEST_CASE("infeasible multipliers scan to nothing") {
  CHECK(brute_force_enumerate(10, 5, 6).empty());
  for (int k : {2, 3, 5, 6, 7, 8}) {
    for (std::size_t n = 1; n <= 5; ++n) {
      CHECK(brute_force_enumerate(10, k, n).empty());
    }
  }
}

TEST_CASE("parallel scan equals the serial reference") {
  for (int base : {8, 10, 11}) {
    for (int k = 1; k < base; ++k) {
      for (std::size_t n = 1; n <= 4; ++n) {
        CHECK(values_of(brute_force_enumerate(base, k, n)) ==
              values_of(brute_force_enumerate_serial(base, k, n)));
      }
    }
  }
}

#ifdef _OPENMP
TEST_CASE("scan output does not depend on the worker count") {
  const int saved = omp_get_max_threads();
  const auto reference = brute_force_enumerate_serial(10, 4, 6);
  for (int threads : {1, 2, 7}) {
    omp_set_num_threads(threads);
    CHECK(values_of(brute_force_enumerate(10, 4, 6)) == values_of(reference));
  }
  omp_set_num_threads(saved);
}
#endif

TEST_CASE("budget overflow is an error, never a truncation") {
  CHECK_THROWS_AS(brute_force_enumerate(10, 4, 10), BudgetExceeded);
  CHECK_THROWS_AS(brute_force_enumerate(10, 4, 5, 99), BudgetExceeded);
  CHECK_NOTHROW(brute_force_enumerate(10, 4, 5, 100'000));
  CHECK_THROWS_AS(brute_force_enumerate(10, 4, 0), std::invalid_argument);
}
