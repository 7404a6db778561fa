#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "revmult/digits.hpp"

namespace revmult {

// A positive integer M is a (g,k)-reverse multiple when the reversal of its
// base-g expansion is the canonical base-g expansion of k*M. This module
// holds the defining predicate plus the transparent brute-force scan that
// serves as ground truth for the faster enumerators.

enum class Source { oracle, automaton, structural };

struct EnumerationRecord {
  DigitSequence value;
  int k;
  int base;
  std::size_t length;  // digit count of value
  Source source;
};

/// True iff reverse_digits(d) is a canonical expansion and equals
/// scalar_multiply(d, k) digit for digit. False whenever d ends in zero.
/// Throws std::invalid_argument unless 1 <= k < base.
bool is_reverse_multiple(const DigitSequence& d, int k);

/// Every multiplier k in [1, base) for which d is a (base,k)-reverse
/// multiple, ascending. Contains 1 exactly when d is a palindrome.
std::vector<int> classify(const DigitSequence& d);

inline constexpr std::uint64_t kDefaultScanBudget = 1'000'000'000;

/// The scan would visit more than `budget` candidates. Callers should switch
/// to the carry-pair automaton enumerator, which is length-insensitive.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// All (base,k)-reverse multiples with exactly `length` digits, ascending.
/// Literal scan of every canonical length-digit sequence; candidates fail
/// fast on the a_n = k*a_0 (mod base) congruence between the first and last
/// digit. Refuses to start when base^length exceeds the budget.
///
/// This entry point partitions the two leading digits across OpenMP workers;
/// output is identical to the serial reference for any worker count.
std::vector<EnumerationRecord> brute_force_enumerate(
    int base, int k, std::size_t length,
    std::uint64_t budget = kDefaultScanBudget);

/// Single-threaded reference implementation of the same scan, kept as the
/// comparison baseline for tests and benchmarks.
std::vector<EnumerationRecord> brute_force_enumerate_serial(
    int base, int k, std::size_t length,
    std::uint64_t budget = kDefaultScanBudget);

}  // namespace revmult
