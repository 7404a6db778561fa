#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "revmult/bigint.hpp"
#include "revmult/digits.hpp"
#include "revmult/verifier.hpp"

namespace revmult {

// Closed-form side of the base-10 classification. Every (10,4)-reverse
// multiple is a palindromic arrangement of "21 9..9 78" blocks separated by
// zero runs, and every (10,9)-reverse multiple the same with "10 9..9 89"
// blocks. A BlockForm carries the run-length parameters; assembling one and
// recognizing a digit string are inverse operations.

/// Parameters of a block-form reverse multiple: block j is a nine-run of
/// length nine_runs[j] wrapped in the four fixed digits, and zero_runs[j]
/// zeros sit between blocks j and j+1. Both parameter lists must read the
/// same forwards and backwards.
struct BlockForm {
  int k = 4;                   // 4 or 9
  std::vector<int> nine_runs;  // one per block, each >= 0, palindromic
  std::vector<int> zero_runs;  // one per gap (size = blocks - 1), palindromic

  std::size_t total_length() const;

  bool operator==(const BlockForm&) const = default;
};

/// The elementary block: 2 1 9..9 7 8 for k = 4, 1 0 9..9 8 9 for k = 9,
/// with nine_run nines in the middle. Length nine_run + 4.
DigitSequence block(int k, int nine_run);

/// Concatenation block(k, l_1), m_1 zeros, block(k, l_2), ... The result is
/// always a (10,k)-reverse multiple. Throws std::invalid_argument when the
/// form violates its invariants (empty, non-palindromic, negative runs,
/// mismatched list sizes).
DigitSequence assemble(const BlockForm& form);

struct RecognitionResult {
  bool matched = false;
  std::optional<BlockForm> form;  // set iff matched

  // Set iff not matched: where the left-to-right parse stopped and what it
  // wanted versus what it saw.
  std::size_t reject_position = 0;
  std::string reject_reason;
};

/// Deterministic left-to-right parse of d against the block grammar for k.
/// On success assemble(*result.form) reproduces d exactly. Parse failures
/// are reported in the result, never thrown; only a non-10 base or a k
/// outside {4,9} throws.
RecognitionResult recognize(const DigitSequence& d, int k);

/// All block-form reverse multiples with at most max_length digits,
/// ascending (shorter first, then lexicographic).
std::vector<EnumerationRecord> generate_up_to(int k, std::size_t max_length);

/// Number of valid BlockForms with exactly `length` total digits, counted
/// combinatorially from the free parameters (the first half of each
/// palindromic list). Matches what enumeration finds.
BigInt count_structural(int k, std::size_t length);

/// Number of base-10 palindromes with `length` digits: 9*10^(ceil(n/2)-1).
/// These are exactly the (10,1)-reverse multiples of that length.
BigInt palindrome_count(std::size_t length);

}  // namespace revmult
