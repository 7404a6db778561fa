#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace revmult {

using Digit = std::uint8_t;

inline constexpr int kMinBase = 2;
inline constexpr int kMaxBase = 36;  // rendering alphabet is 0-9 then a-z

/// Canonical base-g expansion of a positive integer, most significant digit
/// first. Always non-empty, every digit below the base, leading digit
/// non-zero. Immutable value type; safe to share across threads.
class DigitSequence {
 public:
  /// Throws std::invalid_argument when any invariant is violated.
  DigitSequence(int base, std::vector<Digit> digits);

  int base() const { return base_; }
  const std::vector<Digit>& digits() const { return digits_; }
  std::size_t size() const { return digits_.size(); }
  Digit most_significant() const { return digits_.front(); }
  Digit least_significant() const { return digits_.back(); }

  bool operator==(const DigitSequence&) const = default;

 private:
  int base_;
  std::vector<Digit> digits_;
};

/// Character for a single digit value: '0'..'9' then 'a'..'z'.
char digit_char(Digit value);

DigitSequence parse(std::string_view text, int base = 10);

std::string to_string(const DigitSequence& d);

/// Digits of d in reverse order. This is a raw sequence, not a DigitSequence:
/// it starts with zero exactly when d ends with zero, and then it is not the
/// canonical expansion of any integer. Callers must check the first element
/// before treating the result as an expansion.
std::vector<Digit> reverse_digits(const DigitSequence& d);

/// Canonical expansion of k times the value of d, for 1 <= k < base.
/// Schoolbook multiplication: per position j from the least significant end,
/// k*digit_j + carry_j = out_j + base*carry_{j+1} with carry_0 = 0; every
/// carry stays in [0, k-1]. The result has size() or size()+1 digits.
/// When carries_out is non-null it receives carry_0 .. carry_{size()}.
DigitSequence scalar_multiply(const DigitSequence& d, int k,
                              std::vector<int>* carries_out = nullptr);

bool is_palindrome(const DigitSequence& d);

/// Numeric order: fewer digits first, equal lengths lexicographically.
/// Throws std::invalid_argument on mismatched bases.
std::strong_ordering compare(const DigitSequence& a, const DigitSequence& b);

}  // namespace revmult
