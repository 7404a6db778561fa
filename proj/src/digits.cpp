#include "revmult/digits.hpp"

#include <stdexcept>
#include <utility>

namespace revmult {

namespace {

int digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  return -1;
}

}  // namespace

DigitSequence::DigitSequence(int base, std::vector<Digit> digits)
    : base_(base), digits_(std::move(digits)) {
  if (base_ < kMinBase || base_ > kMaxBase) {
    throw std::invalid_argument("base must be in [" + std::to_string(kMinBase) +
                                ", " + std::to_string(kMaxBase) + "]");
  }
  if (digits_.empty()) {
    throw std::invalid_argument("a digit sequence needs at least one digit");
  }
  if (digits_.front() == 0) {
    throw std::invalid_argument(
        "leading zero: not the canonical expansion of a positive integer");
  }
  for (Digit d : digits_) {
    if (d >= base_) {
      throw std::invalid_argument("digit " + std::to_string(d) +
                                  " out of range for base " +
                                  std::to_string(base_));
    }
  }
}

char digit_char(Digit value) {
  return value < 10 ? static_cast<char>('0' + value)
                    : static_cast<char>('a' + (value - 10));
}

DigitSequence parse(std::string_view text, int base) {
  if (base < kMinBase || base > kMaxBase) {
    throw std::invalid_argument("base must be in [" + std::to_string(kMinBase) +
                                ", " + std::to_string(kMaxBase) + "]");
  }
  if (text.empty()) {
    throw std::invalid_argument("empty digit string");
  }
  std::vector<Digit> digits;
  digits.reserve(text.size());
  for (char c : text) {
    const int v = digit_value(c);
    if (v < 0 || v >= base) {
      throw std::invalid_argument(std::string("character '") + c +
                                  "' is not a base-" + std::to_string(base) +
                                  " digit");
    }
    digits.push_back(static_cast<Digit>(v));
  }
  return DigitSequence(base, std::move(digits));
}

std::string to_string(const DigitSequence& d) {
  std::string s;
  s.reserve(d.size());
  for (Digit v : d.digits()) s.push_back(digit_char(v));
  return s;
}

std::vector<Digit> reverse_digits(const DigitSequence& d) {
  return {d.digits().rbegin(), d.digits().rend()};
}

DigitSequence scalar_multiply(const DigitSequence& d, int k,
                              std::vector<int>* carries_out) {
  const int g = d.base();
  if (k < 1 || k >= g) {
    throw std::invalid_argument("multiplier must satisfy 1 <= k < base");
  }
  const std::vector<Digit>& in = d.digits();
  std::vector<Digit> out(in.size());
  if (carries_out) {
    carries_out->clear();
    carries_out->push_back(0);
  }
  int carry = 0;
  for (std::size_t i = in.size(); i-- > 0;) {
    const int t = k * in[i] + carry;
    out[i] = static_cast<Digit>(t % g);
    carry = t / g;  // at most k-1 since t <= k*(g-1) + (k-1)
    if (carries_out) carries_out->push_back(carry);
  }
  if (carry != 0) {
    out.insert(out.begin(), static_cast<Digit>(carry));
  }
  return DigitSequence(g, std::move(out));
}

bool is_palindrome(const DigitSequence& d) {
  const std::vector<Digit>& v = d.digits();
  for (std::size_t i = 0, j = v.size() - 1; i < j; ++i, --j) {
    if (v[i] != v[j]) return false;
  }
  return true;
}

std::strong_ordering compare(const DigitSequence& a, const DigitSequence& b) {
  if (a.base() != b.base()) {
    throw std::invalid_argument("cannot compare expansions in different bases");
  }
  if (a.size() != b.size()) return a.size() <=> b.size();
  return a.digits() <=> b.digits();
}

}  // namespace revmult
