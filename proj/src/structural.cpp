#include "revmult/structural.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace revmult {

namespace {

void check_block_multiplier(int k) {
  if (k != 4 && k != 9) {
    throw std::invalid_argument("block forms exist for k = 4 and k = 9 only");
  }
}

bool palindromic(const std::vector<int>& v) {
  for (std::size_t i = 0, j = v.size(); i < j--; ++i) {
    if (v[i] != v[j]) return false;
  }
  return true;
}

void validate(const BlockForm& form) {
  check_block_multiplier(form.k);
  if (form.nine_runs.empty()) {
    throw std::invalid_argument("a block form needs at least one block");
  }
  if (form.zero_runs.size() != form.nine_runs.size() - 1) {
    throw std::invalid_argument("a block form needs one zero run per gap");
  }
  for (int l : form.nine_runs) {
    if (l < 0) throw std::invalid_argument("nine-run lengths must be >= 0");
  }
  for (int m : form.zero_runs) {
    if (m < 0) throw std::invalid_argument("zero-run lengths must be >= 0");
  }
  if (!palindromic(form.nine_runs) || !palindromic(form.zero_runs)) {
    throw std::invalid_argument("block form parameters must be palindromic");
  }
}

// Free parameters of a palindromic list of `size` entries: the first
// ceil(size/2). Mirrored entries contribute twice to the total length, a
// middle entry once.
std::vector<int> palindrome_weights(std::size_t size) {
  std::vector<int> weights(/*count=*/(size + 1) / 2, 2);
  if (size % 2 == 1) weights.back() = 1;
  return weights;
}

std::vector<int> mirror(const std::vector<int>& half, std::size_t size) {
  std::vector<int> full(size);
  for (std::size_t i = 0; i < size; ++i) {
    full[i] = half[std::min(i, size - 1 - i)];
  }
  return full;
}

// All assignments of the weighted free parameters with total weight at most
// `slack`, visited in lexicographic order.
template <typename Visit>
void for_each_assignment(const std::vector<int>& weights, int slack,
                         std::vector<int>& values, std::size_t index,
                         const Visit& visit) {
  if (index == weights.size()) {
    visit(values);
    return;
  }
  for (int v = 0; v * weights[index] <= slack; ++v) {
    values[index] = v;
    for_each_assignment(weights, slack - v * weights[index], values, index + 1,
                        visit);
  }
}

}  // namespace

std::size_t BlockForm::total_length() const {
  std::size_t total = 0;
  for (int l : nine_runs) total += static_cast<std::size_t>(l) + 4;
  for (int m : zero_runs) total += static_cast<std::size_t>(m);
  return total;
}

DigitSequence block(int k, int nine_run) {
  check_block_multiplier(k);
  if (nine_run < 0) throw std::invalid_argument("nine-run length must be >= 0");
  std::vector<Digit> digits;
  digits.reserve(static_cast<std::size_t>(nine_run) + 4);
  digits.push_back(k == 4 ? 2 : 1);
  digits.push_back(k == 4 ? 1 : 0);
  digits.insert(digits.end(), static_cast<std::size_t>(nine_run), 9);
  digits.push_back(k == 4 ? 7 : 8);
  digits.push_back(k == 4 ? 8 : 9);
  return DigitSequence(10, std::move(digits));
}

DigitSequence assemble(const BlockForm& form) {
  validate(form);
  std::vector<Digit> digits;
  digits.reserve(form.total_length());
  for (std::size_t i = 0; i < form.nine_runs.size(); ++i) {
    if (i > 0) {
      digits.insert(digits.end(),
                    static_cast<std::size_t>(form.zero_runs[i - 1]), 0);
    }
    const DigitSequence b = block(form.k, form.nine_runs[i]);
    digits.insert(digits.end(), b.digits().begin(), b.digits().end());
  }
  return DigitSequence(10, std::move(digits));
}

RecognitionResult recognize(const DigitSequence& d, int k) {
  check_block_multiplier(k);
  if (d.base() != 10) {
    throw std::invalid_argument("block recognition is defined for base 10");
  }
  const Digit open0 = k == 4 ? 2 : 1;
  const Digit open1 = k == 4 ? 1 : 0;
  const Digit close0 = k == 4 ? 7 : 8;
  const Digit close1 = k == 4 ? 8 : 9;

  const std::vector<Digit>& s = d.digits();
  RecognitionResult result;
  auto reject = [&](std::size_t at, const std::string& expected) {
    result.matched = false;
    result.reject_position = at;
    result.reject_reason =
        "expected " + expected + ", found " +
        (at < s.size() ? std::string("'") + digit_char(s[at]) + "'"
                       : std::string("end of input"));
    return result;
  };
  auto take = [&](std::size_t& pos, Digit want) {
    if (pos >= s.size() || s[pos] != want) return false;
    ++pos;
    return true;
  };

  std::vector<int> nine_runs;
  std::vector<int> zero_runs;
  std::size_t pos = 0;
  for (;;) {
    // One block: open digits, a nine run, close digits. The close digits are
    // never 9, so greedy consumption of nines cannot overrun.
    if (!take(pos, open0))
      return reject(pos, "block opening digit '" + std::string(1, digit_char(open0)) + "'");
    if (!take(pos, open1))
      return reject(pos, "digit '" + std::string(1, digit_char(open1)) + "' after the block opening");
    int nines = 0;
    while (pos < s.size() && s[pos] == 9) {
      ++nines;
      ++pos;
    }
    if (!take(pos, close0))
      return reject(pos, "digit '" + std::string(1, digit_char(close0)) + "' after the nine run");
    if (!take(pos, close1))
      return reject(pos, "digit '" + std::string(1, digit_char(close1)) + "' completing the block");
    nine_runs.push_back(nines);

    if (pos == s.size()) break;  // the form always ends with a block

    int zeros = 0;
    while (pos < s.size() && s[pos] == 0) {
      ++zeros;
      ++pos;
    }
    if (pos == s.size()) return reject(pos, "a block after the zero run");
    zero_runs.push_back(zeros);
  }

  if (!palindromic(nine_runs)) {
    return reject(s.size(), "palindromic nine-run lengths");
  }
  if (!palindromic(zero_runs)) {
    return reject(s.size(), "palindromic zero-run lengths");
  }
  result.matched = true;
  result.form = BlockForm{k, std::move(nine_runs), std::move(zero_runs)};
  return result;
}

std::vector<EnumerationRecord> generate_up_to(int k, std::size_t max_length) {
  check_block_multiplier(k);
  if (max_length < 1) throw std::invalid_argument("max_length must be at least 1");

  std::vector<DigitSequence> values;
  for (std::size_t blocks = 1; 4 * blocks <= max_length; ++blocks) {
    const int slack = static_cast<int>(max_length - 4 * blocks);
    const std::vector<int> nine_weights = palindrome_weights(blocks);
    const std::vector<int> zero_weights = palindrome_weights(blocks - 1);

    std::vector<int> weights = nine_weights;
    weights.insert(weights.end(), zero_weights.begin(), zero_weights.end());
    std::vector<int> assignment(weights.size(), 0);
    for_each_assignment(
        weights, slack, assignment, 0, [&](const std::vector<int>& chosen) {
          const std::vector<int> nine_half(chosen.begin(),
                                           chosen.begin() + nine_weights.size());
          const std::vector<int> zero_half(chosen.begin() + nine_weights.size(),
                                           chosen.end());
          values.push_back(assemble(BlockForm{k, mirror(nine_half, blocks),
                                              mirror(zero_half, blocks - 1)}));
        });
  }

  std::sort(values.begin(), values.end(),
            [](const DigitSequence& x, const DigitSequence& y) {
              return compare(x, y) < 0;
            });
  values.erase(std::unique(values.begin(), values.end()), values.end());

  std::vector<EnumerationRecord> records;
  records.reserve(values.size());
  for (DigitSequence& v : values) {
    const std::size_t length = v.size();
    records.push_back({std::move(v), k, 10, length, Source::structural});
  }
  return records;
}

BigInt count_structural(int k, std::size_t length) {
  check_block_multiplier(k);
  if (length < 1) throw std::invalid_argument("length must be at least 1");

  BigInt total = 0;
  for (std::size_t blocks = 1; 4 * blocks <= length; ++blocks) {
    const std::size_t slack = length - 4 * blocks;
    std::vector<int> weights = palindrome_weights(blocks);
    const std::vector<int> zero_weights = palindrome_weights(blocks - 1);
    weights.insert(weights.end(), zero_weights.begin(), zero_weights.end());

    // Coin-style count of assignments whose weighted sum is exactly `slack`.
    std::vector<BigInt> ways(slack + 1, 0);
    ways[0] = 1;
    for (int w : weights) {
      for (std::size_t r = static_cast<std::size_t>(w); r <= slack; ++r) {
        ways[r] += ways[r - w];
      }
    }
    total += ways[slack];
  }
  return total;
}

BigInt palindrome_count(std::size_t length) {
  if (length < 1) throw std::invalid_argument("length must be at least 1");
  BigInt count = 9;
  for (std::size_t i = 1; i < (length + 1) / 2; ++i) count *= 10;
  return count;
}

}  // namespace revmult
