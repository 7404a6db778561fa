#include "revmult/verifier.hpp"

#include <string>
#include <utility>

namespace revmult {

namespace {

void check_multiplier(int base, int k) {
  if (k < 1 || k >= base) {
    throw std::invalid_argument("multiplier must satisfy 1 <= k < base");
  }
}

void check_scan_budget(int base, std::size_t length, std::uint64_t budget) {
  std::uint64_t candidates = 1;
  for (std::size_t i = 0; i < length; ++i) {
    if (candidates > budget / static_cast<std::uint64_t>(base)) {
      throw BudgetExceeded(
          "scan of base " + std::to_string(base) + " length " +
          std::to_string(length) + " exceeds the candidate budget of " +
          std::to_string(budget) + "; use the graph method instead");
    }
    candidates *= static_cast<std::uint64_t>(base);
  }
}

// One candidate, tested in place on a most-significant-first buffer. Walks
// the schoolbook product of k and the value from the least significant end
// and demands that each product digit equal the mirrored input digit. The
// j = 0 step is the congruence a_n = k*a_0 (mod base), so almost all
// candidates are rejected after a single multiply.
bool mirrored_product_matches(const Digit* d, std::size_t n, int k, int base) {
  int carry = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const int t = k * d[n - 1 - j] + carry;
    if (t % base != d[j]) return false;
    carry = t / base;
  }
  return carry == 0;  // the product must not outgrow the input
}

EnumerationRecord make_record(int base, int k, const std::vector<Digit>& digits,
                              Source source) {
  DigitSequence value(base, digits);
  const std::size_t length = value.size();
  return {std::move(value), k, base, length, source};
}

// Ascending scan of every canonical sequence that starts with the two given
// digits (positions >= 2 run through a plain odometer).
std::vector<EnumerationRecord> scan_prefix_chunk(int base, int k,
                                                 std::size_t length, Digit lead,
                                                 Digit second) {
  std::vector<Digit> cur(length, 0);
  cur[0] = lead;
  cur[1] = second;
  std::vector<EnumerationRecord> found;
  for (;;) {
    if (mirrored_product_matches(cur.data(), length, k, base)) {
      found.push_back(make_record(base, k, cur, Source::oracle));
    }
    std::size_t i = length;
    for (;;) {
      if (--i == 1) return found;
      if (++cur[i] < base) break;
      cur[i] = 0;
    }
  }
}

}  // namespace

bool is_reverse_multiple(const DigitSequence& d, int k) {
  check_multiplier(d.base(), k);
  const std::vector<Digit> rev = reverse_digits(d);
  if (rev.front() == 0) return false;  // reversal is not a canonical expansion
  return scalar_multiply(d, k).digits() == rev;
}

std::vector<int> classify(const DigitSequence& d) {
  std::vector<int> multipliers;
  for (int k = 1; k < d.base(); ++k) {
    if (is_reverse_multiple(d, k)) multipliers.push_back(k);
  }
  return multipliers;
}

std::vector<EnumerationRecord> brute_force_enumerate_serial(
    int base, int k, std::size_t length, std::uint64_t budget) {
  check_multiplier(base, k);
  if (length < 1) throw std::invalid_argument("length must be at least 1");
  check_scan_budget(base, length, budget);

  std::vector<Digit> cur(length, 0);
  cur[0] = 1;
  std::vector<EnumerationRecord> found;
  for (;;) {
    if (mirrored_product_matches(cur.data(), length, k, base)) {
      found.push_back(make_record(base, k, cur, Source::oracle));
    }
    std::size_t i = length - 1;
    for (;;) {
      if (++cur[i] < base) break;
      if (i == 0) return found;  // leading digit wrapped: scan complete
      cur[i] = 0;
      --i;
    }
  }
}

std::vector<EnumerationRecord> brute_force_enumerate(int base, int k,
                                                     std::size_t length,
                                                     std::uint64_t budget) {
  check_multiplier(base, k);
  if (length < 1) throw std::invalid_argument("length must be at least 1");
  check_scan_budget(base, length, budget);
  if (length == 1) return brute_force_enumerate_serial(base, k, length, budget);

  // One chunk per (leading, second) digit pair. Chunks scan ascending and
  // are concatenated in prefix order, so the result does not depend on the
  // number of workers.
  const int chunk_count = (base - 1) * base;
  std::vector<std::vector<EnumerationRecord>> chunks(chunk_count);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int c = 0; c < chunk_count; ++c) {
    chunks[c] = scan_prefix_chunk(base, k, length,
                                  static_cast<Digit>(1 + c / base),
                                  static_cast<Digit>(c % base));
  }

  std::vector<EnumerationRecord> found;
  for (std::vector<EnumerationRecord>& chunk : chunks) {
    for (EnumerationRecord& r : chunk) found.push_back(std::move(r));
  }
  return found;
}

}  // namespace revmult
