#include "revmult/younggraph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace revmult {

namespace {

// Digits admissible as the single center position for a state: the center
// equation k*a + forward = a + base*backward must hold exactly.
std::vector<Digit> solve_center(int base, int k, CarryPairState s) {
  std::vector<Digit> digits;
  for (int a = 0; a < base; ++a) {
    if ((k - 1) * a == base * s.backward - s.forward) {
      digits.push_back(static_cast<Digit>(a));
    }
  }
  return digits;
}

}  // namespace

CarryPairAutomaton build_automaton(int base, int k) {
  if (base < kMinBase || base > kMaxBase) {
    throw std::invalid_argument("base must be in [" + std::to_string(kMinBase) +
                                ", " + std::to_string(kMaxBase) + "]");
  }
  if (k < 1 || k >= base) {
    throw std::invalid_argument("multiplier must satisfy 1 <= k < base");
  }

  CarryPairAutomaton a;
  a.base_ = base;
  a.k_ = k;
  const std::size_t states = static_cast<std::size_t>(k) * k;
  a.inner_.resize(states);
  a.centers_.resize(states);

  for (std::uint32_t id = 0; id < states; ++id) {
    const CarryPairState s = a.state(id);
    // Choosing the low digit fixes everything else: the low-side equation
    // forces the mirrored high digit and the next forward carry, and the
    // high-side equation then has exactly one carry the middle could
    // deliver, admissible only if it lands in [0, k-1].
    for (int low = 0; low < base; ++low) {
      const int t = k * low + s.forward;
      const int high = t % base;
      const int next_forward = t / base;
      const int next_backward = low + base * s.backward - k * high;
      if (next_backward < 0 || next_backward >= k) continue;
      a.inner_[id].push_back({static_cast<Digit>(low),
                              static_cast<Digit>(high),
                              a.state_id({next_forward, next_backward})});
    }
    a.centers_[id] = solve_center(base, k, s);
  }

  // The outermost pair starts from (c_0, c_{n+1}) = (0, 0) and needs both
  // end digits non-zero: a_n because M is canonical, a_0 because the
  // reversal must be.
  for (const CarryPairTransition& t : a.inner_[a.state_id({0, 0})]) {
    if (t.low != 0 && t.high != 0) a.initial_.push_back(t);
  }
  return a;
}

std::vector<std::uint32_t> CarryPairAutomaton::reachable_states() const {
  std::vector<char> seen(state_count(), 0);
  std::queue<std::uint32_t> frontier;
  for (const CarryPairTransition& t : initial_) {
    if (!seen[t.to]) {
      seen[t.to] = 1;
      frontier.push(t.to);
    }
  }
  while (!frontier.empty()) {
    const std::uint32_t id = frontier.front();
    frontier.pop();
    for (const CarryPairTransition& t : inner_[id]) {
      if (!seen[t.to]) {
        seen[t.to] = 1;
        frontier.push(t.to);
      }
    }
  }
  std::vector<std::uint32_t> ids;
  for (std::uint32_t id = 0; id < seen.size(); ++id) {
    if (seen[id]) ids.push_back(id);
  }
  return ids;
}

std::vector<EnumerationRecord> enumerate_length(const CarryPairAutomaton& a,
                                                std::size_t length) {
  if (length < 1) throw std::invalid_argument("length must be at least 1");
  const int base = a.base();
  const int k = a.k();
  std::vector<EnumerationRecord> found;

  if (length == 1) {
    // A single digit is its own reversal and also the leading digit, so it
    // must be non-zero and satisfy k*a = a: only k = 1 qualifies.
    if (k == 1) {
      for (int d = 1; d < base; ++d) {
        found.push_back({DigitSequence(base, {static_cast<Digit>(d)}), k, base,
                         1, Source::automaton});
      }
    }
    return found;
  }

  const std::size_t pairs = length / 2;
  const bool odd = (length % 2) != 0;

  // can_close[r][s]: an accepting state is reachable from s in exactly r
  // further steps. Prunes dead branches before they spread.
  std::vector<std::vector<char>> can_close(
      pairs, std::vector<char>(a.state_count(), 0));
  for (std::uint32_t s = 0; s < a.state_count(); ++s) {
    can_close[0][s] = odd ? !a.center_digits(s).empty() : a.closes_even(s);
  }
  for (std::size_t r = 1; r < pairs; ++r) {
    for (std::uint32_t s = 0; s < a.state_count(); ++s) {
      for (const CarryPairTransition& t : a.transitions(s)) {
        if (can_close[r - 1][t.to]) {
          can_close[r][s] = 1;
          break;
        }
      }
    }
  }

  std::vector<Digit> digits(length, 0);
  auto emit = [&] {
    found.push_back({DigitSequence(base, digits), k, base, length,
                     Source::automaton});
  };
  auto descend = [&](auto&& self, std::size_t step, std::uint32_t from) -> void {
    const std::vector<CarryPairTransition>& steps =
        step == 0 ? a.initial_transitions() : a.transitions(from);
    const std::size_t remaining = pairs - step - 1;
    for (const CarryPairTransition& t : steps) {
      if (!can_close[remaining][t.to]) continue;
      digits[step] = t.high;
      digits[length - 1 - step] = t.low;
      if (step + 1 == pairs) {
        if (odd) {
          for (Digit c : a.center_digits(t.to)) {
            digits[pairs] = c;
            emit();
          }
        } else {
          emit();
        }
      } else {
        self(self, step + 1, t.to);
      }
    }
  };
  descend(descend, 0, 0);

  std::sort(found.begin(), found.end(),
            [](const EnumerationRecord& x, const EnumerationRecord& y) {
              return x.value.digits() < y.value.digits();
            });
  return found;
}

std::map<std::size_t, BigInt> count_by_length(const CarryPairAutomaton& a,
                                              std::size_t max_length) {
  if (max_length < 1) throw std::invalid_argument("max_length must be at least 1");
  std::map<std::size_t, BigInt> counts;
  for (std::size_t n = 1; n <= max_length; ++n) counts[n] = 0;

  if (a.k() == 1) counts[1] = a.base() - 1;  // the single non-zero digits

  // Path-count vector over states after q pairs; advancing one pair is one
  // sweep over the transition lists.
  std::vector<BigInt> paths(a.state_count(), 0);
  for (const CarryPairTransition& t : a.initial_transitions()) {
    paths[t.to] += 1;
  }
  for (std::size_t q = 1; 2 * q <= max_length; ++q) {
    if (q > 1) {
      std::vector<BigInt> next(a.state_count(), 0);
      for (std::uint32_t s = 0; s < a.state_count(); ++s) {
        if (paths[s] == 0) continue;
        for (const CarryPairTransition& t : a.transitions(s)) {
          next[t.to] += paths[s];
        }
      }
      paths = std::move(next);
    }
    BigInt even = 0;
    BigInt odd = 0;
    for (std::uint32_t s = 0; s < a.state_count(); ++s) {
      if (paths[s] == 0) continue;
      if (a.closes_even(s)) even += paths[s];
      odd += paths[s] * static_cast<int>(a.center_digits(s).size());
    }
    counts[2 * q] = std::move(even);
    if (2 * q + 1 <= max_length) counts[2 * q + 1] = std::move(odd);
  }
  return counts;
}

bool is_feasible(const CarryPairAutomaton& a) {
  for (std::uint32_t id : a.reachable_states()) {
    if (a.closes_even(id) || !a.center_digits(id).empty()) return true;
  }
  return false;
}

std::string export_dot(const CarryPairAutomaton& a) {
  const std::vector<std::uint32_t> nodes = a.reachable_states();
  std::ostringstream os;
  os << "digraph carry_pairs {\n";
  os << "  // base " << a.base() << ", multiplier " << a.k() << "\n";
  os << "  // nodes are (forward carry, backward carry); edge labels are\n";
  os << "  // high/low digit pairs fixed by one outside-in step\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=circle];\n";
  if (!a.initial_transitions().empty()) {
    os << "  start [shape=point];\n";
  }
  auto name = [&](std::uint32_t id) {
    const CarryPairState s = a.state(id);
    return "s" + std::to_string(s.forward) + "_" + std::to_string(s.backward);
  };
  for (std::uint32_t id : nodes) {
    const CarryPairState s = a.state(id);
    os << "  " << name(id) << " [label=\"(" << s.forward << "," << s.backward
       << ")\"";
    if (a.closes_even(id)) os << " shape=doublecircle";
    if (!a.center_digits(id).empty()) os << " style=filled fillcolor=lightgrey";
    os << "];\n";
  }
  for (const CarryPairTransition& t : a.initial_transitions()) {
    os << "  start -> " << name(t.to) << " [label=\"" << digit_char(t.high)
       << "/" << digit_char(t.low) << "\"];\n";
  }
  for (std::uint32_t id : nodes) {
    for (const CarryPairTransition& t : a.transitions(id)) {
      os << "  " << name(id) << " -> " << name(t.to) << " [label=\""
         << digit_char(t.high) << "/" << digit_char(t.low) << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace revmult
