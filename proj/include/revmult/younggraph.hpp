#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "revmult/bigint.hpp"
#include "revmult/digits.hpp"
#include "revmult/verifier.hpp"

namespace revmult {

// Multiplying M = a_n ... a_1 a_0 (base g) by k and demanding that the
// product read back as a_0 a_1 ... a_n pins one schoolbook equation per
// position:
//
//     k*a_j + c_j = a_{n-j} + g*c_{j+1},   c_0 = 0,   c_{n+1} = 0,
//
// with every carry c_j in [0, k-1]. Fixing digit pairs (a_p, a_{n-p}) from
// the outside in, the low-side equation determines the next forward carry
// and the high-side equation determines the carry the unprocessed middle
// must eventually deliver to the already-fixed high digits. Those two
// carries are the whole state, so there are at most k*k states and every
// question about (g,k)-reverse multiples becomes a path question in a small
// directed graph: enumeration is a walk, counting is a transfer-style
// dynamic program, and existence for a given (g,k) is plain reachability.

/// State after fixing q outer digit pairs: `forward` is the carry entering
/// the lowest unfixed position from below (c_q), `backward` is the carry the
/// middle must send into the fixed high side (c_{n-q+1}).
struct CarryPairState {
  int forward;
  int backward;

  friend auto operator<=>(const CarryPairState&, const CarryPairState&) = default;
};

/// One admissible outside-in step: digit `low` at the next low position,
/// digit `high` at the mirrored high position, successor state `to`.
struct CarryPairTransition {
  Digit low;
  Digit high;
  std::uint32_t to;
};

class CarryPairAutomaton {
 public:
  int base() const { return base_; }
  int k() const { return k_; }

  /// Total number of states, k*k. Not all of them are reachable.
  std::size_t state_count() const { return inner_.size(); }

  CarryPairState state(std::uint32_t id) const {
    return {static_cast<int>(id) / k_, static_cast<int>(id) % k_};
  }
  std::uint32_t state_id(CarryPairState s) const {
    return static_cast<std::uint32_t>(s.forward * k_ + s.backward);
  }

  /// Steps admissible as the outermost pair: both digits non-zero, carries
  /// (c_0, c_{n+1}) = (0, 0) on the outside. Empty exactly when no length
  /// can even start, e.g. (10,5).
  const std::vector<CarryPairTransition>& initial_transitions() const {
    return initial_;
  }

  const std::vector<CarryPairTransition>& transitions(std::uint32_t from) const {
    return inner_[from];
  }

  /// Even closure: with no digits left in the middle, the forward carry must
  /// be exactly what the high side was promised.
  bool closes_even(std::uint32_t id) const {
    return state(id).forward == state(id).backward;
  }

  /// Odd closure: digits usable as the single center position, i.e. all a
  /// with (k-1)*a = base*backward - forward. Empty when the state cannot
  /// close an odd-length number.
  const std::vector<Digit>& center_digits(std::uint32_t id) const {
    return centers_[id];
  }

  /// States reachable through at least one admissible outermost pair,
  /// sorted. This is the node set of the exported graph.
  std::vector<std::uint32_t> reachable_states() const;

 private:
  friend CarryPairAutomaton build_automaton(int base, int k);

  int base_ = 0;
  int k_ = 0;
  std::vector<CarryPairTransition> initial_;
  std::vector<std::vector<CarryPairTransition>> inner_;  // indexed by state id
  std::vector<std::vector<Digit>> centers_;
};

/// Throws std::invalid_argument unless 1 <= k < base.
CarryPairAutomaton build_automaton(int base, int k);

/// All (base,k)-reverse multiples with exactly `length` digits, ascending.
/// Agrees with brute_force_enumerate everywhere the scan budget allows, at a
/// cost that depends on the number of results instead of base^length.
std::vector<EnumerationRecord> enumerate_length(const CarryPairAutomaton& a,
                                                std::size_t length);

/// Count of reverse multiples for every length 1..max_length, by path
/// counting over the states; no digit strings are materialized. Exact.
std::map<std::size_t, BigInt> count_by_length(const CarryPairAutomaton& a,
                                              std::size_t max_length);

/// True iff some length admits at least one (base,k)-reverse multiple.
/// Reachability from the initial steps to any closing state; definitive
/// because the state space is finite.
bool is_feasible(const CarryPairAutomaton& a);

/// Deterministic DOT rendering of the reachable graph: nodes labeled with
/// carry pairs, edges with their digit pairs, initial and closing states
/// marked. Identical input gives byte-identical output.
std::string export_dot(const CarryPairAutomaton& a);

}  // namespace revmult
