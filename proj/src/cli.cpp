#include "revmult/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "revmult/structural.hpp"
#include "revmult/verifier.hpp"
#include "revmult/younggraph.hpp"

namespace revmult {

namespace {

using nlohmann::json;

std::string property_name(int base, int k) {
  return "(" + std::to_string(base) + "," + std::to_string(k) +
         ")-reverse multiple";
}

json record_json(const EnumerationRecord& r) {
  return json{{"value", to_string(r.value)},
              {"base", r.base},
              {"k", r.k},
              {"length", r.length}};
}

void check_base(int base) {
  if (base < kMinBase || base > kMaxBase) {
    throw std::invalid_argument("base must be in [" + std::to_string(kMinBase) +
                                ", " + std::to_string(kMaxBase) + "]");
  }
}

void check_multiplier(int base, int k) {
  if (k < 1 || k >= base) {
    throw std::invalid_argument("multiplier must satisfy 1 <= k < base");
  }
}

int cmd_verify(const std::string& number, int base, std::optional<int> k,
               bool as_json, std::ostream& out, std::ostream& err) {
  check_base(base);
  const DigitSequence value = parse(number, base);

  std::vector<int> multipliers;
  if (k) {
    check_multiplier(base, *k);
    if (is_reverse_multiple(value, *k)) multipliers.push_back(*k);
  } else {
    multipliers = classify(value);
  }

  for (int m : multipliers) {
    if (as_json) {
      out << record_json({value, m, base, value.size(), Source::oracle}).dump()
          << "\n";
    } else {
      out << to_string(value) << " is a " << property_name(base, m) << "\n";
    }
  }
  if (!multipliers.empty()) return kExitYes;

  if (k) {
    err << to_string(value) << " is not a " << property_name(base, *k) << "\n";
  } else {
    err << to_string(value) << " is not a reverse multiple for any k in [1, "
        << base << ")\n";
  }
  return kExitNo;
}

int cmd_enumerate(int base, int k, std::size_t length,
                  const std::string& method, std::uint64_t budget,
                  bool as_json, std::ostream& out, std::ostream& err) {
  check_base(base);
  check_multiplier(base, k);
  if (length < 1) throw std::invalid_argument("length must be at least 1");

  std::vector<EnumerationRecord> records;
  if (method == "oracle") {
    records = brute_force_enumerate(base, k, length, budget);
  } else if (method == "graph") {
    records = enumerate_length(build_automaton(base, k), length);
  } else if (method == "structural") {
    if (base != 10 || (k != 4 && k != 9)) {
      throw std::invalid_argument(
          "the structural method covers base 10 with k = 4 or k = 9");
    }
    std::vector<EnumerationRecord> all = generate_up_to(k, length);
    for (EnumerationRecord& r : all) {
      if (r.length == length) records.push_back(std::move(r));
    }
  } else {
    throw std::invalid_argument("method must be oracle, graph or structural");
  }

  for (const EnumerationRecord& r : records) {
    if (as_json) {
      out << record_json(r).dump() << "\n";
    } else {
      out << to_string(r.value) << "\n";
    }
  }
  if (records.empty()) {
    err << "no " << property_name(base, k) << " has " << length << " digits\n";
    return kExitNo;
  }
  return kExitYes;
}

int cmd_count(int base, int k, std::size_t max_length, bool as_json,
              std::ostream& out, std::ostream& err) {
  check_base(base);
  check_multiplier(base, k);
  if (max_length < 1) throw std::invalid_argument("max-length must be at least 1");

  const CarryPairAutomaton automaton = build_automaton(base, k);
  const std::map<std::size_t, BigInt> counts =
      count_by_length(automaton, max_length);

  // Independent routes must agree before anything is printed; a mismatch is
  // an internal-consistency failure, never a silently wrong table.
  for (const auto& [length, count] : counts) {
    std::optional<BigInt> check;
    if (base == 10 && (k == 4 || k == 9)) {
      check = count_structural(k, length);
    } else if (base == 10 && k == 1) {
      check = palindrome_count(length);
    }
    if (check && *check != count) {
      err << "internal consistency failure at length " << length
          << ": graph count " << count << " vs structural count " << *check
          << "\n";
      return kExitError;
    }
  }

  for (const auto& [length, count] : counts) {
    if (as_json) {
      out << json{{"base", base},
                  {"k", k},
                  {"length", length},
                  {"count", count.str()}}
                 .dump()
          << "\n";
    } else {
      out << length << " " << count << "\n";
    }
  }
  return kExitYes;
}

int cmd_table(bool as_json, std::ostream& out, std::ostream& err) {
  struct Row {
    const char* number;
    int k;
    std::vector<int> nine_runs;
    std::vector<int> zero_runs;
  };
  const std::vector<Row> rows = {
      {"21782178", 4, {0, 0}, {0}},
      {"21782197800219782178", 4, {0, 1, 1, 0}, {0, 2, 0}},
      {"10890109998901089", 9, {0, 3, 0}, {1, 1}},
  };

  for (const Row& row : rows) {
    const DigitSequence value = parse(row.number, 10);
    if (!is_reverse_multiple(value, row.k)) {
      err << row.number << " failed the reverse-multiple check for k = "
          << row.k << "\n";
      return kExitError;
    }
    const RecognitionResult rec = recognize(value, row.k);
    if (!rec.matched || rec.form->nine_runs != row.nine_runs ||
        rec.form->zero_runs != row.zero_runs) {
      err << row.number << " did not parse to the expected block parameters\n";
      return kExitError;
    }
    if (as_json) {
      json j = record_json({value, row.k, 10, value.size(), Source::structural});
      j["params"] = json{{"l", rec.form->nine_runs}, {"m", rec.form->zero_runs}};
      out << j.dump() << "\n";
    } else {
      // Print the free parameters the way the lists are usually tabulated:
      // l1, m1, l2, m2, ... up to the middle of each palindromic list.
      const std::size_t free_l = (rec.form->nine_runs.size() + 1) / 2;
      const std::size_t free_m = (rec.form->zero_runs.size() + 1) / 2;
      out << row.number;
      for (std::size_t i = 0; i < free_l; ++i) {
        out << ", l" << i + 1 << "=" << rec.form->nine_runs[i];
        if (i < free_m) out << ", m" << i + 1 << "=" << rec.form->zero_runs[i];
      }
      out << ", (10," << row.k << ")\n";
    }
  }
  return kExitYes;
}

int cmd_graph(int base, int k, const std::string& dot_path, bool as_json,
              std::ostream& out, std::ostream& err) {
  check_base(base);
  check_multiplier(base, k);

  const CarryPairAutomaton automaton = build_automaton(base, k);
  const std::size_t states = automaton.reachable_states().size();
  const bool feasible = is_feasible(automaton);

  if (!dot_path.empty()) {
    std::ofstream file(dot_path, std::ios::binary);
    if (!file) {
      err << "cannot write DOT file: " << dot_path << "\n";
      return kExitError;
    }
    file << export_dot(automaton);
    if (!file.flush()) {
      err << "cannot write DOT file: " << dot_path << "\n";
      return kExitError;
    }
  }

  if (as_json) {
    out << json{{"base", base},
                {"k", k},
                {"states", states},
                {"feasible", feasible}}
               .dump()
        << "\n";
  } else {
    out << "states: " << states << "\n";
    out << "feasible: " << (feasible ? "true" : "false") << "\n";
  }
  return kExitYes;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"(g,k)-reverse multiples: verify, enumerate, count, inspect"};
  app.name("revmult");
  app.require_subcommand(1);

  bool as_json = false;
  app.add_flag("--json", as_json,
               "emit one JSON record per line instead of plain text");

  std::string number;
  int base = 10;
  int k = 0;
  std::size_t length = 0;
  std::size_t max_length = 0;
  std::string method = "graph";
  std::uint64_t budget = kDefaultScanBudget;
  std::string dot_path;

  CLI::App* verify = app.add_subcommand(
      "verify", "check whether a number is a (base,k)-reverse multiple");
  verify->add_option("number", number, "the number, as a digit string")
      ->required();
  verify->add_option("--base", base, "radix of the digit string");
  CLI::Option* k_option =
      verify->add_option("--k", k, "multiplier; omit to list every valid k");

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "list every reverse multiple with a given digit count");
  enumerate->add_option("--base", base, "radix");
  enumerate->add_option("--k", k, "multiplier")->required();
  enumerate->add_option("--length", length, "digit count")->required();
  enumerate->add_option("--method", method,
                        "oracle (brute force), graph (carry-pair automaton) "
                        "or structural (block forms)");
  enumerate->add_option("--budget", budget,
                        "candidate budget for the oracle method");

  CLI::App* count = app.add_subcommand(
      "count", "count reverse multiples per digit length");
  count->add_option("--base", base, "radix");
  count->add_option("--k", k, "multiplier")->required();
  count->add_option("--max-length", max_length, "largest digit count")
      ->required();

  CLI::App* table = app.add_subcommand(
      "table", "block parameters for a list of worked examples");

  CLI::App* graph = app.add_subcommand(
      "graph", "carry-pair graph statistics and DOT export");
  graph->add_option("--base", base, "radix");
  graph->add_option("--k", k, "multiplier")->required();
  graph->add_option("--dot", dot_path, "write the graph in DOT format here");

  try {
    // CLI11 consumes the vector form back to front.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitYes;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitError;
  }

  try {
    if (verify->parsed()) {
      return cmd_verify(number, base,
                        k_option->count() ? std::optional<int>(k) : std::nullopt,
                        as_json, out, err);
    }
    if (enumerate->parsed()) {
      return cmd_enumerate(base, k, length, method, budget, as_json, out, err);
    }
    if (count->parsed()) {
      return cmd_count(base, k, max_length, as_json, out, err);
    }
    if (table->parsed()) {
      return cmd_table(as_json, out, err);
    }
    if (graph->parsed()) {
      return cmd_graph(base, k, dot_path, as_json, out, err);
    }
  } catch (const BudgetExceeded& e) {
    err << e.what() << "\n";
    return kExitError;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kExitError;
  }
  return kExitError;  // unreachable with require_subcommand(1)
}

}  // namespace revmult
