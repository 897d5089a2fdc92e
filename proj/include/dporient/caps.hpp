#pragma once
// Enumeration caps shared by every search in the library, plus the error
// hierarchy. Caps keep the exact enumerations (orientations, Eulerian
// subdigraphs, polynomial expansion, set-cover search) at desk scale; every
// routine that enumerates takes its cap explicitly and raises CapExceeded
// instead of silently truncating.
//
// The environment variable DPORIENT_CAPS overrides defaults with a
// comma-separated key=value list, e.g. DPORIENT_CAPS="euler=40,expand=20".

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace dporient {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An exact enumeration was asked to exceed its configured cap.
struct CapExceeded : Error {
  using Error::Error;
};

struct Caps {
  int orientation_edges = 24;        // enumerate_orientations
  int euler_arcs = 30;               // count_eulerian
  int expand_edges = 26;             // expand_graph_polynomial
  int zsign_pairs = 12;              // omega_zsignable branch and bound
  int exhaustive_edges = 20;         // certify --strategy exhaustive
  int walk_visits = 10000;           // certify --strategy bounded-first
  long long solver_budget = 10000000;  // solve() decision budget

  // Defaults merged with DPORIENT_CAPS if set.
  static Caps defaults() {
    Caps c;
    if (const char* env = std::getenv("DPORIENT_CAPS")) c = parse(env, c);
    return c;
  }

  // Parses "key=value,key=value" on top of `base`. Keys: orient, euler,
  // expand, zpairs, exhaustive, walk, solver.
  static Caps parse(const std::string& s, Caps base) {
    Caps c = base;
    std::size_t pos = 0;
    while (pos < s.size()) {
      std::size_t comma = s.find(',', pos);
      if (comma == std::string::npos) comma = s.size();
      std::string item = s.substr(pos, comma - pos);
      pos = comma + 1;
      if (item.empty()) continue;
      std::size_t eq = item.find('=');
      if (eq == std::string::npos)
        throw Error("caps: expected key=value, got '" + item + "'");
      std::string key = item.substr(0, eq);
      long long value = 0;
      try {
        value = std::stoll(item.substr(eq + 1));
      } catch (const std::exception&) {
        throw Error("caps: bad value in '" + item + "'");
      }
      if (value < 0) throw Error("caps: negative value in '" + item + "'");
      if (key == "orient")
        c.orientation_edges = static_cast<int>(value);
      else if (key == "euler")
        c.euler_arcs = static_cast<int>(value);
      else if (key == "expand")
        c.expand_edges = static_cast<int>(value);
      else if (key == "zpairs")
        c.zsign_pairs = static_cast<int>(value);
      else if (key == "exhaustive")
        c.exhaustive_edges = static_cast<int>(value);
      else if (key == "walk")
        c.walk_visits = static_cast<int>(value);
      else if (key == "solver")
        c.solver_budget = value;
      else
        throw Error("caps: unknown key '" + key + "'");
    }
    return c;
  }
};

}  // namespace dporient
