#include "fza/formula.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <set>
#include <sstream>
#include <string>

#include "fza/errors.hpp"

namespace fza {

void validate_formula(Formula2CNF const& phi) {
  if (phi.num_vars < 1) {
    throw invalid_input("formula needs at least one variable");
  }
  std::vector<int> occurrences(phi.num_vars, 0);
  for (auto const& [a, b] : phi.clauses) {
    for (auto const& l : {a, b}) {
      if (l.var < 0 || l.var >= phi.num_vars) {
        throw invalid_input("literal names variable " + std::to_string(l.var + 1) +
                            " outside 1.." + std::to_string(phi.num_vars));
      }
    }
    ++occurrences[a.var];
    if (b.var != a.var) {
      ++occurrences[b.var];
    }
  }
  for (int v = 0; v < phi.num_vars; ++v) {
    if (occurrences[v] > 3) {
      throw invalid_input("variable " + std::to_string(v + 1) + " occurs in " +
                          std::to_string(occurrences[v]) + " clauses (limit 3)");
    }
  }
}

Formula2CNF parse_formula(std::string_view text, int num_vars) {
  Formula2CNF phi;
  phi.num_vars = num_vars;
  std::string clause;
  std::string s(text);
  std::replace(s.begin(), s.end(), ',', ';');
  std::istringstream in(s);
  while (std::getline(in, clause, ';')) {
    std::istringstream lits(clause);
    std::vector<int> xs;
    int x = 0;
    while (lits >> x) {
      xs.push_back(x);
    }
    if (!lits.eof()) {
      throw invalid_input("malformed clause '" + clause + "'");
    }
    if (xs.empty()) {
      continue;
    }
    if (xs.size() != 2 || xs[0] == 0 || xs[1] == 0) {
      throw invalid_input("clause '" + clause + "' must have exactly two non-zero literals");
    }
    auto lit = [](int v) { return Literal{std::abs(v) - 1, v < 0}; };
    phi.clauses.emplace_back(lit(xs[0]), lit(xs[1]));
  }
  validate_formula(phi);
  return phi;
}

int satisfied_clauses(Formula2CNF const& phi, std::vector<bool> const& assignment) {
  int count = 0;
  for (auto const& [a, b] : phi.clauses) {
    auto holds = [&](Literal const& l) { return assignment[l.var] != l.negated; };
    count += (holds(a) || holds(b)) ? 1 : 0;
  }
  return count;
}

int max2sat_optimum(Formula2CNF const& phi) {
  validate_formula(phi);
  if (phi.num_vars > 20) {
    throw capacity_exceeded("max2sat_optimum refuses more than 20 variables");
  }
  int best = 0;
  std::vector<bool> assignment(phi.num_vars);
  for (std::uint32_t mask = 0; mask < (1U << phi.num_vars); ++mask) {
    for (int v = 0; v < phi.num_vars; ++v) {
      assignment[v] = ((mask >> v) & 1U) != 0;
    }
    best = std::max(best, satisfied_clauses(phi, assignment));
  }
  return best;
}

}  // namespace fza
