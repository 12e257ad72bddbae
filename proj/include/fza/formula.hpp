#pragma once

#include <string_view>
#include <utility>
#include <vector>

namespace fza {

struct Literal {
  int var = 0;  // 0-based
  bool negated = false;

  friend bool operator==(Literal const&, Literal const&) = default;
};

struct Formula2CNF {
  int num_vars = 0;
  std::vector<std::pair<Literal, Literal>> clauses;
};

// Throws invalid_input unless every literal names a variable in range and
// every variable occurs in at most three clauses.
void validate_formula(Formula2CNF const& phi);

// "1 -2; -1 -2": clauses separated by ';' or ',', literals as signed
// 1-based variable numbers.
Formula2CNF parse_formula(std::string_view text, int num_vars);

int satisfied_clauses(Formula2CNF const& phi, std::vector<bool> const& assignment);

// Exhaustive maximum; refuses more than 20 variables.
int max2sat_optimum(Formula2CNF const& phi);

}  // namespace fza
