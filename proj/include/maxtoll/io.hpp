#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "maxtoll/generators.hpp"
#include "maxtoll/graph.hpp"
#include "maxtoll/rational.hpp"

namespace maxtoll {

// Instance text:
//   maxtoll 1
//   source <node>
//   sink <node>
//   arc <id> <from> <to> <cost> <T|F>
// Blank lines and '#' comments are ignored. Costs are integers or p/q.
//
// Errors: SyntaxError (with line), DuplicateArcId (with line), and the
// build_network errors.
Network parse_instance(std::string_view text);

// Canonical text for a network. `comments` are written as '#' lines after
// the header.
std::string serialize_instance(const Network& net, const std::vector<std::string>& comments = {});

// '#' comment lines describing generator metadata.
std::vector<std::string> metadata_comments(const GenMetadata& meta);

struct SolutionFile {
  Rational revenue;
  Rational lp;
  Rational guarantee;
  std::vector<std::string> path;                         // arc ids
  std::vector<std::pair<std::string, Rational>> tolls;   // on-path toll arcs

  friend bool operator==(const SolutionFile&, const SolutionFile&) = default;
};

// Solution text:
//   revenue <q>
//   lp <q>
//   guarantee <q>
//   path <id> <id> ...
//   toll <id> <q>        (one per on-path toll arc)
// Errors: SyntaxError (with line).
SolutionFile parse_solution(std::string_view text);
std::string serialize_solution(const SolutionFile& solution, const std::vector<std::string>& comments = {});

// DIMACS CNF: 'c' comments, "p cnf <n> <m>", clauses as whitespace separated
// literals each terminated by 0. Every clause must have exactly three
// literals.
//
// Errors: SyntaxError, MalformedClause (both with line).
SatInstance parse_dimacs(std::string_view text);

// True for tokens matching [A-Za-z0-9_.-]+.
bool is_identifier(std::string_view token);

}  // namespace maxtoll
