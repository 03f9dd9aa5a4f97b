#include "maxtoll/io.hpp"

#include <charconv>
#include <sstream>
#include <unordered_set>

#include "maxtoll/error.hpp"

namespace maxtoll {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string_view> tokens;
};

std::vector<std::string_view> split_whitespace(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos > start) out.push_back(text.substr(start, pos - start));
  }
  return out;
}

// Non-empty lines with everything from `comment` onwards dropped.
std::vector<Line> tokenize(std::string_view text, char comment) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (std::size_t hash = raw.find(comment); hash != std::string_view::npos) raw = raw.substr(0, hash);
    auto tokens = split_whitespace(raw);
    if (!tokens.empty()) out.push_back({number, std::move(tokens)});
    pos = end + 1;
  }
  return out;
}

[[noreturn]] void syntax(std::size_t line, const std::string& message) {
  throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line) + ": " + message, line);
}

Rational parse_rational_at(std::string_view token, std::size_t line) {
  try {
    return Rational::parse(token);
  } catch (const Error&) {
    syntax(line, "malformed number '" + std::string(token) + "'");
  }
}

std::string identifier_at(std::string_view token, std::size_t line) {
  if (!is_identifier(token)) syntax(line, "invalid identifier '" + std::string(token) + "'");
  return std::string(token);
}

void expect_arity(const Line& line, std::size_t count) {
  if (line.tokens.size() != count) {
    syntax(line.number, "'" + std::string(line.tokens[0]) + "' takes " + std::to_string(count - 1) + " field(s)");
  }
}

}  // namespace

bool is_identifier(std::string_view token) {
  if (token.empty()) return false;
  for (char c : token) {
    bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' || c == '.' ||
              c == '-';
    if (!ok) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Instances

Network parse_instance(std::string_view text) {
  auto lines = tokenize(text, '#');
  if (lines.empty()) throw Error(ErrorCode::SyntaxError, "empty instance", 1);
  const Line& header = lines.front();
  if (header.tokens.size() != 2 || header.tokens[0] != "maxtoll" || header.tokens[1] != "1") {
    syntax(header.number, "expected header 'maxtoll 1'");
  }

  std::optional<std::string> source;
  std::optional<std::string> sink;
  std::vector<Arc> arcs;
  std::unordered_set<std::string> ids;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    std::string_view keyword = line.tokens[0];
    if (keyword == "source" || keyword == "sink") {
      expect_arity(line, 2);
      auto& slot = keyword == "source" ? source : sink;
      if (slot) syntax(line.number, "duplicate '" + std::string(keyword) + "' record");
      slot = identifier_at(line.tokens[1], line.number);
    } else if (keyword == "arc") {
      expect_arity(line, 6);
      Arc arc;
      arc.id = identifier_at(line.tokens[1], line.number);
      arc.from = identifier_at(line.tokens[2], line.number);
      arc.to = identifier_at(line.tokens[3], line.number);
      arc.cost = parse_rational_at(line.tokens[4], line.number);
      if (line.tokens[5] == "T") {
        arc.kind = ArcKind::Toll;
      } else if (line.tokens[5] == "F") {
        arc.kind = ArcKind::Free;
      } else {
        syntax(line.number, "arc kind must be T or F");
      }
      if (arc.cost.is_negative()) {
        throw Error(ErrorCode::NegativeCost, "line " + std::to_string(line.number) + ": negative cost", line.number);
      }
      if (!ids.insert(arc.id).second) {
        throw Error(ErrorCode::DuplicateArcId,
                    "line " + std::to_string(line.number) + ": duplicate arc id '" + arc.id + "'", line.number);
      }
      arcs.push_back(std::move(arc));
    } else if (keyword == "maxtoll") {
      syntax(line.number, "header repeated");
    } else {
      syntax(line.number, "unknown record '" + std::string(keyword) + "'");
    }
  }
  if (!source) throw Error(ErrorCode::SyntaxError, "missing 'source' record");
  if (!sink) throw Error(ErrorCode::SyntaxError, "missing 'sink' record");
  return build_network(std::move(arcs), *source, *sink);
}

std::string serialize_instance(const Network& net, const std::vector<std::string>& comments) {
  std::ostringstream out;
  out << "maxtoll 1\n";
  for (const auto& c : comments) out << "# " << c << '\n';
  out << "source " << net.node_name(net.source()) << '\n';
  out << "sink " << net.node_name(net.sink()) << '\n';
  for (const Arc& arc : net.arcs()) {
    out << "arc " << arc.id << ' ' << arc.from << ' ' << arc.to << ' ' << arc.cost << ' '
        << (arc.is_toll() ? 'T' : 'F') << '\n';
  }
  return out.str();
}

std::vector<std::string> metadata_comments(const GenMetadata& meta) {
  std::vector<std::string> out;
  out.push_back("family " + std::string(to_string(meta.family)));
  out.push_back("parameter " + std::to_string(meta.parameter));
  out.push_back("scale " + std::to_string(meta.scale));
  if (meta.expected.lp) out.push_back("expected lp " + meta.expected.lp->to_string());
  if (meta.expected.opt) out.push_back("expected opt " + meta.expected.opt->to_string());
  if (meta.expected.app) out.push_back("expected app " + meta.expected.app->to_string());
  return out;
}

// ---------------------------------------------------------------------------
// Solutions

SolutionFile parse_solution(std::string_view text) {
  SolutionFile out;
  bool seen_revenue = false, seen_lp = false, seen_guarantee = false, seen_path = false;
  std::unordered_set<std::string> toll_ids;

  auto scalar = [](const Line& line, bool& seen, Rational& slot) {
    expect_arity(line, 2);
    if (seen) syntax(line.number, "duplicate '" + std::string(line.tokens[0]) + "' record");
    seen = true;
    slot = parse_rational_at(line.tokens[1], line.number);
  };

  for (const Line& line : tokenize(text, '#')) {
    std::string_view keyword = line.tokens[0];
    if (keyword == "revenue") {
      scalar(line, seen_revenue, out.revenue);
    } else if (keyword == "lp") {
      scalar(line, seen_lp, out.lp);
    } else if (keyword == "guarantee") {
      scalar(line, seen_guarantee, out.guarantee);
    } else if (keyword == "path") {
      if (seen_path) syntax(line.number, "duplicate 'path' record");
      seen_path = true;
      for (std::size_t i = 1; i < line.tokens.size(); ++i) out.path.push_back(identifier_at(line.tokens[i], line.number));
    } else if (keyword == "toll") {
      expect_arity(line, 3);
      std::string id = identifier_at(line.tokens[1], line.number);
      if (!toll_ids.insert(id).second) syntax(line.number, "duplicate toll for '" + id + "'");
      Rational value = parse_rational_at(line.tokens[2], line.number);
      if (value.is_negative()) syntax(line.number, "negative toll");
      out.tolls.emplace_back(std::move(id), value);
    } else {
      syntax(line.number, "unknown record '" + std::string(keyword) + "'");
    }
  }
  if (!seen_revenue) throw Error(ErrorCode::SyntaxError, "missing 'revenue' record");
  if (!seen_lp) throw Error(ErrorCode::SyntaxError, "missing 'lp' record");
  if (!seen_guarantee) throw Error(ErrorCode::SyntaxError, "missing 'guarantee' record");
  if (!seen_path) throw Error(ErrorCode::SyntaxError, "missing 'path' record");
  return out;
}

std::string serialize_solution(const SolutionFile& solution, const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const auto& c : comments) out << "# " << c << '\n';
  out << "revenue " << solution.revenue << '\n';
  out << "lp " << solution.lp << '\n';
  out << "guarantee " << solution.guarantee << '\n';
  out << "path";
  for (const auto& id : solution.path) out << ' ' << id;
  out << '\n';
  for (const auto& [id, value] : solution.tolls) out << "toll " << id << ' ' << value << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// DIMACS CNF

SatInstance parse_dimacs(std::string_view text) {
  SatInstance out;
  std::optional<std::size_t> declared_clauses;
  std::vector<int> pending;
  std::size_t pending_line = 0;

  auto lines = tokenize(text, '\0');
  for (const Line& line : lines) {
    std::string_view first = line.tokens[0];
    if (first == "c") continue;
    if (first == "%") break;
    if (first == "p") {
      if (declared_clauses) syntax(line.number, "duplicate problem line");
      if (line.tokens.size() != 4 || line.tokens[1] != "cnf") syntax(line.number, "expected 'p cnf <vars> <clauses>'");
      int vars = 0;
      std::size_t clauses = 0;
      auto [p1, e1] = std::from_chars(line.tokens[2].data(), line.tokens[2].data() + line.tokens[2].size(), vars);
      auto [p2, e2] = std::from_chars(line.tokens[3].data(), line.tokens[3].data() + line.tokens[3].size(), clauses);
      if (e1 != std::errc{} || e2 != std::errc{} || p1 != line.tokens[2].data() + line.tokens[2].size() ||
          p2 != line.tokens[3].data() + line.tokens[3].size() || vars < 0) {
        syntax(line.number, "malformed problem line");
      }
      out.variables = vars;
      declared_clauses = clauses;
      continue;
    }
    if (!declared_clauses) syntax(line.number, "clause before problem line");
    for (std::string_view token : line.tokens) {
      int lit = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), lit);
      if (ec != std::errc{} || ptr != token.data() + token.size()) {
        syntax(line.number, "malformed literal '" + std::string(token) + "'");
      }
      if (pending.empty()) pending_line = line.number;
      if (lit != 0) {
        if (std::abs(lit) > out.variables) {
          throw Error(ErrorCode::MalformedClause,
                      "line " + std::to_string(line.number) + ": literal " + std::to_string(lit) + " out of range",
                      line.number);
        }
        pending.push_back(lit);
        continue;
      }
      if (pending.size() != 3) {
        throw Error(ErrorCode::MalformedClause,
                    "line " + std::to_string(pending_line) + ": clause has " + std::to_string(pending.size()) +
                        " literals, expected 3",
                    pending_line);
      }
      out.clauses.push_back({pending[0], pending[1], pending[2]});
      pending.clear();
    }
  }
  if (!declared_clauses) throw Error(ErrorCode::SyntaxError, "missing problem line");
  if (!pending.empty()) {
    throw Error(ErrorCode::MalformedClause, "line " + std::to_string(pending_line) + ": unterminated clause",
                pending_line);
  }
  if (out.clauses.size() != *declared_clauses) {
    throw Error(ErrorCode::SyntaxError, "problem line declares " + std::to_string(*declared_clauses) +
                                            " clauses, found " + std::to_string(out.clauses.size()));
  }
  return out;
}

}  // namespace maxtoll
