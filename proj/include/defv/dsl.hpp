#ifndef DEFV_DSL_HPP
#define DEFV_DSL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "defv/fp.hpp"
#include "defv/report.hpp"

namespace defv {

/// Parse failure with a source position.
class parse_error : public error {
 public:
  parse_error(int line, int col, const std::string& msg)
      : error("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_, col_;
};

// Expressions are kept in distributed sum-of-products form so that printing
// and reparsing reproduce the same tree.
struct AstTerm {
  int64_t coeff = 1;
  std::vector<std::pair<std::string, int64_t>> powers;  // source order
  bool operator==(const AstTerm&) const = default;
};
struct AstExpr {
  std::vector<AstTerm> terms;
  bool operator==(const AstExpr&) const = default;
};

struct AstRule {
  std::string var;
  int64_t exp = 0;
  AstTerm rhs;
  bool operator==(const AstRule&) const = default;
};

struct AstStatement {
  enum class Kind { Scenario, Coeff, Symbols, Ring, Map, Check };
  Kind kind = Kind::Scenario;
  std::string name;                                       // scenario/coeff/ring/map name
  std::vector<std::pair<std::string, std::string>> keys;  // scenario key=value pairs
  std::string var;                                        // coeff var
  int64_t order = 0;                                      // coeff order
  std::vector<std::string> names;                         // symbols / check arguments
  std::optional<AstRule> rule;                            // ring quotient rule
  std::vector<AstTerm> gens;                              // ring generators (monomials)
  std::string src, dst;                                   // map endpoints
  std::vector<std::pair<std::string, AstExpr>> clauses;   // map clauses
  std::string check_kind;                                 // check kind
  std::optional<AstExpr> expr;                            // check expression argument
  bool operator==(const AstStatement&) const = default;
};

struct ScenarioSpec {
  std::vector<AstStatement> statements;
  bool operator==(const ScenarioSpec&) const = default;

  const AstStatement* header() const;  // the scenario statement, if any
  std::string value_of(const std::string& key) const;
};

ScenarioSpec parse_scenario(const std::string& text);
std::string print_scenario(const ScenarioSpec& spec);

// Executes a parsed custom scenario (rings, maps, checks) and returns its
// report. Builtin headers (curve/surface) are handled by the caller.
Report run_custom_scenario(const ScenarioSpec& spec, int64_t bound_override = 0);

}  // namespace defv

#endif
