#ifndef HANGAR_MILP_HPP
#define HANGAR_MILP_HPP

#include <cstddef>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hangar/core.hpp"
#include "hangar/validator.hpp"

namespace hangar::milp {

class AmbiguousOrder : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "AmbiguousOrder"; }
};

class MissingVariable : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "MissingVariable"; }
};

class InfeasibleImport : public Error {
 public:
  InfeasibleImport(const std::string& message, validator::ValidationReport report)
      : Error(message), report_(std::move(report)) {}
  const char* kind() const noexcept override { return "InfeasibleImport"; }
  const validator::ValidationReport& report() const noexcept { return report_; }

 private:
  validator::ValidationReport report_;
};

enum class VarKind { Continuous, Binary };

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct Variable {
  std::string name;  // e.g. X(F1), Right(F1,F2)
  VarKind kind = VarKind::Continuous;
  double lb = 0.0;
  double ub = kInfinity;
  /// Reported when the bound is violated: "dom_nonneg", "dom_binary" or a
  /// fixing such as "fix20_x".
  std::string bound_tag;

  bool fixed() const noexcept { return lb == ub; }
};

enum class Sense { Le, Eq, Ge };

struct Term {
  std::size_t var = 0;
  double coef = 0.0;
};

struct Row {
  std::string name;  // eq<k>_<family>(<ids>)
  std::vector<Term> terms;
  Sense sense = Sense::Ge;
  double rhs = 0.0;

  /// Text before the first '_', e.g. "eq15b".
  std::string family() const;
};

struct Model {
  std::string label;
  std::vector<std::string> ids;  // A, current first
  std::size_t n_current = 0;
  std::vector<Variable> variables;
  std::vector<Row> rows;
  std::vector<Term> objective;
  /// Constant part of the objective (sum of every P^Rej).
  double objective_offset = 0.0;
  /// Literal values from derive_big_m.
  BigM big_m;
  /// Time constant actually written into the rows; never below big_m.m_t.
  double m_t = 0.0;
  double eps_t = 0.0;

  std::size_t index_of(std::string_view name) const;  // throws MissingVariable
  bool has_variable(std::string_view name) const;
  const Row* find_row(std::string_view name) const;

  std::unordered_map<std::string, std::size_t> by_name;
};

/// Full row system for the instance. Fixings of current aircraft and of the
/// roll-in order involving them are variable bounds, not rows.
Model build_model(const Instance& instance);

/// CPLEX-style LP text. The objective constant is written as a comment.
std::string export_lp(const Model& model);

/// What our own LP reader recovers from an exported file; all variables are
/// referenced by name.
struct LpProblem {
  struct NamedTerm {
    std::string var;
    double coef = 0.0;
  };
  struct LpRow {
    std::string name;
    std::vector<NamedTerm> terms;
    Sense sense = Sense::Ge;
    double rhs = 0.0;
  };
  std::vector<NamedTerm> objective;
  std::vector<LpRow> rows;
  std::map<std::string, std::pair<double, double>> bounds;  // explicit only
  std::set<std::string> binaries;
  std::set<std::string> generals;
};

/// Reads the LP subset produced by export_lp. Throws ParseError.
LpProblem parse_lp(std::string_view text);

/// One value per model variable; NaN marks an unassigned entry.
using Point = std::vector<double>;

/// Semantic solution -> full variable point. Spatial binaries are set only
/// for accepted pairs whose presence intervals overlap; every relational
/// binary of a rejected aircraft is 0. Throws AmbiguousOrder when two
/// movement events that must be ordered coincide.
Point derive_binaries(const Model& model, const Instance& instance,
                      const Solution& solution);

struct RowViolation {
  std::string name;  // row name, or <bound_tag>(<variable>) for bounds
  double residual = 0.0;
};

/// Every violated row and bound at tolerance kTolerance, in model order.
/// Throws MissingVariable when the point leaves a variable unassigned.
std::vector<RowViolation> check_satisfaction(const Model& model, const Point& point);

/// Family tag of a violation name (row or bound).
std::string family_of(std::string_view name);

double objective_value(const Model& model, const Point& point);

/// Parses a `name value` listing. Blank lines and text after '#' are
/// ignored; unknown names, malformed values and a missing X, Y, Roll_in,
/// Roll_out or Accept value are ParseErrors. Unlisted other variables are 0.
Point parse_point(const Model& model, std::string_view text);

/// Rebuilds a Solution from the listing and validates it. Throws ParseError
/// or InfeasibleImport.
Solution import_solution(const Model& model, const Instance& instance,
                         std::string_view listing);

}  // namespace hangar::milp

#endif  // HANGAR_MILP_HPP
