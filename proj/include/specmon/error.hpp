// specmon - analysis of finitely presented special monoids
//
// Error type shared by every module, and the enumeration/search budgets.

#ifndef SPECMON_ERROR_HPP_
#define SPECMON_ERROR_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string

namespace specmon {

  enum class ErrorKind {
    unknown_symbol,
    empty_relator,
    duplicate_relator,
    syntax_error,
    ambiguous_compact_form,
    budget_exceeded,
    not_confluent,
    not_invertible,
    undeclared_variable,
  };

  inline char const* to_string(ErrorKind k) noexcept {
    switch (k) {
      case ErrorKind::unknown_symbol: return "UnknownSymbol";
      case ErrorKind::empty_relator: return "EmptyRelator";
      case ErrorKind::duplicate_relator: return "DuplicateRelator";
      case ErrorKind::syntax_error: return "SyntaxError";
      case ErrorKind::ambiguous_compact_form: return "AmbiguousCompactForm";
      case ErrorKind::budget_exceeded: return "BudgetExceeded";
      case ErrorKind::not_confluent: return "NotConfluent";
      case ErrorKind::not_invertible: return "NotInvertible";
      case ErrorKind::undeclared_variable: return "UndeclaredVariable";
    }
    return "Error";
  }

  // Line and column are 1-based; 0 means "not applicable".
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& msg, size_t line = 0,
          size_t column = 0)
        : std::runtime_error(msg), _kind(kind), _line(line), _column(column) {}

    ErrorKind kind() const noexcept { return _kind; }
    size_t    line() const noexcept { return _line; }
    size_t    column() const noexcept { return _column; }

    bool is_input_error() const noexcept {
      return _kind != ErrorKind::budget_exceeded;
    }

   private:
    ErrorKind _kind;
    size_t    _line;
    size_t    _column;
  };

  // Caps on the exhaustive procedures. Exceeding any of them raises
  // ErrorKind::budget_exceeded; results are never silently truncated.
  struct Limits {
    size_t descendants = 1'000'000;  // words in one descendant set
    size_t enumeration = 1'000'000;  // words produced by an enumeration
    size_t assignments = 10'000'000;  // candidate assignments in solve

    static Limits uniform(size_t n) { return Limits{n, n, n}; }
  };

  [[noreturn]] inline void budget_exceeded(std::string const& what,
                                           size_t             cap) {
    throw Error(ErrorKind::budget_exceeded,
                what + " exceeds the budget of " + std::to_string(cap));
  }

}  // namespace specmon

#endif  // SPECMON_ERROR_HPP_
