#ifndef POLARTREE_ERROR_HPP
#define POLARTREE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace polartree {

enum class ErrorCode {
    DivisionByZero,
    ZeroPolynomial,
    FieldMismatch,
    FieldTooSmall,
    Indeterminate,
    TruncationTooShort,
    TruncationBudgetExceeded,
    UnresolvedBranch,
    InputViolatesSimplicity,
    NoCover,
    NoPostbar,
    NotApplicable,
    InternalInconsistency,
    SyntaxError,
    NegativeExponentWithoutLaurent,
    SNotLargeEnough,
    NoGenericFound,
    PlacementUnresolved,
    InvalidArgument,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

// Raised by the Newton-Puiseux solver when an edge polynomial has roots outside
// the working field. Carries the number of branches that could not be located.
class UnresolvedBranchError : public Error {
   public:
    UnresolvedBranchError(int branch_count, long ramification, const std::string& what)
        : Error(ErrorCode::UnresolvedBranch, what), branch_count_(branch_count), ramification_(ramification) {}
    int branch_count() const noexcept { return branch_count_; }
    long ramification() const noexcept { return ramification_; }

   private:
    int branch_count_;
    long ramification_;
};

class SyntaxError : public Error {
   public:
    SyntaxError(ErrorCode code, int line, int column, const std::string& msg)
        : Error(code, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

   private:
    int line_;
    int column_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace polartree

#endif
