#ifndef MINV_ERROR_HPP
#define MINV_ERROR_HPP

#include <stdexcept>
#include <string>

namespace minv {

enum class Err {
    CompositeModulus,
    ReducibleModulus,
    DivisionByZero,
    FieldMismatch,
    CharZero,
    CharTwo,
    ShapeMismatch,
    WrongDimension,
    IndexOutOfRange,
    GeneratorOutOfRange,
    SingularG,
    BudgetExceeded,
    NotInU,
    PointNotInU,
    EmptyInput,
    InvalidInput,
    ParseError,
    Internal,
};

const char* err_name(Err code);

/// All library failures throw this; `code()` identifies the condition.
class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& what)
        : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}

    Err code() const noexcept { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

} // namespace minv

#endif
