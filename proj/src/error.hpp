#ifndef ATG_ERROR_HPP
#define ATG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace atg {

enum class ErrorKind {
    Parse,       // malformed input text
    Invalid,     // argument violates a precondition
    Guard,       // size guard exceeded
    Claim,       // a certificate failed to prove its claim
    Internal,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, std::string msg)
        : std::runtime_error(std::move(msg)), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void throw_parse(const std::string& msg) {
    throw Error(ErrorKind::Parse, msg);
}
[[noreturn]] inline void throw_invalid(const std::string& msg) {
    throw Error(ErrorKind::Invalid, msg);
}
[[noreturn]] inline void throw_guard(const std::string& msg) {
    throw Error(ErrorKind::Guard, msg);
}
[[noreturn]] inline void throw_claim(const std::string& msg) {
    throw Error(ErrorKind::Claim, msg);
}

}  // namespace atg

#endif
