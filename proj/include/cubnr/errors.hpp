#ifndef CUBNR_ERRORS_HPP
#define CUBNR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cubnr {

// Failure classes map onto the CLI exit-code contract:
//   Input ........ malformed expression / manifest / bundle invariant (exit 3)
//   Unsupported .. exact computation not possible for this geometry (exit 2)
//   Hypothesis ... input is valid but violates a pipeline hypothesis (exit 1)
enum class Fail { Input, Unsupported, Hypothesis };

class Failure : public std::runtime_error {
public:
    Failure(Fail kind, std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail),
          kind_(kind),
          code_(std::move(code)) {}

    Fail kind() const { return kind_; }
    const std::string& code() const { return code_; }

private:
    Fail kind_;
    std::string code_;
};

[[noreturn]] inline void fail_input(const std::string& code, const std::string& detail) {
    throw Failure(Fail::Input, code, detail);
}
[[noreturn]] inline void fail_unsupported(const std::string& code, const std::string& detail) {
    throw Failure(Fail::Unsupported, code, detail);
}
[[noreturn]] inline void fail_hypothesis(const std::string& code, const std::string& detail) {
    throw Failure(Fail::Hypothesis, code, detail);
}

}  // namespace cubnr

#endif
