#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace corecrystal {

// Domain-level precondition failure. `code()` is a stable machine-readable
// tag ("not-a-core", "ell-too-small", ...); what() prepends it to the detail.
class domain_error : public std::runtime_error {
public:
    domain_error(std::string code, const std::string& detail)
        : std::runtime_error(detail.empty() ? code : code + ": " + detail),
          code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const char* code, const std::string& detail = "") {
    throw domain_error(code, detail);
}

// Broken internal invariant (a theorem the library relies on failed to hold).
[[noreturn]] inline void broken(const std::string& detail) {
    throw std::logic_error("internal invariant violated: " + detail);
}

inline void require(bool ok, const char* code, const std::string& detail = "") {
    if (!ok) fail(code, detail);
}

} // namespace corecrystal
