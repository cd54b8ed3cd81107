#pragma once

#include <stdexcept>
#include <string>

namespace sdt {

// Invalid input values: malformed text, inadmissible shapes, out-of-range
// arguments. The CLI maps these to exit code 1.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// A guarantee the library itself is responsible for did not hold. Never
// expected to fire on input that passed the domain checks.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw domain_error(what);
}

inline void internal_check(bool cond, const std::string& what) {
    if (!cond) throw internal_error(what);
}

} // namespace sdt
