#ifndef QCC_ERRORS_HPP
#define QCC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qcc {

// Error taxonomy used across the library.  The CLI maps these onto
// exit codes: domain_error -> 2, size_error -> 3, internal_error -> 4.

// Bad input: wrong vector length, vertex out of range, precondition
// violated by the caller's data.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A hard guard tripped (search bound, dimension cap, clique budget).
struct size_error : std::runtime_error {
    explicit size_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A certified invariant failed.  Always a bug, never user error.
struct internal_error : std::runtime_error {
    explicit internal_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Sampled data turned out non-generic (interpolation mismatch,
// seed disagreement).  Retry with other seeds or larger primes.
struct genericity_error : domain_error {
    explicit genericity_error(const std::string& msg) : domain_error(msg) {}
};

inline void check(bool cond, const std::string& msg) {
    if (!cond) throw domain_error(msg);
}

inline void require_internal(bool cond, const std::string& msg) {
    if (!cond) throw internal_error(msg);
}

} // namespace qcc

#endif
