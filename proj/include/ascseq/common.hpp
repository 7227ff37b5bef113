#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace ascseq {

/// Arbitrary-precision non-negative integer used for every count.
using BigCount = mpz_class;

/// Arbitrary-precision rational. Arithmetic results are canonical, but a value built from a
/// numerator/denominator pair is not reduced until canonicalize() is called.
using Rat = mpq_class;

/// A precondition on the input was violated (empty word, empty selector, bad pattern, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An identity that must hold by construction did not. Always an implementation bug.
class InconsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A counting series produced a value that cannot be a count.
class IntegrityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad command-line input or an unknown check id. Maps to exit code 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline std::string to_decimal(const BigCount& v) { return v.get_str(10); }

inline std::string to_decimal(const Rat& v) { return v.get_str(10); }

inline BigCount binomial(long n, long k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    BigCount r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline BigCount pow2(unsigned e)
{
    BigCount r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

/// Hard cap on sequence length for exhaustive enumeration.
inline constexpr std::size_t kDefaultMaxLength = 24;

}  // namespace ascseq
