#ifndef FFRT_ERRORS_HPP
#define FFRT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ffrt {

/// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A mathematically invalid request (bad input, contract violation).
struct domain_error : error {
    using error::error;
};

/// Truncated pivoting produced different counts at two precisions.
struct instability_error : domain_error {
    using domain_error::domain_error;
};

/// Malformed command line or expression syntax.
struct usage_error : error {
    using error::error;
};

} // namespace ffrt

#endif
