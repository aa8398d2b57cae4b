#ifndef MFW_ERRORS_HPP
#define MFW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mfw {

// Failure classes surfaced through the C API as status codes and by the
// CLI as distinct exit codes.
enum class ErrorKind {
    Argument,        // bad parameter or malformed data
    Parse,           // config file syntax / unknown key
    Io,              // file system failure
    DataRejected,    // positivity floor W <= 0 for the supplied data
    Cfl,             // time step exceeds the stability bound
    FloorViolation,  // K(t) < K_data/2 or min(y + f w_inf) < W/2
    SupportEscape,   // support left [-2A, 2A] in the a variable
    NoConvergence,   // Picard iteration exhausted max_iters
    Numeric,         // NaN/Inf produced during integration
};

class SolverError : public std::runtime_error {
public:
    SolverError(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw SolverError(kind, what);
}

} // namespace mfw

#endif
