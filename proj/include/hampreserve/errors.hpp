#ifndef HAMPRESERVE_ERRORS_HPP
#define HAMPRESERVE_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace hp {

// Bad arguments: precondition on the caller's side was violated.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The operation's sufficient condition does not hold for this input;
// the caller may fall back to another route.
struct NotApplicableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A numeric hypothesis (an order bound or degree bound) is violated.
struct BoundViolationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input belongs to an explicitly excluded exceptional family.
struct ExceptionalInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A step that is provably feasible under the stated hypotheses failed;
// indicates an implementation bug, never a bad input.
struct InternalConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

// Requested disjoint paths do not exist; carries the blocking cut.
struct InfeasibleError : std::runtime_error {
    InfeasibleError(const std::string& msg, std::vector<int> cut)
        : std::runtime_error(msg), blocking_cut(std::move(cut)) {}
    std::vector<int> blocking_cut;
};

// Input too large for a brute-force oracle.
struct SizeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Greedy cycle extraction ran out of backtracking budget.
struct ExtractionFailureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Certificate does not reference the supplied graph.
struct StaleCertificateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hp

#endif
