#pragma once

#include <stdexcept>
#include <string>

namespace kgrass {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NonPartitionResult : Error {
    explicit NonPartitionResult(const std::string& what) : Error(what) {}
};

struct EmptyProduct : Error {
    explicit EmptyProduct(const std::string& what) : Error(what) {}
};

struct InvalidCase : Error {
    explicit InvalidCase(const std::string& what) : Error(what) {}
};

struct NotFull : Error {
    explicit NotFull(const std::string& what) : Error(what) {}
};

struct NotSymmetric : Error {
    explicit NotSymmetric(const std::string& what) : Error(what) {}
};

struct NotInSpan : Error {
    explicit NotInSpan(const std::string& what) : Error(what) {}
};

struct NotMultiplicityFreeCase : Error {
    explicit NotMultiplicityFreeCase(const std::string& what) : Error(what) {}
};

struct PreconditionError : Error {
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

// Raised when a matching pipeline cannot pair every tableau; carries the
// instance so verification reports can name the counterexample.
struct MatchingConstructionError : Error {
    explicit MatchingConstructionError(const std::string& what) : Error(what) {}
};

} // namespace kgrass
