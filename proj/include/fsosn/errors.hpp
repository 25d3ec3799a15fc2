#pragma once

#include <stdexcept>
#include <string>

namespace fsosn {

// Invalid constellation, scenario or run configuration.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A satellite, station or node that is not part of the model.
class LookupError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Geometric input outside the function's domain (zero vector, point inside Earth).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Identifier that cannot be rendered in the x1PPSS scheme.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exhaustive path enumeration asked to handle a graph above its size limit.
class OracleLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace fsosn
