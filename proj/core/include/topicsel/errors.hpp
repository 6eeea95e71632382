#pragma once

#include <stdexcept>
#include <string>

namespace topicsel {

// Error taxonomy mirrors the CLI exit codes: parameter/data errors exit 1,
// numerical failures exit 2, I/O failures exit 3.

class ParameterError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class DataError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace topicsel
