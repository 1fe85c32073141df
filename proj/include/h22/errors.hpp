#pragma once

#include <stdexcept>
#include <string>

namespace h22 {

// Operands built over different site counts.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Input outside the domain of an operation (odd element inverted, zero body, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class LinearAlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AccuracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace h22
