#pragma once

#include <stdexcept>
#include <string>

namespace framedcob {

// Malformed or out-of-contract input (dimension mismatch, bad file, ...).
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// The input parses but is not the kind of object required (not a closed
// pseudomanifold, edge in three triangles, disconnected surface, ...).
class StructuralError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Floating point pipeline could not reach a decision (step too coarse,
// lifted endpoint near neither +1 nor -1).
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class UnsupportedError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An invariant that should hold mathematically was violated.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace framedcob
