#pragma once

#include <stdexcept>
#include <string>

namespace cartan {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of a function.
class DomainError : public Error {
public:
    using Error::Error;
};

// Shape or precondition violated by the caller.
class ContractError : public Error {
public:
    using Error::Error;
};

// Model parameter outside its admissible range.
class ParameterError : public Error {
public:
    using Error::Error;
};

class DivergenceError : public Error {
public:
    using Error::Error;
};

class ConditioningError : public Error {
public:
    using Error::Error;
};

// A kernel produced a Gram matrix that is not Hermitian.
class KernelImplementationError : public Error {
public:
    using Error::Error;
};

class GenerationError : public Error {
public:
    using Error::Error;
};

class SingularityError : public Error {
public:
    using Error::Error;
};

}  // namespace cartan
