#pragma once

#include <stdexcept>
#include <string>

namespace wex {

// Base of every error raised by the library. The CLI maps the subclasses
// onto its exit-code contract.
class Error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

// Malformed or out-of-range arguments (dimension mismatch, k out of range, ε ≥ δ).
class ArgumentError : public Error {
public:
	using Error::Error;
};

// An input object violates a type invariant (non-Hermitian, trace ≠ 1, ...).
class ValidationError : public Error {
public:
	using Error::Error;
};

// An operation's precondition does not hold for otherwise valid inputs.
class PreconditionError : public Error {
public:
	using Error::Error;
};

class DomainError : public Error {
public:
	using Error::Error;
};

class NumericalError : public Error {
public:
	NumericalError(const std::string& what, double residual)
	    : Error(what), residual_(residual) {}
	double residual() const noexcept { return residual_; }

private:
	double residual_;
};

// Two independently computed routes disagree beyond tolerance.
class ConsistencyError : public Error {
public:
	using Error::Error;
};

class RouteDisagreement : public Error {
public:
	using Error::Error;
};

class DecompositionError : public Error {
public:
	using Error::Error;
};

class InconclusiveError : public Error {
public:
	using Error::Error;
};

} // namespace wex
