#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zdk {

// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mathematical precondition failures (CLI exit code 2).
class MathError : public Error {
 public:
  using Error::Error;
};

class NonCoprimeModuli : public MathError {
 public:
  NonCoprimeModuli() : MathError("moduli are not coprime") {}
};

class UglyPrime : public MathError {
 public:
  explicit UglyPrime(unsigned long p)
      : MathError("prime " + std::to_string(p) + " divides a denominator") {}
};

class NotZeroDimensional : public MathError {
 public:
  NotZeroDimensional() : MathError("ideal is not zero-dimensional") {}
};

class ArityMismatch : public MathError {
 public:
  ArityMismatch() : MathError("power products have different arity") {}
};

class DimensionMismatch : public MathError {
 public:
  DimensionMismatch(std::size_t want, std::size_t got)
      : MathError("vector has length " + std::to_string(got) + ", expected " +
                  std::to_string(want)) {}
};

class ZeroPolynomial : public MathError {
 public:
  ZeroPolynomial() : MathError("polynomial is zero") {}
};

class ConstantPolynomial : public MathError {
 public:
  ConstantPolynomial() : MathError("polynomial is constant") {}
};

class ZeroIdeal : public MathError {
 public:
  ZeroIdeal() : MathError("ideal is zero") {}
};

class FieldMismatch : public MathError {
 public:
  FieldMismatch() : MathError("operation requires a different coefficient field") {}
};

// A randomized loop ran out of attempts (CLI exit code 3).
class HeuristicExhausted : public Error {
 public:
  explicit HeuristicExhausted(int attempts)
      : Error("no decision after " + std::to_string(attempts) + " random linear forms") {}
  HeuristicExhausted(int attempts, const std::string& what)
      : Error("no " + what + " after " + std::to_string(attempts) + " attempts") {}
};

// Input errors (CLI exit code 1).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class UnknownVariable : public ParseError {
 public:
  UnknownVariable(std::size_t line, std::size_t column, const std::string& name)
      : ParseError(line, column, "unknown variable '" + name + "'") {}
};

class NonPrimeField : public ParseError {
 public:
  NonPrimeField(std::size_t line, std::size_t column, const std::string& p)
      : ParseError(line, column, "F" + p + " is not a supported prime field") {}
};

}  // namespace zdk
