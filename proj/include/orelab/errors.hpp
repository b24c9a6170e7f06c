#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace orelab {

using Elem = std::uint32_t;

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A ring or homomorphism law failed on explicit elements.
class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string law, std::vector<Elem> witness);
  const std::string& law() const noexcept { return law_; }
  const std::vector<Elem>& witness() const noexcept { return witness_; }

 private:
  std::string law_;
  std::vector<Elem> witness_;
};

/// An exponential routine was asked to run above its configured bound.
class SizeGuardExceeded : public Error {
 public:
  SizeGuardExceeded(std::string routine, std::size_t actual, std::size_t limit);
  std::size_t actual() const noexcept { return actual_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t actual_;
  std::size_t limit_;
};

class NotAnIdeal : public Error {
 public:
  using Error::Error;
};

class ImproperIdeal : public Error {
 public:
  using Error::Error;
};

/// Multiplicative closure reached zero. `chain` multiplies (left to right) to 0.
class ZeroAbsorbed : public Error {
 public:
  explicit ZeroAbsorbed(std::vector<Elem> chain);
  const std::vector<Elem>& chain() const noexcept { return chain_; }

 private:
  std::vector<Elem> chain_;
};

class NotOre : public Error {
 public:
  NotOre(Elem r, Elem s);
};

class NotDenominator : public Error {
 public:
  NotDenominator(Elem r, Elem s);
};

/// Two independent computations disagreed. Never expected to fire.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class BadSpec : public Error {
 public:
  using Error::Error;
};

}  // namespace orelab
