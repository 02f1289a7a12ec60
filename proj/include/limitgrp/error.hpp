#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace limitgrp {

/// Base for every error raised by the library. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedWord : public Error {
 public:
  using Error::Error;
};

class RankMismatch : public Error {
 public:
  RankMismatch(std::size_t expected, std::size_t got)
      : Error("rank mismatch: expected " + std::to_string(expected) + ", got " +
              std::to_string(got)) {}
  explicit RankMismatch(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              msg),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// Raised when an SL(2,C) element sits within the degeneracy threshold of trace -2.
class DegenerateElement : public Error {
 public:
  explicit DegenerateElement(double trace_gap)
      : Error("degenerate element: |trace + 2| = " + std::to_string(trace_gap)),
        trace_gap_(trace_gap) {}

  double trace_gap() const noexcept { return trace_gap_; }

 private:
  double trace_gap_;
};

class CertificationError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace limitgrp
