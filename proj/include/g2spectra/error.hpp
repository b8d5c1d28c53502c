#pragma once

#include <stdexcept>
#include <string>

namespace g2s {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero") {}
};

class ConductorTooLarge : public Error {
public:
  explicit ConductorTooLarge(long n)
      : Error("conductor " + std::to_string(n) + " exceeds the cap of 100000") {}
};

class ParseError : public Error {
public:
  ParseError(const std::string& source, int line, int column, const std::string& msg)
      : Error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

class DataError : public Error {
public:
  using Error::Error;
};

class NotReal : public Error {
public:
  NotReal() : Error("value is not real") {}
};

}  // namespace g2s
