#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace hcluster {

// Base class for every error raised by the combinatorial model.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParams : public ModelError {
 public:
  using ModelError::ModelError;
};

// A vertex list that is not a separated (d+1)-subset of {1..m}.
class InvalidObject : public ModelError {
 public:
  using ModelError::ModelError;
};

// Base for the ways a candidate set can fail to be cluster tilting.
class NotATilting : public ModelError {
 public:
  using ModelError::ModelError;
};

class WrongCount : public NotATilting {
 public:
  WrongCount(std::size_t expected, std::size_t actual)
      : NotATilting("expected " + std::to_string(expected) +
                    " summands, got " + std::to_string(actual)),
        expected_(expected),
        actual_(actual) {}

  std::size_t expected() const noexcept { return expected_; }
  std::size_t actual() const noexcept { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

// Carries the offending pair in text form ("a,b,c" / "x,y,z").
class IntertwiningPair : public NotATilting {
 public:
  IntertwiningPair(std::string first, std::string second)
      : NotATilting("summands " + first + " and " + second + " intertwine"),
        first_(std::move(first)),
        second_(std::move(second)) {}

  const std::string& first() const noexcept { return first_; }
  const std::string& second() const noexcept { return second_; }

 private:
  std::string first_;
  std::string second_;
};

class NotASummand : public ModelError {
 public:
  using ModelError::ModelError;
};

class NoResolution : public ModelError {
 public:
  using ModelError::ModelError;
};

class PreconditionViolation : public ModelError {
 public:
  using ModelError::ModelError;
};

}  // namespace hcluster
