#pragma once

#include <stdexcept>
#include <string>

namespace simplicorpus {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A sentence with no word tokens was passed to the readability formula.
class EmptySentence : public Error {
 public:
  EmptySentence() : Error("sentence has no word tokens") {}
};

class EmptyCorpus : public Error {
 public:
  explicit EmptyCorpus(const std::string& what = "corpus is empty") : Error(what) {}
};

class EmptyReferences : public Error {
 public:
  EmptyReferences() : Error("SARI instance has no references") {}
};

class RaggedReferences : public Error {
 public:
  RaggedReferences(std::size_t expected, std::size_t got, std::size_t index)
      : Error("instance " + std::to_string(index) + " has " + std::to_string(got) +
              " references, expected " + std::to_string(expected)) {}
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace simplicorpus
