#pragma once

#include <stdexcept>
#include <string>

namespace refclass {

class KbError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Undeclared, duplicate or reserved identifier.
class DeclarationError : public KbError {
 public:
  DeclarationError(std::string atom, const std::string& message) : KbError(message), atom_(std::move(atom)) {}
  const std::string& atom() const { return atom_; }

 private:
  std::string atom_;
};

// Ill-formed statement: bad interval, reflexive subset, conflicting sentence form.
class ValidationError : public KbError {
 public:
  using KbError::KbError;
};

// Fused statistics for a (class, property) pair are empty.
class InconsistencyError : public KbError {
 public:
  InconsistencyError(std::string cls, std::string property, const std::string& message)
      : KbError(message), cls_(std::move(cls)), property_(std::move(property)) {}
  const std::string& reference_class() const { return cls_; }
  const std::string& property() const { return property_; }

 private:
  std::string cls_;
  std::string property_;
};

}  // namespace refclass
