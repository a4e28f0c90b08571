#pragma once

#include <stdexcept>
#include <string>

namespace surfgeo {

// Domain error: the input is structurally wrong (bad surface, bad graph, ...).
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// A closed-surface axiom failed. `condition` names the violated axiom
// ("edge-vertices", "face-structure", "edge-faces", "umbrella",
// "vertex-degree", "connected").
class AxiomError : public DomainError {
public:
  AxiomError(std::string condition, const std::string& msg)
      : DomainError("axiom violation [" + condition + "]: " + msg),
        condition_(std::move(condition)) {}
  const std::string& condition() const { return condition_; }

private:
  std::string condition_;
};

class ParseError : public DomainError {
public:
  ParseError(int line, const std::string& msg)
      : DomainError("parse error at line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

} // namespace surfgeo
