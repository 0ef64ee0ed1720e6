#pragma once

#include <stdexcept>
#include <string>

namespace cantor {

/*
 * All library failures are thrown as Error. The kind is stable and is what
 * the CLI reports in its structured error objects; the message is free text.
 */
class Error : public std::runtime_error {
public:
  enum class Kind {
    invalid_input,  // malformed value: bad symbol, bad rational string, ...
    domain,         // structurally valid input outside an operation's domain
    depth,          // query beyond a measure's or function's defined depth
    budget,         // enumeration would exceed the configured word budget
    contract,       // a caller-supplied black box violated its contract
  };

  Error(Kind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  Kind kind() const { return kind_; }

  const char* kind_name() const {
    switch (kind_) {
    case Kind::invalid_input: return "invalid_input";
    case Kind::domain: return "domain";
    case Kind::depth: return "depth";
    case Kind::budget: return "budget";
    case Kind::contract: return "contract";
    }
    return "unknown";
  }

private:
  Kind kind_;
};

}  // namespace cantor
