#pragma once

#include <stdexcept>
#include <string>

namespace evoseq {

/// Base class for all engine errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid or inconsistent configuration (bad field values, missing keys).
class ConfigError : public Error {
  public:
    using Error::Error;
};

/// Malformed input file (CSV landscape, Potts parameter file, trajectory).
class ParseError : public Error {
  public:
    using Error::Error;
};

/// Network-level failure talking to an LLM endpoint or external oracle.
class TransportError : public Error {
  public:
    using Error::Error;
};

/// A fitness oracle could not score a sequence.
class OracleError : public Error {
  public:
    using Error::Error;
};

} // namespace evoseq
