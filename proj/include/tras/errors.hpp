#pragma once

#include <stdexcept>
#include <string>

namespace tras {

// Base type for all library errors. `category()` is the stable
// machine-parsable tag the CLI prints on failure.
class Error : public std::runtime_error {
public:
    Error(std::string category, const std::string& msg)
        : std::runtime_error(msg), category_(std::move(category)) {}
    const std::string& category() const { return category_; }

private:
    std::string category_;
};

// Non-finite state/input fed into the simulation.
class InvalidStateError : public Error {
public:
    explicit InvalidStateError(const std::string& msg) : Error("invalid-state", msg) {}
};

// Integration diverged (|field| beyond the blow-up bound).
class BlowUpError : public Error {
public:
    explicit BlowUpError(const std::string& msg) : Error("blow-up", msg) {}
};

// Vector/matrix dimension mismatch.
class ShapeError : public Error {
public:
    explicit ShapeError(const std::string& msg) : Error("shape", msg) {}
};

// API misuse, e.g. stepping a finished episode.
class ProtocolError : public Error {
public:
    explicit ProtocolError(const std::string& msg) : Error("protocol", msg) {}
};

// Non-finite losses/gradients during training.
class DivergenceError : public Error {
public:
    explicit DivergenceError(const std::string& msg) : Error("divergence", msg) {}
};

// Bad configuration value or unparseable config file.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error("config", msg) {}
};

// Filesystem failures (unreadable input, unwritable output).
class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error("io", msg) {}
};

// Checkpoint header/shape incompatible with the requested use.
class VersionError : public Error {
public:
    explicit VersionError(const std::string& msg) : Error("checkpoint-version", msg) {}
};

}  // namespace tras
