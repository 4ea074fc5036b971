#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gaussinterp {

// Every error raised by the library derives from Error and carries a stable
// name. The CLI prints the name on stderr and maps it to an exit code.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)), message_(what) {}

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    // The description without the name prefix.
    [[nodiscard]] const std::string& message() const noexcept { return message_; }

    // Usage errors are caused by bad parameters, not by numerics.
    [[nodiscard]] virtual bool is_usage_error() const noexcept { return false; }

private:
    std::string name_;
    std::string message_;
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what) : Error("InvalidArgument", what) {}
    [[nodiscard]] bool is_usage_error() const noexcept override { return true; }
};

class NonIncreasing : public Error {
public:
    NonIncreasing(std::size_t index, const std::string& what)
        : Error("NonIncreasing", what), index_(index) {}
    [[nodiscard]] std::size_t index() const noexcept { return index_; }
    [[nodiscard]] bool is_usage_error() const noexcept override { return true; }

private:
    std::size_t index_;
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error("DimensionMismatch", what) {}
    [[nodiscard]] bool is_usage_error() const noexcept override { return true; }
};

class IndexOutOfRange : public Error {
public:
    explicit IndexOutOfRange(const std::string& what) : Error("IndexOutOfRange", what) {}
    [[nodiscard]] bool is_usage_error() const noexcept override { return true; }
};

class FactorizationFailure : public Error {
public:
    explicit FactorizationFailure(const std::string& what) : Error("FactorizationFailure", what) {}
};

class InsufficientData : public Error {
public:
    explicit InsufficientData(const std::string& what) : Error("InsufficientData", what) {}
};

class ZeroData : public Error {
public:
    explicit ZeroData(const std::string& what) : Error("ZeroData", what) {}
};

class DivergentDerivative : public Error {
public:
    explicit DivergentDerivative(const std::string& what) : Error("DivergentDerivative", what) {}
};

class NonFinite : public Error {
public:
    explicit NonFinite(const std::string& what) : Error("NonFinite", what) {}
    [[nodiscard]] bool is_usage_error() const noexcept override { return true; }
};

}  // namespace gaussinterp
