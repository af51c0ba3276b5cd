#pragma once

#include <stdexcept>
#include <string>

namespace advid {

/// Loss or gradient became non-finite; message names the offending term.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Requested capability is not available on this object (e.g. gradients
/// from a black-box oracle).
class UnsupportedOperationError : public std::runtime_error {
public:
    explicit UnsupportedOperationError(const std::string& what)
        : std::runtime_error(what) {}
};

/// A metric has no defined value on the given inputs (e.g. ASR with zero
/// clean-correct answers, correlation of a constant series).
class UndefinedMetricError : public std::runtime_error {
public:
    explicit UndefinedMetricError(const std::string& what)
        : std::runtime_error(what) {}
};

/// The judge endpoint replied, but not with anything parseable.
class JudgeProtocolError : public std::runtime_error {
public:
    explicit JudgeProtocolError(const std::string& what)
        : std::runtime_error(what) {}
};

/// File-level failure with the offending path / frame in the message.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace advid
