#pragma once

#include <stdexcept>
#include <string>

namespace parkfun {

// Base class of every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class monotonicity_violation : public error {
public:
    using error::error;
};

// An explicit-prefix sequence without a tail rule was queried past its end.
class sequence_exhausted : public error {
public:
    using error::error;
};

class parse_error : public error {
public:
    using error::error;
};

class budget_exceeded : public error {
public:
    budget_exceeded(const std::string &what, std::string candidates)
        : error("budget exceeded: " + what + " needs " + candidates + " candidates"),
          candidates_(std::move(candidates)) {}

    // Decimal string of the candidate count that triggered the error.
    const std::string &candidates() const noexcept { return candidates_; }

private:
    std::string candidates_;
};

class not_injective : public error {
public:
    using error::error;
};

class not_primitive : public error {
public:
    using error::error;
};

class not_strictly_increasing : public error {
public:
    using error::error;
};

class length_mismatch : public error {
public:
    using error::error;
};

class mixed_degree : public error {
public:
    using error::error;
};

class basis_mismatch : public error {
public:
    using error::error;
};

class unknown_id : public error {
public:
    using error::error;
};

} // namespace parkfun
