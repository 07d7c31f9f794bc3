/* Copyright 2026 The skewlab authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef SKEWLAB_ERRORS_HPP
#define SKEWLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace skewlab {

/// Base error carrying a stable machine-readable code next to the message.
class Error : public std::runtime_error {
   public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

   private:
    std::string code_;
};

/// The requested operation is not available in this ring context
/// (infinite enumeration, missing decision procedure, exhausted bound).
class CapabilityError : public Error {
   public:
    explicit CapabilityError(const std::string& what) : Error("capability", what) {}
    CapabilityError(std::string code, const std::string& what) : Error(std::move(code), what) {}
};

/// A structure map (S^-1, delta) the context does not carry.
class MapUnavailableError : public CapabilityError {
   public:
    explicit MapUnavailableError(const std::string& what)
        : CapabilityError("map-unavailable", what) {}
};

/// A verified internal identity failed to hold; never a user error.
class InvariantBreach : public Error {
   public:
    explicit InvariantBreach(const std::string& what) : Error("invariant-breach", what) {}
};

/// Malformed textual input; position is a 0-based character offset.
class ParseError : public Error {
   public:
    ParseError(const std::string& what, std::size_t pos)
        : Error("parse", what + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const noexcept { return pos_; }

   private:
    std::size_t pos_;
};

inline Error div_by_zero() { return Error("div-zero", "division by zero"); }
inline Error mixed_ctx() { return Error("mixed-ctx", "operands belong to different ring contexts"); }

}  // namespace skewlab

#endif
