// Copyright 2026 The iclq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace iclq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Qubit counts or matrix shapes that do not fit together.
class DimensionError : public Error {
   public:
    using Error::Error;
};

/// A 1-based qubit index outside the register.
class IndexError : public Error {
   public:
    using Error::Error;
};

/// Inputs that violate a documented precondition (normalization,
/// orthonormality, projector completeness, parity hints, ...).
class ValidationError : public Error {
   public:
    using Error::Error;
};

/// The shared entangled resource is not the expected Bell pair.
class ResourceError : public Error {
   public:
    using Error::Error;
};

/// A two-qubit state that matches no Bell state.
class DecodeError : public Error {
   public:
    using Error::Error;
};

/// Receive on an empty classical channel.
class WouldBlockError : public Error {
   public:
    using Error::Error;
};

/// Filesystem failures; the message carries the path.
class IoError : public Error {
   public:
    using Error::Error;
};

/// Wire demo: peer speaks a different protocol version or sends junk.
class ProtocolVersionError : public Error {
   public:
    using Error::Error;
};

/// Wire demo: socket setup failed or the peer went away.
class TransportError : public Error {
   public:
    using Error::Error;
};

}  // namespace iclq
