/*
   Copyright 2026 The genuscenter Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GENUS_ERROR_HPP
#define GENUS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace genus {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidArgument : Error {
    using Error::Error;
};

struct MalformedRational : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

struct SingularMatrix : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

/// Missing F or R entry for an admissible channel.
struct IncompleteData : Error {
    using Error::Error;
};

struct IllFormedDiagram : Error {
    using Error::Error;
    IllFormedDiagram(const std::string &msg, int slice) : Error(msg), slice_index(slice) {}
    int slice_index = -1;
};

struct InternalInconsistency : Error {
    using Error::Error;
};

struct PremodularRequired : Error {
    using Error::Error;
};

struct NonSplit : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct KeyNotFound : Error {
    using Error::Error;
};

}  // namespace genus

#endif
