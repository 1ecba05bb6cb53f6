#pragma once

#include <stdexcept>
#include <string>

namespace derposet {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// poset construction
struct DuplicateLabel : Error { using Error::Error; };
struct UnknownLabel : Error { using Error::Error; };
struct CycleDetected : Error { using Error::Error; };
struct EmptyPoset : Error { using Error::Error; };
struct BadProbability : Error { using Error::Error; };

// exact linear algebra
struct NotSquare : Error { using Error::Error; };
struct NotUnimodular : Error { using Error::Error; };
struct NotPrime : Error { using Error::Error; };
struct SizeMismatch : Error { using Error::Error; };
struct FieldMismatch : Error { using Error::Error; };
struct RingMismatch : Error { using Error::Error; };

// sheaves
struct BaseMismatch : Error { using Error::Error; };
struct MissingElement : Error { using Error::Error; };
struct NotClosed : Error { using Error::Error; };
struct ElementOnWrongSide : Error { using Error::Error; };

// constructions
struct EmptyList : Error { using Error::Error; };
struct MissingComponent : Error { using Error::Error; };
struct EmptyComponent : Error { using Error::Error; };
struct NotBipartite : Error { using Error::Error; };

// file formats
struct SyntaxError : Error {
    int line;
    SyntaxError(int line_, const std::string& msg)
        : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

} // namespace derposet
