#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qaffine {

// Base for every domain error raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

class RootOutsideDomain : public Error { using Error::Error; };
class RankOutOfRange : public Error { using Error::Error; };
class NotInHatIQ : public Error { using Error::Error; };
class DecompositionUnavailable : public Error { using Error::Error; };
class NotInW0 : public Error { using Error::Error; };
class UnclassifiablePoint : public Error { using Error::Error; };
class SumNotStabilized : public Error { using Error::Error; };
class InvalidQDatum : public Error { using Error::Error; };

}  // namespace qaffine
