#pragma once

#include <stdexcept>
#include <string>

namespace qact {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

struct PoleError : Error {
    explicit PoleError(const std::string& what) : Error(what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& what) : Error(what) {}
};

// Parse failures carry the byte offset and the token set that would have been accepted.
struct ParseError : Error {
    std::size_t offset;
    std::string expected;
    ParseError(std::size_t off, const std::string& exp, const std::string& what)
        : Error(what), offset(off), expected(exp) {}
};

struct UnboundParameter : Error {
    std::string name;
    explicit UnboundParameter(const std::string& n)
        : Error("unbound parameter: " + n), name(n) {}
};

struct DegenerateGammaSet : Error {
    explicit DegenerateGammaSet(const std::string& what) : Error(what) {}
};

struct CorpusError : Error {
    explicit CorpusError(const std::string& what) : Error(what) {}
};

}  // namespace qact
