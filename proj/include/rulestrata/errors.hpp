#pragma once

#include <stdexcept>
#include <string>

namespace rulestrata {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyInput : Error {
    using Error::Error;
};

struct SchemaViolation : Error {
    using Error::Error;
};

struct UnknownItem : Error {
    using Error::Error;
};

struct EmptyDatabase : Error {
    EmptyDatabase() : Error("database has no transactions") {}
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

struct UndefinedConfidence : Error {
    using Error::Error;
};

struct DegenerateResponse : Error {
    using Error::Error;
};

struct EmptySelection : Error {
    using Error::Error;
};

struct TooLargeForOracle : Error {
    using Error::Error;
};

} // namespace rulestrata
