#pragma once

#include <stdexcept>
#include <string>

namespace nla {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define NLA_ERROR(Name)                                   \
    struct Name : Error {                                 \
        explicit Name(const std::string& what)            \
            : Error(std::string(#Name) + ": " + what) {}  \
    }

NLA_ERROR(AmbientMismatch);
NLA_ERROR(NotSymmetric);
NLA_ERROR(NotReal);
NLA_ERROR(NotAnIdeal);
NLA_ERROR(NotAlmostComplex);
NLA_ERROR(NotIntegrable);
NLA_ERROR(QuotientIsZero);
NLA_ERROR(SingularLambda);
NLA_ERROR(InadmissibleParams);
NLA_ERROR(IrrationalRotation);
NLA_ERROR(RowMismatch);
NLA_ERROR(OracleDisagreement);
NLA_ERROR(Degenerate);
NLA_ERROR(UnknownAlgebra);

#undef NLA_ERROR

// Position is a 0-based offset into the parsed text.
struct ParseError : Error {
    ParseError(std::size_t pos, const std::string& expected)
        : Error("ParseError at " + std::to_string(pos) + ": expected " + expected),
          position(pos), expected_token(expected) {}
    std::size_t position;
    std::string expected_token;
};

}  // namespace nla
