#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rotnorm {

enum class ErrorCode {
    InvalidInput,
    ClosureTooLarge,
    NotAMember,
    NotSymmetric,
    NotConjInvariant,
    IdentityGenerator,
    EmptySubset,
    TrivialGroup,
    DimensionMismatch,
    FullRank,
    RankDeficient,
    FrameMismatch,
    ZeroDenominator,
    InconsistentLedger,
    UnknownFixture,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    std::string_view name() const noexcept { return error_name(code_); }

    // Internal inconsistencies map to exit status 2, everything else is bad input.
    bool is_inconsistency() const noexcept { return code_ == ErrorCode::InconsistentLedger; }

private:
    ErrorCode code_;
};

}  // namespace rotnorm
