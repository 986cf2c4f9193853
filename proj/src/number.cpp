#include "rotnorm/number.hpp"

#include "rotnorm/error.hpp"

#include <cctype>

namespace rotnorm {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Integer parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (!is_integer_literal(s))
            throw Error(ErrorCode::InvalidInput, "malformed rational '" + std::string(text) + "'");
        return Rational(parse_integer(s));
    }
    const auto num = trim(s.substr(0, slash));
    const auto den = trim(s.substr(slash + 1));
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-')
        throw Error(ErrorCode::InvalidInput, "malformed rational '" + std::string(text) + "'");
    const Integer d = parse_integer(den);
    if (d == 0)
        throw Error(ErrorCode::ZeroDenominator, "zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(num), d);
}

std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                            : comma - start);
        out.push_back(parse_rational(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string to_string(const Rational& r) {
    if (denom(r) == 1) return numer(r).str();
    return numer(r).str() + "/" + denom(r).str();
}

std::string to_string(const Integer& z) { return z.str(); }

RatVector to_rational(const IntVector& v) {
    RatVector out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = Rational(v(i));
    return out;
}

std::string_view error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::ClosureTooLarge: return "ClosureTooLarge";
        case ErrorCode::NotAMember: return "NotAMember";
        case ErrorCode::NotSymmetric: return "NotSymmetric";
        case ErrorCode::NotConjInvariant: return "NotConjInvariant";
        case ErrorCode::IdentityGenerator: return "IdentityGenerator";
        case ErrorCode::EmptySubset: return "EmptySubset";
        case ErrorCode::TrivialGroup: return "TrivialGroup";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::FullRank: return "FullRank";
        case ErrorCode::RankDeficient: return "RankDeficient";
        case ErrorCode::FrameMismatch: return "FrameMismatch";
        case ErrorCode::ZeroDenominator: return "ZeroDenominator";
        case ErrorCode::InconsistentLedger: return "InconsistentLedger";
        case ErrorCode::UnknownFixture: return "UnknownFixture";
    }
    return "Unknown";
}

}  // namespace rotnorm
