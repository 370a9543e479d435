#include "tropgw/numeric.hpp"

#include "tropgw/errors.hpp"

#include <cctype>

namespace tropgw {

std::string_view category_name(ErrorCategory category) noexcept {
    switch (category) {
    case ErrorCategory::DimensionMismatch: return "dimension-mismatch";
    case ErrorCategory::EmptyPolytope: return "empty-polytope";
    case ErrorCategory::EmptyStratum: return "empty-stratum";
    case ErrorCategory::Precondition: return "precondition";
    case ErrorCategory::InvalidQuotient: return "invalid-quotient";
    case ErrorCategory::Validation: return "validation";
    case ErrorCategory::OutsideComplex: return "outside-complex";
    case ErrorCategory::Inconsistency: return "inconsistency";
    case ErrorCategory::Gluing: return "gluing";
    case ErrorCategory::NoComponent: return "no-component";
    case ErrorCategory::Diagram: return "diagram";
    case ErrorCategory::DegreeMismatch: return "degree-mismatch";
    case ErrorCategory::UnsupportedRegime: return "unsupported-regime";
    case ErrorCategory::Bookkeeping: return "bookkeeping";
    case ErrorCategory::Ledger: return "ledger";
    case ErrorCategory::Budget: return "budget";
    case ErrorCategory::Parse: return "parse";
    case ErrorCategory::Usage: return "usage";
    }
    return "unknown";
}

namespace {

bool is_integer_literal(std::string_view text) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    if (i == text.size()) return false;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    }
    return true;
}

std::string strip_plus(std::string_view text) {
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    return std::string(text);
}

} // namespace

Integer parse_integer(std::string_view text) {
    if (!is_integer_literal(text)) {
        fail(ErrorCategory::Parse, "malformed integer '" + std::string(text) + "'");
    }
    return Integer(strip_plus(text), 10);
}

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-') {
        fail(ErrorCategory::Parse, "malformed rational '" + std::string(text) + "'");
    }
    Integer d(strip_plus(den), 10);
    if (d == 0) fail(ErrorCategory::Parse, "zero denominator in '" + std::string(text) + "'");
    Rational r(Integer(strip_plus(num), 10), d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational &value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const Integer &value) { return value.get_str(); }

std::string to_string(const RationalPoint &point) {
    std::string out = "(";
    for (std::size_t i = 0; i < point.size(); ++i) {
        if (i) out += ",";
        out += to_string(point[i]);
    }
    return out + ")";
}

RationalPoint add(const RationalPoint &a, const RationalPoint &b) {
    if (a.size() != b.size()) fail(ErrorCategory::DimensionMismatch, "point dimensions differ");
    RationalPoint out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

RationalPoint subtract(const RationalPoint &a, const RationalPoint &b) {
    if (a.size() != b.size()) fail(ErrorCategory::DimensionMismatch, "point dimensions differ");
    RationalPoint out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

RationalPoint scale(const RationalPoint &a, const Rational &factor) {
    RationalPoint out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * factor;
    return out;
}

Integer abs(const Integer &value) {
    Integer out;
    mpz_abs(out.get_mpz_t(), value.get_mpz_t());
    return out;
}

Integer gcd(const Integer &a, const Integer &b) {
    Integer out;
    mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

} // namespace tropgw
