#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace isoprod {

/// Reasons an operation refuses its input.
enum class error_kind {
    not_positive_definite,
    not_reduced,
    divisibility_violation,
    not_in_cone,
    zero_pair,
    non_coprime,
    not_ample,
    radius_insufficient,
    d_too_small,
    not_found,
    irreducible_input,
    invalid_argument,
};

constexpr std::string_view to_string(error_kind k) {
    switch (k) {
        case error_kind::not_positive_definite: return "not-positive-definite";
        case error_kind::not_reduced: return "not-reduced";
        case error_kind::divisibility_violation: return "divisibility-violation";
        case error_kind::not_in_cone: return "not-in-cone";
        case error_kind::zero_pair: return "zero-pair";
        case error_kind::non_coprime: return "non-coprime";
        case error_kind::not_ample: return "not-ample";
        case error_kind::radius_insufficient: return "radius-insufficient";
        case error_kind::d_too_small: return "d-too-small";
        case error_kind::not_found: return "not-found";
        case error_kind::irreducible_input: return "irreducible-input";
        case error_kind::invalid_argument: return "invalid-argument";
    }
    return "unknown";
}

/// Thrown when a documented precondition of an operation does not hold.
class precondition_error : public std::domain_error {
public:
    precondition_error(error_kind kind, const std::string& what)
        : std::domain_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    error_kind kind() const noexcept { return kind_; }

private:
    error_kind kind_;
};

}  // namespace isoprod
