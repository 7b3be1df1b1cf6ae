#ifndef RLSHIFT_ERROR_HPP
#define RLSHIFT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace rlshift {

enum class Errc {
    invalid_rank,
    invalid_argument,
    sign_consistency_failure,
    algebra_mismatch,
    fractional_exponent_result,
    point_collision,
    coweight_not_in_target_lattice,
    target_not_simple,
    size_limit_exceeded,
    precision_loss,
    center_product_not_identity,
    internal_inconsistency,
    parse_error,
};

inline std::string_view errc_name(Errc c) noexcept
{
    switch (c) {
    case Errc::invalid_rank: return "InvalidRank";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::sign_consistency_failure: return "SignConsistencyFailure";
    case Errc::algebra_mismatch: return "AlgebraMismatch";
    case Errc::fractional_exponent_result: return "FractionalExponentResult";
    case Errc::point_collision: return "PointCollision";
    case Errc::coweight_not_in_target_lattice: return "CoweightNotInTargetLattice";
    case Errc::target_not_simple: return "TargetNotSimple";
    case Errc::size_limit_exceeded: return "SizeLimitExceeded";
    case Errc::precision_loss: return "PrecisionLoss";
    case Errc::center_product_not_identity: return "CenterProductNotIdentity";
    case Errc::internal_inconsistency: return "InternalInconsistency";
    case Errc::parse_error: return "ParseError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code)
    {
    }

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace rlshift

#endif
