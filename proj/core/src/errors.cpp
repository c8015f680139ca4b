#include "lowsum/errors.hpp"

namespace lowsum {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::malformed_input: return "MalformedInput";
        case Errc::infeasible_zero_sum: return "InfeasibleZeroSum";
        case Errc::infeasible_kind: return "InfeasibleKind";
        case Errc::dimension_mismatch: return "DimensionMismatch";
        case Errc::duplicate_in_prefix: return "DuplicateInPrefix";
        case Errc::already_placed: return "AlreadyPlaced";
        case Errc::prefix_complete: return "PrefixComplete";
        case Errc::not_zero_sum: return "NotZeroSum";
        case Errc::same_vertex: return "SameVertex";
        case Errc::too_large: return "TooLarge";
        case Errc::epsilon_out_of_range: return "EpsilonOutOfRange";
        case Errc::bad_parameters: return "BadParameters";
        case Errc::bad_value: return "BadValue";
        case Errc::precondition_violated: return "PreconditionViolated";
        case Errc::witness_not_found: return "WitnessNotFound";
        case Errc::trace_mismatch: return "TraceMismatch";
        case Errc::io_error: return "IoError";
    }
    return "UnknownError";
}

} // namespace lowsum
