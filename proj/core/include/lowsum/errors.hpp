#ifndef LOWSUM_ERRORS_HPP
#define LOWSUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lowsum {

enum class Errc {
    malformed_input,
    infeasible_zero_sum,
    infeasible_kind,
    dimension_mismatch,
    duplicate_in_prefix,
    already_placed,
    prefix_complete,
    not_zero_sum,
    same_vertex,
    too_large,
    epsilon_out_of_range,
    bad_parameters,
    bad_value,
    precondition_violated,
    witness_not_found,
    trace_mismatch,
    io_error,
};

const char* errc_name(Errc code);

// Domain error carrying one of the codes above. The CLI maps any Error to
// exit code 1; everything it reports on stderr starts with the code name.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace lowsum

#endif
