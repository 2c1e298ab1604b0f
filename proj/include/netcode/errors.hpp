#ifndef NETCODE_ERRORS_HPP
#define NETCODE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace netcode {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

#define NETCODE_DEFINE_ERROR(name)                                       \
    struct name : error {                                                \
        explicit name(const std::string& what) : error(what) {}          \
    }

NETCODE_DEFINE_ERROR(non_prime_characteristic);
NETCODE_DEFINE_ERROR(reducible_modulus);
NETCODE_DEFINE_ERROR(field_too_large);
NETCODE_DEFINE_ERROR(field_mismatch);
NETCODE_DEFINE_ERROR(division_by_zero);
NETCODE_DEFINE_ERROR(shape_mismatch);
NETCODE_DEFINE_ERROR(ambient_mismatch);
NETCODE_DEFINE_ERROR(enumeration_budget_exceeded);
NETCODE_DEFINE_ERROR(split_out_of_range);
NETCODE_DEFINE_ERROR(identical_inputs);
NETCODE_DEFINE_ERROR(singleton_code);
NETCODE_DEFINE_ERROR(code_not_t_correcting);
NETCODE_DEFINE_ERROR(unknown_input);
NETCODE_DEFINE_ERROR(invalid_l);
NETCODE_DEFINE_ERROR(invalid_parameters);
NETCODE_DEFINE_ERROR(invalid_distance);
NETCODE_DEFINE_ERROR(unreachable_pair);
NETCODE_DEFINE_ERROR(no_instance_found);
NETCODE_DEFINE_ERROR(no_finite_candidate);
NETCODE_DEFINE_ERROR(parse_error);

#undef NETCODE_DEFINE_ERROR

} // namespace netcode

#endif
