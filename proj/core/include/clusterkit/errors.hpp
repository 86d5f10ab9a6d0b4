#pragma once

#include <stdexcept>
#include <string>

namespace clusterkit {

/* Base class for all domain errors raised by the library. */
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/* Two operands live over different variable ambients. */
class ambient_mismatch_error : public error {
public:
    using error::error;
};

/* A variable name is not declared in the ambient at hand. */
class unknown_variable_error : public error {
public:
    using error::error;
};

class divide_by_zero_error : public error {
public:
    using error::error;
};

/* Exact division was requested but the quotient is not a Laurent polynomial. */
class not_divisible_error : public error {
public:
    using error::error;
};

/* A variable assigned 0 appears with a negative exponent. */
class zero_to_negative_power_error : public error {
public:
    using error::error;
};

class unknown_vertex_error : public error {
public:
    using error::error;
};

class frozen_vertex_error : public error {
public:
    using error::error;
};

/* A word failed a reducedness precondition. */
class not_reduced_error : public error {
public:
    using error::error;
};

class index_out_of_range_error : public error {
public:
    using error::error;
};

/* Prefix length outside [0, length of word]. */
class prefix_out_of_range_error : public error {
public:
    using error::error;
};

/* Data handed to a constructor violates the construction's hypothesis. */
class hypothesis_violated_error : public error {
public:
    using error::error;
};

class invalid_morphism_error : public error {
public:
    using error::error;
};

/* A mutation sequence touches a killed vertex. */
class killed_vertex_error : public error {
public:
    using error::error;
};

/* The image of a morphism is not a union of connected components. */
class not_a_component_error : public error {
public:
    using error::error;
};

/* Two redundant computations of the same value disagreed; indicates a bug
   in this library, not in the caller's data. */
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace clusterkit
