#pragma once

#include <stdexcept>
#include <string>

namespace igcover {

/// Base class for every error thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A parameter outside its documented domain (e.g. k = 0).
struct parameter_error : error {
    using error::error;
};

/// A vertex index that does not exist in the host graph.
struct invalid_vertex_error : error {
    using error::error;
};

/// An operation whose result is undefined for the given input
/// (e.g. vertex connectivity of the empty graph).
struct undefined_input_error : error {
    using error::error;
};

/// A cover whose subsets reference vertices outside the host graph,
/// or whose shape does not match the host.
struct invalid_cover_error : error {
    using error::error;
};

struct not_a_caterpillar_error : error {
    using error::error;
};

struct not_a_tree_error : error {
    using error::error;
};

struct disconnected_error : error {
    using error::error;
};

/// The requested object provably does not exist (e.g. covering a graph
/// with subsets capped below two vertices).
struct infeasible_error : error {
    using error::error;
};

/// A search hit its node or wall-clock budget before completing.
/// Distinct from infeasible_error: nothing was proved.
struct budget_exhausted_error : error {
    using error::error;
};

/// A 3-Partition instance violating its invariants.
struct invalid_instance_error : error {
    using error::error;
};

/// A cover whose shape does not correspond to the given reduction.
struct mismatched_instance_error : error {
    using error::error;
};

/// A brute-force routine asked to run beyond its desk-scale limit.
struct size_limit_error : error {
    using error::error;
};

/// A bounded density function that never certifies the edge count.
struct no_certificate_error : error {
    using error::error;
};

/// A hypergraph cover subset exceeding the declared size cap.
struct cap_violation_error : error {
    using error::error;
};

/// Malformed input text; carries the 1-based line number.
struct parse_error : error {
    int line;
    parse_error(int line_number, const std::string& what)
        : error("line " + std::to_string(line_number) + ": " + what), line(line_number) {}
};

} // namespace igcover
