#pragma once

// File formats.  Problems come in as JSON ({ambient_dim, polytopes,
// optional partition}); partitions and certificates go out as JSON.  All
// writers emit a canonical form (ordered keys, 2-space indent, trailing
// newline) so that write -> read -> write is byte-identical.

#include <optional>
#include <string>
#include <vector>

#include "reskit/construct.hpp"

namespace reskit {

struct MemberSpec {
    std::vector<VecZ> points;            // support, colex order
    bool from_terms = false;             // serialized as terms with names
    std::vector<std::string> coeff_names; // aligned with points when from_terms
};

struct ProblemFile {
    int ambient_dim = 0;
    std::vector<MemberSpec> members;
    std::optional<PartitionMatrix> partition;
};

ProblemFile parse_problem(const std::string& json_text);
ProblemFile read_problem_file(const std::string& path);
std::string problem_to_json(const ProblemFile& p);

std::string partition_to_json(const PartitionMatrix& m);
// Accepts either a standalone partition file or a full problem file with an
// embedded partition.
PartitionMatrix parse_partition(const std::string& json_text, int ambient_dim);
PartitionMatrix read_partition_file(const std::string& path, int ambient_dim);

// Coefficient display names per member (user supplied or letter+rank).
std::vector<std::vector<std::string>> coefficient_names(const ProblemFile& p);

std::string certificate_to_json(const ResidueCertificate& cert,
                                const std::vector<LatticePolytope>& family,
                                const ProblemFile& problem);

std::vector<LatticePolytope> family_of(const ProblemFile& p);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

} // namespace reskit
