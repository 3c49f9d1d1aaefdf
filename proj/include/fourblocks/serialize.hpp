#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fourblocks/decomposition.hpp"
#include "fourblocks/hamiltonian.hpp"
#include "fourblocks/witness.hpp"

namespace fourblocks {

using Json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// {"pattern":[k1,k2,k3,k4],"paths":[[v...] x4],"junctions":[a,b,c,d]}
Json to_json(const SubdivisionWitness& w);
/// Accepts exactly the witness schema; throws FormatError otherwise.
SubdivisionWitness witness_from_json(const Json& j);

Json to_json(const PipelineCertificate& cert);
Json to_json(const PeelCertificate& cert);
Json to_json(const std::vector<ChordViolation>& violations);

/// Whitespace-separated vertex ids with `#` comments, e.g. a Hamiltonian cycle file.
std::vector<Vertex> read_vertex_list(std::istream& in);

}  // namespace fourblocks
