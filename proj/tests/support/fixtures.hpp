#pragma once

#include <string>
#include <vector>

#include "naive_iit.hpp"
#include "procphi/classical/theory.hpp"
#include "procphi/io/spec.hpp"
#include "procphi/system.hpp"

namespace fixtures {

/// The ten classical TPMs every engine/oracle comparison runs over.
inline const std::vector<std::string> kNetworks = {
    "copy_swap",  "and_or",          "xor_feedback", "product2",   "noisy_copy",
    "majority_parity", "copy_ring", "product3",     "or_and_xor", "noisy_network"};

std::string path(const std::string& name);
procphi::io::SystemSpec load(const std::string& name);
/// Dims and TPM read straight from the JSON, bypassing the library parser.
oracle::Net net(const std::string& name);
procphi::System<procphi::classical::Theory> classical_system(const procphi::io::SystemSpec& spec);

/// Point state / basis distribution for basis index x.
std::vector<double> basis(std::size_t dim, std::size_t x);

}  // namespace fixtures
