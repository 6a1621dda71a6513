#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qlab/cocycle.hpp"
#include "qlab/invariant.hpp"
#include "qlab/quandle.hpp"

namespace qlab {

// Quandle matrix file: first data line is the order n, then n rows of n
// 1-based entries; '#' starts a comment. The transposed flag swaps the row
// and column roles on ingestion.
Quandle read_quandle(const std::string& path, bool transposed = false);
void write_quandle(const std::string& path, const Quandle& X);

// RIG_TRANSPOSED=1 in the environment.
bool rig_transposed_env();

// Cocycle file: header `n A=d1xd2x...`, then n rows of n entries, each entry
// the comma-separated residues of one value.
Cocycle read_cocycle(const std::string& path);
void write_cocycle(const std::string& path, const Cocycle& phi);

// JSON array of {"v": [exponents], "braid": "[...]", "r_e": int, "r_v": int}.
std::vector<RecoveryAnchor> read_anchors(const std::string& path);

struct ExtensionDescriptor {
    std::string base;     // quandle file
    std::string group;    // coefficient string, e.g. "4" or "2x2"
    std::string cocycle;  // cocycle file
};

ExtensionDescriptor read_descriptor(const std::string& path);
void write_descriptor(const std::string& path, const ExtensionDescriptor& d);

std::uint64_t fnv1a64(const std::string& data);

}  // namespace qlab
