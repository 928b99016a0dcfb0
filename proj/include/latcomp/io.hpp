#pragma once

#include <string>

#include "latcomp/lattice.hpp"

namespace latcomp::io {

using num::BigInt;
using num::Rat;

// Instance files are UTF-8 text: "key: value" headers in a fixed order,
// then whitespace-separated decimal payload blocks.  Rationals are always
// written "num/den".
enum class Kind { subsetsum, mod_subsetsum, cvp, svp, ip, mvp, or_manifest };

std::string kind_name(Kind k);
Kind kind_from_name(const std::string& s);

// Disjunction of compressed members: YES iff some member is YES.
struct OrManifest {
    std::vector<lat::RqCompressed> members;
};

struct AnyInstance {
    Kind kind = Kind::subsetsum;
    std::optional<lat::SubsetSumInstance> subsetsum;
    std::optional<lat::ModSubsetSumInstance> mod_subsetsum;
    std::optional<lat::GapCvpInstance> cvp;
    std::optional<lat::GapSvpInstance> svp;
    std::optional<lat::RqCompressed> compressed; // ip / mvp
    std::optional<OrManifest> manifest;
};

AnyInstance parse_instance(const std::string& text);
AnyInstance read_instance(const std::string& path);

std::string to_text(const lat::SubsetSumInstance& inst);
std::string to_text(const lat::ModSubsetSumInstance& inst);
std::string to_text(const lat::GapCvpInstance& inst);
std::string to_text(const lat::GapSvpInstance& inst);
std::string to_text(const lat::RqCompressed& inst); // kind ip when p == 2
std::string to_text(const OrManifest& inst);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// Instance size in bits: every payload number charges
// ceil(log2(|v|+1)) + 1 (a rational charges numerator plus denominator),
// and each instance charges a flat 64 bits for its bookkeeping header.
inline constexpr uint64_t kHeaderChargeBits = 64;

uint64_t payload_bits(const lat::SubsetSumInstance& inst);
uint64_t payload_bits(const lat::ModSubsetSumInstance& inst);
uint64_t payload_bits(const lat::GapCvpInstance& inst);
uint64_t payload_bits(const lat::GapSvpInstance& inst);
uint64_t payload_bits(const lat::RqCompressed& inst);
uint64_t payload_bits(const OrManifest& inst);

uint64_t payload_bits(const AnyInstance& inst);
std::string to_text(const AnyInstance& inst);

} // namespace latcomp::io
