#pragma once

#include "latcomp/compress_cvp.hpp"
#include "latcomp/io.hpp"

namespace latcomp::compress {

// One disjunct of the shortest-vector reduction: the LLL-reduced basis with
// column i doubled, targeting the original column i.  A shortest vector has
// an odd coefficient somewhere, so some member attains distance lambda_1,
// while every member distance is a nonzero lattice length.
struct SvpMember {
    lat::GapCvpInstance cvp;
    lat::PipelineParams params; // seed derived from (master seed, index)
};

std::vector<SvpMember> svp_to_cvp_or(const lat::GapSvpInstance& inst,
                                     const lat::PipelineParams& params);

struct SvpCompression {
    io::OrManifest out;
    std::vector<CvpCompression> members;
    lin::ColsQ reduced; // LLL-reduced input basis the members double
    Rat member_tau;     // shared distance promise: dist <= tau * lambda_1
};

// Reduce, split into n members, compress each; YES iff some member is YES.
SvpCompression compress_svp(const lat::GapSvpInstance& inst,
                            const lat::PipelineParams& params);

} // namespace latcomp::compress
