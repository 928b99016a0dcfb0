#include "latcomp/compress_svp.hpp"

namespace latcomp::compress {

namespace {

// Upper bound on m * sqrt(n) * 2^(3n/4), the member distance promise.
Rat member_promise(size_t n, size_t m) {
    Rat fourth = Rat(static_cast<unsigned long>(m * m)) *
                 Rat(static_cast<unsigned long>(m * m)) *
                 Rat(static_cast<unsigned long>(n * n)) *
                 num::pow2q(static_cast<long>(3 * n));
    return num::root_upper(fourth, 4, 32);
}

} // namespace

std::vector<SvpMember> svp_to_cvp_or(const lat::GapSvpInstance& inst,
                                     const lat::PipelineParams& params) {
    lat::validate(inst);
    lin::ColsQ reduced = reduce::lll_reduce(inst.basis.cols);
    const size_t n = reduced.size();
    const size_t m = reduced[0].size();
    const Rat tau = member_promise(n, m);
    num::Rng master(params.seed);
    std::vector<SvpMember> members;
    members.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        SvpMember mem;
        lin::ColsQ cols = reduced;
        for (Rat& v : cols[i])
            v *= 2;
        mem.cvp.basis = lat::Basis::make(std::move(cols));
        mem.cvp.target = reduced[i];
        mem.cvp.d = inst.d;
        mem.cvp.gamma = inst.gamma;
        mem.cvp.p = inst.p;
        mem.cvp.promise_tau = tau;
        mem.params = params;
        mem.params.seed = master.derive("or-member", i).seed();
        members.push_back(std::move(mem));
    }
    return members;
}

SvpCompression compress_svp(const lat::GapSvpInstance& inst,
                            const lat::PipelineParams& params) {
    std::vector<SvpMember> members = svp_to_cvp_or(inst, params);
    SvpCompression res;
    res.reduced = reduce::lll_reduce(inst.basis.cols);
    res.member_tau = members.empty() ? Rat(0) : *members[0].cvp.promise_tau;
    res.members.reserve(members.size());
    for (const SvpMember& mem : members) {
        res.members.push_back(compress_cvp(mem.cvp, mem.params));
        res.out.members.push_back(res.members.back().out);
    }
    return res;
}

} // namespace latcomp::compress
