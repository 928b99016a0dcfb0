#include "latcomp/cli.hpp"

#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "latcomp/compress_subsetsum.hpp"
#include "latcomp/compress_svp.hpp"
#include "latcomp/gap_amplify.hpp"
#include "latcomp/oracle.hpp"
#include "latcomp/verify.hpp"

namespace latcomp::cli {

namespace {

using lin::ColsQ;
using lin::VecZ;
using num::BigInt;
using num::Rat;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    return io::read_file(path);
}

void emit(const std::string& path, const std::string& text) {
    if (path == "-")
        std::cout << text;
    else
        io::write_file(path, text);
}

std::string join(const VecZ& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i)
        os << (i ? " " : "") << v[i].get_str();
    return os.str();
}

Rat rat_pow(const Rat& x, unsigned p) {
    Rat r = 1;
    for (unsigned i = 0; i < p; ++i)
        r *= x;
    return r;
}

BigInt parse_bigint(const std::string& s) {
    try {
        return BigInt(s);
    } catch (const std::invalid_argument&) {
        throw ParseError("not a decimal integer: " + s);
    }
}

// ---- gen ----

struct GenOpts {
    std::string kind;
    size_t n = 3;
    size_t m = 0; // 0 = same as n
    unsigned p = 2;
    unsigned bits = 8;
    unsigned long eta = 16;
    std::string plant = "yes";
    bool amplify = false;
    uint64_t seed = 0;
    std::string out = "-";
};

int run_gen(const GenOpts& o) {
    num::Rng rng = num::Rng(o.seed).derive("gen-" + o.kind);
    const bool yes = o.plant == "yes";

    if (o.kind == "subsetsum") {
        if (o.amplify)
            throw ParseError("gen: --amplify applies to lattice kinds only");
        emit(o.out, io::to_text(verify::plant_subsetsum(
                        rng, o.n, std::max<unsigned long>(1, o.eta), yes)));
        return 0;
    }

    const size_t m = o.m == 0 ? o.n : o.m;
    if (m < o.n)
        throw ParseError("gen: m must be at least n");
    if (o.p < 2 || o.p % 2 != 0)
        throw ParseError("gen: p must be even and at least 2");
    if (o.n == 0)
        throw ParseError("gen: n must be positive");
    ColsQ cols = verify::random_basis_cols(rng, o.n, m, o.bits);

    if (o.kind == "svp") {
        lat::Basis basis =
            o.amplify
                ? amplify::pad_svp_basis(lat::Basis{reduce::lll_reduce(cols)})
                      .basis
                : lat::Basis::make(std::move(cols));
        if (yes) {
            emit(o.out, io::to_text(verify::plant_svp_yes(std::move(basis), o.p)));
            return 0;
        }
        auto inst = verify::plant_svp_no(std::move(basis), o.p);
        if (!inst)
            throw Error("gen: could not certify a NO instance; try another seed");
        emit(o.out, io::to_text(*inst));
        return 0;
    }

    if (o.kind == "cvp") {
        lat::Basis basis = o.amplify
                               ? lat::Basis{reduce::lll_reduce(cols)}
                               : lat::Basis::make(std::move(cols));
        lat::GapCvpInstance inst;
        if (yes) {
            inst = verify::plant_cvp_yes(rng, std::move(basis), o.p);
        } else {
            auto no = verify::plant_cvp_no(rng, std::move(basis), o.p, false);
            if (!no)
                throw Error("gen: could not certify a NO instance; try another seed");
            inst = std::move(*no);
        }
        if (o.amplify) {
            // re-pad the planted instance; the squared thresholds track the
            // square-root-of-two growth bound
            amplify::PaddedCvp pad =
                amplify::pad_cvp_instance(inst.basis, inst.target);
            inst.basis = std::move(pad.basis);
            inst.target = std::move(pad.target);
            if (yes)
                inst.d = num::sqrt_upper(Rat(2) * inst.d * inst.d, 8);
            // NO side: the distance only grows, d stays valid
            if (inst.promise_tau)
                inst.promise_tau = num::sqrt_upper(
                    Rat(2) * *inst.promise_tau * *inst.promise_tau, 8);
        }
        emit(o.out, io::to_text(inst));
        return 0;
    }

    throw ParseError("gen: unknown kind " + o.kind);
}

// ---- solve (exact decision of uncompressed instances) ----

int run_solve(const std::string& in) {
    io::AnyInstance any = io::parse_instance(slurp(in));
    std::ostringstream os;
    switch (any.kind) {
    case io::Kind::subsetsum: {
        lat::Verdict v = oracle::brute_subsetsum(*any.subsetsum);
        os << "verdict: " << (v.yes ? "YES" : "NO") << "\n";
        if (v.yes && v.witness)
            os << "indices: " << join(*v.witness) << "\n";
        break;
    }
    case io::Kind::mod_subsetsum: {
        lat::Verdict v = oracle::decide_mod_subsetsum(*any.mod_subsetsum);
        os << "verdict: " << (v.yes ? "YES" : "NO") << "\n";
        if (v.yes && v.witness)
            os << "indices: " << join(*v.witness) << "\n";
        break;
    }
    case io::Kind::cvp: {
        const lat::GapCvpInstance& inst = *any.cvp;
        oracle::BruteResult e =
            oracle::exact_cvp(inst.basis, inst.target, inst.p);
        const Rat dpow = rat_pow(inst.d, inst.p);
        const Rat gpow = rat_pow(inst.gamma * inst.d, inst.p);
        os << "verdict: "
           << (e.value <= dpow ? "YES"
                               : (e.value > gpow ? "NO" : "INDETERMINATE"))
           << "\n"
           << "dist-pow: " << num::to_string(e.value) << "\n"
           << "coefficients: " << join(e.z) << "\n";
        break;
    }
    case io::Kind::svp: {
        const lat::GapSvpInstance& inst = *any.svp;
        oracle::BruteResult e = oracle::exact_svp(inst.basis, inst.p);
        const Rat dpow = rat_pow(inst.d, inst.p);
        const Rat gpow = rat_pow(inst.gamma * inst.d, inst.p);
        os << "verdict: "
           << (e.value <= dpow ? "YES"
                               : (e.value > gpow ? "NO" : "INDETERMINATE"))
           << "\n"
           << "length-pow: " << num::to_string(e.value) << "\n"
           << "coefficients: " << join(e.z) << "\n";
        break;
    }
    default:
        throw ParseError("solve: compressed input; use decide-compressed");
    }
    std::cout << os.str();
    return 0;
}

// ---- compress ----

struct CompressOpts {
    std::string in = "-";
    std::string out = "-";
    uint64_t seed = 0;
    unsigned c1 = 1;
    std::optional<unsigned> scaled_s;
    std::optional<unsigned long> alpha;
    int mr_rounds = 64;
};

int run_compress(const CompressOpts& o) {
    io::AnyInstance any = io::parse_instance(slurp(o.in));
    lat::PipelineParams params;
    params.seed = o.seed;
    params.c1 = o.c1;
    params.scaled_s = o.scaled_s;
    params.alpha_override = o.alpha;
    params.mr_rounds = o.mr_rounds;

    switch (any.kind) {
    case io::Kind::subsetsum: {
        auto comp = compress::compress_subsetsum(*any.subsetsum, params);
        emit(o.out, io::to_text(comp.out));
        std::cerr << "compressed: kind=mod-subsetsum eta=" << comp.eta
                  << " modulus-bits=" << num::bit_size(comp.out.modulus)
                  << " size-bits=" << io::payload_bits(comp.out) << "\n";
        return 0;
    }
    case io::Kind::cvp: {
        auto comp = compress::compress_cvp(*any.cvp, params);
        emit(o.out, io::to_text(comp.out));
        std::cerr << "compressed: kind="
                  << (comp.out.form.p == 2 ? "ip" : "mvp")
                  << " modulus-bits=" << num::bit_size(comp.out.q)
                  << " size-bits=" << io::payload_bits(comp.out) << "\n";
        return 0;
    }
    case io::Kind::svp: {
        auto comp = compress::compress_svp(*any.svp, params);
        emit(o.out, io::to_text(comp.out));
        std::cerr << "compressed: kind=or-manifest members="
                  << comp.out.members.size()
                  << " size-bits=" << io::payload_bits(comp.out) << "\n";
        return 0;
    }
    default:
        throw ParseError("compress: input is already compressed");
    }
}

// ---- decide-compressed ----

int run_decide(const std::string& in, const std::optional<std::string>& box) {
    io::AnyInstance any = io::parse_instance(slurp(in));
    std::optional<BigInt> box_override;
    if (box)
        box_override = parse_bigint(*box);
    std::ostringstream os;
    switch (any.kind) {
    case io::Kind::ip:
    case io::Kind::mvp: {
        lat::Verdict v = oracle::decide_compressed(*any.compressed, box_override);
        os << "verdict: " << (v.yes ? "YES" : "NO") << "\n";
        if (v.yes && v.witness)
            os << "coefficients: " << join(*v.witness) << "\n";
        else
            os << "min-residue: " << num::to_string(v.value) << "\n";
        break;
    }
    case io::Kind::mod_subsetsum: {
        lat::Verdict v = oracle::decide_mod_subsetsum(*any.mod_subsetsum);
        os << "verdict: " << (v.yes ? "YES" : "NO") << "\n";
        if (v.yes && v.witness)
            os << "indices: " << join(*v.witness) << "\n";
        break;
    }
    case io::Kind::or_manifest: {
        const io::OrManifest& man = *any.manifest;
        std::optional<size_t> hit;
        std::optional<VecZ> witness;
        for (size_t i = 0; i < man.members.size() && !hit; ++i) {
            lat::Verdict v =
                oracle::decide_compressed(man.members[i], box_override);
            if (v.yes) {
                hit = i;
                witness = v.witness;
            }
        }
        os << "verdict: " << (hit ? "YES" : "NO") << "\n";
        if (hit) {
            os << "member: " << *hit + 1 << "\n";
            if (witness)
                os << "coefficients: " << join(*witness) << "\n";
        }
        break;
    }
    default:
        throw ParseError("decide-compressed: input is not compressed; use solve");
    }
    std::cout << os.str();
    return 0;
}

// ---- verify / report-size / measure-gap ----

int run_verify(uint64_t seed, int trials) {
    std::vector<verify::CampaignResult> rs = verify::run_all(seed, trials);
    bool all = true;
    for (const auto& r : rs) {
        std::cout << verify::report_line(r) << "\n";
        all = all && r.pass;
    }
    std::cout << (all ? "all campaigns passed" : "CAMPAIGN FAILURES") << "\n";
    return all ? 0 : 1;
}

int run_report_size(const std::string& in) {
    io::AnyInstance any = io::parse_instance(slurp(in));
    std::cout << "kind: " << io::kind_name(any.kind) << "\n"
              << "size-bits: " << io::payload_bits(any)
              << "  (number payloads plus a " << io::kHeaderChargeBits
              << "-bit header charge per instance)\n";
    return 0;
}

int run_measure_gap(const std::string& in) {
    io::AnyInstance any = io::parse_instance(slurp(in));
    const lat::Basis* basis = nullptr;
    unsigned p = 2;
    if (any.kind == io::Kind::svp) {
        basis = &any.svp->basis;
        p = any.svp->p;
    } else if (any.kind == io::Kind::cvp) {
        basis = &any.cvp->basis;
        p = any.cvp->p;
    } else {
        throw ParseError("measure-gap: expects an svp or cvp instance");
    }
    if (p != 2)
        throw DomainError("measure-gap: the measurement is ell_2 only");
    amplify::GapMeasure g = amplify::measure_gap(*basis);
    const Rat ratio = g.lambda2_sq / g.lambda1_sq;
    std::cout << "lambda1-sq: " << num::to_string(g.lambda1_sq) << "\n"
              << "lambda2-sq: " << num::to_string(g.lambda2_sq) << "\n"
              << "gap-sq: " << num::to_string(ratio) << "\n"
              << "v1: " << join(g.v1) << "\n"
              << "v2: " << join(g.v2) << "\n";
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"exact compression toolkit for subset-sum and lattice "
                 "distance decisions",
                 "latcomp"};
    app.require_subcommand(1);

    GenOpts gen;
    CLI::App* cmd_gen =
        app.add_subcommand("gen", "generate a planted decision instance");
    cmd_gen->add_option("--kind", gen.kind, "subsetsum | cvp | svp")
        ->required()
        ->check(CLI::IsMember({"subsetsum", "cvp", "svp"}));
    cmd_gen->add_option("--n", gen.n, "rank / element count");
    cmd_gen->add_option("--m", gen.m, "ambient dimension (lattice kinds; default n)");
    cmd_gen->add_option("--p", gen.p, "even norm exponent (lattice kinds)");
    cmd_gen->add_option("--bits", gen.bits, "coordinate magnitude bits");
    cmd_gen->add_option("--eta", gen.eta, "value magnitude bits (subsetsum)");
    cmd_gen->add_option("--plant", gen.plant, "yes | no (NO planting runs exact search; keep n small)")
        ->check(CLI::IsMember({"yes", "no"}));
    cmd_gen->add_flag("--amplify", gen.amplify,
                      "widen the uniqueness gap by geometric padding");
    cmd_gen->add_option("--seed", gen.seed, "generator seed");
    cmd_gen->add_option("-o,--out", gen.out, "output file; - = stdout");

    CompressOpts comp;
    CLI::App* cmd_comp = app.add_subcommand(
        "compress", "compress an instance (random-prime modular reduction)");
    cmd_comp->add_option("-i,--in", comp.in, "input file; - = stdin");
    cmd_comp->add_option("-o,--out", comp.out, "output file; - = stdout");
    cmd_comp->add_option("--seed", comp.seed, "prime-draw seed");
    cmd_comp->add_option("--c1", comp.c1, "gap-shape exponent (gamma >= 1 + 2^(-n^c1))");
    cmd_comp->add_option("--scaled-s", comp.scaled_s,
                         "test-scale prime exponent (omit for full parameters)");
    cmd_comp->add_option("--alpha", comp.alpha, "pin the alpha exponent summand");
    cmd_comp->add_option("--mr-rounds", comp.mr_rounds,
                         "primality test rounds (default 64)");

    std::string solve_in = "-";
    CLI::App* cmd_solve = app.add_subcommand(
        "solve", "decide an uncompressed instance by exact search");
    cmd_solve->add_option("-i,--in", solve_in, "input file; - = stdin");

    std::string dec_in = "-";
    std::optional<std::string> dec_box;
    CLI::App* cmd_dec = app.add_subcommand(
        "decide-compressed", "decide a compressed instance by box scan");
    cmd_dec->add_option("-i,--in", dec_in, "input file; - = stdin");
    cmd_dec->add_option("--box", dec_box, "override the scan box (default r)");

    uint64_t verify_seed = 2026;
    int verify_trials = 0;
    CLI::App* cmd_verify = app.add_subcommand(
        "verify", "run the randomized verification campaigns");
    cmd_verify->add_option("--seed", verify_seed, "campaign seed");
    cmd_verify->add_option("--trials", verify_trials,
                           "override per-campaign trial counts (0 = pinned)");

    std::string size_in = "-";
    CLI::App* cmd_size =
        app.add_subcommand("report-size", "report the instance size metric");
    cmd_size->add_option("-i,--in", size_in, "input file; - = stdin");

    std::string gap_in = "-";
    CLI::App* cmd_gap = app.add_subcommand(
        "measure-gap", "measure the ell_2 uniqueness gap of a lattice instance");
    cmd_gap->add_option("-i,--in", gap_in, "input file; - = stdin");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_gen)
            return run_gen(gen);
        if (*cmd_comp)
            return run_compress(comp);
        if (*cmd_solve)
            return run_solve(solve_in);
        if (*cmd_dec)
            return run_decide(dec_in, dec_box);
        if (*cmd_verify)
            return run_verify(verify_seed, verify_trials);
        if (*cmd_size)
            return run_report_size(size_in);
        if (*cmd_gap)
            return run_measure_gap(gap_in);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const GuardError& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2; // no subcommand (require_subcommand should have caught this)
}

} // namespace latcomp::cli
