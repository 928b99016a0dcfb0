#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latcomp/lattice.hpp"

namespace latcomp::verify {

// ---- instance planting (shared by the campaigns and the CLI generator) ----

// Integer matrix with entries in [-(2^bits - 1), 2^bits - 1], redrawn until
// the columns are linearly independent.
lin::ColsQ random_basis_cols(num::Rng& rng, size_t n, size_t m, unsigned bits);

// Planted subset-sum: values uniform in [1, 2^eta]; yes = target hits a
// random nonempty subset, no = target redrawn until no subset matches
// (exact search; n <= 24).
lat::SubsetSumInstance plant_subsetsum(num::Rng& rng, size_t n,
                                       unsigned long eta, bool yes);

// YES: target = B x + e_j / 2 with d = 1/2, gamma = 1 + 2^-n; for p >= 4
// the promise tau = 1, valid whenever the lattice has no nonzero vector
// shorter than 1 (any integral or integrally-lifted basis).
lat::GapCvpInstance plant_cvp_yes(num::Rng& rng, lat::Basis basis, unsigned p);

// NO: target planted at roughly twice the first minimum from a lattice
// point; d is set so gamma * d certifiably undershoots the true distance
// (exact oracles; small ranks only).  integral forces an integer target.
// nullopt when no usable target was found.
std::optional<lat::GapCvpInstance> plant_cvp_no(num::Rng& rng,
                                                lat::Basis basis, unsigned p,
                                                bool integral);

// YES: d = a dyadic upper bound on the reduced first column, no oracle
// needed.  NO: d certifiably below lambda / gamma via the exact oracle.
lat::GapSvpInstance plant_svp_yes(lat::Basis basis, unsigned p);
std::optional<lat::GapSvpInstance> plant_svp_no(lat::Basis basis, unsigned p);

// One randomized check campaign.  `failures` counts trials violating the
// campaign's contract; `pass` applies the campaign's pinned tolerance
// (most campaigns tolerate zero failures).  `note` carries measured rates
// and parameters for the report line.
struct CampaignResult {
    std::string name;
    int trials = 0;
    int failures = 0;
    bool pass = false;
    double seconds = 0.0;
    std::string note;

    CampaignResult() = default;
    CampaignResult(std::string campaign, int planned)
        : name(std::move(campaign)), trials(planned) {}
};

// Planted-YES subset-sum instances survive modular compression: the reduced
// instance must answer YES for every prime draw.  n in [4,12], values below
// 2^16, full-size primes.
CampaignResult subsetsum_completeness(int trials, uint64_t seed);

// Certified-NO subset-sum instances after compression; max_fp is the largest
// tolerated number of false positives (0 at full parameters).  scaled_s
// switches to the test-scale prime range [2^s, 2^2s].
CampaignResult subsetsum_soundness(int trials, uint64_t seed,
                                   std::optional<unsigned> scaled_s,
                                   int max_fp);

// The multilinear form evaluates ||B z - t||_p^p exactly (p in {2,4,6}),
// and the inner-product form agrees with it at p = 2.
CampaignResult mvp_identity(int trials, uint64_t seed);

// Reduction contracts: size-reduction and successive-norm conditions hold
// exactly; lattice membership is preserved (equal column-style HNF); the
// first reduced vector is within 2^(n/2) of the true minimum.
CampaignResult lll_contracts(int trials, uint64_t seed);

// Nearest-plane contracts: residuals in (-1/2, 1/2]; on reduced bases the
// achieved distance is within 2^(n/2) of the true distance.
CampaignResult babai_contracts(int trials, uint64_t seed);

// Every exact-closest coefficient vector of the shifted instance fits
// strictly inside the advertised box (ell_2 and ell_4-with-promise).
CampaignResult coeff_bounds(int trials, uint64_t seed);

// End-to-end distance-decision compression for one even norm.  Planted YES
// instances must stay YES through the full pipeline (witness mapped and
// re-evaluated on the compressed form); certified NO instances must stay NO,
// checked decisively at full parameters and with max_no_fp tolerated false
// positives in scaled mode.  yes_trials = 0 skips the YES half.
CampaignResult cvp_pipeline(int yes_trials, int no_trials, unsigned p,
                            std::optional<unsigned> scaled_s, int max_no_fp,
                            uint64_t seed);

// Shortest-vector instances through the OR-of-members reduction: some
// member must stay YES after compression, and every brute-force shortest
// vector must carry an odd coefficient (the fact the split relies on).
CampaignResult svp_or(int trials, uint64_t seed);

// Geometric padding: squared first minimum and squared target distance grow
// strictly but by at most a factor 2; measured uniqueness-gap ratios are
// reported, never asserted.
CampaignResult amplify_bounds(int trials, uint64_t seed);

// Compressed size scaling: subset-sum output bits fit K*(n^2 + n log eta)
// for one fitted K across n in {4,8,12}; for ell_2 lattice instances,
// doubling the ambient dimension at fixed rank leaves the compressed size
// within one header charge, and entry counts are identical.
CampaignResult size_scaling(uint64_t seed);

// All campaigns at their pinned trial counts (trials_override > 0 shrinks
// or grows the randomized campaigns for quick runs).
std::vector<CampaignResult> run_all(uint64_t seed, int trials_override = 0);

// "name: pass trials=... failures=... (12.3s) note" -- one line.
std::string report_line(const CampaignResult& r);

} // namespace latcomp::verify
