#ifndef NETCODE_ADVERSARY_HPP
#define NETCODE_ADVERSARY_HPP

/**
 * Constructive worst-case adversaries and theorem-checking simulators.
 *
 * Each attack realizes an exact split of the pair separation: given codewords
 * at separation d and a split 0 <= i <= d, it builds a reception at
 * discrepancy exactly i from the first codeword and d - i from the second.
 * Every constructor recomputes both discrepancies through the closed forms
 * before returning and refuses to hand back a result that misses its claim,
 * so downstream reports can trust the numbers.
 *
 * verify_correction_theorem exercises a decoder against the full admissible
 * adversary space (or a seeded sample when that space exceeds the enumeration
 * budget) and compares the observed success pattern against the capability
 * condition "separation > 2t" in both directions.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netcode/codes.hpp"
#include "netcode/decode.hpp"
#include "netcode/discrepancy.hpp"
#include "netcode/ffmat.hpp"
#include "netcode/spaces.hpp"

namespace netcode {

struct AttackResult {
    Matrix y;
    /// Construction matrices, named (split parts, block factors, row
    /// partitions) in build order.
    std::vector<std::pair<std::string, Matrix>> witness;
    /// Discrepancy from the first and second codeword; recomputation must
    /// reproduce these exactly.
    ExtNat claimed_first;
    ExtNat claimed_second;
};

/// Reception at rank discrepancy (i, d - i) from x and x2 under fixed a.
AttackResult coherent_attack(const Matrix& a, const Matrix& x, const Matrix& x2, int i);
/// Same split contract for the edge-restricted model; the achieving error
/// matrix is found by support search and partitioned row-wise.
AttackResult yeung_attack(const Matrix& a, const Matrix& f, const Matrix& x1,
                          const Matrix& x2, int i);
/// Same split contract when the adversary also picks the transfer matrices.
/// Builds the block factors realizing optimal transforms of both codewords,
/// then splits their difference.  big_n is the reception row count.
AttackResult noncoherent_attack(const Matrix& x, const Matrix& x2, int rho, int big_n,
                                int i);

struct Trial {
    std::size_t codeword = 0;
    Matrix received;
    ExtNat effort;
    std::optional<std::size_t> decoded;
    std::size_t tie_count = 0;
    bool success = false;
};

struct TrialReport {
    std::string model;
    std::string parameters;
    ExtNat separation;
    int radius = 0;
    bool prediction_success = false;
    bool exhaustive = true;
    std::uint64_t seed = 0;
    std::vector<Trial> trials;
    std::string verdict; // "CONFIRMED" or "FALSIFIED"
    std::optional<std::size_t> counterexample;
    std::string note;
};

/// Checks "every <= t disturbance is corrected iff separation > 2t" for the
/// code under the given model.  When the separation condition holds, scans
/// the complete admissible reception set of every codeword; when it fails,
/// constructs the forced-failure reception on a separation-achieving pair.
/// Enumeration overflowing the budget falls back to seeded random trials
/// with the exhaustive flag cleared.
TrialReport verify_correction_theorem(const MatrixCode& c, const ModelParams& p, int t,
                                      std::size_t random_trials = 2048,
                                      std::uint64_t seed = 1);

/// Three-codeword non-constant-dimension scenario on which the two decoders
/// genuinely differ.  Parameters are found by search over nested-subspace
/// templates, smallest ambient dimension first.
struct Example4Report {
    int ambient = 0;
    int dim_v1 = 0;
    int dim_v2 = 0;
    int dim_v3 = 0;
    /// Subspace distance from v1 to v2 and to v3 (equal by construction).
    int d = 0;
    int gamma = 0;        // dim v2 - dim v1, strictly between d/3 and d/2
    int gamma_prime = 0;  // dim v3 - dim v1
    int epsilon = 0;      // (d - gamma) / 2
    int epsilon_prime = 0;
    int separation_subspace = 0;  // min pairwise subspace distance
    int separation_injection = 0; // min pairwise injection distance
    /// Largest t with every <= t-injection reception corrected, per decoder.
    int t_subspace = 0;
    int t_discrepancy = 0;
    std::uint64_t radius_one_receptions = 0;
    SubspaceCode code;
    MatrixCode matrix_code;
    /// Reception two injections from v2 that the nearest-subspace decoder
    /// resolves to v1, while the discrepancy decoder resolves it to v2.
    Matrix subspace_failure_witness;
    /// Attack reception defeating the discrepancy decoder at t_discrepancy + 1.
    Matrix discrepancy_failure_witness;
    std::string note;
};

Example4Report example4_scenario();

/// JSON document with verdict, per-trial records, and a replay section
/// embedding the code and model matrices in the text matrix format.
std::string trial_report_json(const TrialReport& report, const MatrixCode& c,
                              const ModelParams& p);
std::string example4_report_json(const Example4Report& report);

} // namespace netcode

#endif
