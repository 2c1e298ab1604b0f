#ifndef NETCODE_DECODE_HPP
#define NETCODE_DECODE_HPP

/**
 * Decoders over matrix and subspace codes: minimum-discrepancy argmin for
 * each channel model, minimum-subspace-distance, and the radius-bounded
 * variant.  All break ties toward the lowest codeword index and report the
 * tie count, so callers can tell a forced failure from a lucky win.
 */

#include <optional>
#include <string>

#include "netcode/codes.hpp"
#include "netcode/discrepancy.hpp"
#include "netcode/ffmat.hpp"

namespace netcode {

enum class ModelKind { coherent, yeung, noncoherent };

std::string model_kind_name(ModelKind k);
ModelKind model_kind_from_name(const std::string& name);

/// Channel model selector carrying the data each kind needs: coherent uses
/// a, yeung uses a and f, noncoherent uses rho and (for simulation) the
/// reception row count big_n, 0 meaning "same as the codeword row count".
struct ModelParams {
    ModelKind kind = ModelKind::coherent;
    std::optional<Matrix> a;
    std::optional<Matrix> f;
    int rho = 0;
    int big_n = 0;
};

/// Effort to turn x into y under the model.
ExtNat model_discrepancy(const ModelParams& p, const Matrix& x, const Matrix& y);
/// Code separation under the model (min over distinct pairs).
ExtNat model_delta_code(const ModelParams& p, const std::vector<Matrix>& words);

DecodeOutcome decode_coherent(const MatrixCode& c, const Matrix& a, const Matrix& y);
/// Codewords the adversary cannot reach are excluded; all-unreachable is a
/// failure outcome, not an exception.
DecodeOutcome decode_yeung(const MatrixCode& c, const Matrix& a, const Matrix& f,
                           const Matrix& y);
DecodeOutcome decode_noncoherent(const MatrixCode& c, int rho, const Matrix& y);
DecodeOutcome decode_subspace(const SubspaceCode& s, const Subspace& u);
/// Dispatch on p.kind.
DecodeOutcome decode_model(const MatrixCode& c, const ModelParams& p, const Matrix& y);

/// Radius-t decoder: the unique codeword within t, else FAILURE (discrepancy
/// reports the overall minimum, tie_count the codewords within t).  Requires
/// finite t >= 0 and code separation > 2t, the exact condition for radius-t
/// lists to be singletons under a normal discrepancy.
DecodeOutcome decode_bounded(const MatrixCode& c, const ModelParams& p, const Matrix& y,
                             ExtNat t);

} // namespace netcode

#endif
