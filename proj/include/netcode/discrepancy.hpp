#ifndef NETCODE_DISCREPANCY_HPP
#define NETCODE_DISCREPANCY_HPP

/**
 * Adversarial discrepancy framework over finite alphabets.
 *
 * A channel is a fully materialized discrepancy table between an input and an
 * output alphabet, with values in the extended integers (infinity = the
 * adversary cannot produce that output at any effort).  Codes are index lists
 * into the input alphabet.  Everything downstream (fan-outs, correction and
 * detection capabilities, normality, decoders) is an exhaustive scan over the
 * table, which is the point: these are the reference semantics the closed
 * forms elsewhere are checked against.
 */

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "netcode/errors.hpp"

namespace netcode {

/// Integer extended with +infinity; addition saturates.  Values can go
/// negative through decrements (a correction capability of -1 means not even
/// an effort-0 disturbance is survivable).
class ExtNat {
  public:
    constexpr ExtNat() : v_(0) {}
    constexpr ExtNat(std::int64_t v) : v_(v) {}
    static constexpr ExtNat infinity() { return ExtNat(kInf, true); }

    constexpr bool is_inf() const { return v_ == kInf; }
    constexpr std::int64_t value() const { return v_; }
    std::int64_t finite_value() const {
        if (is_inf()) throw invalid_parameters("value is infinite");
        return v_;
    }

    friend constexpr ExtNat operator+(ExtNat a, ExtNat b) {
        if (a.is_inf() || b.is_inf()) return infinity();
        return ExtNat(a.v_ + b.v_);
    }
    /// Subtracts a finite amount; infinity absorbs.
    constexpr ExtNat minus(std::int64_t d) const { return is_inf() ? *this : ExtNat(v_ - d); }
    /// floor((x - 1) / 2) with infinity absorbing; floor, not truncation.
    constexpr ExtNat half_of_decrement() const {
        if (is_inf()) return *this;
        const std::int64_t t = v_ - 1;
        return ExtNat(t >= 0 ? t / 2 : -((-t + 1) / 2));
    }

    friend constexpr bool operator==(ExtNat a, ExtNat b) { return a.v_ == b.v_; }
    friend constexpr bool operator!=(ExtNat a, ExtNat b) { return a.v_ != b.v_; }
    friend constexpr bool operator<(ExtNat a, ExtNat b) {
        if (a.is_inf()) return false;
        if (b.is_inf()) return true;
        return a.v_ < b.v_;
    }
    friend constexpr bool operator<=(ExtNat a, ExtNat b) { return a < b || a == b; }
    friend constexpr bool operator>(ExtNat a, ExtNat b) { return b < a; }
    friend constexpr bool operator>=(ExtNat a, ExtNat b) { return b <= a; }

    std::string str() const { return is_inf() ? "inf" : std::to_string(v_); }

  private:
    static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
    constexpr ExtNat(std::int64_t v, bool) : v_(v) {}
    std::int64_t v_;
};

inline ExtNat min(ExtNat a, ExtNat b) { return a < b ? a : b; }
inline ExtNat max(ExtNat a, ExtNat b) { return a < b ? b : a; }

class Channel {
  public:
    Channel() = default;
    Channel(std::size_t inputs, std::size_t outputs, std::vector<ExtNat> table,
            std::string name = "");

    std::size_t inputs() const { return nx_; }
    std::size_t outputs() const { return ny_; }
    const std::string& name() const { return name_; }
    ExtNat disc(std::size_t x, std::size_t y) const { return table_[x * ny_ + y]; }

  private:
    std::size_t nx_ = 0, ny_ = 0;
    std::vector<ExtNat> table_;
    std::string name_;
};

/// Materialize a table from a function; budget-checked on inputs*outputs.
Channel channel_from_fn(std::size_t inputs, std::size_t outputs,
                        const std::function<ExtNat(std::size_t, std::size_t)>& fn,
                        std::string name = "");

class Field;
/// Substitution channel on F_q^n; vectors indexed like 1 x n matrices.
Channel hamming_channel(const Field& f, int n);
/// Binary erasure channel: inputs {0,1}^n (base-2 index), outputs {0,1,e}^n
/// (base-3 index, digit 2 = erased), first coordinate most significant.
/// Effort counts erasures; disagreement on an unerased coordinate is infinite.
Channel erasure_channel(int n);

/// Text format: "inputs outputs" header, then one line per input with
/// `outputs` entries, each a nonnegative integer or "inf".
void write_channel(std::ostream& os, const Channel& ch);
Channel read_channel(std::istream& is);

/// Code = distinct input indices; decoder ties break toward the lowest
/// position in this list.
struct AbstractCode {
    std::vector<std::size_t> words;
};
AbstractCode make_code(const Channel& ch, std::vector<std::size_t> words);

struct DecodeOutcome {
    std::optional<std::size_t> result; // position in the code list
    ExtNat discrepancy;                // best discrepancy seen
    std::size_t tie_count = 0;         // codewords achieving it (or within radius)
};

/// Outputs the adversary can reach from x within effort t.
std::vector<std::size_t> fan_out(const Channel& ch, std::size_t x, ExtNat t);

/// No output lies in two codewords' effort-t fan-outs.
bool is_unambiguous(const Channel& ch, const AbstractCode& code, ExtNat t);

/// Reference decoder: the unique codeword within t of y, else FAILURE.
DecodeOutcome exhaustive_decode(const Channel& ch, const AbstractCode& code, std::size_t y,
                                ExtNat t);
/// Same contract as exhaustive_decode; the operational entry point.
DecodeOutcome bounded_decode(const Channel& ch, const AbstractCode& code, std::size_t y, ExtNat t);

/// Argmin decoder; throws no_finite_candidate when every codeword is
/// unreachable from y.
DecodeOutcome min_discrepancy_decode(const Channel& ch, const AbstractCode& code, std::size_t y);

/// Correction capability of a pair: min over outputs of max effort, minus 1.
ExtNat tau_pair(const Channel& ch, std::size_t x, std::size_t x2);
ExtNat tau_code(const Channel& ch, const AbstractCode& code);

/// Pair separation: min over outputs of summed effort.
ExtNat delta_pair(const Channel& ch, std::size_t x, std::size_t x2);
ExtNat delta_min(const Channel& ch, const AbstractCode& code);

/// A channel is normal when every pair with finite separation d admits, for
/// each 0 <= i <= d, an output at exactly (i, d - i) effort from the two ends.
struct NormalityReport {
    bool normal = true;
    struct Counterexample {
        std::size_t x, x2;
        std::int64_t split;
    };
    std::optional<Counterexample> counterexample;
};
NormalityReport check_normal(const Channel& ch);
NormalityReport check_normal(const Channel& ch,
                             const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

/// Detection margin of an ordered pair after t corrected errors: minimum
/// effort from x to land inside x2's effort-t fan-out, minus 1.
ExtNat sigma_pair(const Channel& ch, std::size_t x, std::size_t x2, ExtNat t);
/// Code-level detection capability; requires tau_code >= t.
ExtNat sigma_detect(const Channel& ch, const AbstractCode& code, ExtNat t);

} // namespace netcode

#endif
