#include "netcode/discrepancy.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "netcode/ffmat.hpp"

namespace netcode {

Channel::Channel(std::size_t inputs, std::size_t outputs, std::vector<ExtNat> table,
                 std::string name)
    : nx_(inputs), ny_(outputs), table_(std::move(table)), name_(std::move(name)) {
    if (table_.size() != nx_ * ny_) throw invalid_parameters("channel table size mismatch");
    if (nx_ == 0 || ny_ == 0) throw invalid_parameters("channel alphabets must be nonempty");
    for (ExtNat v : table_)
        if (!v.is_inf() && v.value() < 0) throw invalid_parameters("negative discrepancy");
}

Channel channel_from_fn(std::size_t inputs, std::size_t outputs,
                        const std::function<ExtNat(std::size_t, std::size_t)>& fn,
                        std::string name) {
    check_budget(static_cast<std::uint64_t>(inputs) * outputs, "channel table");
    std::vector<ExtNat> table;
    table.reserve(inputs * outputs);
    for (std::size_t x = 0; x < inputs; ++x)
        for (std::size_t y = 0; y < outputs; ++y) table.push_back(fn(x, y));
    return Channel(inputs, outputs, std::move(table), std::move(name));
}

Channel hamming_channel(const Field& f, int n) {
    const std::uint64_t count = counted_power(f.q(), n, "substitution channel");
    auto digits = [&](std::size_t v) {
        std::vector<int> d(n);
        for (int i = n - 1; i >= 0; --i) {
            d[i] = static_cast<int>(v % f.q());
            v /= f.q();
        }
        return d;
    };
    return channel_from_fn(count, count,
                           [&](std::size_t x, std::size_t y) {
                               auto dx = digits(x), dy = digits(y);
                               std::int64_t diff = 0;
                               for (int i = 0; i < n; ++i)
                                   if (dx[i] != dy[i]) ++diff;
                               return ExtNat(diff);
                           },
                           "substitution");
}

Channel erasure_channel(int n) {
    const std::uint64_t nx = counted_power(2, n, "erasure channel inputs");
    const std::uint64_t ny = counted_power(3, n, "erasure channel outputs");
    return channel_from_fn(nx, ny,
                           [&](std::size_t x, std::size_t y) {
                               std::int64_t erased = 0;
                               std::size_t xv = x, yv = y;
                               for (int i = 0; i < n; ++i) {
                                   const int xd = static_cast<int>(xv % 2);
                                   const int yd = static_cast<int>(yv % 3);
                                   xv /= 2;
                                   yv /= 3;
                                   if (yd == 2)
                                       ++erased;
                                   else if (yd != xd)
                                       return ExtNat::infinity();
                               }
                               return ExtNat(erased);
                           },
                           "erasure");
}

void write_channel(std::ostream& os, const Channel& ch) {
    os << ch.inputs() << ' ' << ch.outputs() << '\n';
    for (std::size_t x = 0; x < ch.inputs(); ++x) {
        for (std::size_t y = 0; y < ch.outputs(); ++y) {
            if (y) os << ' ';
            os << ch.disc(x, y).str();
        }
        os << '\n';
    }
}

Channel read_channel(std::istream& is) {
    long long nx = 0, ny = 0;
    if (!(is >> nx >> ny) || nx <= 0 || ny <= 0)
        throw parse_error("channel header: expected 'inputs outputs'");
    check_budget(static_cast<std::uint64_t>(nx) * ny, "channel table");
    std::vector<ExtNat> table;
    table.reserve(static_cast<std::size_t>(nx * ny));
    for (long long i = 0; i < nx * ny; ++i) {
        std::string tok;
        if (!(is >> tok)) throw parse_error("channel body: missing entries");
        if (tok == "inf")
            table.push_back(ExtNat::infinity());
        else {
            try {
                std::size_t pos = 0;
                long long v = std::stoll(tok, &pos);
                if (pos != tok.size() || v < 0) throw std::invalid_argument(tok);
                table.push_back(ExtNat(v));
            } catch (const std::exception&) {
                throw parse_error("channel entry '" + tok + "' is not a count or 'inf'");
            }
        }
    }
    return Channel(static_cast<std::size_t>(nx), static_cast<std::size_t>(ny), std::move(table),
                   "table");
}

AbstractCode make_code(const Channel& ch, std::vector<std::size_t> words) {
    std::set<std::size_t> seen;
    for (std::size_t w : words) {
        if (w >= ch.inputs()) throw invalid_parameters("codeword index outside input alphabet");
        if (!seen.insert(w).second) throw invalid_parameters("duplicate codeword");
    }
    return AbstractCode{std::move(words)};
}

std::vector<std::size_t> fan_out(const Channel& ch, std::size_t x, ExtNat t) {
    std::vector<std::size_t> ys;
    for (std::size_t y = 0; y < ch.outputs(); ++y)
        if (ch.disc(x, y) <= t) ys.push_back(y);
    return ys;
}

bool is_unambiguous(const Channel& ch, const AbstractCode& code, ExtNat t) {
    for (std::size_t y = 0; y < ch.outputs(); ++y) {
        int hits = 0;
        for (std::size_t w : code.words)
            if (ch.disc(w, y) <= t && ++hits >= 2) return false;
    }
    return true;
}

DecodeOutcome exhaustive_decode(const Channel& ch, const AbstractCode& code, std::size_t y,
                                ExtNat t) {
    DecodeOutcome out;
    out.discrepancy = ExtNat::infinity();
    for (std::size_t i = 0; i < code.words.size(); ++i) {
        const ExtNat d = ch.disc(code.words[i], y);
        if (d < out.discrepancy) out.discrepancy = d;
        if (d <= t) {
            if (out.tie_count == 0) out.result = i;
            ++out.tie_count;
        }
    }
    if (out.tie_count != 1) out.result.reset();
    return out;
}

DecodeOutcome bounded_decode(const Channel& ch, const AbstractCode& code, std::size_t y, ExtNat t) {
    return exhaustive_decode(ch, code, y, t);
}

DecodeOutcome min_discrepancy_decode(const Channel& ch, const AbstractCode& code, std::size_t y) {
    DecodeOutcome out;
    out.discrepancy = ExtNat::infinity();
    for (std::size_t i = 0; i < code.words.size(); ++i) {
        const ExtNat d = ch.disc(code.words[i], y);
        if (d < out.discrepancy) {
            out.discrepancy = d;
            out.result = i;
            out.tie_count = 1;
        } else if (d == out.discrepancy) {
            ++out.tie_count;
        }
    }
    if (out.discrepancy.is_inf())
        throw no_finite_candidate("no codeword can reach the received output");
    return out;
}

namespace {
void require_distinct(std::size_t x, std::size_t x2) {
    if (x == x2) throw identical_inputs("pair operations need two distinct inputs");
}
void require_code(const AbstractCode& code) {
    if (code.words.size() < 2) throw singleton_code("code has fewer than two codewords");
}
} // namespace

ExtNat tau_pair(const Channel& ch, std::size_t x, std::size_t x2) {
    require_distinct(x, x2);
    ExtNat best = ExtNat::infinity();
    for (std::size_t y = 0; y < ch.outputs(); ++y)
        best = min(best, max(ch.disc(x, y), ch.disc(x2, y)));
    return best.minus(1);
}

ExtNat tau_code(const Channel& ch, const AbstractCode& code) {
    require_code(code);
    ExtNat best = ExtNat::infinity();
    for (std::size_t i = 0; i < code.words.size(); ++i)
        for (std::size_t j = i + 1; j < code.words.size(); ++j)
            best = min(best, tau_pair(ch, code.words[i], code.words[j]));
    return best;
}

ExtNat delta_pair(const Channel& ch, std::size_t x, std::size_t x2) {
    require_distinct(x, x2);
    ExtNat best = ExtNat::infinity();
    for (std::size_t y = 0; y < ch.outputs(); ++y)
        best = min(best, ch.disc(x, y) + ch.disc(x2, y));
    return best;
}

ExtNat delta_min(const Channel& ch, const AbstractCode& code) {
    require_code(code);
    ExtNat best = ExtNat::infinity();
    for (std::size_t i = 0; i < code.words.size(); ++i)
        for (std::size_t j = i + 1; j < code.words.size(); ++j)
            best = min(best, delta_pair(ch, code.words[i], code.words[j]));
    return best;
}

NormalityReport check_normal(const Channel& ch,
                             const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    for (auto [x, x2] : pairs) {
        if (x == x2) continue;
        const ExtNat d = delta_pair(ch, x, x2);
        if (d.is_inf()) continue; // no common output; the split condition is vacuous
        for (std::int64_t i = 0; i <= d.value(); ++i) {
            bool found = false;
            for (std::size_t y = 0; y < ch.outputs() && !found; ++y)
                found = ch.disc(x, y) == ExtNat(i) && ch.disc(x2, y) == d.minus(i);
            if (!found) return {false, NormalityReport::Counterexample{x, x2, i}};
        }
    }
    return {};
}

NormalityReport check_normal(const Channel& ch) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t x = 0; x < ch.inputs(); ++x)
        for (std::size_t x2 = x + 1; x2 < ch.inputs(); ++x2) pairs.push_back({x, x2});
    return check_normal(ch, pairs);
}

ExtNat sigma_pair(const Channel& ch, std::size_t x, std::size_t x2, ExtNat t) {
    require_distinct(x, x2);
    ExtNat best = ExtNat::infinity();
    for (std::size_t y = 0; y < ch.outputs(); ++y)
        if (ch.disc(x2, y) <= t) best = min(best, ch.disc(x, y));
    return best.minus(1);
}

ExtNat sigma_detect(const Channel& ch, const AbstractCode& code, ExtNat t) {
    require_code(code);
    if (tau_code(ch, code) < t)
        throw code_not_t_correcting("detection after correction needs tau(code) >= t");
    ExtNat best = ExtNat::infinity();
    for (std::size_t i = 0; i < code.words.size(); ++i)
        for (std::size_t j = 0; j < code.words.size(); ++j)
            if (i != j) best = min(best, sigma_pair(ch, code.words[i], code.words[j], t));
    return best;
}

} // namespace netcode
