#include "netcode/decode.hpp"

#include "netcode/errors.hpp"
#include "netcode/netmetrics.hpp"
#include "netcode/spaces.hpp"

namespace netcode {

namespace {

DecodeOutcome argmin_outcome(const std::vector<ExtNat>& discs) {
    DecodeOutcome out;
    out.discrepancy = ExtNat::infinity();
    for (std::size_t i = 0; i < discs.size(); ++i) {
        if (discs[i] < out.discrepancy) {
            out.discrepancy = discs[i];
            out.result = i;
            out.tie_count = 1;
        } else if (!discs[i].is_inf() && discs[i] == out.discrepancy) {
            ++out.tie_count;
        }
    }
    if (out.discrepancy.is_inf()) {
        out.result.reset();
        out.tie_count = 0;
    }
    return out;
}

void check_code_word_shapes(const MatrixCode& c) {
    if (c.words.empty()) throw invalid_parameters("decode: empty code");
}

} // namespace

std::string model_kind_name(ModelKind k) {
    switch (k) {
        case ModelKind::coherent: return "coherent";
        case ModelKind::yeung: return "yeung";
        case ModelKind::noncoherent: return "noncoherent";
    }
    throw invalid_parameters("model_kind_name: bad enum value");
}

ModelKind model_kind_from_name(const std::string& name) {
    if (name == "coherent") return ModelKind::coherent;
    if (name == "yeung") return ModelKind::yeung;
    if (name == "noncoherent") return ModelKind::noncoherent;
    throw unknown_input("model kind '" + name +
                        "' (expected coherent, yeung, or noncoherent)");
}

ExtNat model_discrepancy(const ModelParams& p, const Matrix& x, const Matrix& y) {
    switch (p.kind) {
        case ModelKind::coherent:
            if (!p.a) throw invalid_parameters("coherent model needs a transfer matrix");
            return ExtNat(coherent_discrepancy(*p.a, x, y));
        case ModelKind::yeung:
            if (!p.a || !p.f)
                throw invalid_parameters("yeung model needs transfer and edge matrices");
            return yeung_discrepancy(*p.a, *p.f, x, y);
        case ModelKind::noncoherent:
            return ExtNat(noncoherent_discrepancy(x, y, p.rho));
    }
    throw invalid_parameters("model_discrepancy: bad enum value");
}

ExtNat model_delta_code(const ModelParams& p, const std::vector<Matrix>& words) {
    switch (p.kind) {
        case ModelKind::coherent:
            if (!p.a) throw invalid_parameters("coherent model needs a transfer matrix");
            return ExtNat(coherent_delta_code(*p.a, words));
        case ModelKind::yeung:
            if (!p.a || !p.f)
                throw invalid_parameters("yeung model needs transfer and edge matrices");
            return yeung_delta_code(*p.a, *p.f, words);
        case ModelKind::noncoherent:
            return ExtNat(noncoherent_delta_code(words, p.rho));
    }
    throw invalid_parameters("model_delta_code: bad enum value");
}

DecodeOutcome decode_coherent(const MatrixCode& c, const Matrix& a, const Matrix& y) {
    check_code_word_shapes(c);
    std::vector<ExtNat> discs;
    discs.reserve(c.words.size());
    for (const Matrix& x : c.words) discs.push_back(ExtNat(coherent_discrepancy(a, x, y)));
    return argmin_outcome(discs);
}

DecodeOutcome decode_yeung(const MatrixCode& c, const Matrix& a, const Matrix& f,
                           const Matrix& y) {
    check_code_word_shapes(c);
    std::vector<ExtNat> discs;
    discs.reserve(c.words.size());
    for (const Matrix& x : c.words) discs.push_back(yeung_discrepancy(a, f, x, y));
    return argmin_outcome(discs);
}

DecodeOutcome decode_noncoherent(const MatrixCode& c, int rho, const Matrix& y) {
    check_code_word_shapes(c);
    std::vector<ExtNat> discs;
    discs.reserve(c.words.size());
    for (const Matrix& x : c.words) discs.push_back(ExtNat(noncoherent_discrepancy(x, y, rho)));
    return argmin_outcome(discs);
}

DecodeOutcome decode_subspace(const SubspaceCode& s, const Subspace& u) {
    if (s.members.empty()) throw invalid_parameters("decode: empty code");
    if (u.ambient() != s.ambient)
        throw ambient_mismatch("decode_subspace: received space lives in dimension " +
                               std::to_string(u.ambient()) + ", code in " +
                               std::to_string(s.ambient));
    std::vector<ExtNat> discs;
    discs.reserve(s.members.size());
    for (const Subspace& v : s.members) discs.push_back(ExtNat(subspace_distance(v, u)));
    return argmin_outcome(discs);
}

DecodeOutcome decode_model(const MatrixCode& c, const ModelParams& p, const Matrix& y) {
    switch (p.kind) {
        case ModelKind::coherent:
            if (!p.a) throw invalid_parameters("coherent model needs a transfer matrix");
            return decode_coherent(c, *p.a, y);
        case ModelKind::yeung:
            if (!p.a || !p.f)
                throw invalid_parameters("yeung model needs transfer and edge matrices");
            return decode_yeung(c, *p.a, *p.f, y);
        case ModelKind::noncoherent:
            return decode_noncoherent(c, p.rho, y);
    }
    throw invalid_parameters("decode_model: bad enum value");
}

DecodeOutcome decode_bounded(const MatrixCode& c, const ModelParams& p, const Matrix& y,
                             ExtNat t) {
    check_code_word_shapes(c);
    if (t.is_inf() || t.value() < 0)
        throw invalid_parameters("decode_bounded: radius must be a finite nonnegative value");
    ExtNat delta = model_delta_code(p, c.words);
    ExtNat twice_t(2 * t.value());
    if (!(twice_t < delta))
        throw code_not_t_correcting("decode_bounded: separation " + delta.str() +
                                    " does not exceed twice the radius " + t.str());

    DecodeOutcome out;
    out.discrepancy = ExtNat::infinity();
    std::size_t within = 0;
    std::optional<std::size_t> hit;
    for (std::size_t i = 0; i < c.words.size(); ++i) {
        ExtNat d = model_discrepancy(p, c.words[i], y);
        if (d < out.discrepancy) out.discrepancy = d;
        if (!(t < d)) {
            ++within;
            if (!hit) hit = i;
        }
    }
    out.tie_count = within;
    // separation > 2t makes a second word within t impossible, so within <= 1
    if (within == 1) out.result = hit;
    return out;
}

} // namespace netcode
