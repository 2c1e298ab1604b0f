#include "netcode/adversary.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "netcode/errors.hpp"
#include "netcode/netmetrics.hpp"

namespace netcode {

namespace {

void check_pair(const Matrix& x, const Matrix& x2) {
    if (x.field() != x2.field()) throw field_mismatch("attack: codewords over different fields");
    if (x.rows() != x2.rows() || x.cols() != x2.cols())
        throw shape_mismatch("attack: codewords must share a shape");
}

void check_split(int i, ExtNat d) {
    if (d.is_inf() || i < 0 || i > d.value())
        throw split_out_of_range("split " + std::to_string(i) + " outside [0, " + d.str() + "]");
}

void self_check(const AttackResult& out, ExtNat got_first, ExtNat got_second) {
    if (got_first != out.claimed_first || got_second != out.claimed_second)
        throw error("attack postcondition violated: claimed (" + out.claimed_first.str() + ", " +
                    out.claimed_second.str() + "), recomputed (" + got_first.str() + ", " +
                    got_second.str() + ")");
}

} // namespace

AttackResult coherent_attack(const Matrix& a, const Matrix& x, const Matrix& x2, int i) {
    check_pair(x, x2);
    Matrix m = a * (x2 - x);
    const int d = rank(m);
    check_split(i, ExtNat(d));

    RankSplit rs = split_by_rank(m, i);
    AttackResult out;
    out.y = a * x + rs.w;
    out.witness = {{"difference", m}, {"w", rs.w}, {"w2", rs.w2}};
    out.claimed_first = ExtNat(i);
    out.claimed_second = ExtNat(d - i);
    self_check(out, ExtNat(coherent_discrepancy(a, x, out.y)),
               ExtNat(coherent_discrepancy(a, x2, out.y)));
    return out;
}

AttackResult yeung_attack(const Matrix& a, const Matrix& f, const Matrix& x1, const Matrix& x2,
                          int i) {
    check_pair(x1, x2);
    ExtNat d = yeung_delta(a, f, x1, x2);
    if (d.is_inf())
        throw unreachable_pair("yeung_attack: no common reception exists for this pair");
    check_split(i, d);

    std::optional<Matrix> e = min_weight_edge_solution(f, a * (x2 - x1));
    if (!e) throw error("yeung_attack: finite separation without an edge solution");

    // keep the first i nonzero rows on the x1 side, hand the rest to x2
    Matrix e1 = zeros(f.field(), e->rows(), e->cols());
    int kept = 0;
    for (int r = 0; r < e->rows(); ++r) {
        bool nonzero = false;
        for (int cidx = 0; cidx < e->cols(); ++cidx)
            if ((*e)(r, cidx) != 0) nonzero = true;
        if (nonzero && kept < i) {
            for (int cidx = 0; cidx < e->cols(); ++cidx) e1(r, cidx) = (*e)(r, cidx);
            ++kept;
        }
    }
    Matrix e2 = *e - e1;

    AttackResult out;
    out.y = a * x1 + f * e1;
    out.witness = {{"e", *e}, {"e1", e1}, {"e2", e2}};
    out.claimed_first = ExtNat(i);
    out.claimed_second = d.minus(i);
    self_check(out, yeung_discrepancy(a, f, x1, out.y), yeung_discrepancy(a, f, x2, out.y));
    return out;
}

namespace {

/// Rows of pool that extend base to a basis of base + pool, in pool order.
Matrix complement_rows(const Matrix& base, const Matrix& pool) {
    Matrix acc = base;
    Matrix chosen(base.field(), 0, base.cols());
    for (int r = 0; r < pool.rows(); ++r) {
        Matrix trial = vstack(acc, pool.row(r));
        if (rank(trial) > rank(acc)) {
            acc = trial;
            chosen = vstack(chosen, pool.row(r));
        }
    }
    return chosen;
}

/// rows_out x n full-rank matrix sending x to [target; 0].
Matrix second_factor(const Matrix& x, const Matrix& target, int rows_out) {
    const int n = x.rows();
    Matrix coeff(x.field(), 0, n);
    if (target.rows() > 0) {
        std::optional<Matrix> sol = solve_matrix(x.transpose(), target.transpose());
        if (!sol) throw error("second_factor: target outside the codeword row space");
        coeff = sol->transpose();
    }
    Matrix ln = left_null_space(x);
    Matrix out = vstack(coeff, ln);
    if (out.rows() > rows_out) throw error("second_factor: row budget too small");
    out = vstack(out, zeros(x.field(), rows_out - out.rows(), n));
    return out;
}

/// rows x cols selector with identity blocks at the three row groups:
/// the shared part (w), the first sel columns of the extra part, and the
/// tail that picks up the zero rows of the second factor.
Matrix first_factor(const Field& fld, int rows, int cols, int w, int extra, int sel) {
    Matrix out = zeros(fld, rows, cols);
    for (int r = 0; r < w; ++r) out(r, r) = 1;
    for (int r = 0; r < sel; ++r) out(w + r, w + r) = 1;
    for (int r = 0; w + sel + r < rows; ++r) {
        if (w + extra + r >= cols)
            throw error("first_factor: selector column out of range");
        out(w + sel + r, w + extra + r) = 1;
    }
    return out;
}

} // namespace

AttackResult noncoherent_attack(const Matrix& x, const Matrix& x2, int rho, int big_n, int i) {
    check_pair(x, x2);
    const int n = x.rows();
    if (rho < 0) throw invalid_parameters("noncoherent_attack: negative rank deficiency");
    if (big_n < n - rho || big_n < 0)
        throw invalid_parameters("noncoherent_attack: reception rows cannot support an "
                                 "admissible transfer matrix");
    const Field& fld = x.field();
    const int d = noncoherent_delta(x, x2, rho);
    check_split(i, ExtNat(d));

    const Subspace vx = Subspace::row_space(x);
    const Subspace vx2 = Subspace::row_space(x2);
    const Subspace shared = intersect(vx, vx2);
    const int k = vx.dim();
    const int s = vx2.dim();
    const int w = shared.dim();

    AttackResult out;
    if (w > big_n) {
        // the shared space exceeds the reception size only when both
        // codewords are reachable at zero effort
        if (d != 0) throw error("noncoherent_attack: deep intersection with positive separation");
        const int r0 = std::max(std::max(k, s) - rho, 0);
        Matrix y = zeros(fld, big_n, x.cols());
        for (int r = 0; r < r0; ++r)
            for (int cidx = 0; cidx < x.cols(); ++cidx) y(r, cidx) = shared.basis()(r, cidx);
        out.y = y;
        out.witness = {{"shared", shared.basis()}};
        out.claimed_first = ExtNat(0);
        out.claimed_second = ExtNat(0);
    } else {
        Matrix xt = complement_rows(shared.basis(), vx.basis());
        Matrix yt = complement_rows(shared.basis(), vx2.basis());
        Matrix a2 = second_factor(x, vstack(shared.basis(), xt), big_n + rho);
        Matrix b2 = second_factor(x2, vstack(shared.basis(), yt), big_n + rho);
        const int ibar = std::max(k - w - rho, 0);
        const int jbar = std::max(s - w - rho, 0);
        Matrix a1 = first_factor(fld, big_n, big_n + rho, w, k - w, ibar);
        Matrix b1 = first_factor(fld, big_n, big_n + rho, w, s - w, jbar);
        Matrix a = a1 * a2;
        Matrix aprime = b1 * b2;
        if (rank(a) < n - rho || rank(aprime) < n - rho)
            throw error("noncoherent_attack: constructed transfer matrix inadmissible");
        Matrix m = aprime * x2 - a * x;
        if (rank(m) != d) throw error("noncoherent_attack: block construction missed the bound");

        RankSplit rs = split_by_rank(m, i);
        out.y = a * x + rs.w;
        out.witness = {{"shared", shared.basis()}, {"x_extra", xt},    {"y_extra", yt},
                       {"a1", a1},                 {"a2", a2},         {"b1", b1},
                       {"b2", b2},                 {"a", a},           {"aprime", aprime},
                       {"difference", m},          {"w", rs.w},        {"w2", rs.w2}};
        out.claimed_first = ExtNat(i);
        out.claimed_second = ExtNat(d - i);
    }
    self_check(out, ExtNat(noncoherent_discrepancy(x, out.y, rho)),
               ExtNat(noncoherent_discrepancy(x2, out.y, rho)));
    return out;
}

namespace {

ExtNat pair_separation(const ModelParams& p, const Matrix& x1, const Matrix& x2) {
    switch (p.kind) {
        case ModelKind::coherent: return ExtNat(coherent_delta(*p.a, x1, x2));
        case ModelKind::yeung: return yeung_delta(*p.a, *p.f, x1, x2);
        case ModelKind::noncoherent: return ExtNat(noncoherent_delta(x1, x2, p.rho));
    }
    throw invalid_parameters("pair_separation: bad enum value");
}

int reception_rows(const MatrixCode& c, const ModelParams& p) {
    switch (p.kind) {
        case ModelKind::coherent:
        case ModelKind::yeung: return p.a->rows();
        case ModelKind::noncoherent: return p.big_n > 0 ? p.big_n : c.n;
    }
    throw invalid_parameters("reception_rows: bad enum value");
}

AttackResult attack_for(const MatrixCode& c, const ModelParams& p, const Matrix& x1,
                        const Matrix& x2, int i) {
    switch (p.kind) {
        case ModelKind::coherent: return coherent_attack(*p.a, x1, x2, i);
        case ModelKind::yeung: return yeung_attack(*p.a, *p.f, x1, x2, i);
        case ModelKind::noncoherent:
            return noncoherent_attack(x1, x2, p.rho, reception_rows(c, p), i);
    }
    throw invalid_parameters("attack_for: bad enum value");
}

Trial run_trial(const MatrixCode& c, const ModelParams& p, std::size_t ci, Matrix y,
                ExtNat effort) {
    DecodeOutcome o = decode_model(c, p, y);
    Trial tr;
    tr.codeword = ci;
    tr.received = std::move(y);
    tr.effort = effort;
    tr.decoded = o.result;
    tr.tie_count = o.tie_count;
    tr.success = o.result.has_value() && *o.result == ci && o.tie_count == 1;
    return tr;
}

/// All receptions the adversary can force from codeword ci at effort <= t.
std::vector<std::pair<Matrix, ExtNat>> admissible_receptions(const MatrixCode& c,
                                                             const ModelParams& p,
                                                             std::size_t ci, int t) {
    std::vector<std::pair<Matrix, ExtNat>> out;
    const Matrix& x = c.words[ci];
    const int rows = reception_rows(c, p);
    switch (p.kind) {
        case ModelKind::coherent: {
            Matrix ax = (*p.a) * x;
            for (const Matrix& w : enumerate_matrices(c.field, rows, c.m)) {
                const int r = rank(w);
                if (r <= t) out.emplace_back(ax + w, ExtNat(r));
            }
            break;
        }
        case ModelKind::yeung: {
            Matrix ax = (*p.a) * x;
            std::unordered_set<std::string> seen;
            for (const Matrix& e : enumerate_matrices(c.field, p.f->cols(), c.m)) {
                if (row_weight(e) > t) continue;
                Matrix y = ax + (*p.f) * e;
                if (!seen.insert(matrix_to_string(y)).second) continue;
                ExtNat effort = yeung_discrepancy(*p.a, *p.f, x, y);
                out.emplace_back(std::move(y), effort);
            }
            break;
        }
        case ModelKind::noncoherent: {
            for (const Matrix& y : enumerate_matrices(c.field, rows, c.m)) {
                const int dd = noncoherent_discrepancy(x, y, p.rho);
                if (dd <= t) out.emplace_back(y, ExtNat(dd));
            }
            break;
        }
    }
    return out;
}

std::string describe(const MatrixCode& c, const ModelParams& p, int t) {
    std::ostringstream os;
    os << "q=" << c.field.q() << " n=" << c.n << " m=" << c.m
       << " words=" << c.words.size() << " t=" << t;
    if (p.kind == ModelKind::noncoherent)
        os << " rho=" << p.rho << " N=" << (p.big_n > 0 ? p.big_n : c.n);
    if (p.a) os << " rank_a=" << rank(*p.a);
    if (p.f) os << " edges=" << p.f->cols();
    return os.str();
}

Matrix random_matrix(const Field& fld, int rows, int cols, std::mt19937_64& rng) {
    Matrix out(fld, rows, cols);
    std::uniform_int_distribution<int> dist(0, fld.q() - 1);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) out(r, c) = std::uint8_t(dist(rng));
    return out;
}

std::pair<Matrix, ExtNat> random_reception(const MatrixCode& c, const ModelParams& p,
                                           std::size_t ci, int t, std::mt19937_64& rng) {
    const Matrix& x = c.words[ci];
    const int rows = reception_rows(c, p);
    switch (p.kind) {
        case ModelKind::coherent: {
            Matrix w = random_matrix(c.field, rows, t, rng) * random_matrix(c.field, t, c.m, rng);
            Matrix y = (*p.a) * x + w;
            return {y, ExtNat(coherent_discrepancy(*p.a, x, y))};
        }
        case ModelKind::yeung: {
            Matrix e = zeros(c.field, p.f->cols(), c.m);
            std::uniform_int_distribution<int> cnt(0, t);
            int want = std::min(cnt(rng), e.rows());
            for (int placed = 0; placed < want; ++placed) {
                std::uniform_int_distribution<int> pick(0, e.rows() - 1);
                int r = pick(rng);
                Matrix row = random_matrix(c.field, 1, c.m, rng);
                for (int cidx = 0; cidx < c.m; ++cidx) e(r, cidx) = row(0, cidx);
            }
            Matrix y = (*p.a) * x + (*p.f) * e;
            return {y, yeung_discrepancy(*p.a, *p.f, x, y)};
        }
        case ModelKind::noncoherent: {
            Matrix a(c.field, rows, c.n);
            for (int attempt = 0;; ++attempt) {
                a = random_matrix(c.field, rows, c.n, rng);
                if (rank(a) >= c.n - p.rho) break;
                if (attempt > 10000)
                    throw error("random_reception: cannot sample an admissible transfer matrix");
            }
            Matrix w = random_matrix(c.field, rows, t, rng) * random_matrix(c.field, t, c.m, rng);
            Matrix y = a * x + w;
            return {y, ExtNat(noncoherent_discrepancy(x, y, p.rho))};
        }
    }
    throw invalid_parameters("random_reception: bad enum value");
}

} // namespace

TrialReport verify_correction_theorem(const MatrixCode& c, const ModelParams& p, int t,
                                      std::size_t random_trials, std::uint64_t seed) {
    if (t < 0) throw invalid_parameters("verify_correction_theorem: negative radius");
    if (c.words.size() < 2)
        throw singleton_code("verify_correction_theorem: need at least two codewords");
    TrialReport rep;
    rep.model = model_kind_name(p.kind);
    rep.radius = t;
    rep.seed = seed;
    rep.separation = model_delta_code(p, c.words);
    rep.prediction_success = ExtNat(2 * t) < rep.separation;
    rep.parameters = describe(c, p, t);

    if (rep.prediction_success) {
        // guarantee direction: every admissible reception of every codeword
        // must decode back to it, uniquely
        bool exhausted_ok = true;
        try {
            for (std::size_t ci = 0; ci < c.words.size(); ++ci)
                for (auto& [y, effort] : admissible_receptions(c, p, ci, t))
                    rep.trials.push_back(run_trial(c, p, ci, std::move(y), effort));
        } catch (const enumeration_budget_exceeded&) {
            exhausted_ok = false;
        }
        if (!exhausted_ok) {
            rep.trials.clear();
            rep.exhaustive = false;
            rep.note = "admissible space exceeds the enumeration budget; seeded random trials";
            std::mt19937_64 rng(seed);
            std::uniform_int_distribution<std::size_t> pickc(0, c.words.size() - 1);
            for (std::size_t k = 0; k < random_trials; ++k) {
                std::size_t ci = pickc(rng);
                auto [y, effort] = random_reception(c, p, ci, t, rng);
                rep.trials.push_back(run_trial(c, p, ci, std::move(y), effort));
            }
        }
        rep.verdict = "CONFIRMED";
        for (std::size_t k = 0; k < rep.trials.size(); ++k) {
            if (!rep.trials[k].success) {
                rep.verdict = "FALSIFIED";
                rep.counterexample = k;
                break;
            }
        }
    } else {
        // converse direction: the separation-achieving pair admits a
        // reception inside both radius-t fan-outs, forcing a failure
        std::size_t best_i = 0, best_j = 1;
        ExtNat best = pair_separation(p, c.words[0], c.words[1]);
        for (std::size_t a = 0; a < c.words.size(); ++a)
            for (std::size_t b = a + 1; b < c.words.size(); ++b) {
                ExtNat d = pair_separation(p, c.words[a], c.words[b]);
                if (d < best) {
                    best = d;
                    best_i = a;
                    best_j = b;
                }
            }
        const int d = int(best.value());
        const int split = (d + 1) / 2;
        AttackResult att = attack_for(c, p, c.words[best_i], c.words[best_j], split);
        DecodeOutcome o = decode_model(c, p, att.y);
        const bool picked_first =
            o.result.has_value() && *o.result == best_i && o.tie_count == 1;
        const std::size_t transmitted = picked_first ? best_j : best_i;
        const ExtNat effort = picked_first ? att.claimed_second : att.claimed_first;
        rep.trials.push_back(run_trial(c, p, transmitted, att.y, effort));
        rep.note = "separation <= 2t: forced-failure reception built on the achieving pair (" +
                   std::to_string(best_i) + ", " + std::to_string(best_j) + ") at split " +
                   std::to_string(split);
        if (!rep.trials[0].success) {
            rep.verdict = "CONFIRMED";
        } else {
            rep.verdict = "FALSIFIED";
            rep.counterexample = 0;
        }
    }
    return rep;
}

Example4Report example4_scenario() {
    Field f2 = Field::make(2);
    // smallest nested-template instance: two large disjoint blocks and a
    // small codeword drawing w rows from each plus mixed rows
    int fm = 0, fk1 = 0, fk2 = 0, fw = 0;
    bool found = false;
    for (int m = 2; m <= 12 && !found; ++m)
        for (int k2 = 1; 2 * k2 <= m && !found; ++k2)
            for (int k1 = 1; k1 < k2 && !found; ++k1)
                for (int w = 0; 2 * w <= k1 && !found; ++w) {
                    const int mixed = k1 - 2 * w;
                    if (w + mixed > k2 - w) continue;
                    const int d = k1 + k2 - 2 * w;
                    const int gamma = k2 - k1;
                    if (!(3 * gamma > d && 2 * gamma < d)) continue;
                    if ((d - gamma) % 2 != 0) continue;
                    if (!(4 * k2 > 3 * d)) continue;
                    fm = m;
                    fk1 = k1;
                    fk2 = k2;
                    fw = w;
                    found = true;
                }
    if (!found)
        throw no_instance_found("example4_scenario: no template instance within ambient 12");

    const int m = fm, k1 = fk1, k2 = fk2, w = fw;
    auto unit = [&](int i) {
        Matrix u(f2, 1, m);
        u(0, i) = 1;
        return u;
    };
    Matrix b2(f2, 0, m), b3(f2, 0, m), b1(f2, 0, m);
    for (int i = 0; i < k2; ++i) b2 = vstack(b2, unit(i));
    for (int i = 0; i < k2; ++i) b3 = vstack(b3, unit(k2 + i));
    for (int i = 0; i < w; ++i) b1 = vstack(b1, unit(i));
    for (int i = 0; i < w; ++i) b1 = vstack(b1, unit(k2 + i));
    for (int j = 0; j < k1 - 2 * w; ++j) b1 = vstack(b1, unit(w + j) + unit(k2 + w + j));

    Example4Report rep;
    rep.ambient = m;
    Subspace v1 = Subspace::row_space(b1);
    Subspace v2 = Subspace::row_space(b2);
    Subspace v3 = Subspace::row_space(b3);
    rep.dim_v1 = v1.dim();
    rep.dim_v2 = v2.dim();
    rep.dim_v3 = v3.dim();
    rep.d = subspace_distance(v1, v2);
    rep.gamma = rep.dim_v2 - rep.dim_v1;
    rep.gamma_prime = rep.dim_v3 - rep.dim_v1;
    rep.epsilon = (rep.d - rep.gamma) / 2;
    rep.epsilon_prime = (subspace_distance(v1, v3) - rep.gamma_prime) / 2;
    if (subspace_distance(v1, v3) != rep.d)
        throw error("example4_scenario: asymmetric template distances");
    rep.code = make_subspace_code(f2, m, {v1, v2, v3});

    const int n = k2;
    auto pad = [&](const Matrix& b) { return vstack(b, zeros(f2, n - b.rows(), m)); };
    rep.matrix_code = make_matrix_code(f2, n, m, {pad(b1), pad(b2), pad(b3)});

    rep.separation_subspace = std::min(
        {rep.d, subspace_distance(v1, v3), subspace_distance(v2, v3)});
    rep.separation_injection = std::min(
        {injection_distance(v1, v2), injection_distance(v1, v3), injection_distance(v2, v3)});

    // discrepancy decoder capability: exact from the separation via the
    // correction condition, with a constructive defeat one step beyond
    const int delta = rep.separation_injection;
    rep.t_discrepancy = (delta - 1) / 2;
    {
        std::size_t pi = 0, pj = 1;
        int bestd = injection_distance(v1, v2);
        const std::vector<std::pair<std::size_t, std::size_t>> pairs = {{0, 1}, {0, 2}, {1, 2}};
        for (auto [a, b] : pairs) {
            int dd = injection_distance(rep.code.members[a], rep.code.members[b]);
            if (dd < bestd) {
                bestd = dd;
                pi = a;
                pj = b;
            }
        }
        AttackResult att = noncoherent_attack(rep.matrix_code.words[pi],
                                              rep.matrix_code.words[pj], 0, n, (delta + 1) / 2);
        DecodeOutcome o = decode_noncoherent(rep.matrix_code, 0, att.y);
        // the transmitted word is whichever side the decoder abandons
        std::size_t transmitted =
            (o.result.has_value() && *o.result == pi && o.tie_count == 1) ? pj : pi;
        ExtNat eff = transmitted == pi ? att.claimed_first : att.claimed_second;
        if (ExtNat(rep.t_discrepancy + 1) < eff)
            throw error("example4_scenario: defeat reception exceeds radius t+1");
        DecodeOutcome check = decode_noncoherent(rep.matrix_code, 0, att.y);
        if (check.result.has_value() && *check.result == transmitted && check.tie_count == 1)
            throw error("example4_scenario: defeat reception unexpectedly corrected");
        rep.discrepancy_failure_witness = att.y;
    }

    // nearest-subspace decoder: exhaustive radius-1 scan, then the two
    // injection reception from Example 2 that it must misread
    bool radius_one_clean = true;
    for (std::size_t ci = 0; ci < rep.code.members.size() && radius_one_clean; ++ci) {
        const Subspace& v = rep.code.members[ci];
        std::vector<Matrix> kept_bases;
        kept_bases.push_back(v.basis());
        for (const Subspace& h : enumerate_subspaces_of_dim(f2, v.dim(), v.dim() - 1))
            kept_bases.push_back(h.basis() * v.basis());
        for (const Matrix& kb : kept_bases) {
            for (std::uint64_t vi = 0; vi < (std::uint64_t(1) << m); ++vi) {
                Matrix extra = matrix_from_index(f2, 1, m, vi);
                Subspace u = Subspace::row_space(vstack(kb, extra));
                ++rep.radius_one_receptions;
                DecodeOutcome o = decode_subspace(rep.code, u);
                if (!(o.result.has_value() && *o.result == ci && o.tie_count == 1)) {
                    radius_one_clean = false;
                    break;
                }
            }
            if (!radius_one_clean) break;
        }
    }
    rep.t_subspace = radius_one_clean ? 1 : 0;

    {
        // U = V1 plus gamma fresh dimensions of V2: two injections from V2,
        // yet nearest in subspace distance to V1
        Matrix fresh = complement_rows(intersect(v1, v2).basis(), b2);
        Matrix sel(f2, 0, m);
        for (int r = 0; r < rep.gamma; ++r) sel = vstack(sel, fresh.row(r));
        Subspace u = Subspace::row_space(vstack(b1, sel));
        if (u.dim() != rep.dim_v2 || !u.contains(v1))
            throw error("example4_scenario: witness reception malformed");
        if (subspace_distance(v1, u) != rep.gamma ||
            subspace_distance(v2, u) != rep.d - rep.gamma ||
            injection_distance(v1, u) != rep.gamma || injection_distance(v2, u) != rep.epsilon)
            throw error("example4_scenario: witness distances off the example values");
        DecodeOutcome ds = decode_subspace(rep.code, u);
        DecodeOutcome dm = decode_noncoherent(rep.matrix_code, 0, u.basis());
        if (!(ds.result == std::size_t{0} && dm.result == std::size_t{1}))
            throw error("example4_scenario: decoders agree on the witness; scenario void");
        rep.subspace_failure_witness = u.basis();
    }

    std::ostringstream note;
    note << "decoder capabilities measured: nearest-subspace corrects every 1-injection "
            "reception ("
         << rep.radius_one_receptions << " scanned) but misreads a 2-injection one; "
         << "minimum-discrepancy corrects through " << rep.t_discrepancy
         << ". The asymptotic 4/3 ratio is reported, not asserted: this instance gives "
         << rep.t_discrepancy << "/" << rep.t_subspace << ".";
    rep.note = note.str();
    return rep;
}

namespace {

nlohmann::json extnat_json(ExtNat v) {
    if (v.is_inf()) return nlohmann::json("inf");
    return nlohmann::json(v.value());
}

nlohmann::json trial_json(const Trial& tr) {
    nlohmann::json j;
    j["codeword"] = tr.codeword;
    j["received"] = matrix_to_string(tr.received);
    j["effort"] = extnat_json(tr.effort);
    if (tr.decoded)
        j["decoded"] = *tr.decoded;
    else
        j["decoded"] = nullptr;
    j["tie_count"] = tr.tie_count;
    j["success"] = tr.success;
    return j;
}

} // namespace

std::string trial_report_json(const TrialReport& report, const MatrixCode& c,
                              const ModelParams& p) {
    nlohmann::json j;
    j["model"] = report.model;
    j["parameters"] = report.parameters;
    j["separation"] = extnat_json(report.separation);
    j["radius"] = report.radius;
    j["prediction_success"] = report.prediction_success;
    j["exhaustive"] = report.exhaustive;
    j["seed"] = report.seed;
    j["verdict"] = report.verdict;
    if (report.counterexample)
        j["counterexample"] = *report.counterexample;
    else
        j["counterexample"] = nullptr;
    if (!report.note.empty()) j["note"] = report.note;
    j["trial_count"] = report.trials.size();
    nlohmann::json trials = nlohmann::json::array();
    for (const Trial& tr : report.trials) trials.push_back(trial_json(tr));
    j["trials"] = std::move(trials);

    nlohmann::json replay;
    nlohmann::json words = nlohmann::json::array();
    for (const Matrix& x : c.words) words.push_back(matrix_to_string(x));
    replay["codewords"] = std::move(words);
    replay["kind"] = model_kind_name(p.kind);
    if (p.a) replay["a"] = matrix_to_string(*p.a);
    if (p.f) replay["f"] = matrix_to_string(*p.f);
    if (p.kind == ModelKind::noncoherent) {
        replay["rho"] = p.rho;
        replay["reception_rows"] = reception_rows(c, p);
    }
    replay["radius"] = report.radius;
    replay["seed"] = report.seed;
    j["replay"] = std::move(replay);
    return j.dump(2);
}

std::string example4_report_json(const Example4Report& report) {
    nlohmann::json j;
    j["ambient"] = report.ambient;
    j["dims"] = {report.dim_v1, report.dim_v2, report.dim_v3};
    j["d"] = report.d;
    j["gamma"] = report.gamma;
    j["gamma_prime"] = report.gamma_prime;
    j["epsilon"] = report.epsilon;
    j["epsilon_prime"] = report.epsilon_prime;
    j["separation_subspace"] = report.separation_subspace;
    j["separation_injection"] = report.separation_injection;
    j["t_subspace"] = report.t_subspace;
    j["t_discrepancy"] = report.t_discrepancy;
    j["radius_one_receptions"] = report.radius_one_receptions;
    nlohmann::json members = nlohmann::json::array();
    for (const Subspace& v : report.code.members) members.push_back(matrix_to_string(v.basis()));
    j["code"] = std::move(members);
    j["subspace_failure_witness"] = matrix_to_string(report.subspace_failure_witness);
    j["discrepancy_failure_witness"] = matrix_to_string(report.discrepancy_failure_witness);
    j["note"] = report.note;
    return j.dump(2);
}

} // namespace netcode
