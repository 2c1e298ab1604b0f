#include "doctest.h"

#include <cstdlib>

#include "json.hpp"
#include "netcode/adversary.hpp"
#include "netcode/errors.hpp"
#include "netcode/netmetrics.hpp"

using namespace netcode;

namespace {

Matrix m22(const Field& f, std::initializer_list<std::uint8_t> v) {
    return Matrix(f, 2, 2, std::vector<std::uint8_t>(v));
}

const Matrix* find_witness(const AttackResult& att, const std::string& name) {
    for (const auto& [label, mat] : att.witness)
        if (label == name) return &mat;
    return nullptr;
}

} // namespace

TEST_CASE("coherent attack realizes every split exactly") {
    Field f2 = Field::make(2);
    for (const Matrix& a : {identity(f2, 2), m22(f2, {1, 0, 0, 0})}) {
        for (std::uint64_t xi = 0; xi < 16; ++xi) {
            for (std::uint64_t xj = xi + 1; xj < 16; ++xj) {
                Matrix x = matrix_from_index(f2, 2, 2, xi);
                Matrix x2 = matrix_from_index(f2, 2, 2, xj);
                const int d = coherent_delta(a, x, x2);
                for (int i = 0; i <= d; ++i) {
                    AttackResult att = coherent_attack(a, x, x2, i);
                    CHECK(att.claimed_first == ExtNat(i));
                    CHECK(att.claimed_second == ExtNat(d - i));
                    CHECK(ExtNat(coherent_discrepancy(a, x, att.y)) == ExtNat(i));
                    CHECK(ExtNat(coherent_discrepancy(a, x2, att.y)) == ExtNat(d - i));
                }
                CHECK_THROWS_AS(coherent_attack(a, x, x2, d + 1), split_out_of_range);
                CHECK_THROWS_AS(coherent_attack(a, x, x2, -1), split_out_of_range);
            }
        }
    }
}

TEST_CASE("coherent attack endpoints and midpoint receptions") {
    Field f2 = Field::make(2);
    Matrix a = identity(f2, 2);
    Matrix x = zeros(f2, 2, 2);
    Matrix x2 = identity(f2, 2);
    const int d = coherent_delta(a, x, x2);
    CHECK(d == 2);

    // split 0 leaves the first codeword untouched, split d the second
    CHECK(coherent_attack(a, x, x2, 0).y == a * x);
    CHECK(coherent_attack(a, x, x2, d).y == a * x2);

    // the midpoint reception forces a decoder tie between the pair
    AttackResult mid = coherent_attack(a, x, x2, 1);
    MatrixCode c = make_matrix_code(f2, 2, 2, {x, x2});
    DecodeOutcome o = decode_coherent(c, a, mid.y);
    CHECK(o.tie_count == 2);
    CHECK(o.result == std::size_t{0});
    CHECK(o.discrepancy == ExtNat(1));
}

TEST_CASE("edge-restricted attack splits the minimum-weight error") {
    Field f2 = Field::make(2);
    Matrix a = identity(f2, 2);

    // full edge access: the error is the difference, weight = nonzero rows
    Matrix f = identity(f2, 2);
    for (std::uint64_t xi = 0; xi < 16; ++xi) {
        for (std::uint64_t xj = xi + 1; xj < 16; ++xj) {
            Matrix x1 = matrix_from_index(f2, 2, 2, xi);
            Matrix x2 = matrix_from_index(f2, 2, 2, xj);
            ExtNat d = yeung_delta(a, f, x1, x2);
            REQUIRE(!d.is_inf());
            for (int i = 0; i <= int(d.value()); ++i) {
                AttackResult att = yeung_attack(a, f, x1, x2, i);
                CHECK(yeung_discrepancy(a, f, x1, att.y) == ExtNat(i));
                CHECK(yeung_discrepancy(a, f, x2, att.y) == d.minus(i));
            }
        }
    }
}

TEST_CASE("edge-restricted attack refuses unreachable pairs") {
    Field f2 = Field::make(2);
    Matrix a = identity(f2, 2);
    Matrix f(f2, 2, 1, {1, 1}); // one edge feeding both sinks equally

    // differing rows cannot be bridged by the single edge
    Matrix x1 = zeros(f2, 2, 2);
    Matrix apart = m22(f2, {1, 0, 0, 0});
    CHECK(yeung_delta(a, f, x1, apart).is_inf());
    CHECK_THROWS_AS(yeung_attack(a, f, x1, apart, 0), unreachable_pair);

    // equal-row differences cost exactly one edge
    Matrix x2 = m22(f2, {1, 1, 1, 1});
    ExtNat d = yeung_delta(a, f, x1, x2);
    REQUIRE(d == ExtNat(1));
    for (int i = 0; i <= 1; ++i) {
        AttackResult att = yeung_attack(a, f, x1, x2, i);
        CHECK(yeung_discrepancy(a, f, x1, att.y) == ExtNat(i));
        CHECK(yeung_discrepancy(a, f, x2, att.y) == ExtNat(1 - i));
    }
    CHECK_THROWS_AS(yeung_attack(a, f, x1, x2, 2), split_out_of_range);
}

TEST_CASE("transfer-choosing attack realizes every split at every deficiency") {
    Field f2 = Field::make(2);
    for (int rho = 0; rho <= 2; ++rho) {
        for (int big_n = std::max(1, 2 - rho); big_n <= 3; ++big_n) {
            for (std::uint64_t xi = 0; xi < 16; ++xi) {
                for (std::uint64_t xj = xi + 1; xj < 16; ++xj) {
                    Matrix x = matrix_from_index(f2, 2, 2, xi);
                    Matrix x2 = matrix_from_index(f2, 2, 2, xj);
                    const int d = noncoherent_delta(x, x2, rho);
                    for (int i = 0; i <= d; ++i) {
                        AttackResult att = noncoherent_attack(x, x2, rho, big_n, i);
                        CHECK(att.y.rows() == big_n);
                        CHECK(ExtNat(noncoherent_discrepancy(x, att.y, rho)) == ExtNat(i));
                        CHECK(ExtNat(noncoherent_discrepancy(x2, att.y, rho)) == ExtNat(d - i));
                        // the block factors must be admissible and meet the
                        // separation with their transform difference
                        const Matrix* ta = find_witness(att, "a");
                        const Matrix* tb = find_witness(att, "aprime");
                        if (ta && tb) {
                            CHECK(rank(*ta) >= 2 - rho);
                            CHECK(rank(*tb) >= 2 - rho);
                            CHECK(rank(*tb * x2 - *ta * x) == d);
                        }
                    }
                    CHECK_THROWS_AS(noncoherent_attack(x, x2, rho, big_n, d + 1),
                                    split_out_of_range);
                }
            }
        }
    }
}

TEST_CASE("transfer-choosing attack handles deep intersections by truncation") {
    Field f2 = Field::make(2);
    // distinct full-rank matrices with one shared row space
    Matrix x = identity(f2, 3);
    Matrix x2 = Matrix(f2, 3, 3, {1, 1, 0, 0, 1, 0, 0, 0, 1});
    REQUIRE(Subspace::row_space(x) == Subspace::row_space(x2));

    // one reception row cannot hold the 3-dimensional shared space, yet both
    // codewords stay reachable at zero effort once rho covers the gap
    AttackResult att = noncoherent_attack(x, x2, 2, 1, 0);
    CHECK(att.y.rows() == 1);
    CHECK(att.claimed_first == ExtNat(0));
    CHECK(att.claimed_second == ExtNat(0));
    CHECK(noncoherent_discrepancy(x, att.y, 2) == 0);
    CHECK(noncoherent_discrepancy(x2, att.y, 2) == 0);

    CHECK_THROWS_AS(noncoherent_attack(x, x2, 0, 1, 0), invalid_parameters);
    CHECK_THROWS_AS(noncoherent_attack(x, x2, -1, 3, 0), invalid_parameters);
}

TEST_CASE("correction check scans the guarantee direction exhaustively") {
    Field f2 = Field::make(2);
    MatrixCode c = make_matrix_code(f2, 2, 2, {zeros(f2, 2, 2), identity(f2, 2)});
    ModelParams p;
    p.kind = ModelKind::coherent;
    p.a = identity(f2, 2);

    TrialReport rep = verify_correction_theorem(c, p, 0);
    CHECK(rep.prediction_success);
    CHECK(rep.exhaustive);
    CHECK(rep.verdict == "CONFIRMED");
    CHECK(rep.separation == ExtNat(2));
    // radius 0 leaves one admissible reception per codeword
    CHECK(rep.trials.size() == 2);
    for (const Trial& tr : rep.trials) CHECK(tr.success);
}

TEST_CASE("correction check builds the forced failure in the converse direction") {
    Field f2 = Field::make(2);
    MatrixCode c = make_matrix_code(f2, 2, 2, {zeros(f2, 2, 2), identity(f2, 2)});
    ModelParams p;
    p.kind = ModelKind::coherent;
    p.a = identity(f2, 2);

    TrialReport rep = verify_correction_theorem(c, p, 1);
    CHECK(!rep.prediction_success);
    CHECK(rep.verdict == "CONFIRMED");
    CHECK(rep.trials.size() == 1);
    CHECK(!rep.trials[0].success);
    CHECK(!(ExtNat(1) < rep.trials[0].effort));
}

TEST_CASE("correction check confirms a distance-3 evaluation code at radius 1") {
    GabidulinSpec gs;
    gs.base = Field::make(2);
    gs.m = 3;
    gs.n = 3;
    gs.k = 1;
    MatrixCode c = gabidulin_generate(gs);
    REQUIRE(c.words.size() == 8);

    ModelParams p;
    p.kind = ModelKind::coherent;
    p.a = identity(c.field, 3);
    TrialReport rep = verify_correction_theorem(c, p, 1);
    CHECK(rep.prediction_success);
    CHECK(rep.exhaustive);
    CHECK(rep.verdict == "CONFIRMED");
    // 8 codewords, each with the 50 rank <= 1 disturbances of a 3x3 table
    CHECK(rep.trials.size() == 400);

    // a rank-deficient transfer matrix eats one unit of separation, so the
    // same radius flips to the converse branch
    ModelParams weak = p;
    weak.a = Matrix(c.field, 3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 0});
    TrialReport conv = verify_correction_theorem(c, weak, 1);
    CHECK(conv.separation == ExtNat(2));
    CHECK(!conv.prediction_success);
    CHECK(conv.verdict == "CONFIRMED");
    CHECK(!conv.trials[0].success);
}

TEST_CASE("correction check covers the transfer-choosing model on a lifted code") {
    GabidulinSpec gs;
    gs.base = Field::make(2);
    gs.m = 2;
    gs.n = 2;
    gs.k = 1;
    MatrixCode g = gabidulin_generate(gs);
    std::vector<Matrix> lifted;
    for (const Matrix& x : g.words) lifted.push_back(hstack(identity(g.field, 2), x));
    MatrixCode c = make_matrix_code(g.field, 2, 4, std::move(lifted));

    ModelParams p;
    p.kind = ModelKind::noncoherent;
    p.rho = 0;

    TrialReport zero = verify_correction_theorem(c, p, 0);
    CHECK(zero.separation == ExtNat(2));
    CHECK(zero.prediction_success);
    CHECK(zero.exhaustive);
    CHECK(zero.verdict == "CONFIRMED");
    // effort 0 receptions are exactly the row-space-preserving rewritings
    CHECK(zero.trials.size() == c.words.size() * 6);

    TrialReport one = verify_correction_theorem(c, p, 1);
    CHECK(!one.prediction_success);
    CHECK(one.verdict == "CONFIRMED");
    CHECK(!one.trials[0].success);
}

TEST_CASE("correction check falls back to seeded random trials over budget") {
    Field f2 = Field::make(2);
    MatrixCode c = make_matrix_code(f2, 2, 2, {zeros(f2, 2, 2), identity(f2, 2)});
    ModelParams p;
    p.kind = ModelKind::coherent;
    p.a = identity(f2, 2);

    setenv("NETCODE_BUDGET", "8", 1);
    TrialReport rep = verify_correction_theorem(c, p, 0, 64, 7);
    unsetenv("NETCODE_BUDGET");

    CHECK(rep.prediction_success);
    CHECK(!rep.exhaustive);
    CHECK(rep.seed == 7);
    CHECK(rep.trials.size() == 64);
    CHECK(rep.verdict == "CONFIRMED");
    CHECK(!rep.note.empty());
}

TEST_CASE("correction check validates its inputs") {
    Field f2 = Field::make(2);
    MatrixCode c = make_matrix_code(f2, 2, 2, {zeros(f2, 2, 2), identity(f2, 2)});
    ModelParams p;
    p.kind = ModelKind::coherent;
    p.a = identity(f2, 2);
    CHECK_THROWS_AS(verify_correction_theorem(c, p, -1), invalid_parameters);
    MatrixCode one = make_matrix_code(f2, 2, 2, {zeros(f2, 2, 2)});
    CHECK_THROWS_AS(verify_correction_theorem(one, p, 0), singleton_code);
}

TEST_CASE("scenario with genuinely different decoder capabilities") {
    Example4Report rep = example4_scenario();

    CHECK(rep.ambient == 12);
    CHECK(rep.dim_v1 == 3);
    CHECK(rep.dim_v2 == 6);
    CHECK(rep.dim_v3 == 6);
    CHECK(rep.d == 7);
    CHECK(rep.gamma == 3);
    CHECK(rep.gamma_prime == 3);
    CHECK(rep.epsilon == 2);
    CHECK(rep.epsilon_prime == 2);

    // the template constraints the search enforces
    CHECK(3 * rep.gamma > rep.d);
    CHECK(2 * rep.gamma < rep.d);
    CHECK(rep.epsilon < rep.gamma);

    CHECK(rep.separation_subspace == 7);
    CHECK(rep.separation_injection == 5);
    CHECK(rep.t_subspace == 1);
    CHECK(rep.t_discrepancy == 2);
    CHECK(rep.t_discrepancy >= rep.t_subspace + 1);
    CHECK(rep.radius_one_receptions == 557056);

    REQUIRE(rep.code.members.size() == 3);
    REQUIRE(rep.matrix_code.words.size() == 3);
    CHECK(rep.matrix_code.n == 6);
    CHECK(rep.matrix_code.m == 12);

    // the witness splits the decoders: nearest subspace stays with the small
    // codeword, minimum discrepancy follows the intersection
    Subspace u = Subspace::row_space(rep.subspace_failure_witness);
    DecodeOutcome ds = decode_subspace(rep.code, u);
    DecodeOutcome dm = decode_noncoherent(rep.matrix_code, 0, rep.subspace_failure_witness);
    CHECK(ds.result == std::size_t{0});
    CHECK(ds.tie_count == 1);
    CHECK(dm.result == std::size_t{1});
    CHECK(dm.tie_count == 1);
    CHECK(injection_distance(rep.code.members[1], u) == rep.epsilon);

    // the discrepancy decoder's own limit is one past its radius: some
    // codeword within t + 1 of this reception is not recovered from it
    DecodeOutcome beyond = decode_noncoherent(rep.matrix_code, 0, rep.discrepancy_failure_witness);
    bool defeated = false;
    for (std::size_t ci = 0; ci < rep.matrix_code.words.size(); ++ci) {
        int eff = noncoherent_discrepancy(rep.matrix_code.words[ci],
                                          rep.discrepancy_failure_witness, 0);
        bool recovered = beyond.result == ci && beyond.tie_count == 1;
        if (eff <= rep.t_discrepancy + 1 && !recovered) defeated = true;
    }
    CHECK(defeated);
    CHECK(!rep.note.empty());
}

TEST_CASE("reports serialize to parseable json") {
    Field f2 = Field::make(2);
    MatrixCode c = make_matrix_code(f2, 2, 2, {zeros(f2, 2, 2), identity(f2, 2)});
    ModelParams p;
    p.kind = ModelKind::coherent;
    p.a = identity(f2, 2);
    TrialReport rep = verify_correction_theorem(c, p, 0);

    nlohmann::json j = nlohmann::json::parse(trial_report_json(rep, c, p));
    CHECK(j["verdict"] == "CONFIRMED");
    CHECK(j["model"] == "coherent");
    CHECK(j["trial_count"] == 2);
    CHECK(j["replay"]["codewords"].size() == 2);
    CHECK(j["replay"]["seed"] == rep.seed);

    Example4Report ex = example4_scenario();
    nlohmann::json je = nlohmann::json::parse(example4_report_json(ex));
    CHECK(je["ambient"] == 12);
    CHECK(je["code"].size() == 3);
    CHECK(je["t_subspace"] == 1);
    CHECK(je["t_discrepancy"] == 2);
}
