#include "netcode/codes.hpp"

#include <unordered_set>
#include <utility>

#include "json.hpp"
#include "netcode/netmetrics.hpp"

namespace netcode {

namespace {

using Poly = std::vector<std::uint8_t>;

int poly_deg(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
        if (a[i] != 0) return i;
    }
    return -1;
}

Poly poly_mul(const Field& f, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
        }
    }
    return c;
}

// In-place remainder against a monic divisor.
void poly_reduce(const Field& f, Poly& a, const Poly& mod) {
    const int dm = poly_deg(mod);
    for (int d = poly_deg(a); d >= dm && dm >= 0; d = poly_deg(a)) {
        const std::uint8_t lead = a[d];
        for (int i = 0; i <= dm; ++i) {
            a[d - dm + i] = f.sub(a[d - dm + i], f.mul(lead, mod[i]));
        }
    }
}

bool poly_is_irreducible(const Field& f, const Poly& mod) {
    const int dm = poly_deg(mod);
    if (dm < 1) return false;
    if (dm == 1) return true;
    const int q = f.q();
    for (int dd = 1; dd <= dm / 2; ++dd) {
        std::uint64_t count = 1;
        for (int i = 0; i < dd; ++i) count *= static_cast<std::uint64_t>(q);
        for (std::uint64_t t = 0; t < count; ++t) {
            Poly div(dd + 1, 0);
            div[dd] = 1;
            std::uint64_t v = t;
            for (int i = 0; i < dd; ++i) {
                div[i] = static_cast<std::uint8_t>(v % q);
                v /= q;
            }
            Poly rem = mod;
            poly_reduce(f, rem, div);
            if (poly_deg(rem) < 0) return false;
        }
    }
    return true;
}

} // namespace

ExtField::ExtField(Field base, int m) : base_(std::move(base)), m_(m) {
    if (!base_.valid()) throw invalid_parameters("missing base field");
    if (m < 1) throw invalid_parameters("extension degree must be >= 1");
    order_ = 1;
    for (int i = 0; i < m; ++i) {
        if (order_ > (std::uint64_t(1) << 62) / base_.q())
            throw field_too_large("extension order overflows");
        order_ *= static_cast<std::uint64_t>(base_.q());
    }
    // smallest monic irreducible of degree m, non-leading coefficients
    // enumerated as an ascending base-q integer
    for (std::uint64_t t = 0; t < order_; ++t) {
        Poly cand(m + 1, 0);
        cand[m] = 1;
        std::uint64_t v = t;
        for (int i = 0; i < m; ++i) {
            cand[i] = static_cast<std::uint8_t>(v % base_.q());
            v /= base_.q();
        }
        if (poly_is_irreducible(base_, cand)) {
            mod_ = cand;
            break;
        }
    }
}

void ExtField::check(const Elem& a) const {
    if (static_cast<int>(a.size()) != m_) throw invalid_parameters("element length disagrees");
    for (std::uint8_t c : a) {
        if (c >= base_.q()) throw invalid_parameters("element coefficient out of range");
    }
}

ExtField::Elem ExtField::reduce(std::vector<std::uint8_t> poly) const {
    poly_reduce(base_, poly, mod_);
    poly.resize(m_, 0);
    return poly;
}

ExtField::Elem ExtField::one() const {
    Elem e(m_, 0);
    e[0] = 1;
    return e;
}

ExtField::Elem ExtField::alpha() const { return reduce({0, 1}); }

bool ExtField::is_zero(const Elem& a) const {
    check(a);
    return poly_deg(a) < 0;
}

ExtField::Elem ExtField::add(const Elem& a, const Elem& b) const {
    check(a);
    check(b);
    Elem c(m_);
    for (int i = 0; i < m_; ++i) c[i] = base_.add(a[i], b[i]);
    return c;
}

ExtField::Elem ExtField::sub(const Elem& a, const Elem& b) const {
    check(a);
    check(b);
    Elem c(m_);
    for (int i = 0; i < m_; ++i) c[i] = base_.sub(a[i], b[i]);
    return c;
}

ExtField::Elem ExtField::neg(const Elem& a) const {
    check(a);
    Elem c(m_);
    for (int i = 0; i < m_; ++i) c[i] = base_.neg(a[i]);
    return c;
}

ExtField::Elem ExtField::mul(const Elem& a, const Elem& b) const {
    check(a);
    check(b);
    return reduce(poly_mul(base_, a, b));
}

ExtField::Elem ExtField::mul_scalar(const Elem& a, std::uint8_t c) const {
    check(a);
    Elem out(m_);
    for (int i = 0; i < m_; ++i) out[i] = base_.mul(a[i], c);
    return out;
}

ExtField::Elem ExtField::pow(const Elem& a, std::uint64_t e) const {
    check(a);
    Elem acc = one();
    Elem base = a;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

ExtField::Elem ExtField::inv(const Elem& a) const {
    if (is_zero(a)) throw division_by_zero("inverse of zero");
    return pow(a, order_ - 2);
}

ExtField::Elem ExtField::pow_q(const Elem& a) const { return pow(a, base_.q()); }

ExtField::Elem ExtField::from_index(std::uint64_t idx) const {
    if (idx >= order_) throw invalid_parameters("element index out of range");
    Elem e(m_);
    for (int i = 0; i < m_; ++i) {
        e[i] = static_cast<std::uint8_t>(idx % base_.q());
        idx /= base_.q();
    }
    return e;
}

std::uint64_t ExtField::to_index(const Elem& a) const {
    check(a);
    std::uint64_t idx = 0;
    for (int i = m_ - 1; i >= 0; --i) idx = idx * base_.q() + a[i];
    return idx;
}

MatrixCode make_matrix_code(Field f, int n, int m, std::vector<Matrix> words) {
    std::unordered_set<std::string> seen;
    for (const auto& w : words) {
        f.require_same(w.field());
        if (w.rows() != n || w.cols() != m) throw shape_mismatch("codeword shape disagrees");
        if (!seen.insert(matrix_to_string(w)).second)
            throw invalid_parameters("duplicate codeword");
    }
    return MatrixCode{std::move(f), n, m, std::move(words)};
}

SubspaceCode make_subspace_code(Field f, int ambient, std::vector<Subspace> members) {
    std::unordered_set<std::string> seen;
    for (const auto& s : members) {
        f.require_same(s.field());
        if (s.ambient() != ambient) throw ambient_mismatch("member ambient disagrees");
        if (!seen.insert(subspace_to_string(s)).second)
            throw invalid_parameters("duplicate member");
    }
    return SubspaceCode{std::move(f), ambient, std::move(members)};
}

MatrixCode gabidulin_generate(const GabidulinSpec& gs) {
    if (!gs.base.valid()) throw invalid_parameters("missing base field");
    if (gs.k < 1 || gs.k > gs.n || gs.n > gs.m)
        throw invalid_parameters("need 1 <= k <= n <= m");
    ExtField ef(gs.base, gs.m);

    std::vector<ExtField::Elem> pts;
    if (gs.points.empty()) {
        ExtField::Elem g = ef.one();
        for (int i = 0; i < gs.n; ++i) {
            pts.push_back(g);
            g = ef.mul(g, ef.alpha());
        }
    } else {
        if (static_cast<int>(gs.points.size()) != gs.n)
            throw invalid_parameters("need n evaluation points");
        for (const auto& p : gs.points) pts.emplace_back(p.begin(), p.end());
    }
    Matrix expansion(gs.base, gs.n, gs.m);
    for (int i = 0; i < gs.n; ++i) {
        if (static_cast<int>(pts[i].size()) != gs.m)
            throw invalid_parameters("evaluation point length disagrees");
        for (int j = 0; j < gs.m; ++j) {
            if (pts[i][j] >= gs.base.q())
                throw invalid_parameters("evaluation point coefficient out of range");
            expansion(i, j) = pts[i][j];
        }
    }
    if (rank(expansion) != gs.n)
        throw invalid_parameters("evaluation points are linearly dependent");

    const std::uint64_t total = counted_power(
        gs.base.q(), static_cast<std::uint64_t>(gs.m) * gs.k, "codeword enumeration");

    // tower[i][j] = pts[i]^(q^j)
    std::vector<std::vector<ExtField::Elem>> tower(gs.n);
    for (int i = 0; i < gs.n; ++i) {
        ExtField::Elem g = pts[i];
        for (int j = 0; j < gs.k; ++j) {
            tower[i].push_back(g);
            g = ef.pow_q(g);
        }
    }

    std::vector<Matrix> words;
    words.reserve(total);
    std::vector<ExtField::Elem> u(gs.k);
    for (std::uint64_t msg = 0; msg < total; ++msg) {
        std::uint64_t v = msg;
        for (int j = gs.k - 1; j >= 0; --j) {
            u[j] = ef.from_index(v % ef.order());
            v /= ef.order();
        }
        Matrix w(gs.base, gs.n, gs.m);
        for (int i = 0; i < gs.n; ++i) {
            ExtField::Elem c = ef.zero();
            for (int j = 0; j < gs.k; ++j) c = ef.add(c, ef.mul(u[j], tower[i][j]));
            for (int col = 0; col < gs.m; ++col) w(i, col) = c[col];
        }
        words.push_back(std::move(w));
    }
    return make_matrix_code(gs.base, gs.n, gs.m, std::move(words));
}

GabidulinSpec gabidulin_spec_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw parse_error(std::string("bad code descriptor: ") + e.what());
    }
    if (!j.is_object()) throw parse_error("code descriptor must be an object");
    if (j.value("kind", std::string()) != "gabidulin")
        throw unknown_input("unsupported code descriptor kind");
    GabidulinSpec gs;
    try {
        gs.base = Field::from_order(j.at("q").get<int>());
        gs.m = j.at("m").get<int>();
        gs.n = j.at("n").get<int>();
        gs.k = j.at("k").get<int>();
        if (j.contains("points")) {
            for (const auto& row : j.at("points")) {
                std::vector<std::uint8_t> p;
                for (const auto& c : row) p.push_back(static_cast<std::uint8_t>(c.get<int>()));
                gs.points.push_back(std::move(p));
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad code descriptor: ") + e.what());
    }
    return gs;
}

std::string gabidulin_spec_to_json(const GabidulinSpec& gs) {
    nlohmann::json j{{"kind", "gabidulin"}, {"q", gs.base.q()}, {"m", gs.m}, {"n", gs.n},
                     {"k", gs.k}};
    if (!gs.points.empty()) j["points"] = gs.points;
    return j.dump();
}

int min_rank_distance(const MatrixCode& c) {
    if (c.words.size() < 2) throw singleton_code("distance needs two codewords");
    int best = std::min(c.n, c.m) + 1;
    for (std::size_t i = 0; i < c.words.size(); ++i) {
        for (std::size_t j = i + 1; j < c.words.size(); ++j) {
            best = std::min(best, rank_distance(c.words[i], c.words[j]));
        }
    }
    return best;
}

int min_rank_distance_linear(const MatrixCode& c) {
    if (c.words.size() < 2) throw singleton_code("distance needs two codewords");
    bool has_zero = false;
    int best = std::min(c.n, c.m) + 1;
    for (const auto& w : c.words) {
        if (w.is_zero()) {
            has_zero = true;
        } else {
            best = std::min(best, rank(w));
        }
    }
    if (!has_zero) throw invalid_parameters("shortcut needs the zero codeword");
    return best;
}

bool is_additively_closed(const MatrixCode& c) {
    std::unordered_set<std::string> seen;
    for (const auto& w : c.words) seen.insert(matrix_to_string(w));
    for (std::size_t i = 0; i < c.words.size(); ++i) {
        for (std::size_t j = i; j < c.words.size(); ++j) {
            if (!seen.count(matrix_to_string(c.words[i] + c.words[j]))) return false;
        }
    }
    return true;
}

int min_injection_distance(const SubspaceCode& s) {
    if (s.members.size() < 2) throw singleton_code("distance needs two members");
    int best = s.ambient + 1;
    for (std::size_t i = 0; i < s.members.size(); ++i) {
        for (std::size_t j = i + 1; j < s.members.size(); ++j) {
            best = std::min(best, injection_distance(s.members[i], s.members[j]));
        }
    }
    return best;
}

BigInt singleton_rank_bound(int q, int n, int m, int d) {
    if (q < 2 || n < 1 || m < 1) throw invalid_parameters("bad code shape");
    if (d < 1 || d > std::min(n, m)) throw invalid_distance("need 1 <= d <= min(n, m)");
    const unsigned exponent =
        static_cast<unsigned>(std::max(n, m)) * static_cast<unsigned>(std::min(n, m) - d + 1);
    return boost::multiprecision::pow(BigInt(q), exponent);
}

NetworkBounds singleton_network_bounds(std::uint64_t code_size, ExtNat delta_edge,
                                       int delta_transfer, int n, int rho, int q, int m) {
    if (q < 2 || m < 1 || n < 1 || rho < 0) throw invalid_parameters("bad bound parameters");
    const BigInt big_q = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(m));
    NetworkBounds out;
    auto eval = [&](ExtNat delta, BigInt& bound, bool& achieved) {
        bool degenerate = delta.is_inf();
        std::int64_t exponent = 0;
        if (!degenerate) {
            exponent = n - rho - delta.value() + 1;
            degenerate = exponent <= 0;
        }
        bound = degenerate ? BigInt(1)
                           : boost::multiprecision::pow(big_q, static_cast<unsigned>(exponent));
        achieved = !degenerate && BigInt(code_size) == bound;
        out.degenerate = out.degenerate || degenerate;
    };
    eval(delta_edge, out.bound_edge, out.achieved_edge);
    eval(ExtNat(delta_transfer), out.bound_transfer, out.achieved_transfer);
    return out;
}

LiftResult lift_to_subspaces(const MatrixCode& c) {
    LiftResult out;
    out.code.field = c.field;
    out.code.ambient = c.m;
    std::unordered_set<std::string> seen;
    for (const auto& w : c.words) {
        Subspace s = Subspace::row_space(w);
        if (seen.insert(subspace_to_string(s)).second) out.code.members.push_back(std::move(s));
    }
    out.injective = out.code.members.size() == c.words.size();
    return out;
}

} // namespace netcode
