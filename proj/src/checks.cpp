#include "opradius/checks.hpp"

#include <cmath>

#include "opradius/eigen.hpp"
#include "opradius/radius.hpp"
#include "opradius/wmax.hpp"

namespace opradius {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::consistent: return "consistent";
        case Verdict::violated: return "violated";
        case Verdict::equality_witness: return "equality_witness";
    }
    return "?";
}

std::string to_string(BracketMethod m) {
    switch (m) {
        case BracketMethod::certified_scan: return "certified_scan";
        case BracketMethod::exact_rule: return "exact_rule";
        case BracketMethod::decomposition_search: return "decomposition_search";
        case BracketMethod::generic: return "generic";
    }
    return "?";
}

BracketMethod bracket_method_from_string(const std::string& s) {
    if (s == "certified_scan") return BracketMethod::certified_scan;
    if (s == "exact_rule") return BracketMethod::exact_rule;
    if (s == "decomposition_search") return BracketMethod::decomposition_search;
    if (s == "generic") return BracketMethod::generic;
    throw std::runtime_error("unknown bracket method: " + s);
}

namespace {

enum class Relation { le, eq };

Bracket W(const CMatrix& a, const CheckConfig& cfg) { return numerical_radius(a, cfg.eps); }

Bracket O(const CMatrix& a) {
    const double v = spectral_norm(a);
    const double pad = 1e-9 * (1.0 + v);
    return Bracket{std::max(0.0, v - pad), v + pad, BracketMethod::generic, 1, true};
}

CMatrix zeros_like(const CMatrix& m) { return CMatrix::zero(m.rows(), m.cols()); }

CMatrix offdiag_block(const CMatrix& x, const CMatrix& y) {
    return block2x2({zeros_like(x), x, y, zeros_like(x)});
}

CheckResult judge(const char* id, int index, std::string relation, std::uint64_t dig,
                  const Bracket& lhs, const Bracket& rhs, Relation rel, const CheckConfig& cfg,
                  bool consistency_only = false) {
    CheckResult r;
    r.check_id = id;
    r.inequality_index = index;
    r.relation = std::move(relation);
    r.input_digest = dig;
    r.lhs = lhs;
    r.rhs = rhs;
    r.consistency_only = consistency_only;

    const double sep_lr = lhs.lo - rhs.hi; // > 0 means lhs certifiably above rhs
    const double sep_rl = rhs.lo - lhs.hi;
    const double widths = lhs.width() + rhs.width();
    const double vtol = cfg.violation_tol + widths;

    if (rel == Relation::le) {
        r.margin = rhs.hi - lhs.lo;
        if (sep_lr > vtol) {
            r.verdict = Verdict::violated;
        } else if (!consistency_only && sep_lr <= cfg.witness_tol && sep_rl <= cfg.witness_tol) {
            r.verdict = Verdict::equality_witness;
        } else {
            r.verdict = Verdict::consistent;
        }
    } else {
        r.margin = std::min(rhs.hi - lhs.lo, lhs.hi - rhs.lo);
        const double gap = std::max(sep_lr, sep_rl);
        if (gap > vtol) {
            r.verdict = Verdict::violated;
        } else if (!consistency_only && gap <= cfg.witness_tol) {
            r.verdict = Verdict::equality_witness;
        } else {
            r.verdict = Verdict::consistent;
        }
    }
    return r;
}

std::uint64_t digest_inputs(std::initializer_list<const CMatrix*> mats,
                            std::initializer_list<double> extras = {}) {
    std::uint64_t h = 1469598103934665603ULL;
    for (const CMatrix* m : mats) h = digest(*m, h);
    for (double v : extras) h = digest_scalar(v, h);
    return h;
}

void require_square_same(std::initializer_list<const CMatrix*> mats, const char* who) {
    const CMatrix* first = *mats.begin();
    if (!first->is_square()) throw std::invalid_argument(std::string(who) + ": inputs must be square");
    for (const CMatrix* m : mats)
        if (!m->same_shape(*first))
            throw std::invalid_argument(std::string(who) + ": inputs must share one shape");
}

void require_embedding(const CMatrix& x, const CMatrix& scalar, int d, const char* who) {
    if (!x.is_square() || !scalar.is_square())
        throw std::invalid_argument(std::string(who) + ": inputs must be square");
    if (d < 1 || scalar.rows() * d != x.rows())
        throw std::invalid_argument(std::string(who) + ": scalar level does not divide the operator size");
}

} // namespace

std::vector<CheckResult> check_C1_sandwich(const CMatrix& x, const CheckConfig& cfg) {
    require_square_same({&x}, "check_C1");
    const std::uint64_t dig = digest_inputs({&x});
    const Bracket wx = W(x, cfg);
    const Bracket ox = O(x);
    return {
        judge("C1", 0, "O(x)/2 <= W(x)", dig, iv_scale(ox, 0.5), wx, Relation::le, cfg),
        judge("C1", 1, "W(x) <= O(x)", dig, wx, ox, Relation::le, cfg),
    };
}

std::vector<CheckResult> check_C2_unitary(const CMatrix& x, const CMatrix& u, int d,
                                          const CheckConfig& cfg) {
    require_embedding(x, u, d, "check_C2");
    const std::uint64_t dig = digest_inputs({&x, &u});
    const CMatrix ue = scalar_embed(u, d);
    const CMatrix conj = ue.adjoint() * x * ue;
    return {
        judge("C2", 0, "W(U*xU) == W(x)", dig, W(conj, cfg), W(x, cfg), Relation::eq, cfg),
    };
}

std::vector<CheckResult> check_C3_offdiag_O(const CMatrix& x, const CMatrix& y,
                                            const CheckConfig& cfg) {
    require_square_same({&x, &y}, "check_C3");
    const std::uint64_t dig = digest_inputs({&x, &y});
    const Bracket wb = W(offdiag_block(x, y), cfg);
    const Bracket ox = O(x);
    const Bracket oy = O(y);
    return {
        judge("C3", 0, "max(O(x),O(y))/2 <= W([[0,x],[y,0]])", dig, iv_scale(iv_max(ox, oy), 0.5),
              wb, Relation::le, cfg),
        judge("C3", 1, "W([[0,x],[y,0]]) <= (O(x)+O(y))/2", dig, wb, iv_scale(iv_add(ox, oy), 0.5),
              Relation::le, cfg),
    };
}

std::vector<CheckResult> check_C4_offdiag_W(const CMatrix& x, const CMatrix& y,
                                            const CheckConfig& cfg) {
    require_square_same({&x, &y}, "check_C4");
    const std::uint64_t dig = digest_inputs({&x, &y});
    const Bracket wb = W(offdiag_block(x, y), cfg);
    const Bracket wx = W(x, cfg);
    const Bracket wy = W(y, cfg);
    return {
        judge("C4", 0, "max(W(x),W(y))/2 <= W([[0,x],[y,0]])", dig, iv_scale(iv_max(wx, wy), 0.5),
              wb, Relation::le, cfg),
        judge("C4", 1, "W([[0,x],[y,0]]) <= W(x)+W(y)", dig, wb, iv_add(wx, wy), Relation::le, cfg),
    };
}

std::vector<CheckResult> check_C5_general(const CMatrix& x, const CMatrix& y, const CMatrix& alpha,
                                          const CMatrix& beta, const CMatrix& gamma,
                                          const CMatrix& delta, int sign, int d,
                                          const CheckConfig& cfg) {
    require_square_same({&x, &y}, "check_C5");
    require_embedding(x, alpha, d, "check_C5");
    require_square_same({&alpha, &beta, &gamma, &delta}, "check_C5");
    const std::uint64_t dig =
        digest_inputs({&x, &y, &alpha, &beta, &gamma, &delta}, {static_cast<double>(sign)});
    const Complex s(sign >= 0 ? 1.0 : -1.0, 0.0);
    const CMatrix ae = scalar_embed(alpha, d), be = scalar_embed(beta, d);
    const CMatrix ge = scalar_embed(gamma, d), de = scalar_embed(delta, d);
    const CMatrix m = ae * x * be + (ge * y * de).scaled(s);
    const Bracket coeff = iv_add(iv_mul_nonneg(O(alpha), O(beta)), iv_mul_nonneg(O(gamma), O(delta)));
    const Bracket rhs = iv_mul_nonneg(coeff, iv_max(O(x), O(y)));
    const char* rel = sign >= 0 ? "W(axb+gyd) <= (|a||b|+|g||d|)max(O(x),O(y))"
                                : "W(axb-gyd) <= (|a||b|+|g||d|)max(O(x),O(y))";
    return {judge("C5", 0, rel, dig, W(m, cfg), rhs, Relation::le, cfg)};
}

std::vector<CheckResult> check_C6_corollary1(const CMatrix& x, const CMatrix& y,
                                             const CMatrix& alpha, const CMatrix& beta, int sign,
                                             int d, const CheckConfig& cfg) {
    require_square_same({&x, &y}, "check_C6");
    require_embedding(x, alpha, d, "check_C6");
    require_square_same({&alpha, &beta}, "check_C6");
    const std::uint64_t dig = digest_inputs({&x, &y, &alpha, &beta}, {static_cast<double>(sign)});
    const Complex s(sign >= 0 ? 1.0 : -1.0, 0.0);
    const char sc = sign >= 0 ? '+' : '-';
    const CMatrix ae = scalar_embed(alpha, d), be = scalar_embed(beta, d);
    const Bracket na = O(alpha), nb = O(beta);
    const Bracket oxy = iv_max(O(x), O(y));
    const Bracket ox = O(x);

    const CMatrix m1 = ae * x * be + (be * y * ae).scaled(s);
    const CMatrix m2 = ae * x + (y * ae).scaled(s);
    const CMatrix m3 = ae * x + (x * ae).scaled(s);
    std::vector<CheckResult> out;
    out.push_back(judge("C6", 0, std::string("W(axb") + sc + "bya) <= 2|a||b|max(O(x),O(y))", dig,
                        W(m1, cfg), iv_scale(iv_mul_nonneg(iv_mul_nonneg(na, nb), oxy), 2.0),
                        Relation::le, cfg));
    out.push_back(judge("C6", 1, std::string("W(ax") + sc + "ya) <= 2|a|max(O(x),O(y))", dig,
                        W(m2, cfg), iv_scale(iv_mul_nonneg(na, oxy), 2.0), Relation::le, cfg));
    out.push_back(judge("C6", 2, std::string("W(ax") + sc + "xa) <= 2|a|O(x)", dig, W(m3, cfg),
                        iv_scale(iv_mul_nonneg(na, ox), 2.0), Relation::le, cfg));
    return out;
}

std::vector<CheckResult> check_C7_corollary2(const CMatrix& x, const CMatrix& y,
                                             const CMatrix& alpha, const CMatrix& gamma, int sign,
                                             int d, const CheckConfig& cfg) {
    require_square_same({&x, &y}, "check_C7");
    require_embedding(x, alpha, d, "check_C7");
    require_square_same({&alpha, &gamma}, "check_C7");
    const std::uint64_t dig = digest_inputs({&x, &y, &alpha, &gamma}, {static_cast<double>(sign)});
    const Complex s(sign >= 0 ? 1.0 : -1.0, 0.0);
    const char sc = sign >= 0 ? '+' : '-';
    const CMatrix ae = scalar_embed(alpha, d), ge = scalar_embed(gamma, d);
    const Bracket coeff = iv_add(O(alpha), O(gamma));
    const CMatrix m1 = ae * x + (ge * y).scaled(s);
    const CMatrix m2 = ae * x + (ge * x).scaled(s);
    return {
        judge("C7", 0, std::string("W(ax") + sc + "gy) <= (|a|+|g|)max(O(x),O(y))", dig, W(m1, cfg),
              iv_mul_nonneg(coeff, iv_max(O(x), O(y))), Relation::le, cfg),
        judge("C7", 1, std::string("W(ax") + sc + "gx) <= (|a|+|g|)O(x)", dig, W(m2, cfg),
              iv_mul_nonneg(coeff, O(x)), Relation::le, cfg),
    };
}

std::vector<CheckResult> check_C8_identities(const CMatrix& x, const CMatrix& y, double theta,
                                             const CheckConfig& cfg) {
    require_square_same({&x, &y}, "check_C8");
    const std::uint64_t dig = digest_inputs({&x, &y}, {theta});
    const Complex phase(std::cos(theta), std::sin(theta));

    const Bracket w_xy = W(offdiag_block(x, y), cfg);
    const Bracket w_phase = W(offdiag_block(x, y.scaled(phase)), cfg);
    const Bracket w_yx = W(offdiag_block(y, x), cfg);
    const Bracket w_sym = W(block2x2({x, y, y, x}), cfg);
    const Bracket w_sum = W(x + y, cfg);
    const Bracket w_diff = W(x - y, cfg);
    const Bracket w_yy = W(offdiag_block(y, y), cfg);
    const Bracket w_y = W(y, cfg);
    const CMatrix iy = y.scaled(Complex(0.0, 1.0));
    const Bracket w_rot = W(block2x2({y, -x, x, y}), cfg);
    const Bracket w_xpiy = W(x + iy, cfg);
    const Bracket w_xmiy = W(x - iy, cfg);

    return {
        judge("C8", 0, "W([[0,x],[e^{it}y,0]]) == W([[0,x],[y,0]])", dig, w_phase, w_xy,
              Relation::eq, cfg),
        judge("C8", 1, "W([[0,x],[y,0]]) == W([[0,y],[x,0]])", dig, w_xy, w_yx, Relation::eq, cfg),
        judge("C8", 2, "W([[x,y],[y,x]]) == max(W(x+y),W(x-y))", dig, w_sym, iv_max(w_sum, w_diff),
              Relation::eq, cfg),
        judge("C8", 3, "W([[0,y],[y,0]]) == W(y)", dig, w_yy, w_y, Relation::eq, cfg),
        judge("C8", 4, "W([[y,-x],[x,y]]) == max(W(x+iy),W(x-iy))", dig, w_rot,
              iv_max(w_xpiy, w_xmiy), Relation::eq, cfg),
    };
}

std::vector<CheckResult> check_C9_main(const CMatrix& x, const CMatrix& y, const CheckConfig& cfg) {
    require_square_same({&x, &y}, "check_C9");
    const std::uint64_t dig = digest_inputs({&x, &y});
    const Bracket wb = W(offdiag_block(x, y), cfg);
    const Bracket ws = W(x + y, cfg);
    const Bracket wd = W(x - y, cfg);
    return {
        judge("C9", 0, "max(W(x+y),W(x-y))/2 <= W([[0,x],[y,0]])", dig,
              iv_scale(iv_max(ws, wd), 0.5), wb, Relation::le, cfg),
        judge("C9", 1, "W([[0,x],[y,0]]) <= (W(x+y)+W(x-y))/2", dig, wb,
              iv_scale(iv_add(ws, wd), 0.5), Relation::le, cfg),
    };
}

std::vector<CheckResult> check_C10_sumdiff(const CMatrix& x, const CMatrix& y,
                                           const CheckConfig& cfg) {
    require_square_same({&x, &y}, "check_C10");
    const std::uint64_t dig = digest_inputs({&x, &y});
    const Bracket wb = W(offdiag_block(x + y, x - y), cfg);
    const Bracket wx = W(x, cfg);
    const Bracket wy = W(y, cfg);
    return {
        judge("C10", 0, "max(W(x),W(y)) <= W([[0,x+y],[x-y,0]])", dig, iv_max(wx, wy), wb,
              Relation::le, cfg),
        judge("C10", 1, "W([[0,x+y],[x-y,0]]) <= W(x)+W(y)", dig, wb, iv_add(wx, wy), Relation::le,
              cfg),
    };
}

std::vector<CheckResult> check_C11_minbound(const CMatrix& x, const CMatrix& y,
                                            const CheckConfig& cfg) {
    require_square_same({&x, &y}, "check_C11");
    const std::uint64_t dig = digest_inputs({&x, &y});
    const Bracket wb = W(offdiag_block(x, y), cfg);
    const Bracket rhs =
        iv_add(iv_min(W(x, cfg), W(y, cfg)), iv_scale(iv_min(O(x + y), O(x - y)), 0.5));
    return {
        judge("C11", 0, "W([[0,x],[y,0]]) <= min(W(x),W(y)) + min(O(x+y),O(x-y))/2", dig, wb, rhs,
              Relation::le, cfg),
    };
}

std::vector<CheckResult> check_C12_abs_lower(const CMatrix& x, const CMatrix& y,
                                             const CheckConfig& cfg) {
    require_square_same({&x, &y}, "check_C12");
    const std::uint64_t dig = digest_inputs({&x, &y});
    const Bracket wb = W(offdiag_block(x, y), cfg);
    const Bracket wx = W(x, cfg);
    const Bracket wy = W(y, cfg);
    const Bracket osum = O(x + y);
    const Bracket odiff = O(x - y);
    const Bracket lhs1 = iv_abs(iv_sub(iv_scale(iv_max(osum, odiff), 0.5), iv_min(wx, wy)));
    const Bracket lhs2 = iv_abs(iv_sub(iv_max(wx, wy), iv_scale(iv_min(osum, odiff), 0.5)));
    return {
        judge("C12", 0, "|max(O(x+y),O(x-y))/2 - min(W(x),W(y))| <= W([[0,x],[y,0]])", dig, lhs1,
              wb, Relation::le, cfg),
        judge("C12", 1, "|max(W(x),W(y)) - min(O(x+y),O(x-y))/2| <= W([[0,x],[y,0]])", dig, lhs2,
              wb, Relation::le, cfg),
    };
}

std::vector<CheckResult> check_C13_wmax_sumdiff(const CMatrix& x1, const CMatrix& x2, int n, int d,
                                                long budget, Rng& rng, const CheckConfig& cfg) {
    require_square_same({&x1, &x2}, "check_C13");
    const std::uint64_t dig = digest_inputs({&x1, &x2});
    const CMatrix p = x1 + x2;
    const CMatrix m = x1 - x2;
    const WmaxSearch sp = wmax_search(p, n, d, budget, rng);
    const WmaxSearch sm = wmax_search(m, n, d, budget, rng);
    const CMatrix block = offdiag_block(x1, x2);
    WmaxSearch sb = wmax_search(block, 2 * n, d, budget, rng);

    // The proof's 4-block factorization of [[0, u+v], [u-v, 0]] with
    // u = (x1+x2)/2, v = (x1-x2)/2 upper-bounds W_max of the block directly;
    // halving a decomposition's scalar factors by sqrt(2) factors the halved
    // element.
    const double inv_sqrt2 = 0.7071067811865475244;
    Decomposition du = sp.best;
    du.a = du.a.scaled(inv_sqrt2);
    du.b = du.b.scaled(inv_sqrt2);
    Decomposition dv = sm.best;
    dv.a = dv.a.scaled(inv_sqrt2);
    dv.b = dv.b.scaled(inv_sqrt2);
    const double constructed =
        sumdiff_wmax_upper(du, p.scaled(0.5), dv, m.scaled(0.5));
    sb.bracket.hi = std::max(sb.bracket.lo, std::min(sb.bracket.hi, constructed));

    return {
        judge("C13", 0, "max(Wmax(x1+x2),Wmax(x1-x2))/2 <= Wmax([[0,x1],[x2,0]])", dig,
              iv_scale(iv_max(sp.bracket, sm.bracket), 0.5), sb.bracket, Relation::le, cfg, true),
        judge("C13", 1, "Wmax([[0,x1],[x2,0]]) <= (Wmax(x1+x2)+Wmax(x1-x2))/2", dig, sb.bracket,
              iv_scale(iv_add(sp.bracket, sm.bracket), 0.5), Relation::le, cfg, true),
    };
}

std::vector<CheckResult> check_C14_wmax_offdiag(const CMatrix& x1, const CMatrix& x2, int n, int d,
                                                long budget, Rng& rng, const CheckConfig& cfg) {
    require_square_same({&x1, &x2}, "check_C14");
    const std::uint64_t dig = digest_inputs({&x1, &x2});
    const WmaxSearch s1 = wmax_search(x1, n, d, budget, rng);
    const WmaxSearch s2 = wmax_search(x2, n, d, budget, rng);
    const CMatrix block = offdiag_block(x1, x2);
    WmaxSearch sb = wmax_search(block, 2 * n, d, budget, rng);

    const double constructed = offdiag_wmax_upper(s1.best, x1, s2.best, x2);
    sb.bracket.hi = std::max(sb.bracket.lo, std::min(sb.bracket.hi, constructed));

    return {
        judge("C14", 0, "max(Wmax(x1),Wmax(x2))/2 <= Wmax([[0,x1],[x2,0]])", dig,
              iv_scale(iv_max(s1.bracket, s2.bracket), 0.5), sb.bracket, Relation::le, cfg, true),
        judge("C14", 1, "Wmax([[0,x1],[x2,0]]) <= Wmax(x1)+Wmax(x2)", dig, sb.bracket,
              iv_add(s1.bracket, s2.bracket), Relation::le, cfg, true),
    };
}

std::vector<CheckResult> check_C15_pinching(const CMatrix& x, const CMatrix& y, const CMatrix& z,
                                            const CMatrix& w, const CheckConfig& cfg) {
    require_square_same({&x, &y, &z, &w}, "check_C15");
    const std::uint64_t dig = digest_inputs({&x, &y, &z, &w});
    const Bracket wb = W(block2x2({x, y, z, w}), cfg);
    const Bracket wdiag = W(direct_sum(x, w), cfg);
    const Bracket woff = W(offdiag_block(y, z), cfg);
    return {
        judge("C15", 0, "W([[x,0],[0,w]]) <= W([[x,y],[z,w]])", dig, wdiag, wb, Relation::le, cfg),
        judge("C15", 1, "W([[0,y],[z,0]]) <= W([[x,y],[z,w]])", dig, woff, wb, Relation::le, cfg),
    };
}

std::vector<CheckResult> check_C16_skew(const CMatrix& x, const CMatrix& y, const CheckConfig& cfg) {
    require_square_same({&x, &y}, "check_C16");
    const std::uint64_t dig = digest_inputs({&x, &y});
    const Bracket wb = W(block2x2({x, y, -y, -x}), cfg);
    const Bracket wx = W(x, cfg);
    const Bracket wy = W(y, cfg);
    return {
        judge("C16", 0, "max(W(x),W(y)) <= W([[x,y],[-y,-x]])", dig, iv_max(wx, wy), wb,
              Relation::le, cfg),
        judge("C16", 1, "W([[x,y],[-y,-x]]) <= W(x)+W(y)", dig, wb, iv_add(wx, wy), Relation::le,
              cfg),
    };
}

std::vector<CheckResult> check_C17_identity_O(const CMatrix& x, const CheckConfig& cfg) {
    require_square_same({&x}, "check_C17");
    const std::uint64_t dig = digest_inputs({&x});
    const Bracket wb = W(block2x2({x, x, -x, -x}), cfg);
    return {
        judge("C17", 0, "W([[x,x],[-x,-x]]) == O(x)", dig, wb, O(x), Relation::eq, cfg),
    };
}

std::vector<CheckResult> check_C18_fourentry(const CMatrix& x, const CMatrix& y, const CMatrix& z,
                                             const CMatrix& w, const CheckConfig& cfg) {
    require_square_same({&x, &y, &z, &w}, "check_C18");
    const std::uint64_t dig = digest_inputs({&x, &y, &z, &w});
    const Bracket wb = W(block2x2({x, y, z, w}), cfg);
    const Bracket wx = W(x, cfg), wy = W(y, cfg), wz = W(z, cfg), ww = W(w, cfg);
    const Bracket lhs = iv_max(iv_max(wx, ww), iv_scale(iv_max(wy, wz), 0.5));
    return {
        judge("C18", 0, "max(W(x),W(w),W(y)/2,W(z)/2) <= W([[x,y],[z,w]])", dig, lhs, wb,
              Relation::le, cfg),
        judge("C18", 1, "W([[x,y],[z,w]]) <= W(x)+W(y)+W(z)+W(w)", dig, wb,
              iv_add(iv_add(wx, wy), iv_add(wz, ww)), Relation::le, cfg),
    };
}

std::vector<CheckResult> check_C19_rotated(const CMatrix& x, const CMatrix& y, const CMatrix& z,
                                           const CMatrix& w, const CheckConfig& cfg) {
    require_square_same({&x, &y, &z, &w}, "check_C19");
    const std::uint64_t dig = digest_inputs({&x, &y, &z, &w});
    const Bracket wb = W(block2x2({x, y, z, w}), cfg);
    const CMatrix core = x + w;
    const CMatrix skew = (y - z).scaled(Complex(0.0, 1.0));
    const Bracket wplus = W(core + skew, cfg);
    const Bracket wminus = W(core - skew, cfg);
    const Bracket rhs = iv_add(iv_scale(iv_max(wplus, wminus), 0.5),
                               iv_scale(iv_add(W(w - x, cfg), W(y + z, cfg)), 0.5));
    return {
        judge("C19", 0, "W([[x,y],[z,w]]) <= max(W(x+w+i(y-z)),W(x+w-i(y-z)))/2 + (W(w-x)+W(y+z))/2",
              dig, wb, rhs, Relation::le, cfg),
    };
}

std::vector<CheckResult> check_C20_final(const CMatrix& x, const CMatrix& y, const CMatrix& z,
                                         const CMatrix& w, const CheckConfig& cfg) {
    require_square_same({&x, &y, &z, &w}, "check_C20");
    const std::uint64_t dig = digest_inputs({&x, &y, &z, &w});
    const Bracket wb = W(block2x2({x, y, z, w}), cfg);
    const Bracket rhs = iv_add(iv_max(W(x, cfg), W(w, cfg)),
                               iv_scale(iv_add(W(y + z, cfg), W(y - z, cfg)), 0.5));
    return {
        judge("C20", 0, "W([[x,y],[z,w]]) <= max(W(x),W(w)) + (W(y+z)+W(y-z))/2", dig, wb, rhs,
              Relation::le, cfg),
    };
}

namespace {

std::vector<CheckResult> run_C1(CheckInputs& in, const CheckConfig& cfg) {
    return check_C1_sandwich(in.mats[0], cfg);
}
std::vector<CheckResult> run_C2(CheckInputs& in, const CheckConfig& cfg) {
    return check_C2_unitary(in.mats[0], in.scalars[0], in.d, cfg);
}
std::vector<CheckResult> run_C3(CheckInputs& in, const CheckConfig& cfg) {
    return check_C3_offdiag_O(in.mats[0], in.mats[1], cfg);
}
std::vector<CheckResult> run_C4(CheckInputs& in, const CheckConfig& cfg) {
    return check_C4_offdiag_W(in.mats[0], in.mats[1], cfg);
}
std::vector<CheckResult> run_C5(CheckInputs& in, const CheckConfig& cfg) {
    return check_C5_general(in.mats[0], in.mats[1], in.scalars[0], in.scalars[1], in.scalars[2],
                            in.scalars[3], in.sign, in.d, cfg);
}
std::vector<CheckResult> run_C6(CheckInputs& in, const CheckConfig& cfg) {
    return check_C6_corollary1(in.mats[0], in.mats[1], in.scalars[0], in.scalars[1], in.sign, in.d,
                               cfg);
}
std::vector<CheckResult> run_C7(CheckInputs& in, const CheckConfig& cfg) {
    return check_C7_corollary2(in.mats[0], in.mats[1], in.scalars[0], in.scalars[1], in.sign, in.d,
                               cfg);
}
std::vector<CheckResult> run_C8(CheckInputs& in, const CheckConfig& cfg) {
    return check_C8_identities(in.mats[0], in.mats[1], in.theta, cfg);
}
std::vector<CheckResult> run_C9(CheckInputs& in, const CheckConfig& cfg) {
    return check_C9_main(in.mats[0], in.mats[1], cfg);
}
std::vector<CheckResult> run_C10(CheckInputs& in, const CheckConfig& cfg) {
    return check_C10_sumdiff(in.mats[0], in.mats[1], cfg);
}
std::vector<CheckResult> run_C11(CheckInputs& in, const CheckConfig& cfg) {
    return check_C11_minbound(in.mats[0], in.mats[1], cfg);
}
std::vector<CheckResult> run_C12(CheckInputs& in, const CheckConfig& cfg) {
    return check_C12_abs_lower(in.mats[0], in.mats[1], cfg);
}
std::vector<CheckResult> run_C13(CheckInputs& in, const CheckConfig& cfg) {
    return check_C13_wmax_sumdiff(in.mats[0], in.mats[1], in.n, in.d, in.wmax_budget, in.rng, cfg);
}
std::vector<CheckResult> run_C14(CheckInputs& in, const CheckConfig& cfg) {
    return check_C14_wmax_offdiag(in.mats[0], in.mats[1], in.n, in.d, in.wmax_budget, in.rng, cfg);
}
std::vector<CheckResult> run_C15(CheckInputs& in, const CheckConfig& cfg) {
    return check_C15_pinching(in.mats[0], in.mats[1], in.mats[2], in.mats[3], cfg);
}
std::vector<CheckResult> run_C16(CheckInputs& in, const CheckConfig& cfg) {
    return check_C16_skew(in.mats[0], in.mats[1], cfg);
}
std::vector<CheckResult> run_C17(CheckInputs& in, const CheckConfig& cfg) {
    return check_C17_identity_O(in.mats[0], cfg);
}
std::vector<CheckResult> run_C18(CheckInputs& in, const CheckConfig& cfg) {
    return check_C18_fourentry(in.mats[0], in.mats[1], in.mats[2], in.mats[3], cfg);
}
std::vector<CheckResult> run_C19(CheckInputs& in, const CheckConfig& cfg) {
    return check_C19_rotated(in.mats[0], in.mats[1], in.mats[2], in.mats[3], cfg);
}
std::vector<CheckResult> run_C20(CheckInputs& in, const CheckConfig& cfg) {
    return check_C20_final(in.mats[0], in.mats[1], in.mats[2], in.mats[3], cfg);
}

const std::vector<CheckSpec> kCatalog = {
    {"C1", "sandwich O/2 <= W <= O", 1, 0, ScalarKind::none, false, false, false, 2, run_C1},
    {"C2", "unitary invariance of W", 1, 1, ScalarKind::haar, false, false, false, 1, run_C2},
    {"C3", "off-diagonal bounds via O", 2, 0, ScalarKind::none, false, false, false, 2, run_C3},
    {"C4", "off-diagonal bounds via W", 2, 0, ScalarKind::none, false, false, false, 2, run_C4},
    {"C5", "general scalar-sandwich bound", 2, 4, ScalarKind::ginibre, false, true, false, 1, run_C5},
    {"C6", "symmetric scalar corollary", 2, 2, ScalarKind::ginibre, false, true, false, 3, run_C6},
    {"C7", "left-multiplier corollary", 2, 2, ScalarKind::ginibre, false, true, false, 2, run_C7},
    {"C8", "block identities (a)-(d)", 2, 0, ScalarKind::none, true, false, false, 5, run_C8},
    {"C9", "sum/difference two-sided bound", 2, 0, ScalarKind::none, false, false, false, 2, run_C9},
    {"C10", "sum/difference corollary", 2, 0, ScalarKind::none, false, false, false, 2, run_C10},
    {"C11", "min-based upper bound", 2, 0, ScalarKind::none, false, false, false, 1, run_C11},
    {"C12", "absolute-value lower bounds", 2, 0, ScalarKind::none, false, false, false, 2, run_C12},
    {"C13", "Wmax sum/difference bounds", 2, 0, ScalarKind::none, false, false, true, 2, run_C13},
    {"C14", "Wmax off-diagonal bounds", 2, 0, ScalarKind::none, false, false, true, 2, run_C14},
    {"C15", "pinching inequalities", 4, 0, ScalarKind::none, false, false, false, 2, run_C15},
    {"C16", "skew block bounds", 2, 0, ScalarKind::none, false, false, false, 2, run_C16},
    {"C17", "skew block norm identity", 1, 0, ScalarKind::none, false, false, false, 1, run_C17},
    {"C18", "four-entry bounds", 4, 0, ScalarKind::none, false, false, false, 2, run_C18},
    {"C19", "rotated-basis upper bound", 4, 0, ScalarKind::none, false, false, false, 1, run_C19},
    {"C20", "diagonal/off-diagonal upper bound", 4, 0, ScalarKind::none, false, false, false, 1,
     run_C20},
};

} // namespace

const std::vector<CheckSpec>& catalog() { return kCatalog; }

const CheckSpec* find_check(const std::string& id) {
    for (const CheckSpec& spec : kCatalog)
        if (id == spec.id) return &spec;
    return nullptr;
}

} // namespace opradius
