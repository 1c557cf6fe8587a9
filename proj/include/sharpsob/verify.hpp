#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sharpsob/constants.hpp"
#include "sharpsob/kernel.hpp"
#include "sharpsob/variational.hpp"

namespace sharpsob {

/// Deterministic generator of rational test data.
class RationalSampler {
  public:
    explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

    Rational rational(long max_num, long max_den) {
        std::uniform_int_distribution<long> num(-max_num, max_num);
        std::uniform_int_distribution<long> den(1, max_den);
        return make_rational(num(rng_), den(rng_));
    }

    /// A rational strictly inside (-1, 1).
    Rational in_unit_interval() {
        std::uniform_int_distribution<long> den(2, 64);
        const long d = den(rng_);
        std::uniform_int_distribution<long> num(-d + 1, d - 1);
        return make_rational(num(rng_), d);
    }

    std::vector<Rational> distinct_in_unit_interval(int count) {
        std::set<Rational> seen;
        while (static_cast<int>(seen.size()) < count) seen.insert(in_unit_interval());
        return {seen.begin(), seen.end()};
    }

    std::vector<Rational> distinct_rationals(int count, long max_num, long max_den) {
        std::set<Rational> seen;
        while (static_cast<int>(seen.size()) < count) seen.insert(rational(max_num, max_den));
        return {seen.begin(), seen.end()};
    }

    NodeSet node_set(int k) { return NodeSet(distinct_in_unit_interval(k)); }

  private:
    std::mt19937_64 rng_;
};

struct CheckCase {
    std::string id;
    bool pass = false;
    bool exact = true;  // false marks checks that go through floating point
    std::string witness;  // populated on failure
};

struct VerifyReport {
    std::string suite;
    int k = 0;
    std::vector<CheckCase> cases;
    long elapsed_ms = 0;

    bool pass() const {
        for (const CheckCase& c : cases)
            if (!c.pass) return false;
        return true;
    }

    void sort_cases() {
        std::sort(cases.begin(), cases.end(),
                  [](const CheckCase& a, const CheckCase& b) { return a.id < b.id; });
    }
};

struct SuiteConfig {
    std::uint64_t seed = 0;
    int node_sets = 25;     // random node sets per kernel check
    int probes = 50;        // x probes for the node-vanishing check
    int y_samples = 25;     // y values per node set for sign certificates
    int lemma_trials = 200; // random point sets for the lemma checker
    CertifyMode mode = CertifyMode::sampled;
    int galerkin_max_size = 8;
    int bvp_size = 3;
};

namespace detail {

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    long elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

inline std::string describe_nodes(const NodeSet& nodes) {
    std::string out = "nodes={";
    for (int i = 0; i < nodes.size(); ++i) {
        if (i) out += ",";
        out += to_string(nodes[static_cast<size_t>(i)]);
    }
    return out + "}";
}

}  // namespace detail

/// Kernel proposition suite: node vanishing, zero jump across x = 0, the
/// closed form off the node hull, the monic vertical-integral identity,
/// constant-sign certificates, the anchor-kernel vertical integral, and
/// the reproduction property for three admissible families.
inline VerifyReport run_kernel_suite(int k, const std::optional<NodeSet>& fixed_nodes,
                                     const SuiteConfig& cfg = {}) {
    if (k < 1) throw std::invalid_argument("run_kernel_suite: k must be >= 1");
    detail::Stopwatch timer;
    VerifyReport report;
    report.suite = "kernel";
    report.k = k;
    RationalSampler sampler(cfg.seed);

    std::vector<NodeSet> node_sets;
    if (fixed_nodes) node_sets.push_back(*fixed_nodes);
    else
        for (int i = 0; i < cfg.node_sets; ++i) node_sets.push_back(sampler.node_set(k));

    CheckCase vanish{"node_vanishing", true, true, ""};
    CheckCase jump{"continuity_jump_zero", true, true, ""};
    CheckCase closed{"closed_form_off_hull", true, true, ""};
    CheckCase monic{"monic_vertical_integral", true, true, ""};
    CheckCase sign_case{"sign_constancy", true, cfg.mode == CertifyMode::exact, ""};
    CheckCase vert_b{"vertical_integral_b", true, true, ""};
    CheckCase rep_landau{"reproduce_landau", true, true, ""};
    CheckCase rep_landau_x{"reproduce_landau_x", true, true, ""};
    CheckCase rep_next{"reproduce_landau_next", true, true, ""};

    for (const NodeSet& nodes : node_sets) {
        const KernelB kb(k, nodes);
        const std::string where = detail::describe_nodes(nodes);

        for (int n = 0; n < nodes.size() && vanish.pass; ++n)
            for (int p = 0; p < cfg.probes; ++p) {
                const Rational x = sampler.rational(96, 64);
                const Rational v = kb.eval(x, nodes[static_cast<size_t>(n)]);
                if (v != 0) {
                    vanish.pass = false;
                    vanish.witness = where + " x=" + to_string(x) +
                                     " y=" + to_string(nodes[static_cast<size_t>(n)]) +
                                     " B=" + to_string(v);
                    break;
                }
            }

        if (jump.pass) {
            try {
                if (!continuity_jump_poly(kb).is_zero()) throw std::logic_error("nonzero");
            } catch (const std::logic_error&) {
                jump.pass = false;
                jump.witness = where;
            }
        }

        if (closed.pass) {
            const Rational inv = Rational(1) / factorial(k - 1);
            for (int p = 0; p < cfg.probes && closed.pass; ++p) {
                Rational y = sampler.rational(96, 64);
                const Rational off = abs(sampler.rational(64, 64)) + make_rational(1, 64);
                for (const bool left : {true, false}) {
                    const Rational x = left ? Rational(nodes[0] - off)
                                            : Rational(nodes[static_cast<size_t>(k - 1)] + off);
                    if (y == x) y += make_rational(1, 97);
                    const Rational expected =
                        left ? (y < x ? pow_rational(x - y, k - 1) * inv : Rational(0))
                             : (y > x ? -pow_rational(x - y, k - 1) * inv : Rational(0));
                    if (kb.eval(x, y) != expected) {
                        closed.pass = false;
                        closed.witness = where + " x=" + to_string(x) + " y=" + to_string(y);
                        break;
                    }
                }
            }
        }

        if (monic.pass) {
            try {
                (void)vertical_integral_poly(kb);  // asserts the identity internally
            } catch (const std::logic_error& e) {
                monic.pass = false;
                monic.witness = where + " " + e.what();
            }
        }

        if (sign_case.pass) {
            for (int i = 0; i < cfg.y_samples && sign_case.pass; ++i) {
                const Rational y = sampler.rational(64, 64);
                const SignReport sr = sign_certificate(kb, y, cfg.mode);
                if (sr.violation()) {
                    sign_case.pass = false;
                    sign_case.witness = where + " y=" + to_string(y) + " x1=" +
                                        to_string(sr.witness->first) + " x2=" +
                                        to_string(sr.witness->second);
                }
            }
        }

        const std::vector<Poly> families = {landau_kernel(k),
                                            landau_kernel(k) * Poly::monomial(1),
                                            landau_kernel(k + 1)};
        CheckCase* rep_cases[3] = {&rep_landau, &rep_landau_x, &rep_next};
        for (int fi = 0; fi < 3; ++fi) {
            if (!rep_cases[fi]->pass) continue;
            const Rational dev = reproduce(kb, families[static_cast<size_t>(fi)]);
            if (dev != 0) {
                rep_cases[fi]->pass = false;
                rep_cases[fi]->witness = where + " deviation=" + to_string(dev);
            }
        }
    }

    for (int i = 0; i < 100 && vert_b.pass; ++i) {
        const Rational y = sampler.in_unit_interval();
        if (vertical_integral_b(k, y) * factorial(k) != pow_rational(-y, k)) {
            vert_b.pass = false;
            vert_b.witness = "y=" + to_string(y);
        }
    }

    report.cases = {vanish, jump, closed, monic, sign_case, vert_b,
                    rep_landau, rep_landau_x, rep_next};
    report.sort_cases();
    report.elapsed_ms = timer.elapsed_ms();
    return report;
}

/// Interpolation-lemma suite: random point sets never produce a forbidden
/// full interpolant, and one-sided point sets produce the expected one.
inline VerifyReport run_lemma_suite(int k, const SuiteConfig& cfg = {}) {
    if (k < 1) throw std::invalid_argument("run_lemma_suite: k must be >= 1");
    detail::Stopwatch timer;
    VerifyReport report;
    report.suite = "lemma";
    report.k = k;
    RationalSampler sampler(cfg.seed);

    CheckCase random_sets{"lemma_random_sets", true, true, ""};
    CheckCase positive{"lemma_all_positive", true, true, ""};
    CheckCase negative{"lemma_all_negative", true, true, ""};

    auto describe = [](const std::vector<Rational>& pts) {
        std::string out = "points={";
        for (size_t i = 0; i < pts.size(); ++i) {
            if (i) out += ",";
            out += to_string(pts[i]);
        }
        return out + "}";
    };

    for (int t = 0; t < cfg.lemma_trials && random_sets.pass; ++t) {
        const auto pts = sampler.distinct_rationals(k + 1, 64, 32);
        const LemmaReport lr = verify_lemma_interpolation(k, pts);
        if (!lr.statement_holds()) {
            random_sets.pass = false;
            random_sets.witness = describe(pts) + " Q=" + lr.matched.to_string("y");
        }
    }

    for (int t = 0; t < cfg.lemma_trials && positive.pass; ++t) {
        std::vector<Rational> pts;
        for (const Rational& p : sampler.distinct_rationals(k + 1, 64, 32))
            pts.push_back(abs(p) + make_rational(1, 65));
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        if (static_cast<int>(pts.size()) != k + 1) { --t; continue; }
        const LemmaReport lr = verify_lemma_interpolation(k, pts);
        if (!lr.full_match_found || !lr.match_is_monomial) {
            positive.pass = false;
            positive.witness = describe(pts);
        }
    }

    for (int t = 0; t < cfg.lemma_trials && negative.pass; ++t) {
        std::vector<Rational> pts;
        for (const Rational& p : sampler.distinct_rationals(k + 1, 64, 32))
            pts.push_back(-abs(p) - make_rational(1, 65));
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        if (static_cast<int>(pts.size()) != k + 1) { --t; continue; }
        const LemmaReport lr = verify_lemma_interpolation(k, pts);
        if (!lr.full_match_found || !lr.match_is_zero) {
            negative.pass = false;
            negative.witness = describe(pts);
        }
    }

    report.cases = {random_sets, positive, negative};
    report.sort_cases();
    report.elapsed_ms = timer.elapsed_ms();
    return report;
}

/// Galerkin suite: boundary conditions and positive definiteness are
/// asserted during assembly; the extremal-bearing family reproduces the
/// sharp constant exactly at every size, the excluded family stays
/// strictly below it, and both sweeps are monotone.
inline VerifyReport run_galerkin_suite(int k, const SuiteConfig& cfg = {}) {
    if (k < 1) throw std::invalid_argument("run_galerkin_suite: k must be >= 1");
    detail::Stopwatch timer;
    VerifyReport report;
    report.suite = "galerkin";
    report.k = k;
    const Rational c2 = sharp_constant_squared(k);

    CheckCase assembly{"assembly_valid", true, true, ""};
    CheckCase weighted{"landau_weighted_exact", true, true, ""};
    CheckCase excluded{"landau_excluded_below", true, true, ""};
    CheckCase monotone{"sweep_monotone", true, true, ""};

    try {
        const auto weighted_rows =
            convergence_sweep(k, BasisSpec::landau_weighted, cfg.galerkin_max_size, c2);
        const auto excluded_rows =
            convergence_sweep(k, BasisSpec::landau_excluded, cfg.galerkin_max_size, c2);
        for (const SweepRow& row : weighted_rows) {
            if (row.c_squared != c2) {
                weighted.pass = false;
                weighted.witness = "size=" + std::to_string(row.size) +
                                   " value=" + to_string(row.c_squared);
                break;
            }
        }
        for (const SweepRow& row : excluded_rows) {
            if (!(row.c_squared < c2)) {
                excluded.pass = false;
                excluded.witness = "size=" + std::to_string(row.size) +
                                   " value=" + to_string(row.c_squared);
                break;
            }
        }
        auto check_monotone = [&](const std::vector<SweepRow>& rows) {
            for (size_t i = 1; i < rows.size(); ++i)
                if (rows[i].c_squared < rows[i - 1].c_squared) {
                    monotone.pass = false;
                    monotone.witness = "size=" + std::to_string(rows[i].size);
                    return;
                }
        };
        check_monotone(weighted_rows);
        check_monotone(excluded_rows);
    } catch (const std::exception& e) {
        assembly.pass = false;
        assembly.witness = e.what();
    }

    report.cases = {assembly, weighted, excluded, monotone};
    report.sort_cases();
    report.elapsed_ms = timer.elapsed_ms();
    return report;
}

/// Fixed-point suite: from positive initial data the iteration stabilizes
/// on a positive pattern and the multiplier is the exact reciprocal of the
/// subspace constant.
inline VerifyReport run_bvp_suite(int k, const SuiteConfig& cfg = {}) {
    if (k < 1) throw std::invalid_argument("run_bvp_suite: k must be >= 1");
    detail::Stopwatch timer;
    VerifyReport report;
    report.suite = "bvp";
    report.k = k;

    CheckCase converged{"fixed_point_converged", true, true, ""};
    CheckCase consistent{"lambda_times_cmin_is_one", true, true, ""};
    CheckCase positive{"positive_minimizer", true, true, ""};

    try {
        const GalerkinSystem sys = assemble_galerkin(k, BasisSpec::landau_weighted, cfg.bvp_size);
        RatVec init(static_cast<size_t>(cfg.bvp_size), Rational(0));
        init[0] = 1;  // the weight function itself: positive on (-1, 1)
        const FixedPointResult fp = bvp_fixed_point(sys, init, 64);
        if (!fp.sign_pattern_stable) {
            converged.pass = false;
            converged.witness = "iterations=" + std::to_string(fp.iterations);
        }
        const Rational cmin = constrained_min(sys);
        if (fp.lambda * cmin != 1) {
            consistent.pass = false;
            consistent.witness = "lambda=" + to_string(fp.lambda) + " cmin=" + to_string(cmin);
        }
        if (!fp.positive_pattern) {
            positive.pass = false;
            positive.witness = "sign pattern not positive";
        }
    } catch (const std::exception& e) {
        converged.pass = false;
        converged.witness = e.what();
    }

    report.cases = {converged, consistent, positive};
    report.sort_cases();
    report.elapsed_ms = timer.elapsed_ms();
    return report;
}

/// Runs every suite and merges the cases under prefixed ids.
inline VerifyReport run_all_suites(int k, const std::optional<NodeSet>& nodes,
                                   const SuiteConfig& cfg = {}) {
    detail::Stopwatch timer;
    VerifyReport report;
    report.suite = "all";
    report.k = k;
    for (const VerifyReport& sub :
         {run_kernel_suite(k, nodes, cfg), run_lemma_suite(k, cfg), run_galerkin_suite(k, cfg),
          run_bvp_suite(k, cfg)}) {
        for (const CheckCase& c : sub.cases) {
            CheckCase copy = c;
            copy.id = sub.suite + "." + c.id;
            report.cases.push_back(std::move(copy));
        }
    }
    report.sort_cases();
    report.elapsed_ms = timer.elapsed_ms();
    return report;
}

}  // namespace sharpsob
