#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "sharpsob/kernel.hpp"
#include "sharpsob/variational.hpp"

namespace sharpsob {
namespace svg {

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

/// Sign/magnitude heatmap of B_k over [-1,1]^2 with horizontal lines at
/// the interpolation nodes. Positive cells shade orange, negative teal.
inline std::string kernel_heatmap(const KernelB& kb, int grid = 64) {
    const double size = 480.0;
    const double cell = size / grid;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"520\" height=\"520\" "
           "viewBox=\"0 0 520 520\">\n";
    out << "<rect width=\"520\" height=\"520\" fill=\"white\"/>\n";

    // pass 1: magnitude scale
    std::vector<std::vector<double>> vals(static_cast<size_t>(grid),
                                          std::vector<double>(static_cast<size_t>(grid)));
    double max_abs = 0.0;
    for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j) {
            // cell centers of a grid x grid partition of [-1,1]^2
            const Rational x = Rational(-1) + make_rational(2 * i + 1, grid);
            const Rational y = Rational(-1) + make_rational(2 * j + 1, grid);
            const double v = kb.eval(x, y).get_d();
            vals[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
            max_abs = std::max(max_abs, std::fabs(v));
        }
    if (max_abs == 0.0) max_abs = 1.0;

    for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j) {
            const double v = vals[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (v == 0.0) continue;
            const double alpha = std::min(1.0, std::fabs(v) / max_abs);
            const char* color = v > 0 ? "#e08020" : "#208080";
            // svg y axis points down; flip j
            out << "<rect x=\"" << fmt(20 + i * cell) << "\" y=\""
                << fmt(20 + (grid - 1 - j) * cell) << "\" width=\"" << fmt(cell)
                << "\" height=\"" << fmt(cell) << "\" fill=\"" << color << "\" fill-opacity=\""
                << fmt(alpha) << "\"/>\n";
        }

    out << "<rect x=\"20\" y=\"20\" width=\"480\" height=\"480\" fill=\"none\" "
           "stroke=\"black\" stroke-width=\"1\"/>\n";
    for (int n = 0; n < kb.nodes().size(); ++n) {
        const double yn = kb.nodes()[static_cast<size_t>(n)].get_d();
        const double py = 20 + (1.0 - yn) / 2.0 * size;
        out << "<line class=\"node-line\" x1=\"20\" y1=\"" << fmt(py) << "\" x2=\"500\" y2=\""
            << fmt(py) << "\" stroke=\"black\" stroke-dasharray=\"4 3\" stroke-width=\"1\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

/// Overlaid bump curves (1-x^2)^j for j = 1..k.
inline std::string landau_curves(int k, int samples = 256) {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"520\" height=\"300\" "
           "viewBox=\"0 0 520 300\">\n";
    out << "<rect width=\"520\" height=\"300\" fill=\"white\"/>\n";
    out << "<rect x=\"20\" y=\"20\" width=\"480\" height=\"260\" fill=\"none\" "
           "stroke=\"black\" stroke-width=\"1\"/>\n";
    for (int j = 1; j <= k; ++j) {
        const Poly lj = landau_kernel(j);
        out << "<polyline class=\"landau-curve\" fill=\"none\" stroke=\"hsl("
            << (200 * (j - 1) / std::max(1, k - 1)) << ",60%,40%)\" stroke-width=\"1.5\" points=\"";
        for (int s = 0; s <= samples; ++s) {
            const double v = lj.eval(make_rational(2 * s - samples, samples)).get_d();
            const double px = 20 + (s / static_cast<double>(samples)) * 480;
            const double py = 280 - v * 260;
            out << fmt(px) << "," << fmt(py) << " ";
        }
        out << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

/// Subspace values against the closed-form asymptote.
inline std::string convergence_plot(int k, BasisSpec spec, int max_size,
                                    const Rational& c_squared) {
    const auto rows = convergence_sweep(k, spec, max_size, c_squared);
    double lo = rows.front().c_squared.get_d();
    const double target = c_squared.get_d();
    double hi = target;
    for (const SweepRow& r : rows) lo = std::min(lo, r.c_squared.get_d());
    const double span = (hi - lo) * 1.2 + 1e-12;
    const double base = hi + span * 0.1;

    auto ypix = [&](double v) { return 20 + (base - v) / span * 260; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"520\" height=\"300\" "
           "viewBox=\"0 0 520 300\">\n";
    out << "<rect width=\"520\" height=\"300\" fill=\"white\"/>\n";
    out << "<rect x=\"20\" y=\"20\" width=\"480\" height=\"260\" fill=\"none\" "
           "stroke=\"black\" stroke-width=\"1\"/>\n";
    out << "<line class=\"asymptote\" x1=\"20\" x2=\"500\" y1=\"" << fmt(ypix(target))
        << "\" y2=\"" << fmt(ypix(target))
        << "\" stroke=\"#a04040\" stroke-dasharray=\"6 4\" stroke-width=\"1\"/>\n";
    out << "<polyline class=\"sweep\" fill=\"none\" stroke=\"#204080\" stroke-width=\"1.5\" "
           "points=\"";
    for (const SweepRow& r : rows) {
        const double px = 20 + 480.0 * (r.size - 1) / std::max(1, max_size - 1);
        out << fmt(px) << "," << fmt(ypix(r.c_squared.get_d())) << " ";
    }
    out << "\"/>\n";
    for (const SweepRow& r : rows) {
        const double px = 20 + 480.0 * (r.size - 1) / std::max(1, max_size - 1);
        out << "<circle cx=\"" << fmt(px) << "\" cy=\"" << fmt(ypix(r.c_squared.get_d()))
            << "\" r=\"3\" fill=\"#204080\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace svg
}  // namespace sharpsob
