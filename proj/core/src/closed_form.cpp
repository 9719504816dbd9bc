// Copyright 2026 The qproc Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "qproc/closed_form.hpp"

#include <cmath>

#include "qproc/error.hpp"

namespace qproc::zoo {

namespace {

void check_geometric(Complex z, std::size_t n) {
    if (n < 2) {
        throw InvalidParameter("program dimension must be at least 2");
    }
    if (z == Complex{0.0} || !std::isfinite(std::abs(z))) {
        throw InvalidParameter("z must be finite and non-zero");
    }
}

void check_probability(double p, const char *what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw InvalidParameter(std::string(what) + " must lie in [0, 1]");
    }
}

double failure_power(double fail, std::size_t rounds) { return std::pow(fail, static_cast<double>(rounds)); }

} // namespace

std::string family_name(Family f) {
    switch (f) {
    case Family::U1Loop:
        return "U1Loop";
    case Family::BzFinite:
        return "BzFinite";
    case Family::B0Qudit:
        return "B0Qudit";
    case Family::Qid2Loop:
        return "Qid2Loop";
    case Family::QidNLoop:
        return "QidNLoop";
    case Family::BzLimit:
        return "BzLimit";
    case Family::DiagonalLoop:
        return "DiagonalLoop";
    }
    return "unknown";
}

double geometric_success_ratio(Complex z, std::size_t n) {
    check_geometric(z, n);
    const double x = std::norm(z);
    // For x > 1 divide through by x^{N-1} so the sums stay bounded.
    const bool large = x > 1.0;
    const double r = large ? 1.0 / x : x;
    double num = 0.0;
    double den = 0.0;
    double term = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        if (k + 1 < n) {
            num += term;
        }
        den += term;
        term *= r;
    }
    if (!large) {
        return num / den;
    }
    // sum_{k<N-1} x^k = x^{N-2} sum_{k<N-1} r^k and sum_{k<N} x^k = x^{N-1} sum_{k<N} r^k
    return r * num / den;
}

double bz_success_flipped_denominator(Complex z, std::size_t n, double alpha_sq) {
    check_geometric(z, n);
    const double x = std::norm(z);
    const double nn = static_cast<double>(n);
    return 1.0 - (1.0 - x) * (alpha_sq * std::pow(x, nn - 1.0) + (1.0 - alpha_sq)) / (std::pow(x, nn) - 1.0);
}

ClosedFormProb closed_form(const ClosedFormParams &params) {
    struct Visitor {
        ClosedFormProb operator()(const U1LoopParams &p) const {
            return {Family::U1Loop, p, 1.0 - failure_power(0.5, p.rounds)};
        }
        ClosedFormProb operator()(const BzFiniteParams &p) const {
            const double ratio = geometric_success_ratio(p.z, p.n);
            const double x = std::norm(p.z);
            double norm_sq = 0.5 * (1.0 + x);
            if (p.alpha_sq) {
                check_probability(*p.alpha_sq, "|alpha|^2");
                norm_sq = *p.alpha_sq + x * (1.0 - *p.alpha_sq);
            }
            return {Family::BzFinite, p, ratio * norm_sq};
        }
        ClosedFormProb operator()(const B0QuditParams &p) const {
            if (!(p.b0_norm_sq >= 0.0)) {
                throw InvalidParameter("||B0 psi||^2 must be non-negative");
            }
            return {Family::B0Qudit, p, geometric_success_ratio(p.z, p.n) * p.b0_norm_sq};
        }
        ClosedFormProb operator()(const Qid2LoopParams &p) const {
            return {Family::Qid2Loop, p, 1.0 - failure_power(0.75, p.rounds)};
        }
        ClosedFormProb operator()(const QidNLoopParams &p) const {
            if (p.n < 2) {
                throw InvalidParameter("qudit dimension must be at least 2");
            }
            const double nn = static_cast<double>(p.n);
            return {Family::QidNLoop, p, 1.0 - failure_power(1.0 - 1.0 / (nn * nn), p.rounds)};
        }
        ClosedFormProb operator()(const BzLimitParams &p) const {
            if (p.z == Complex{0.0}) {
                throw InvalidParameter("z must be non-zero");
            }
            if (!(p.target_norm_sq >= 0.0)) {
                throw InvalidParameter("target norm must be non-negative");
            }
            const double x = std::norm(p.z);
            return {Family::BzLimit, p, x <= 1.0 ? p.target_norm_sq : p.target_norm_sq / x};
        }
        ClosedFormProb operator()(const DiagonalLoopParams &p) const {
            if (p.d < 2) {
                throw InvalidParameter("qudit dimension must be at least 2");
            }
            return {Family::DiagonalLoop, p,
                    1.0 - failure_power(1.0 - 1.0 / static_cast<double>(p.d), p.rounds)};
        }
    };
    ClosedFormProb out = std::visit(Visitor{}, params);
    if (!(out.value >= 0.0 && out.value <= 1.0 + 1e-12)) {
        throw InvalidParameter("closed form left [0, 1]; check the parameters");
    }
    return out;
}

} // namespace qproc::zoo
