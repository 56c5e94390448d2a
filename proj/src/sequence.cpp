/*
   Copyright 2026 The ecirr Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "ecirr/sequence.hpp"

#include <charconv>

#include "ecirr/error.hpp"

namespace ecirr {

namespace {

std::optional<u64> parse_argument(std::string_view text, std::string_view prefix) {
    if (text.substr(0, prefix.size()) != prefix) return std::nullopt;
    std::string_view rest = text.substr(prefix.size());
    if (rest.empty()) return std::nullopt;
    if (rest.front() == '(' && rest.back() == ')') {
        rest = rest.substr(1, rest.size() - 2);
    } else if (rest.front() == ':' || rest.front() == '=') {
        rest = rest.substr(1);
    } else {
        return std::nullopt;
    }
    u64 v = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
    if (ec != std::errc() || ptr != rest.data() + rest.size()) return std::nullopt;
    return v;
}

u64 step_seed(u64 seed, u64 index) noexcept { return seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)); }

}  // namespace

Selection Selection::parse(std::string_view text) {
    if (text == "smallest-degree") return {SelectionKind::kSmallestDegree, 0};
    if (text == "largest-degree") return {SelectionKind::kLargestDegree, 0};
    if (auto v = parse_argument(text, "smallest-degree-above")) return {SelectionKind::kSmallestDegreeAbove, *v};
    if (auto v = parse_argument(text, "kth-canonical")) return {SelectionKind::kKthCanonical, *v};
    fail(ErrorCode::kInvalidArgument, "unknown selection strategy '" + std::string(text) + "'");
}

std::string Selection::name() const {
    switch (kind) {
        case SelectionKind::kSmallestDegree: return "smallest-degree";
        case SelectionKind::kLargestDegree: return "largest-degree";
        case SelectionKind::kSmallestDegreeAbove: return "smallest-degree-above(" + std::to_string(param) + ")";
        case SelectionKind::kKthCanonical: return "kth-canonical(" + std::to_string(param) + ")";
    }
    return "?";
}

std::size_t select_factor(const Factorization& factors, const Selection& sel) {
    const auto& fs = factors.factors;
    if (fs.empty()) fail(ErrorCode::kInvalidArgument, "nothing to select from");
    // Canonical order sorts by degree first.
    std::size_t largest = 0;
    for (std::size_t i = 1; i < fs.size(); ++i) {
        if (fs[i].factor.degree() > fs[largest].factor.degree()) largest = i;
    }
    switch (sel.kind) {
        case SelectionKind::kSmallestDegree: return 0;
        case SelectionKind::kLargestDegree: return largest;
        case SelectionKind::kSmallestDegreeAbove:
            for (std::size_t i = 0; i < fs.size(); ++i) {
                if (static_cast<u64>(fs[i].factor.degree()) > sel.param) return i;
            }
            return largest;
        case SelectionKind::kKthCanonical:
            return sel.param < fs.size() ? static_cast<std::size_t>(sel.param) : fs.size() - 1;
    }
    return 0;
}

std::string_view phase_name(Phase phase) noexcept { return phase == Phase::kSub1 ? "SUB1" : "SUB2"; }

std::string_view origin_name(Origin origin) noexcept {
    switch (origin) {
        case Origin::kInitial: return "initial";
        case Origin::kFactor: return "factor";
        case Origin::kTransform: return "transform";
    }
    return "?";
}

IterationState initial_state(const Poly& f0, const SequenceParams& params) {
    if (f0.degree() < 1) fail(ErrorCode::kDegreeZero, "f0 must have positive degree");
    if (!(f0.ctx() == params.map.ctx())) fail(ErrorCode::kContextMismatch, "f0 and map over different fields");
    if (!f0.is_monic()) fail(ErrorCode::kInvalidArgument, "f0 must be monic");
    if (f0.degree() != static_cast<int>(params.d)) {
        fail(ErrorCode::kDegreeMismatch, "deg f0 = " + std::to_string(f0.degree()) + " but d = " + std::to_string(params.d));
    }
    if (!is_irreducible(f0)) fail(ErrorCode::kInvalidArgument, "f0 must be irreducible");
    IterationState st{0, f0, Phase::kSub1, {}, 0, 0, true};
    st.history.push_back({f0.degree(), fingerprint(f0), 0, 0});
    if (static_cast<u64>(f0.degree()) > 2 * static_cast<u64>(params.d)) st.phase = Phase::kSub2;
    return st;
}

IterationState step_sub1(const IterationState& st, const SequenceParams& params, u64 seed,
                         std::optional<std::size_t> choice) {
    if (st.phase != Phase::kSub1) fail(ErrorCode::kInvalidArgument, "step_sub1 called in SUB2");
    const Factorization fac = factor(r_transform(st.f, params.map), step_seed(seed, st.i));
    std::size_t idx = choice ? *choice : select_factor(fac, params.selection);
    if (idx >= fac.factors.size()) fail(ErrorCode::kInvalidArgument, "factor choice out of range");

    IterationState next = st;
    next.i = st.i + 1;
    next.f = fac.factors[idx].factor;
    next.factorizations = st.factorizations + 1;
    next.last_verified = false;  // irreducible by construction
    next.history.push_back({next.f.degree(), fingerprint(next.f), idx, fac.factors.size()});
    if (static_cast<u64>(next.f.degree()) > 2 * static_cast<u64>(params.d)) next.phase = Phase::kSub2;
    return next;
}

IterationState step_sub2(const IterationState& st, const SequenceParams& params) {
    if (st.phase != Phase::kSub2) fail(ErrorCode::kInvalidArgument, "step_sub2 called in SUB1");
    IterationState next = st;
    next.i = st.i + 1;
    next.f = r_transform(st.f, params.map);
    next.last_verified = false;
    if (params.should_verify(static_cast<u64>(next.f.degree()))) {
        if (!is_irreducible(next.f)) {
            fail(ErrorCode::kIrreducibilityViolation,
                 "f_" + std::to_string(next.i) + " (degree " + std::to_string(next.f.degree()) +
                     ") is reducible; the map and curve data do not satisfy the construction's hypotheses");
        }
        next.last_verified = true;
    }
    next.history.push_back({next.f.degree(), fingerprint(next.f), 0, 0});
    return next;
}

SequenceRun run(const Poly& f0, const SequenceParams& params, u64 target_index, u64 seed) {
    const IterationState start = initial_state(f0, params);
    SequenceRun out;
    if (target_index == 0) {
        out.polys.push_back(f0);
        out.phases.push_back(start.phase);
        out.origins.push_back(Origin::kInitial);
        out.verified.push_back(true);
        if (start.phase == Phase::kSub2) out.switch_index = 0;
        return out;
    }

    std::vector<IterationState> trail{start};
    if (start.phase == Phase::kSub1) {
        const Factorization first = factor(r_transform(f0, params.map), step_seed(seed, 0));
        ++out.factorizations;
        const std::size_t preferred = select_factor(first, params.selection);
        std::vector<std::size_t> order{preferred};
        for (std::size_t k = 0; k < first.factors.size(); ++k) {
            if (k != preferred) order.push_back(k);
        }

        const u64 budget = params.sub1_budget();
        bool resolved = false;
        for (std::size_t choice : order) {
            std::vector<IterationState> branch{start};
            branch.push_back(step_sub1(start, params, seed, choice));
            u64 steps = 1;
            u64 after_first = 0;
            while (branch.back().phase == Phase::kSub1 && steps < budget) {
                branch.push_back(step_sub1(branch.back(), params, seed));
                ++steps;
                ++after_first;
            }
            // The first step above refactors f0^r; count it once.
            out.factorizations += steps - 1;
            if (branch.back().phase == Phase::kSub1) {
                std::vector<int> degrees;
                for (const auto& s : branch) degrees.push_back(s.f.degree());
                out.abandoned.push_back(std::move(degrees));
                ++out.retries;
                continue;
            }
            out.first_choice = choice;
            out.factorizations_after_first = after_first;
            trail = std::move(branch);
            resolved = true;
            break;
        }
        if (!resolved) {
            std::string detail;
            for (const auto& h : out.abandoned) {
                detail += " [";
                for (std::size_t k = 0; k < h.size(); ++k) detail += (k ? "," : "") + std::to_string(h[k]);
                detail += "]";
            }
            fail(ErrorCode::kExhaustedChoices,
                 "every first-step factor stayed at degree <= 2d within " + std::to_string(budget) +
                     " steps; degree histories:" + detail);
        }
    }

    while (trail.back().i < target_index) trail.push_back(step_sub2(trail.back(), params));

    for (const auto& s : trail) {
        if (s.i > target_index) break;
        out.polys.push_back(s.f);
        out.phases.push_back(s.phase);
        out.verified.push_back(s.last_verified);
        if (s.i == 0) {
            out.origins.push_back(Origin::kInitial);
        } else {
            out.origins.push_back(s.history.back().num_factors > 0 ? Origin::kFactor : Origin::kTransform);
        }
        if (!out.switch_index && static_cast<u64>(s.f.degree()) > 2 * static_cast<u64>(params.d)) {
            out.switch_index = s.i;
        }
    }
    out.retries = out.abandoned.size();
    return out;
}

}  // namespace ecirr
