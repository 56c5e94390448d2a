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

#ifndef ECIRR_SEQUENCE_HPP
#define ECIRR_SEQUENCE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ecirr/ratmap.hpp"

namespace ecirr {

enum class SelectionKind {
    kSmallestDegree,
    kLargestDegree,
    kSmallestDegreeAbove,  // smallest degree strictly above a threshold
    kKthCanonical,         // k-th entry of the canonical factor list
};

/// How the transform-and-factor phase picks one irreducible factor.
struct Selection {
    SelectionKind kind = SelectionKind::kLargestDegree;
    u64 param = 0;

    /// Accepts "smallest-degree", "largest-degree", "smallest-degree-above(T)"
    /// and "kth-canonical(K)" (":" also works in place of the parentheses).
    /// Throws InvalidArgument.
    static Selection parse(std::string_view text);
    std::string name() const;
};

/// Index into factors.factors chosen by sel.
///
/// smallest-degree-above falls back to the largest degree when nothing lies
/// above the threshold; kth-canonical clamps K to the last factor. Ties are
/// broken by canonical order.
std::size_t select_factor(const Factorization& factors, const Selection& sel);

enum class Phase { kSub1, kSub2 };

/// How an entry of the sequence was produced.
enum class Origin { kInitial, kFactor, kTransform };

std::string_view phase_name(Phase phase) noexcept;
std::string_view origin_name(Origin origin) noexcept;

struct SequenceParams {
    static constexpr u64 kDefaultMaxSub1Steps = 12;
    static constexpr u64 kDefaultVerifyDegreeCap = 5000;

    SequenceParams(RationalMap m, unsigned degree) : map(std::move(m)), d(degree) {}

    RationalMap map;
    unsigned d = 0;                   // deg f_0
    std::optional<u64> k0;            // factorization budget when known
    Selection selection{};
    u64 max_sub1_steps = kDefaultMaxSub1Steps;  // budget when k0 is unknown
    std::optional<bool> verify_sub2;  // nullopt: verify below verify_degree_cap
    u64 verify_degree_cap = kDefaultVerifyDegreeCap;

    /// Transform-and-factor steps allowed before a branch counts as stalled.
    u64 sub1_budget() const noexcept { return k0 ? *k0 + 1 : max_sub1_steps; }
    bool should_verify(u64 degree) const noexcept {
        return verify_sub2 ? *verify_sub2 : degree < verify_degree_cap;
    }
};

struct HistoryEntry {
    int degree;
    std::uint64_t fingerprint;
    std::size_t choice;       // index of the chosen factor (0 for pure transforms)
    std::size_t num_factors;  // distinct irreducible factors of f_{i-1}^r (0 in SUB2)
};

struct IterationState {
    u64 i = 0;
    Poly f;
    Phase phase = Phase::kSub1;
    std::vector<HistoryEntry> history;
    u64 retries = 0;
    u64 factorizations = 0;
    bool last_verified = false;  // whether f was checked with is_irreducible
};

/// State at index 0. Throws InvalidArgument unless f0 is monic irreducible of
/// degree params.d, and DegreeZero for constants.
IterationState initial_state(const Poly& f0, const SequenceParams& params);

/// f_{i+1} := a selected monic irreducible factor of f_i^r; switches to SUB2
/// once its degree exceeds 2d. `choice` overrides the selection strategy.
IterationState step_sub1(const IterationState& st, const SequenceParams& params, u64 seed,
                         std::optional<std::size_t> choice = std::nullopt);

/// f_{i+1} := f_i^r. Throws IrreducibilityViolation when verification is on
/// and the transform is reducible.
IterationState step_sub2(const IterationState& st, const SequenceParams& params);

struct SequenceRun {
    std::vector<Poly> polys;  // f_0 .. f_target
    std::vector<Phase> phases;  // phase of the state after computing the entry
    std::vector<Origin> origins;
    std::vector<bool> verified;  // is_irreducible was run on this entry
    u64 retries = 0;              // abandoned first-step choices
    std::size_t first_choice = 0; // canonical index of f_1 among factors of f_0^r
    std::optional<u64> switch_index;  // first index whose degree exceeds 2d
    u64 factorizations = 0;           // all factorizations, abandoned branches included
    u64 factorizations_after_first = 0;  // in the successful branch, after f_1
    std::vector<std::vector<int>> abandoned;  // degree histories of stalled branches
};

/// Full construction up to f_target.
///
/// Runs the transform-and-factor phase until the degree exceeds 2d. A branch
/// that has not done so after params.sub1_budget() steps is abandoned and the
/// next first-step factor in canonical order is tried. Then pure transforms
/// until target. The first phase is always resolved, so shorter targets give
/// prefixes of longer ones. Throws ExhaustedChoices when every first-step
/// factor stalls.
SequenceRun run(const Poly& f0, const SequenceParams& params, u64 target_index, u64 seed);

}  // namespace ecirr

#endif  // ECIRR_SEQUENCE_HPP
