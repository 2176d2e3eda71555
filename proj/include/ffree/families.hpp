#pragma once

#include <array>
#include <string_view>

#include "ffree/digraph.hpp"

namespace ffree {

enum class Family { D1, D2, D3, D4, D5, D6 };

inline constexpr std::array<Family, 6> kAllFamilies = {
    Family::D1, Family::D2, Family::D3, Family::D4, Family::D5, Family::D6};

const char* family_name(Family f);
std::optional<Family> family_from_name(std::string_view s);
bool family_wants_even_n(Family f);  // D1 takes even n, the others odd
int family_min_n(Family f);          // smallest n default_spec accepts

// Largest arc count an admissible digraph on n vertices can have.
// Defined for n >= 8 only.
int ex_formula(int n);

// Arc count every family instance attains; defined from n = 3. Agrees
// with ex_formula for n >= 8.
int lower_bound_size(int n);

// |V1| in the canonical split: floor(n/2) + 1.
int v1_size(int n);

// Canonical layout on vertices 0..n-1: V1 = {0..h-1} with h = v1_size(n),
// V2 = {h..n-1}. Role slots are fixed:
//   D1/D5: 2-cycle pair 0,1   D2/D6: x = 0, y = 1   D3: root 0   D4: x = 0
//   D2/D4/D6: w = h           D6: z = h+1
// v1_parent[i] is the tree parent of V1 vertex i (-1 for roots, and the
// whole vector is -1 for the star-shaped families). v2_succ[p] is the
// out-neighbour of V2 vertex h+p inside V2 (-1 if none). matching lists
// the V2 targets of the matched V1 vertices in increasing source order;
// the x->w arc of D2/D4/D6 is implied and not listed. aux_v1 picks y for
// D4 and y' for D6; aux_v2 picks the unmatched V2 vertex x for D5.
struct FamilySpec {
  Family family = Family::D1;
  int n = 0;
  std::vector<int> v1_parent;
  std::vector<int> v2_succ;
  std::vector<int> matching;
  int aux_v1 = -1;
  int aux_v2 = -1;
  bool operator==(const FamilySpec&) const = default;
};

// Matched V1 vertices of a spec, increasing.
std::vector<int> matched_sources(const FamilySpec& s);

// Structural validation: parity, role slots, tree depth bounds, matching
// bijectivity, nonempty isolated block where the family needs one.
// Returns an explanation for the first problem found.
std::optional<std::string> validate_spec(const FamilySpec& s);

FamilySpec default_spec(Family f, int n);

// Materializes the spec. Throws std::invalid_argument when
// validate_spec rejects it.
Digraph construct(const FamilySpec& s);

// Arc count construct(s) will produce, straight from the size formula.
int family_size(const FamilySpec& s);

// Deterministic stream of valid specs: arborescence shapes, isolated-
// block splits, identity plus one reversed matching per size, and the
// free vertex choices, truncated at limit. Empty when n is below the
// family minimum; parity mismatches are rejected.
std::vector<FamilySpec> enumerate_specs(Family f, int n, std::size_t limit);

// Key-value text block; round-trips through spec_from_text.
std::string spec_to_text(const FamilySpec& s);
FamilySpec spec_from_text(const std::string& text);

// JSON document; round-trips through spec_from_json.
std::string spec_to_json(const FamilySpec& s);
FamilySpec spec_from_json(const std::string& text);

}  // namespace ffree
