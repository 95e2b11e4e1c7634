#pragma once

#include "bourbaki.hpp"
#include "residual.hpp"

namespace rk {

struct TheoremParams {
    int k = -1;          // reduction-number bound; -1 = sampled r(E) clamped to [1, l-e]
    int s = -1;          // auxiliary index (AN target, G_s level, submodule count)
    unsigned max_j = 3;  // cap for statements quantified over all powers
    std::uint64_t seed = 0;
};

// Registered tags, in registry order.
const std::vector<std::string>& theorem_ids();
bool is_theorem_id(const std::string& id);

// Evaluate one registry entry on E. Entries about ideals expect a rank-one
// module and work on its ideal embedding; the submodule entries T3.7/L3.8
// treat E as the ambient module and draw the submodule from the seed.
CheckReport check_theorem(const std::string& id, const PModule& E,
                          const TheoremParams& params = {});

struct GeneratedCheck {
    PModule module;
    CheckReport report;
};

// Seeded example constructors for the existence-flavored entries
// (P3.5, P3.6, T3.7, L3.8), rejection-sampled until the hypotheses hold
// (up to a fixed attempt cap), then checked.
GeneratedCheck check_prop_generators(const std::string& id, const TheoremParams& params = {});

struct GalleryEntry {
    std::string label;
    PModule module;
};

// Built-in module gallery (free, complete intersections, non-linear-type,
// direct sums, pd-1 random, ideal modules). Deterministic per seed.
std::vector<GalleryEntry> gallery_modules(std::uint64_t seed = 0,
                                          const FieldSpec& field = FieldSpec{});

struct GalleryResult {
    std::string label;
    CheckReport report;
};

// Run every registry entry (or just `filter`) over the gallery. Results are
// ordered (module, entry) regardless of `jobs`.
std::vector<GalleryResult> run_gallery(const std::string& filter, std::uint64_t seed,
                                       unsigned jobs = 1, const FieldSpec& field = FieldSpec{});

// Seeded projective-dimension-one module: cokernel of a random linear matrix,
// rejection-sampled to rank rows - cols, torsion-free, pd 1.
PModule seeded_pd1_module(const RingPtr& R, std::uint64_t seed, std::size_t rows = 3,
                          std::size_t cols = 2);

// Independent linear-type oracle: Sym_j(E) is torsion-free for j <= max_degree,
// checked degree by degree without reference to the Rees ideal.
bool degreewise_linear_type_oracle(const PModule& E, unsigned max_degree = 6);

}  // namespace rk
