#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "maps/maps.hpp"

namespace acs {

using Rng = std::mt19937_64;

// Fresh generator for one trial of a campaign; reproducible from the campaign
// seed and the trial index alone.
Rng trial_rng(std::uint64_t seed, std::uint64_t index);

// Uniform draw over [lo, hi], rejection-sampled so the result does not depend
// on the standard library's distribution internals.
long rnd_long(Rng& g, long lo, long hi);

// Rational with denominator 1..max_den and value in [lo, hi].
Rat random_rat(Rng& g, long lo, long hi, long max_den);
Pt random_point(Rng& g, long lo, long hi, long max_den);

// Ordered list of distinct points for crossing-count experiments.
std::vector<Pt> random_list(Rng& g, std::size_t min_len, std::size_t max_len);

// Simple polygon with exactly n canonical vertices: distinct random points in
// angular order about their centroid (star-shaped, hence simple); resampled
// until validation keeps every vertex.
Polygon random_simple_polygon(Rng& g, std::size_t n);

// Strictly convex polygon with exactly n vertices: random edge vectors with
// zero sum, chained in direction order.
Polygon random_convex_polygon(Rng& g, std::size_t n);

Affine random_affine(Rng& g);  // nonsingular

// Random half-plane gluing: h2 differs from h1 by a rank-one term vanishing
// on the boundary line, so the two sides agree there by construction.
HpaMap random_hpa(Rng& g);
// Variant with the gluing line fixed by the caller.
HpaMap random_hpa_on_line(Rng& g, const Line& boundary);

// Convex n-gon domain, nonsingular outside map, apex moved to a random
// interior point of the image.
LpaMap random_lpa(Rng& g, std::size_t n);

}  // namespace acs
