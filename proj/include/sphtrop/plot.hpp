/**
 * Deterministic SVG pictures of rank-1 and rank-2 fans: the valuation cone
 * shaded, color vectors as labelled dots, rays drawn to the frame with their
 * weights. Rank > 2 throws std::invalid_argument.
 */

#ifndef SPHTROP_PLOT_HPP
#define SPHTROP_PLOT_HPP

#include <string>

#include "sphtrop/balance.hpp"
#include "sphtrop/luna_vust.hpp"

namespace sphtrop {

std::string plotWeightedFan(const WeightedRayFan& fan);
std::string plotColoredFan(const ColoredFan& fan);

}   // namespace sphtrop

#endif
