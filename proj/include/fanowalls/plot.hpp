#pragma once

// SVG wall diagrams. beta runs horizontally and alpha = sqrt(t) vertically;
// floating point only enters when coordinates are written out.

#include <string>
#include <vector>

#include "fanowalls/walls.hpp"

namespace fanowalls {

struct PlotWindow {
  Rational beta_lo;
  Rational beta_hi;
  Rational t_lo;
  Rational t_hi;
};

/// Semicircle and vertical loci are drawn once per distinct locus, labelled
/// with the params of the first candidate carrying it. Candidates with a
/// finite t become point markers at (beta, sqrt t); ray candidates become
/// dashed vertical lines. Identical input gives byte-identical output.
/// Throws DomainError on an empty window.
std::string render_walls_svg(const ChernCharacter& total, const PlotWindow& window,
                             const std::vector<WallCandidate>& walls);

}  // namespace fanowalls
