#ifndef ADSMANA_PLOT_HPP
#define ADSMANA_PLOT_HPP

#include <string>

#include "adsmana/sweep.hpp"

// Static SVG line charts from sweep CSVs: fixed 800x600 viewBox, linear
// axes with 6 ticks each, one polyline per group value, legend on the right.
// Output is deterministic for identical input.

namespace adsmana {

struct PlotSpec {
  std::string x = "omega";
  std::string y = "mana";
  std::string group_by = "ell";
};

std::string render_svg_line_chart(const CsvTable& table, const PlotSpec& spec);

}  // namespace adsmana

#endif
