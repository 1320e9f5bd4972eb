#ifndef ATG_GRAPH6_HPP
#define ATG_GRAPH6_HPP

#include <string>

#include "graph.hpp"

namespace atg {

// Standard graph6 text format: 63-offset bytes, upper-triangle bits in
// column order x(0,1), x(0,2), x(1,2), x(0,3), ...
Graph parse_graph6(const std::string& text);
std::string emit_graph6(const Graph& g);

}  // namespace atg

#endif
