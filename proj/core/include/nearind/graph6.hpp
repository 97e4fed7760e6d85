#ifndef NEARIND_GRAPH6_HPP
#define NEARIND_GRAPH6_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "nearind/graph.hpp"

namespace nearind {

class Graph6Error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/*
  graph6 (McKay): N(n) followed by the upper triangle of the adjacency matrix
  in column order x(0,1) x(0,2) x(1,2) x(0,3) ..., six bits per byte, each byte
  offset by 63. N(n) is one byte for n <= 62 and '~' plus three bytes for
  63 <= n <= 258047. An optional ">>graph6<<" prefix and trailing whitespace
  are accepted on input.
*/
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

}  // namespace nearind

#endif  // NEARIND_GRAPH6_HPP
