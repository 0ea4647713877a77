#ifndef ZAGREB_EXAMPLE_GRAPHS_HPP
#define ZAGREB_EXAMPLE_GRAPHS_HPP

#include <string>

#include "zagreb/graph.hpp"

namespace zagreb::examples {

// The three 8-vertex benchmark graphs, transcribed edge by edge from the
// published figure.

inline const char* kG1 =
    "n 8\n"
    "1 2\n1 5\n1 7\n1 8\n"
    "2 5\n2 6\n2 7\n2 8\n"
    "3 7\n3 8\n"
    "4 5\n4 6\n4 7\n4 8\n"
    "5 6\n5 7\n5 8\n"
    "6 8\n"
    "7 8\n";

inline const char* kG2 =
    "n 8\n"
    "1 3\n1 7\n1 8\n"
    "2 3\n2 5\n2 6\n2 7\n"
    "3 4\n3 5\n3 6\n3 8\n"
    "4 5\n4 7\n"
    "5 6\n5 7\n";

inline const char* kG3 =
    "n 8\n"
    "1 7\n1 8\n"
    "2 3\n2 4\n2 5\n2 6\n2 7\n"
    "3 4\n3 5\n3 7\n3 8\n"
    "4 8\n"
    "5 6\n"
    "6 7\n6 8\n"
    "7 8\n";

inline Graph g1() { return parse_edge_list(kG1); }
inline Graph g2() { return parse_edge_list(kG2); }
inline Graph g3() { return parse_edge_list(kG3); }

}  // namespace zagreb::examples

#endif
