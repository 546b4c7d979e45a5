#ifndef LEAFPATHS_PRUFER_HPP
#define LEAFPATHS_PRUFER_HPP

#include <vector>

#include "leafpaths/tree.hpp"

namespace leafpaths {

// Classical bijection between labeled trees on n vertices and words of
// length n-2 over {0..n-1}; vertex i appears degree(i)-1 times in the
// word. n=1 and n=2 map to the empty word.

Tree prufer_decode(int n, const std::vector<int>& word);
std::vector<int> prufer_encode(const Tree& tree);

} // namespace leafpaths

#endif
